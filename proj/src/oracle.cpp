#include "inertia/oracle.hpp"

#include <algorithm>
#include <string>

namespace inertia::oracle {

namespace {

using rep = Tick::rep;

// Dense tick-indexed view of the input and of the per-tick constraints
// derived from it by direct window scans.
class Enumerator {
public:
    Enumerator(const Signal& u, const CondExpr& expr, const GridConfig& g) : g_(g) {
        lo_ = g.lo.count();
        hi_ = g.hi.count();
        pad_ = max_span_of(expr).count() + 1;
        check_lo_ = lo_ - pad_;
        check_hi_ = hi_ + pad_;

        for (Tick t : u.switches())
            if (t.count() < lo_ || t.count() > hi_)
                throw PreconditionError("oracle: input switch at " + std::to_string(t.count()) +
                                        " lies outside the grid horizon");

        // Input bits cover every window reachable from the check range.
        in_lo_ = check_lo_ - pad_;
        std::size_t in_len = static_cast<std::size_t>(check_hi_ - in_lo_ + 1);
        in_.resize(in_len);
        for (std::size_t i = 0; i < in_len; ++i) in_[i] = u.value_at(Tick(in_lo_ + static_cast<rep>(i)));

        std::size_t len = static_cast<std::size_t>(check_hi_ - check_lo_ + 1);
        need_one_.assign(len, 0);
        allow_one_.assign(len, 1);
        rise_ok_.assign(len, 1);
        fall_ok_.assign(len, 1);

        for (const Atom& atom : expr.atoms()) {
            std::visit([&](const auto& a) { add(a); }, atom);
        }
        x_.assign(static_cast<std::size_t>(hi_ - lo_ + 1), 0);
    }

    std::size_t run(const std::function<bool(const Signal&)>& visit) {
        visit_ = &visit;
        count_ = 0;
        stop_ = false;
        dfs(lo_, 0);
        return count_;
    }

private:
    bool in(rep t) const { return in_[static_cast<std::size_t>(t - in_lo_)]; }
    std::size_t ci(rep t) const { return static_cast<std::size_t>(t - check_lo_); }
    bool x(rep t) const { return x_[static_cast<std::size_t>(std::clamp(t, lo_, hi_) - lo_)]; }

    bool all_input(rep from, rep to, bool value) const {
        for (rep xi = from; xi <= to; ++xi)
            if (in(xi) != value) return false;
        return true;
    }
    bool any_input(rep from, rep to) const {
        for (rep xi = from; xi <= to; ++xi)
            if (in(xi)) return true;
        return false;
    }

    void add(const FixedDelay& f) {
        for (rep t = check_lo_; t <= check_hi_; ++t) {
            bool v = in(t - f.delay.count());
            if (v) need_one_[ci(t)] = 1;
            else allow_one_[ci(t)] = 0;
        }
    }
    void add(const BdcParams& p) {
        const rep dr = p.rise_delay().count(), mr = p.rise_memory().count();
        const rep df = p.fall_delay().count(), mf = p.fall_memory().count();
        for (rep t = check_lo_; t <= check_hi_; ++t) {
            if (all_input(t - dr, t - dr + mr, true)) need_one_[ci(t)] = 1;
            if (!any_input(t - df, t - df + mf)) allow_one_[ci(t)] = 0;
        }
    }
    void add(const AicParams& a) {
        rise_hold_ = std::max(rise_hold_, a.rise_hold().count());
        fall_hold_ = std::max(fall_hold_, a.fall_hold().count());
    }
    void add(const RicParams& r) {
        const rep er = r.rise_lag().count(), ur = r.rise_memory().count();
        const rep ef = r.fall_lag().count(), uf = r.fall_memory().count();
        for (rep t = check_lo_; t <= check_hi_; ++t) {
            if (!all_input(t - er, t - er + ur, true)) rise_ok_[ci(t)] = 0;
            if (!all_input(t - ef, t - ef + uf, false)) fall_ok_[ci(t)] = 0;
        }
    }

    // Pointwise and edge constraints at tick t, given x is known up to t.
    bool local_ok(rep t) const {
        bool cur = x(t);
        if (need_one_[ci(t)] && !cur) return false;
        if (!allow_one_[ci(t)] && cur) return false;
        bool prev = x(t - 1);
        if (t > lo_ && t <= hi_ && prev != cur) {
            if (cur && !rise_ok_[ci(t)]) return false;
            if (!cur && !fall_ok_[ci(t)]) return false;
        }
        return true;
    }

    // Hold-time constraints that end at tick k: every edge at s with
    // s <= k <= s + hold forces x(k) to the post-edge value.
    bool hold_ok(rep k) const {
        const rep reach = std::max(rise_hold_, fall_hold_);
        for (rep s = std::max(lo_ + 1, k - reach); s <= k; ++s) {
            bool before = x(s - 1), after = x(s);
            if (before == after) continue;
            rep hold = after ? rise_hold_ : fall_hold_;
            if (k <= s + hold && x(k) != after) return false;
        }
        return true;
    }

    void dfs(rep k, std::size_t switches) {
        if (stop_) return;
        if (k > hi_) {
            for (rep t = hi_ + 1; t <= check_hi_; ++t)
                if (!local_ok(t)) return;
            emit();
            return;
        }
        for (int bit = 0; bit <= 1 && !stop_; ++bit) {
            x_[static_cast<std::size_t>(k - lo_)] = static_cast<unsigned char>(bit);
            std::size_t sw = switches;
            if (k > lo_ && x(k - 1) != x(k)) ++sw;
            if (sw > g_.max_switches) continue;
            if (!prefix_ok(k)) continue;
            dfs(k + 1, sw);
        }
    }

    bool prefix_ok(rep k) const {
        if (k == lo_) {
            for (rep t = check_lo_; t <= lo_; ++t)
                if (!local_ok(t)) return false;
            return true;
        }
        return local_ok(k) && hold_ok(k);
    }

    void emit() {
        bool initial = x_[0];
        std::vector<Tick> sw;
        for (rep t = lo_ + 1; t <= hi_; ++t)
            if (x(t) != x(t - 1)) sw.emplace_back(t);
        ++count_;
        if (!(*visit_)(make_signal(initial, std::move(sw)))) stop_ = true;
    }

    GridConfig g_;
    rep lo_, hi_, pad_, check_lo_, check_hi_, in_lo_;
    rep rise_hold_ = 0, fall_hold_ = 0;
    std::vector<unsigned char> in_, need_one_, allow_one_, rise_ok_, fall_ok_, x_;
    const std::function<bool(const Signal&)>* visit_ = nullptr;
    std::size_t count_ = 0;
    bool stop_ = false;
};

}  // namespace

void GridConfig::validate() const {
    if (hi <= lo) throw ResourceError("oracle horizon must satisfy lo < hi");
    if ((hi - lo).count() > max_span)
        throw ResourceError("oracle horizon of " + std::to_string((hi - lo).count()) + " ticks exceeds the cap of " +
                            std::to_string(max_span));
}

Tick max_span_of(const CondExpr& expr) {
    Tick m(0);
    for (const Atom& atom : expr.atoms()) {
        std::visit(
            [&](const auto& a) {
                using T = std::decay_t<decltype(a)>;
                if constexpr (std::is_same_v<T, FixedDelay>) m = std::max(m, a.delay);
                else if constexpr (std::is_same_v<T, BdcParams>) m = std::max({m, a.rise_delay(), a.fall_delay()});
                else if constexpr (std::is_same_v<T, AicParams>) m = std::max({m, a.rise_hold(), a.fall_hold()});
                else m = std::max({m, a.rise_lag(), a.fall_lag()});
            },
            atom);
    }
    return m;
}

std::size_t for_each_solution(const Signal& u, const CondExpr& expr, const GridConfig& g,
                              const std::function<bool(const Signal&)>& visit) {
    g.validate();
    Enumerator e(u, expr, g);
    return e.run(visit);
}

SolutionSet enumerate_solutions(const Signal& u, const CondExpr& expr, const GridConfig& g) {
    SolutionSet out;
    for_each_solution(u, expr, g, [&](const Signal& x) {
        out.push_back(x);
        return true;
    });
    return out;
}

bool has_solution(const Signal& u, const CondExpr& expr, const GridConfig& g) {
    return for_each_solution(u, expr, g, [](const Signal&) { return false; }) > 0;
}

void InputFamily::for_each(const std::function<bool(const Signal&)>& visit) const {
    if (last < first) return;
    const rep n = (last - first).count() + 1;
    std::vector<rep> idx;
    for (std::size_t k = 0; include_exhaustive && k <= max_switches && static_cast<rep>(k) <= n; ++k) {
        for (int initial = 0; initial <= 1; ++initial) {
            idx.resize(k);
            for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<rep>(i);
            while (true) {
                std::vector<Tick> sw;
                sw.reserve(k);
                for (rep i : idx) sw.emplace_back(first.count() + i);
                if (!visit(make_signal(initial == 1, std::move(sw)))) return;
                // Next k-combination of [0, n).
                std::size_t i = k;
                while (i > 0 && idx[i - 1] == n - static_cast<rep>(k - i) - 1) --i;
                if (i == 0) break;
                ++idx[i - 1];
                for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
    }

    for (int initial = 0; initial <= 1; ++initial) {
        for (rep high = 1; high <= max_train_width; ++high) {
            for (rep low = 1; low <= max_train_width; ++low) {
                std::vector<Tick> sw;
                rep t = first.count();
                while (t <= last.count()) {
                    sw.emplace_back(t);
                    // The train starts by leaving its initial level.
                    bool now_high = (initial == 0) == (sw.size() % 2 == 1);
                    t += now_high ? high : low;
                    if (sw.size() > max_switches && !visit(make_signal(initial == 1, sw))) return;
                }
            }
        }
    }
}

std::optional<Signal> find_empty_witness(const CondExpr& expr, const GridConfig& g, const InputFamily& inputs) {
    std::optional<Signal> witness;
    inputs.for_each([&](const Signal& u) {
        if (!has_solution(u, expr, g)) {
            witness = u;
            return false;
        }
        return true;
    });
    return witness;
}

SolutionSet normalize(SolutionSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool set_equal(const SolutionSet& a, const SolutionSet& b) { return normalize(a) == normalize(b); }

bool set_subset(const SolutionSet& a, const SolutionSet& b) {
    auto na = normalize(a);
    auto nb = normalize(b);
    return std::includes(nb.begin(), nb.end(), na.begin(), na.end());
}

}  // namespace inertia::oracle
