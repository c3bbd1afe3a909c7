#include "inertia/theorems.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "inertia/delay_algebra.hpp"
#include "inertia/error.hpp"
#include "inertia/oracle.hpp"
#include "json.hpp"

namespace inertia::theorems {

namespace {

using rep = Tick::rep;
using oracle::GridConfig;
using oracle::InputFamily;
using oracle::SolutionSet;

template <class... Parts>
std::string cat(const Parts&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

std::string show(const SolutionSet& s, std::size_t limit = 3) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size() && i < limit; ++i) os << (i ? "," : "") << s[i];
    if (s.size() > limit) os << ",...";
    os << "}#" << s.size();
    return os.str();
}

// Describes how two normalized sets differ.
std::string diff(const SolutionSet& lhs, const SolutionSet& rhs) {
    SolutionSet only_l, only_r;
    std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(only_l));
    std::set_difference(rhs.begin(), rhs.end(), lhs.begin(), lhs.end(), std::back_inserter(only_r));
    return cat("lhs=", show(lhs), " rhs=", show(rhs), " lhs_only=", show(only_l), " rhs_only=", show(only_r));
}

// Modulo mapping rather than std::uniform_int_distribution, whose output is
// implementation-defined; reports must match across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}

    rep between(rep lo, rep hi) { return lo + static_cast<rep>(g_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    bool coin() { return (g_() >> 31) & 1u; }

    BdcParams bdc(rep max) {
        rep dr = between(0, max), mr = between(0, dr);
        rep df = between(0, max), mf = between(0, df);
        return BdcParams(mr, dr, mf, df);
    }
    BdcParams bdc_where(rep max, bool cc) {
        for (;;) {
            BdcParams p = bdc(max);
            if (cc_holds(p) == cc) return p;
        }
    }
    RicParams ric(rep max) {
        rep er = between(0, max), ur = between(0, er);
        rep ef = between(0, max), uf = between(0, ef);
        return RicParams(ur, er, uf, ef);
    }
    AicParams aic(rep max) { return AicParams(between(0, max), between(0, max)); }

    Signal signal(rep first, rep last, std::size_t max_switches) {
        auto room = static_cast<std::size_t>(last - first + 1);
        auto k = static_cast<std::size_t>(between(0, static_cast<rep>(std::min(max_switches, room))));
        std::set<rep> ticks;
        while (ticks.size() < k) ticks.insert(between(first, last));
        return make_signal(coin(), std::vector<Tick>(ticks.begin(), ticks.end()));
    }

private:
    std::mt19937_64 g_;
};

class Tracker {
public:
    Tracker(std::string name, std::size_t cap) : cap_(cap) { check_.name = std::move(name); }

    void record(bool ok, const std::function<std::string()>& describe) {
        ++check_.cases;
        if (ok) return;
        ++check_.failures;
        if (check_.counterexamples.size() < cap_) check_.counterexamples.push_back(describe());
    }
    Check take() { return std::move(check_); }

private:
    Check check_;
    std::size_t cap_;
};

GridConfig grid_after(rep last, rep span) { return {Tick(0), Tick(last + span + 1)}; }

SolutionSet solve(const Signal& u, const CondExpr& e, const GridConfig& g) {
    return oracle::normalize(oracle::enumerate_solutions(u, e, g));
}

SolutionSet map_all(const SolutionSet& s, const std::function<Signal(const Signal&)>& f) {
    SolutionSet out;
    out.reserve(s.size());
    for (const Signal& x : s) out.push_back(f(x));
    return oracle::normalize(std::move(out));
}

SolutionSet merge(const SolutionSet& a, const SolutionSet& b) {
    SolutionSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Exhaustive inputs with few switches on a tight grid, then pulse trains
// on the widest grid allowed.
struct WitnessSearch {
    rep last;
    std::size_t switches;
    rep train_width = 0;
};

std::optional<Signal> find_witness(const CondExpr& e, const WitnessSearch& s) {
    const rep span = oracle::max_span_of(e).count();
    if (auto w = oracle::find_empty_witness(e, grid_after(s.last, span), InputFamily{Tick(1), Tick(s.last), s.switches}))
        return w;
    if (s.train_width == 0) return std::nullopt;
    const rep hi = GridConfig::max_span;
    InputFamily trains{Tick(1), Tick(hi - span - 1), s.switches, s.train_width, false};
    return oracle::find_empty_witness(e, GridConfig{Tick(0), Tick(hi)}, trains);
}

std::vector<Signal> family(rep last, std::size_t switches) {
    std::vector<Signal> out;
    InputFamily{Tick(1), Tick(last), switches}.for_each([&](const Signal& u) {
        out.push_back(u);
        return true;
    });
    return out;
}

template <class F>
void for_each_bdc(rep max, F&& f) {
    for (rep dr = 0; dr <= max; ++dr)
        for (rep mr = 0; mr <= dr; ++mr)
            for (rep df = 0; df <= max; ++df)
                for (rep mf = 0; mf <= df; ++mf) f(BdcParams(mr, dr, mf, df));
}

template <class F>
void for_each_ric(rep max, F&& f) {
    for (rep er = 0; er <= max; ++er)
        for (rep ur = 0; ur <= er; ++ur)
            for (rep ef = 0; ef <= max; ++ef)
                for (rep uf = 0; uf <= ef; ++uf) f(RicParams(ur, er, uf, ef));
}

struct Context {
    Report& report;
    Rng rng;
    const Options& opt;

    Tracker tracker(std::string name) const { return Tracker(std::move(name), opt.max_examples); }
};

// --- bounded delays -------------------------------------------------------

void run_t1(Context& c) {
    auto fwd = c.tracker("cc => nonempty, bracketed by min/max solutions");
    auto conv = c.tracker("no cc => witness input with empty solution set");

    for (std::size_t i = 0; i < c.opt.trials; ++i) {
        BdcParams p = c.rng.bdc_where(6, true);
        Signal u = c.rng.signal(1, 12, 6);
        GridConfig g = grid_after(12, std::max(p.rise_delay(), p.fall_delay()).count());
        Signal lo = bdc_min_solution(u, p), hi = bdc_max_solution(u, p);
        std::size_t n = 0, bad = 0;
        bool seen_lo = false, seen_hi = false;
        std::optional<Signal> first_bad;
        oracle::for_each_solution(u, CondExpr{p}, g, [&](const Signal& x) {
            ++n;
            seen_lo = seen_lo || x == lo;
            seen_hi = seen_hi || x == hi;
            if (!bdc_member(u, x, p) || !leq(lo, x) || !leq(x, hi)) {
                if (!first_bad) first_bad = x;
                ++bad;
            }
            return true;
        });
        fwd.record(n > 0 && bad == 0 && seen_lo && seen_hi, [&] {
            return cat(p, " u=", u, " solutions=", n, " unbracketed=", bad,
                       first_bad ? cat(" e.g. x=", *first_bad) : std::string(), seen_lo ? "" : " (min missing)",
                       seen_hi ? "" : " (max missing)");
        });
    }

    const std::size_t converse = std::max<std::size_t>(1, (c.opt.trials + 3) / 4);
    for (std::size_t i = 0; i < converse; ++i) {
        BdcParams p = c.rng.bdc_where(6, false);
        rep horizon = 2 * (p.rise_delay() + p.fall_delay()).count() + 4;
        rep span = std::max(p.rise_delay(), p.fall_delay()).count();
        auto w = oracle::find_empty_witness(CondExpr{p}, GridConfig{Tick(0), Tick(horizon)},
                                            InputFamily{Tick(1), Tick(horizon - span - 1), 2});
        conv.record(w.has_value(), [&] { return cat(p, " horizon=", horizon, ": every input admits a solution"); });
        if (w) ++c.report.tallies["witnesses"];
    }
    c.report.checks = {fwd.take(), conv.take()};
}

void run_t14a(Context& c) {
    auto dec = c.tracker("combined tuple satisfies cc <=> intersection nonempty for every sampled input");
    auto eq = c.tracker("intersection equals the combined bdc");

    for (std::size_t i = 0; i < c.opt.trials; ++i) {
        BdcParams p = c.rng.bdc_where(3, true), q = c.rng.bdc_where(3, true);
        Signal u = c.rng.signal(1, 8, 4);
        CondExpr both{p, q};
        GridConfig g = grid_after(8, 3);

        bool consistent = bdc_intersection_consistent(p, q);
        std::optional<Signal> w = find_witness(both, {8, 2});
        if (!w && !oracle::has_solution(u, both, g)) w = u;
        dec.record(consistent != w.has_value(), [&] {
            return cat(p, ' ', q, " tuple_cc=", consistent, w ? cat(" empty on u=", *w) : " never empty");
        });

        if (auto r = bdc_intersection(p, q)) {
            ++c.report.tallies["intersection_exists"];
            SolutionSet lhs = solve(u, both, g), rhs = solve(u, CondExpr{*r}, g);
            eq.record(lhs == rhs, [&] { return cat(p, ' ', q, " -> ", *r, " u=", u, ' ', diff(lhs, rhs)); });
        }
    }
    c.report.checks = {dec.take(), eq.take()};
}

void run_t14b(Context& c) {
    auto inc = c.tracker("union lies inside the envelope");
    auto iff = c.tracker("envelope equals the union on every sampled input <=> intersection exists");
    const auto probes = family(8, 2);

    for (std::size_t i = 0; i < c.opt.trials; ++i) {
        BdcParams p = c.rng.bdc_where(3, true), q = c.rng.bdc_where(3, true);
        BdcParams e = bdc_union_envelope(p, q);
        GridConfig g = grid_after(8, 3);
        std::vector<Signal> inputs = probes;
        inputs.push_back(c.rng.signal(1, 8, 4));

        std::optional<std::string> not_inside, not_equal;
        for (const Signal& v : inputs) {
            SolutionSet uni = merge(solve(v, CondExpr{p}, g), solve(v, CondExpr{q}, g));
            SolutionSet env = solve(v, CondExpr{e}, g);
            if (!not_inside && !std::includes(env.begin(), env.end(), uni.begin(), uni.end()))
                not_inside = cat("u=", v, ' ', diff(uni, env));
            if (!not_equal && uni != env) not_equal = cat("u=", v, ' ', diff(uni, env));
        }
        inc.record(!not_inside, [&] { return cat(p, ' ', q, " env=", e, ' ', *not_inside); });
        bool exists = bdc_intersection(p, q).has_value();
        iff.record(exists == !not_equal, [&] {
            return cat(p, ' ', q, " env=", e, " intersection_exists=", exists,
                       not_equal ? cat(" strict on ", *not_equal) : std::string(" equal on all inputs"));
        });
    }
    c.report.checks = {inc.take(), iff.take()};
}

void run_t14c(Context& c) {
    auto t = c.tracker("deterministic <=> singleton sets <=> translation");
    const auto probes = family(6, 2);

    for_each_bdc(4, [&](const BdcParams& p) {
        if (!cc_holds(p)) return;
        std::vector<Signal> inputs = probes;
        for (std::size_t k = 0; k < c.opt.trials; ++k) inputs.push_back(c.rng.signal(1, 8, 4));
        GridConfig g = grid_after(8, 4);

        bool det = bdc_is_deterministic(p);
        std::optional<Tick> d = bdc_as_translation(p);
        std::optional<std::string> not_single, not_shift;
        for (const Signal& v : inputs) {
            SolutionSet s = solve(v, CondExpr{p}, g);
            if (s.size() != 1) {
                if (!not_single) not_single = cat("u=", v, " set=", show(s));
            } else if (d && s.front() != translate(v, *d)) {
                if (!not_shift) not_shift = cat("u=", v, " x=", s.front(), " shift=", *d);
            }
        }
        bool singleton = !not_single;
        t.record(det == singleton && (!det || (d && !not_shift)), [&] {
            return cat(p, " deterministic=", det, ' ', not_single.value_or(""), not_shift.value_or(""));
        });
        ++c.report.tallies[det ? "deterministic" : "inertial"];
    });
    c.report.checks = {t.take()};
}

void run_t14d(Context& c) {
    auto t = c.tracker("includes <=> subset on every sampled input");
    const auto probes = family(8, 2);

    for (std::size_t i = 0; i < c.opt.trials; ++i) {
        BdcParams p = c.rng.bdc_where(3, true), q = c.rng.bdc_where(3, true);
        std::vector<Signal> inputs = probes;
        inputs.push_back(c.rng.signal(1, 8, 4));
        GridConfig g = grid_after(8, 3);

        bool inc = bdc_includes(p, q);
        std::optional<std::string> witness;
        for (const Signal& v : inputs) {
            SolutionSet a = solve(v, CondExpr{p}, g), b = solve(v, CondExpr{q}, g);
            SolutionSet extra;
            std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(extra));
            if (!extra.empty()) {
                witness = cat("u=", v, " x=", extra.front());
                break;
            }
        }
        t.record(inc == !witness, [&] {
            return cat(p, ' ', q, " includes=", inc, witness ? " but " + *witness : std::string(" no witness found"));
        });
        ++c.report.tallies[inc ? "included" : "not_included"];
    }
    c.report.checks = {t.take()};
}

void run_t14e(Context& c) {
    auto t = c.tracker("solution sets commute with translation");

    for (std::size_t i = 0; i < c.opt.trials; ++i) {
        BdcParams p = c.rng.bdc_where(3, true);
        Signal u = c.rng.signal(1, 8, 4);
        rep k = c.rng.between(-5, 5);
        GridConfig g = grid_after(8, 3);
        GridConfig shifted{g.lo + Tick(k), g.hi + Tick(k)};

        SolutionSet moved = map_all(solve(u, CondExpr{p}, g), [&](const Signal& x) { return translate(x, k); });
        SolutionSet direct = solve(translate(u, k), CondExpr{p}, shifted);
        t.record(moved == direct, [&] { return cat(p, " u=", u, " k=", k, ' ', diff(moved, direct)); });
    }
    c.report.checks = {t.take()};
}

void run_t14f(Context& c) {
    auto t = c.tracker("symmetrical <=> complement duality on every sampled input");
    const auto probes = family(6, 2);

    for_each_bdc(4, [&](const BdcParams& p) {
        if (!cc_holds(p)) return;
        std::vector<Signal> inputs = probes;
        for (std::size_t k = 0; k < c.opt.trials; ++k) inputs.push_back(c.rng.signal(1, 8, 4));
        GridConfig g = grid_after(8, 4);

        std::optional<std::string> broken;
        for (const Signal& v : inputs) {
            SolutionSet flipped = map_all(solve(v, CondExpr{p}, g), complement);
            SolutionSet dual = solve(complement(v), CondExpr{p}, g);
            if (flipped != dual) {
                broken = cat("u=", v, ' ', diff(flipped, dual));
                break;
            }
        }
        bool sym = bdc_is_symmetrical(p);
        t.record(sym == !broken, [&] {
            return cat(p, " symmetrical=", sym, broken ? " but " + *broken : std::string(" duality holds"));
        });
        ++c.report.tallies[sym ? "symmetrical" : "asymmetrical"];
    });
    c.report.checks = {t.take()};
}

void run_t14g(Context& c) {
    auto inc = c.tracker("serial connection lies inside the composed bdc");
    auto eq = c.tracker("serial connection equals the composed bdc");

    for (std::size_t i = 0; i < c.opt.trials; ++i) {
        BdcParams p = c.rng.bdc_where(3, true), q = c.rng.bdc_where(3, true);
        Signal u = c.rng.signal(1, 6, 4);
        GridConfig g = grid_after(6, 6);
        BdcParams pq = bdc_compose(p, q);

        SolutionSet serial;
        for (const Signal& x : solve(u, CondExpr{p}, g)) serial = merge(serial, solve(x, CondExpr{q}, g));
        SolutionSet composed = solve(u, CondExpr{pq}, g);
        auto describe = [&] { return cat(p, " then ", q, " u=", u, ' ', diff(serial, composed)); };
        inc.record(std::includes(composed.begin(), composed.end(), serial.begin(), serial.end()), describe);
        eq.record(serial == composed, describe);
    }
    c.report.checks = {inc.take(), eq.take()};
}

// --- absolute inertia -----------------------------------------------------

void run_baidc(Context& c) {
    auto t = c.tracker("baidc_consistent <=> nonempty for every sampled input");

    for_each_bdc(4, [&](const BdcParams& p) {
        if (!cc_holds(p)) return;
        for (rep hr = 0; hr <= 4; ++hr) {
            for (rep hf = 0; hf <= 4; ++hf) {
                AicParams a(hr, hf);
                CondExpr e{p, a};
                bool consistent = baidc_consistent(p, a);
                std::optional<Signal> w = find_witness(e, {9, 4, 10});
                GridConfig g = grid_after(9, oracle::max_span_of(e).count());
                for (std::size_t k = 0; !w && k < c.opt.trials; ++k) {
                    Signal v = c.rng.signal(1, 9, 6);
                    if (!oracle::has_solution(v, e, g)) w = v;
                }
                t.record(consistent != w.has_value(), [&] {
                    return cat(p, ' ', a, " consistent=", consistent,
                               w ? cat(" empty on u=", *w) : std::string(" never empty"));
                });
                ++c.report.tallies[consistent ? "consistent" : "inconsistent"];
            }
        }
    });
    c.report.checks = {t.take()};
}

void run_baidc_serial(Context& c) {
    auto t = c.tracker("serial connection lies inside summed bdc with the second hold times");

    auto draw = [&](BdcParams& p, AicParams& a) {
        for (;;) {
            p = c.rng.bdc_where(2, true);
            a = c.rng.aic(2);
            if (baidc_consistent(p, a)) return;
        }
    };
    for (std::size_t i = 0; i < c.opt.trials; ++i) {
        BdcParams p(0, 0, 0, 0), q(0, 0, 0, 0);
        AicParams a(0, 0), b(0, 0);
        draw(p, a);
        draw(q, b);
        Signal u = c.rng.signal(1, 6, 3);
        GridConfig g = grid_after(6, 4);

        SolutionSet serial;
        for (const Signal& x : solve(u, CondExpr{p, a}, g)) serial = merge(serial, solve(x, CondExpr{q, b}, g));
        SolutionSet bound = solve(u, CondExpr{bdc_compose(p, q), b}, g);
        t.record(std::includes(bound.begin(), bound.end(), serial.begin(), serial.end()), [&] {
            return cat(p, '+', a, " then ", q, '+', b, " u=", u, ' ', diff(serial, bound));
        });
    }
    c.report.checks = {t.take()};
}

// --- relative inertia -----------------------------------------------------

void run_t42(Context& c) {
    auto t = c.tracker("every ric solution respects the mapped hold times");

    for (std::size_t i = 0; i < c.opt.trials; ++i) {
        RicParams r = c.rng.ric(4);
        std::optional<AicParams> a;
        while (!(a = ric_to_aic(r))) r = c.rng.ric(4);
        Signal u = c.rng.signal(1, 8, 4);
        GridConfig g = grid_after(8, 4);

        std::size_t n = 0;
        std::optional<Signal> bad;
        oracle::for_each_solution(u, CondExpr{r}, g, [&](const Signal& x) {
            ++n;
            if (!aic_member(x, *a) || !ric_member(u, x, r)) {
                bad = x;
                return false;
            }
            return true;
        });
        t.record(!bad, [&] { return cat(r, " -> ", *a, " u=", u, " x=", *bad); });
        c.report.tallies["solutions"] += n;
    }
    c.report.checks = {t.take()};
}

void run_t45(Context& c) {
    auto t = c.tracker("bridc_consistent <=> nonempty for every sampled input");
    static constexpr std::array<const char*, 4> regime = {"b.i", "b.ii", "b.iii", "b.iv"};

    for_each_bdc(4, [&](const BdcParams& p) {
        for_each_ric(4, [&](const RicParams& r) {
            CondExpr e{p, r};
            BridcVerdict v = bridc_consistent(p, r);
            std::optional<Signal> w = find_witness(e, {8, 4});
            GridConfig g = grid_after(8, oracle::max_span_of(e).count());
            for (std::size_t k = 0; !w && k < c.opt.trials; ++k) {
                Signal u = c.rng.signal(1, 8, 6);
                if (!oracle::has_solution(u, e, g)) w = u;
            }
            t.record(v.holds() != w.has_value(), [&] {
                return cat(p, ' ', r, " regimes=[", v.fired(), "]",
                           w ? cat(" empty on u=", *w) : std::string(" never empty"));
            });
            for (std::size_t k = 0; k < regime.size(); ++k)
                if (v.clauses[k]) ++c.report.tallies[regime[k]];
            if (!v.holds()) ++c.report.tallies["none"];
        });
    });
    c.report.checks = {t.take()};
}

void run_t47(Context& c) {
    auto unique = c.tracker("deterministic output is the unique bdc+ric solution");
    auto shift = c.tracker("deterministic output commutes with translation");
    auto fixed = c.tracker("constant inputs are fixed points");
    auto ideal = c.tracker("zero memories give the pure translation");
    auto pulses = c.tracker("pulses shorter than the memory are filtered");

    for (std::size_t i = 0; i < c.opt.trials; ++i) {
        BdcParams p = c.rng.bdc_where(4, true);
        RicParams r(p.rise_memory(), p.rise_delay(), p.fall_memory(), p.fall_delay());
        Signal u = c.rng.signal(1, 8, 4);
        Signal x = bridc_det_output(u, p);
        SolutionSet s = solve(u, CondExpr{p, r}, grid_after(8, 4));
        unique.record(s.size() == 1 && s.front() == x, [&] { return cat(p, " u=", u, " det=", x, " oracle=", show(s)); });

        rep k = c.rng.between(-5, 5);
        Signal moved = bridc_det_output(translate(u, k), p);
        shift.record(moved == translate(x, k),
                     [&] { return cat(p, " u=", u, " k=", k, " got=", moved, " want=", translate(x, k)); });

        for (bool b : {false, true}) {
            Signal out = bridc_det_output(Signal::constant(b), p);
            fixed.record(out == Signal::constant(b), [&] { return cat(p, " constant ", b, " -> ", out); });
        }

        Tick d(c.rng.between(0, 4));
        Signal tr = bridc_det_output(u, BdcParams(0, d, 0, d));
        ideal.record(tr == translate(u, d), [&] { return cat("d=", d, " u=", u, " got=", tr); });

        bool initial = c.rng.coin();
        rep at = c.rng.between(-4, 8), width = c.rng.between(1, 6);
        Signal pulse = make_signal(initial, {Tick(at), Tick(at + width)});
        Signal filtered = bridc_det_output(pulse, p);
        rep memory = (initial ? p.fall_memory() : p.rise_memory()).count();
        bool passes = !filtered.is_constant();
        pulses.record(passes == (width > memory), [&] {
            return cat(p, " pulse=", pulse, " width=", width, " memory=", memory, " out=", filtered);
        });
    }
    c.report.checks = {unique.take(), shift.take(), fixed.take(), ideal.take(), pulses.take()};
}

using Runner = void (*)(Context&);

struct Entry {
    std::string_view id;
    Runner run;
};

constexpr std::array<Entry, 13> registry = {{
    {"t1", run_t1},
    {"t14a", run_t14a},
    {"t14b", run_t14b},
    {"t14c", run_t14c},
    {"t14d", run_t14d},
    {"t14e", run_t14e},
    {"t14f", run_t14f},
    {"t14g", run_t14g},
    {"baidc", run_baidc},
    {"baidc-serial", run_baidc_serial},
    {"t42", run_t42},
    {"t45", run_t45},
    {"t47", run_t47},
}};

constexpr auto ids = [] {
    std::array<std::string_view, registry.size()> out{};
    for (std::size_t i = 0; i < registry.size(); ++i) out[i] = registry[i].id;
    return out;
}();

}  // namespace

std::size_t Report::failures() const {
    std::size_t n = 0;
    for (const Check& c : checks) n += c.failures;
    return n;
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["theorem"] = theorem;
    j["seed"] = seed;
    j["trials"] = trials;
    j["passed"] = passed();
    j["failures"] = failures();
    auto& arr = j["checks"] = nlohmann::ordered_json::array();
    for (const Check& c : checks) {
        arr.push_back({{"name", c.name},
                       {"cases", c.cases},
                       {"failures", c.failures},
                       {"counterexamples", c.counterexamples}});
    }
    j["tallies"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : tallies) j["tallies"][k] = v;
    return j.dump(2);
}

std::span<const std::string_view> theorem_ids() { return ids; }

Report verify(std::string_view id, const Options& opt) {
    auto it = std::find_if(registry.begin(), registry.end(), [&](const Entry& e) { return e.id == id; });
    if (it == registry.end()) throw ValidationError("unknown theorem id '" + std::string(id) + "'");
    Report report;
    report.theorem = std::string(id);
    report.seed = opt.seed;
    report.trials = opt.trials;
    Context ctx{report, Rng(opt.seed), opt};
    it->run(ctx);
    return report;
}

}  // namespace inertia::theorems
