#include "inertia/signal.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace inertia {

namespace {

// Maximal interval on which a signal holds one value. An absent bound is infinite.
struct Run {
    std::optional<Tick> begin;
    std::optional<Tick> end;
};

std::vector<Run> runs_of(const Signal& s, bool value) {
    std::vector<Run> runs;
    auto sw = s.switches();
    bool cur = s.initial();
    std::optional<Tick> open_begin;
    bool in_run = cur == value;
    for (Tick t : sw) {
        cur = !cur;
        if (cur == value) {
            open_begin = t;
            in_run = true;
        } else if (in_run) {
            runs.push_back({open_begin, t});
            in_run = false;
        }
    }
    if (in_run) runs.push_back({open_begin, std::nullopt});
    return runs;
}

}  // namespace

bool Signal::value_at(Tick t) const {
    auto n = std::upper_bound(switches_.begin(), switches_.end(), t) - switches_.begin();
    return initial_ != (n % 2 == 1);
}

bool Signal::left_limit(Tick t) const { return value_at(t - Tick(1)); }

std::strong_ordering operator<=>(const Signal& a, const Signal& b) {
    if (auto c = a.initial_ <=> b.initial_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.switches_.begin(), a.switches_.end(), b.switches_.begin(),
                                                  b.switches_.end());
}

std::ostream& operator<<(std::ostream& os, const Signal& s) {
    os << '(' << (s.initial_ ? 1 : 0) << ",[";
    for (std::size_t i = 0; i < s.switches_.size(); ++i) os << (i ? "," : "") << s.switches_[i];
    return os << "])";
}

Signal make_signal(bool initial, std::vector<Tick> switches) {
    for (std::size_t i = 1; i < switches.size(); ++i) {
        if (switches[i] <= switches[i - 1]) {
            throw ValidationError("switch times must be strictly increasing (got " +
                                  std::to_string(switches[i - 1].count()) + " then " +
                                  std::to_string(switches[i].count()) + ")");
        }
    }
    return Signal(initial, std::move(switches));
}

void SignalBuilder::set(Tick at, bool value) {
    if (!switches_.empty() && at < switches_.back()) throw ValidationError("SignalBuilder: time went backwards");
    if (!switches_.empty() && at == switches_.back()) {
        // Overriding the assignment made at this same tick.
        if (value != current_) {
            switches_.pop_back();
            current_ = value;
        }
        return;
    }
    if (value != current_) {
        switches_.push_back(at);
        current_ = value;
    }
}

Signal SignalBuilder::build() && { return Signal(initial_, std::move(switches_)); }

std::vector<Edge> edges(const Signal& s) {
    std::vector<Edge> out;
    out.reserve(s.switches().size());
    bool cur = s.initial();
    for (Tick t : s.switches()) {
        cur = !cur;
        out.push_back({t, cur ? Edge::Direction::rising : Edge::Direction::falling});
    }
    return out;
}

Signal complement(const Signal& s) {
    auto sw = s.switches();
    return make_signal(!s.initial(), std::vector<Tick>(sw.begin(), sw.end()));
}

Signal combine(std::span<const Signal> inputs, const std::function<bool(unsigned)>& fn) {
    if (inputs.size() > 16) throw ValidationError("combine: too many inputs");
    auto pack = [&](auto&& bit_of) {
        unsigned bits = 0;
        for (std::size_t i = 0; i < inputs.size(); ++i)
            if (bit_of(inputs[i])) bits |= 1u << i;
        return bits;
    };
    SignalBuilder b(fn(pack([](const Signal& s) { return s.initial(); })));

    std::vector<Tick> times;
    for (const auto& s : inputs) times.insert(times.end(), s.switches().begin(), s.switches().end());
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    for (Tick t : times) b.set(t, fn(pack([t](const Signal& s) { return s.value_at(t); })));
    return std::move(b).build();
}

Signal signal_and(const Signal& a, const Signal& b) {
    const Signal in[] = {a, b};
    return combine(in, [](unsigned bits) { return bits == 3u; });
}

Signal signal_or(const Signal& a, const Signal& b) {
    const Signal in[] = {a, b};
    return combine(in, [](unsigned bits) { return bits != 0u; });
}

bool leq(const Signal& a, const Signal& b) {
    if (a.initial() && !b.initial()) return false;
    auto sa = a.switches();
    auto sb = b.switches();
    std::size_t i = 0, j = 0;
    while (i < sa.size() || j < sb.size()) {
        Tick t = (j == sb.size() || (i < sa.size() && sa[i] < sb[j])) ? sa[i] : sb[j];
        while (i < sa.size() && sa[i] == t) ++i;
        while (j < sb.size() && sb[j] == t) ++j;
        bool va = a.initial() != (i % 2 == 1);
        bool vb = b.initial() != (j % 2 == 1);
        if (va && !vb) return false;
    }
    return true;
}

Signal translate(const Signal& s, Tick d) {
    std::vector<Tick> sw;
    sw.reserve(s.switches().size());
    for (Tick t : s.switches()) sw.push_back(t + d);
    return make_signal(s.initial(), std::move(sw));
}

Signal scale(const Signal& s, Tick::rep k) {
    if (k < 1) throw ValidationError("scale factor must be >= 1");
    std::vector<Tick> sw;
    sw.reserve(s.switches().size());
    for (Tick t : s.switches()) sw.push_back(t * k);
    return make_signal(s.initial(), std::move(sw));
}

Signal window_and(const Signal& s, Tick d, Tick m) {
    if (m < Tick(0)) throw ValidationError("window width must be non-negative");
    // A 1-run [a, b) yields [a+d, b+d-m): the window [t-d, t-d+m] fits inside
    // the run exactly when t-d >= a and t-d+m <= b-1. Runs only shrink, so the
    // images stay ordered and disjoint.
    SignalBuilder b(s.initial());
    for (const Run& r : runs_of(s, true)) {
        std::optional<Tick> lo, hi;
        if (r.begin) lo = *r.begin + d;
        if (r.end) hi = *r.end + d - m;
        if (lo && hi && *hi <= *lo) continue;
        if (lo) b.set(*lo, true);
        if (hi) b.set(*hi, false);
    }
    return std::move(b).build();
}

Signal window_or(const Signal& s, Tick d, Tick m) {
    if (m < Tick(0)) throw ValidationError("window width must be non-negative");
    return complement(window_and(complement(s), d, m));
}

Signal forward_window_and(const Signal& s, Tick hold) {
    if (hold < Tick(0)) throw ValidationError("look-ahead window must be non-negative");
    return window_and(s, Tick(0), hold);
}

}  // namespace inertia
