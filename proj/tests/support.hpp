// Generators and pointwise reference implementations shared by the tests.
// References evaluate definitions tick by tick and never call the window
// operators of the library.
#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "inertia/delay_algebra.hpp"
#include "inertia/signal.hpp"

namespace test {

using inertia::AicParams;
using inertia::BdcParams;
using inertia::RicParams;
using inertia::Signal;
using inertia::Tick;
using rep = Tick::rep;

// Modulo mapping keeps sequences identical across standard libraries.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : g_(seed) {}

    rep between(rep lo, rep hi) { return lo + static_cast<rep>(g_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    bool coin() { return (g_() >> 17) & 1u; }

    Signal signal(rep first, rep last, std::size_t max_switches) {
        auto k = static_cast<std::size_t>(between(0, static_cast<rep>(max_switches)));
        k = std::min<std::size_t>(k, static_cast<std::size_t>(last - first + 1));
        std::set<rep> ticks;
        while (ticks.size() < k) ticks.insert(between(first, last));
        return inertia::make_signal(coin(), std::vector<Tick>(ticks.begin(), ticks.end()));
    }
    BdcParams bdc(rep max) {
        rep dr = between(0, max), df = between(0, max);
        return BdcParams(between(0, dr), dr, between(0, df), df);
    }
    BdcParams bdc_cc(rep max) {
        for (;;) {
            BdcParams p = bdc(max);
            if (inertia::cc_holds(p)) return p;
        }
    }
    RicParams ric(rep max) {
        rep dr = between(0, max), df = between(0, max);
        return RicParams(between(0, dr), dr, between(0, df), df);
    }
    AicParams aic(rep max) { return AicParams(between(0, max), between(0, max)); }

private:
    std::mt19937_64 g_;
};

// Signal equal to f on [lo, hi] and constant outside (f(lo-1) before, f(hi) after).
inline Signal tabulate(rep lo, rep hi, const std::function<bool(rep)>& f) {
    bool init = f(lo - 1);
    bool cur = init;
    std::vector<Tick> sw;
    for (rep t = lo; t <= hi; ++t) {
        bool v = f(t);
        if (v != cur) {
            sw.emplace_back(t);
            cur = v;
        }
    }
    return inertia::make_signal(init, std::move(sw));
}

inline bool all_on(const Signal& s, rep a, rep b, bool v) {
    for (rep k = a; k <= b; ++k)
        if (s.value_at(Tick(k)) != v) return false;
    return true;
}

inline bool ref_window_and(const Signal& s, rep t, rep d, rep m) { return all_on(s, t - d, t - d + m, true); }
inline bool ref_window_or(const Signal& s, rep t, rep d, rep m) { return !all_on(s, t - d, t - d + m, false); }

// Ticks far enough out that every signal involved is constant beyond them.
constexpr rep far_lo = -40;
constexpr rep far_hi = 80;

inline bool ref_bdc_member(const Signal& u, const Signal& x, const BdcParams& p) {
    const rep mr = p.rise_memory().count(), dr = p.rise_delay().count();
    const rep mf = p.fall_memory().count(), df = p.fall_delay().count();
    for (rep t = far_lo; t <= far_hi; ++t) {
        bool xt = x.value_at(Tick(t));
        if (all_on(u, t - dr, t - dr + mr, true) && !xt) return false;
        if (all_on(u, t - df, t - df + mf, false) && xt) return false;
    }
    return true;
}

inline bool ref_aic_member(const Signal& x, const AicParams& a) {
    for (rep t = far_lo; t <= far_hi; ++t) {
        bool prev = x.value_at(Tick(t - 1)), cur = x.value_at(Tick(t));
        if (!prev && cur && !all_on(x, t, t + a.rise_hold().count(), true)) return false;
        if (prev && !cur && !all_on(x, t, t + a.fall_hold().count(), false)) return false;
    }
    return true;
}

inline bool ref_ric_member(const Signal& u, const Signal& x, const RicParams& r) {
    for (rep t = far_lo; t <= far_hi; ++t) {
        bool prev = x.value_at(Tick(t - 1)), cur = x.value_at(Tick(t));
        rep dr = r.rise_lag().count(), mr = r.rise_memory().count();
        rep df = r.fall_lag().count(), mf = r.fall_memory().count();
        if (!prev && cur && !all_on(u, t - dr, t - dr + mr, true)) return false;
        if (prev && !cur && !all_on(u, t - df, t - df + mf, false)) return false;
    }
    return true;
}

// Tick recurrence: switch on when the rise window is saturated, off when the
// fall window is, otherwise hold. Starts from the input's initial value.
inline Signal ref_det_output(const Signal& u, const BdcParams& p) {
    const rep mr = p.rise_memory().count(), dr = p.rise_delay().count();
    const rep mf = p.fall_memory().count(), df = p.fall_delay().count();
    std::vector<bool> v;
    bool cur = u.initial();
    for (rep t = far_lo; t <= far_hi; ++t) {
        if (all_on(u, t - dr, t - dr + mr, true))
            cur = true;
        else if (all_on(u, t - df, t - df + mf, false))
            cur = false;
        v.push_back(cur);
    }
    return tabulate(far_lo, far_hi, [&](rep t) {
        if (t < far_lo) return u.initial();
        return static_cast<bool>(v[static_cast<std::size_t>(t - far_lo)]);
    });
}

}  // namespace test
