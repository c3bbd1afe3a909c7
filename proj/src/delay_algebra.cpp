#include "inertia/delay_algebra.hpp"

#include <algorithm>

namespace inertia {

namespace {

void require_range(Tick memory, Tick bound, const char* what) {
    if (memory < Tick(0) || bound < memory)
        throw ValidationError(std::string(what) + ": need 0 <= memory <= delay, got memory=" +
                              std::to_string(memory.count()) + " delay=" + std::to_string(bound.count()));
}

void require_cc(const BdcParams& p, const char* op) {
    if (!cc_holds(p)) throw PreconditionError(std::string(op) + ": argument violates the consistency condition");
}

// Rise guard and fall guard of the deterministic BRIDC / RIC.
Signal rise_window(const Signal& u, Tick lag, Tick memory) { return window_and(u, lag, memory); }
Signal fall_window(const Signal& u, Tick lag, Tick memory) { return window_and(complement(u), lag, memory); }

}  // namespace

BdcParams::BdcParams(Tick rise_memory, Tick rise_delay, Tick fall_memory, Tick fall_delay)
    : rise_memory_(rise_memory), rise_delay_(rise_delay), fall_memory_(fall_memory), fall_delay_(fall_delay) {
    require_range(rise_memory, rise_delay, "BDC rising side");
    require_range(fall_memory, fall_delay, "BDC falling side");
}

AicParams::AicParams(Tick rise_hold, Tick fall_hold) : rise_hold_(rise_hold), fall_hold_(fall_hold) {
    if (rise_hold < Tick(0) || fall_hold < Tick(0)) throw ValidationError("AIC hold times must be non-negative");
}

RicParams::RicParams(Tick rise_memory, Tick rise_lag, Tick fall_memory, Tick fall_lag)
    : rise_memory_(rise_memory), rise_lag_(rise_lag), fall_memory_(fall_memory), fall_lag_(fall_lag) {
    require_range(rise_memory, rise_lag, "RIC rising side");
    require_range(fall_memory, fall_lag, "RIC falling side");
}

FixedDelay::FixedDelay(Tick d) : delay(d) {
    if (d < Tick(0)) throw ValidationError("fixed delay must be non-negative");
}

CondExpr::CondExpr(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw ValidationError("condition expression needs at least one atom");
}

bool cc_holds(const BdcParams& p) {
    return p.rise_delay() >= p.rise_lower_bound() && p.fall_delay() >= p.fall_lower_bound();
}

bool bdc_member(const Signal& u, const Signal& x, const BdcParams& p) {
    return leq(window_and(u, p.rise_delay(), p.rise_memory()), x) &&
           leq(x, window_or(u, p.fall_delay(), p.fall_memory()));
}

Signal bdc_min_solution(const Signal& u, const BdcParams& p) {
    if (!cc_holds(p)) throw ConsistencyError("CC violated: the bounded delay has inputs without solutions");
    return window_and(u, p.rise_delay(), p.rise_memory());
}

Signal bdc_max_solution(const Signal& u, const BdcParams& p) {
    if (!cc_holds(p)) throw ConsistencyError("CC violated: the bounded delay has inputs without solutions");
    return window_or(u, p.fall_delay(), p.fall_memory());
}

namespace {

struct RawTuple {
    Tick mr, dr, mf, df;
};

RawTuple intersection_tuple(const BdcParams& p, const BdcParams& q) {
    require_cc(p, "bdc_intersection");
    require_cc(q, "bdc_intersection");
    Tick dr = std::min(p.rise_delay(), q.rise_delay());
    Tick df = std::min(p.fall_delay(), q.fall_delay());
    return {dr - std::max(p.fall_lower_bound(), q.fall_lower_bound()), dr,
            df - std::max(p.rise_lower_bound(), q.rise_lower_bound()), df};
}

}  // namespace

bool bdc_intersection_consistent(const BdcParams& p, const BdcParams& q) {
    auto t = intersection_tuple(p, q);
    return t.dr >= t.df - t.mf && t.df >= t.dr - t.mr;
}

std::optional<BdcParams> bdc_intersection(const BdcParams& p, const BdcParams& q) {
    auto t = intersection_tuple(p, q);
    if (t.mr < Tick(0) || t.mf < Tick(0)) return std::nullopt;
    BdcParams r(t.mr, t.dr, t.mf, t.df);
    if (!cc_holds(r)) return std::nullopt;
    return r;
}

BdcParams bdc_union_envelope(const BdcParams& p, const BdcParams& q) {
    require_cc(p, "bdc_union_envelope");
    require_cc(q, "bdc_union_envelope");
    Tick dr = std::max(p.rise_delay(), q.rise_delay());
    Tick df = std::max(p.fall_delay(), q.fall_delay());
    Tick mr = dr - std::min(p.fall_lower_bound(), q.fall_lower_bound());
    Tick mf = df - std::min(p.rise_lower_bound(), q.rise_lower_bound());
    return BdcParams(mr, dr, mf, df);
}

bool bdc_is_deterministic(const BdcParams& p) {
    require_cc(p, "bdc_is_deterministic");
    return p.rise_memory() == Tick(0) && p.fall_memory() == Tick(0);
}

bool bdc_is_inertial(const BdcParams& p) { return !bdc_is_deterministic(p); }

std::optional<Tick> bdc_as_translation(const BdcParams& p) {
    if (!bdc_is_deterministic(p)) return std::nullopt;
    // Null memories plus CC force rise_delay == fall_delay.
    return p.rise_delay();
}

bool bdc_includes(const BdcParams& p, const BdcParams& q) {
    require_cc(p, "bdc_includes");
    require_cc(q, "bdc_includes");
    return q.fall_lower_bound() <= p.fall_lower_bound() && p.fall_lower_bound() <= p.fall_delay() &&
           p.fall_delay() <= q.fall_delay() && q.rise_lower_bound() <= p.rise_lower_bound() &&
           p.rise_lower_bound() <= p.rise_delay() && p.rise_delay() <= q.rise_delay();
}

bool bdc_is_symmetrical(const BdcParams& p) {
    return p.rise_delay() == p.fall_delay() && p.rise_memory() == p.fall_memory();
}

BdcParams bdc_compose(const BdcParams& p, const BdcParams& q) {
    require_cc(p, "bdc_compose");
    require_cc(q, "bdc_compose");
    return BdcParams(p.rise_memory() + q.rise_memory(), p.rise_delay() + q.rise_delay(),
                     p.fall_memory() + q.fall_memory(), p.fall_delay() + q.fall_delay());
}

bool fdc_member(const Signal& u, const Signal& x, Tick d) {
    if (d < Tick(0)) throw ValidationError("fixed delay must be non-negative");
    return x == translate(u, d);
}

bool aic_member(const Signal& x, const AicParams& a) {
    // A run that starts at a switch must last longer than its hold time.
    auto sw = x.switches();
    bool value = x.initial();
    for (std::size_t i = 0; i < sw.size(); ++i) {
        value = !value;
        if (i + 1 == sw.size()) break;  // final run is infinite
        Tick length = sw[i + 1] - sw[i];
        Tick hold = value ? a.rise_hold() : a.fall_hold();
        if (length <= hold) return false;
    }
    return true;
}

bool baidc_consistent(const BdcParams& p, const AicParams& a) {
    require_cc(p, "baidc_consistent");
    return a.rise_hold() + a.fall_hold() <= p.rise_memory() + p.fall_memory();
}

bool ric_member(const Signal& u, const Signal& x, const RicParams& r) {
    if (x.is_constant()) return true;
    Signal may_rise = rise_window(u, r.rise_lag(), r.rise_memory());
    Signal may_fall = fall_window(u, r.fall_lag(), r.fall_memory());
    for (const Edge& e : edges(x)) {
        const Signal& guard = e.direction == Edge::Direction::rising ? may_rise : may_fall;
        if (!guard.value_at(e.at)) return false;
    }
    return true;
}

std::optional<AicParams> ric_to_aic(const RicParams& r) {
    if (r.rise_lag() < r.fall_lag() - r.fall_memory() || r.fall_lag() < r.rise_lag() - r.rise_memory())
        return std::nullopt;
    return AicParams(r.fall_lag() - r.rise_lag() + r.rise_memory(), r.rise_lag() - r.fall_lag() + r.fall_memory());
}

std::string BridcVerdict::fired() const {
    static constexpr const char* names[] = {"b.i", "b.ii", "b.iii", "b.iv"};
    std::string out;
    for (std::size_t k = 0; k < clauses.size(); ++k) {
        if (!clauses[k]) continue;
        if (!out.empty()) out += ',';
        out += names[k];
    }
    return out;
}

BridcVerdict bridc_consistent(const BdcParams& p, const RicParams& r) {
    const Tick mr = p.rise_memory(), dr = p.rise_delay(), mf = p.fall_memory(), df = p.fall_delay();
    const Tick ur = r.rise_memory(), er = r.rise_lag(), uf = r.fall_memory(), ef = r.fall_lag();
    auto chain = [](std::initializer_list<Tick> xs) { return std::is_sorted(xs.begin(), xs.end()); };

    BridcVerdict v;
    v.clauses[0] = chain({df - mf, er, dr, er - ur + mr}) && chain({dr - mr, ef, df, ef - uf + mf});
    v.clauses[1] = chain({dr - mr + ur, er, df - mf, dr}) && chain({df - mf + uf, ef, dr - mr, df});
    v.clauses[2] = chain({df - mf, er, dr - mr + ur, dr}) && chain({dr - mr, ef, df - mf + uf, df});
    v.clauses[3] = chain({er, df - mf, er + mr - ur, dr}) && chain({ef, dr - mr, ef + mf - uf, df});
    return v;
}

Signal bridc_det_output(const Signal& u, const BdcParams& p) {
    if (!cc_holds(p)) throw ConsistencyError("CC violated: no deterministic inertial output exists");
    // Rise exactly when the rise window saturates at 1, fall exactly when the
    // fall window saturates at 0. CC keeps the two guards disjoint, so the
    // state can only change at a guard switch.
    Signal rise = rise_window(u, p.rise_delay(), p.rise_memory());
    Signal fall = fall_window(u, p.fall_delay(), p.fall_memory());

    SignalBuilder b(u.initial());
    auto rs = rise.switches();
    auto fs = fall.switches();
    std::size_t i = 0, j = 0;
    while (i < rs.size() || j < fs.size()) {
        Tick t = (j == fs.size() || (i < rs.size() && rs[i] < fs[j])) ? rs[i] : fs[j];
        while (i < rs.size() && rs[i] == t) ++i;
        while (j < fs.size() && fs[j] == t) ++j;
        bool may_rise = rise.initial() != (i % 2 == 1);
        bool may_fall = fall.initial() != (j % 2 == 1);
        if (!b.current() && may_rise) b.set(t, true);
        else if (b.current() && may_fall) b.set(t, false);
    }
    return std::move(b).build();
}

std::ostream& operator<<(std::ostream& os, const BdcParams& p) {
    return os << "bdc(mr=" << p.rise_memory() << ",dr=" << p.rise_delay() << ",mf=" << p.fall_memory()
              << ",df=" << p.fall_delay() << ')';
}

std::ostream& operator<<(std::ostream& os, const AicParams& a) {
    return os << "aic(rise=" << a.rise_hold() << ",fall=" << a.fall_hold() << ')';
}

std::ostream& operator<<(std::ostream& os, const RicParams& r) {
    return os << "ric(mu_r=" << r.rise_memory() << ",delta_r=" << r.rise_lag() << ",mu_f=" << r.fall_memory()
              << ",delta_f=" << r.fall_lag() << ')';
}

bool member(const Signal& u, const Signal& x, const CondExpr& expr) {
    for (const Atom& atom : expr.atoms()) {
        bool ok = std::visit(
            [&](const auto& a) {
                using T = std::decay_t<decltype(a)>;
                if constexpr (std::is_same_v<T, FixedDelay>) return fdc_member(u, x, a.delay);
                else if constexpr (std::is_same_v<T, BdcParams>) return bdc_member(u, x, a);
                else if constexpr (std::is_same_v<T, AicParams>) return aic_member(x, a);
                else return ric_member(u, x, a);
            },
            atom);
        if (!ok) return false;
    }
    return true;
}

}  // namespace inertia
