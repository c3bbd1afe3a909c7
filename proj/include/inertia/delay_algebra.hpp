#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "inertia/signal.hpp"
#include "inertia/tick.hpp"

namespace inertia {

/// Parameters of a bounded delay condition.
///
/// The output must rise no later than `rise_delay` after the input has been 1
/// for `rise_memory + 1` ticks, and fall no later than `fall_delay` after the
/// input has been 0 for `fall_memory + 1` ticks. The memories act as
/// cancellation thresholds: shorter input pulses may be swallowed.
///
/// The constructor enforces 0 <= memory <= delay on each side. It does not
/// enforce the consistency condition; see cc_holds().
class BdcParams {
public:
    BdcParams(Tick rise_memory, Tick rise_delay, Tick fall_memory, Tick fall_delay);

    [[nodiscard]] Tick rise_memory() const { return rise_memory_; }
    [[nodiscard]] Tick rise_delay() const { return rise_delay_; }
    [[nodiscard]] Tick fall_memory() const { return fall_memory_; }
    [[nodiscard]] Tick fall_delay() const { return fall_delay_; }

    /// Smallest admissible delay for a rising transition.
    [[nodiscard]] Tick rise_lower_bound() const { return fall_delay_ - fall_memory_; }
    /// Smallest admissible delay for a falling transition.
    [[nodiscard]] Tick fall_lower_bound() const { return rise_delay_ - rise_memory_; }

    friend bool operator==(const BdcParams&, const BdcParams&) = default;

private:
    Tick rise_memory_, rise_delay_, fall_memory_, fall_delay_;
};

/// Minimum hold times after a rise and after a fall.
class AicParams {
public:
    AicParams(Tick rise_hold, Tick fall_hold);

    [[nodiscard]] Tick rise_hold() const { return rise_hold_; }
    [[nodiscard]] Tick fall_hold() const { return fall_hold_; }

    friend bool operator==(const AicParams&, const AicParams&) = default;

private:
    Tick rise_hold_, fall_hold_;
};

/// An output rise at t is permitted only if the input was 1 on
/// [t - rise_lag, t - rise_lag + rise_memory]; dually for falls.
class RicParams {
public:
    RicParams(Tick rise_memory, Tick rise_lag, Tick fall_memory, Tick fall_lag);

    [[nodiscard]] Tick rise_memory() const { return rise_memory_; }
    [[nodiscard]] Tick rise_lag() const { return rise_lag_; }
    [[nodiscard]] Tick fall_memory() const { return fall_memory_; }
    [[nodiscard]] Tick fall_lag() const { return fall_lag_; }

    friend bool operator==(const RicParams&, const RicParams&) = default;

private:
    Tick rise_memory_, rise_lag_, fall_memory_, fall_lag_;
};

/// x(t) = u(t - delay).
struct FixedDelay {
    Tick delay;

    explicit FixedDelay(Tick d);
    friend bool operator==(const FixedDelay&, const FixedDelay&) = default;
};

using Atom = std::variant<FixedDelay, BdcParams, AicParams, RicParams>;

/// Non-empty conjunction of atomic conditions; x satisfies it for input u
/// when every atom holds.
class CondExpr {
public:
    explicit CondExpr(std::vector<Atom> atoms);
    CondExpr(std::initializer_list<Atom> atoms) : CondExpr(std::vector<Atom>(atoms)) {}

    [[nodiscard]] std::span<const Atom> atoms() const { return atoms_; }

private:
    std::vector<Atom> atoms_;
};

// --- bounded delays -------------------------------------------------------

/// rise_delay >= rise_lower_bound and fall_delay >= fall_lower_bound.
[[nodiscard]] bool cc_holds(const BdcParams& p);

[[nodiscard]] bool bdc_member(const Signal& u, const Signal& x, const BdcParams& p);

/// Pointwise least / greatest admissible output. Throw ConsistencyError when CC fails.
[[nodiscard]] Signal bdc_min_solution(const Signal& u, const BdcParams& p);
[[nodiscard]] Signal bdc_max_solution(const Signal& u, const BdcParams& p);

/// Whether the combined tuple (min of the delays, max of the lower bounds)
/// satisfies CC. This decides if Sol(p)(u) and Sol(q)(u) meet for every u.
/// Both arguments must satisfy CC.
[[nodiscard]] bool bdc_intersection_consistent(const BdcParams& p, const BdcParams& q);
/// The combined tuple as parameters, or nullopt when it violates CC or a
/// memory comes out negative. Both arguments must satisfy CC.
[[nodiscard]] std::optional<BdcParams> bdc_intersection(const BdcParams& p, const BdcParams& q);
/// Smallest BDC containing both; always satisfies CC.
[[nodiscard]] BdcParams bdc_union_envelope(const BdcParams& p, const BdcParams& q);

[[nodiscard]] bool bdc_is_deterministic(const BdcParams& p);
[[nodiscard]] bool bdc_is_inertial(const BdcParams& p);
/// The translation amount when the BDC degenerates to a fixed delay.
[[nodiscard]] std::optional<Tick> bdc_as_translation(const BdcParams& p);
/// Sol(p)(u) is a subset of Sol(q)(u) for every input u.
[[nodiscard]] bool bdc_includes(const BdcParams& p, const BdcParams& q);
[[nodiscard]] bool bdc_is_symmetrical(const BdcParams& p);
/// Serial connection: p's output feeds q.
[[nodiscard]] BdcParams bdc_compose(const BdcParams& p, const BdcParams& q);

// --- fixed delays ---------------------------------------------------------

[[nodiscard]] bool fdc_member(const Signal& u, const Signal& x, Tick d);

// --- absolute inertia -----------------------------------------------------

[[nodiscard]] bool aic_member(const Signal& x, const AicParams& a);
/// Whether BDC(p) and AIC(a) admit a common solution for every input. Requires CC.
[[nodiscard]] bool baidc_consistent(const BdcParams& p, const AicParams& a);

// --- relative inertia -----------------------------------------------------

[[nodiscard]] bool ric_member(const Signal& u, const Signal& x, const RicParams& r);
/// Hold times every RIC solution is guaranteed to respect, when the lags
/// overlap enough for such a guarantee to exist.
[[nodiscard]] std::optional<AicParams> ric_to_aic(const RicParams& r);

/// Outcome of the four-regime BRIDC consistency test.
struct BridcVerdict {
    /// clauses[k] is true when regime k (i, ii, iii, iv) holds.
    std::array<bool, 4> clauses{};

    [[nodiscard]] bool holds() const { return clauses[0] || clauses[1] || clauses[2] || clauses[3]; }
    /// Names of the regimes that hold, e.g. "b.i,b.iii"; empty when none.
    [[nodiscard]] std::string fired() const;
};

[[nodiscard]] BridcVerdict bridc_consistent(const BdcParams& p, const RicParams& r);

/// The unique x in BDC(p)(u) that only switches when the input window of
/// the corresponding BDC bound is saturated. Throws ConsistencyError when CC fails.
[[nodiscard]] Signal bridc_det_output(const Signal& u, const BdcParams& p);

std::ostream& operator<<(std::ostream& os, const BdcParams& p);
std::ostream& operator<<(std::ostream& os, const AicParams& a);
std::ostream& operator<<(std::ostream& os, const RicParams& r);

// --- conjunctions ---------------------------------------------------------

[[nodiscard]] bool member(const Signal& u, const Signal& x, const CondExpr& expr);

}  // namespace inertia
