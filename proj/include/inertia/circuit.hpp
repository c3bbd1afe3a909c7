#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "inertia/delay_algebra.hpp"
#include "inertia/signal.hpp"

namespace inertia::circuit {

/// Deterministic inertial delay: rises when the input has been 1 long enough,
/// falls when it has been 0 long enough. See bridc_det_output().
struct DetBridc {
    BdcParams params;
    friend bool operator==(const DetBridc&, const DetBridc&) = default;
};

using DelayModel = std::variant<FixedDelay, DetBridc>;

enum class DelayClass { ideal, inertial };

[[nodiscard]] DelayClass classify_delay(const DelayModel& m);
[[nodiscard]] const char* to_string(DelayClass c);

/// Ticks between an input change and the earliest output change it can cause.
[[nodiscard]] Tick latency(const DelayModel& m);

/// The bounded delay the model is an instance of.
[[nodiscard]] BdcParams bounds_of(const DelayModel& m);

/// Output of the delay element for input signal z.
[[nodiscard]] Signal apply_delay(const DelayModel& m, const Signal& z);

/// A Boolean function of its inputs followed by a delay element on the output.
/// table[i] is the output for the input combination whose bit k (LSB first)
/// is the value of inputs[k].
struct Gate {
    std::string name;
    std::vector<std::string> inputs;
    std::vector<bool> table;
    DelayModel delay;
};

/// Validated netlist. Gate names are the nets they drive.
class Netlist {
public:
    static constexpr std::size_t max_fan_in = 8;

    /// Throws ValidationError on duplicate or undriven nets, bad table sizes,
    /// inconsistent delay parameters, or a cycle without a delay of at least
    /// one tick latency.
    Netlist(std::vector<std::string> inputs, std::vector<Gate> gates, std::vector<std::string> outputs);

    [[nodiscard]] const std::vector<std::string>& inputs() const { return inputs_; }
    [[nodiscard]] const std::vector<Gate>& gates() const { return gates_; }
    [[nodiscard]] const std::vector<std::string>& outputs() const { return outputs_; }
    [[nodiscard]] bool acyclic() const { return acyclic_; }
    /// Gate indices so that every gate follows the gates it reads. Only
    /// meaningful for acyclic netlists.
    [[nodiscard]] const std::vector<std::size_t>& topological_order() const { return topo_; }

private:
    std::vector<std::string> inputs_;
    std::vector<Gate> gates_;
    std::vector<std::string> outputs_;
    bool acyclic_ = true;
    std::vector<std::size_t> topo_;
};

using Waves = std::map<std::string, Signal>;

/// Restriction of s to [lo, hi]: same values there, constant outside.
[[nodiscard]] Signal restrict_to(const Signal& s, Tick lo, Tick hi);

/// Event-driven simulation of every net, restricted to [lo, hi].
///
/// Before the first input switch every net sits at the steady state
/// reached by settling the gate functions in declaration order from all
/// zeros. Throws PreconditionError for missing stimuli and
/// ConsistencyError when feedback has no steady state.
[[nodiscard]] Waves simulate(const Netlist& n, const Waves& stimuli, Tick lo, Tick hi);

struct Envelope {
    Signal low;
    Signal high;
};

/// Conservative per-net bounds when every gate delay is only known to lie in
/// its bounded delay (a fixed delay d counts as (0,d,0,d)). Acyclic netlists
/// only; throws PreconditionError otherwise.
[[nodiscard]] std::map<std::string, Envelope> envelope_propagate(const Netlist& n, const Waves& stimuli);

}  // namespace inertia::circuit
