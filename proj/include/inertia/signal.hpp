#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "inertia/tick.hpp"

namespace inertia {

/// Right-continuous, piecewise-constant Boolean function over all of time.
///
/// A Signal holds its value on (-inf, first switch) and a strictly increasing
/// list of switch ticks; the value flips at each switch and holds from that
/// tick on. Signals are immutable values and always in canonical form.
class Signal {
public:
    /// Constant-0 signal.
    Signal() = default;

    static Signal constant(bool value) { return Signal(value, {}); }

    [[nodiscard]] bool initial() const { return initial_; }
    [[nodiscard]] std::span<const Tick> switches() const { return switches_; }
    [[nodiscard]] bool final_value() const { return initial_ != (switches_.size() % 2 == 1); }
    [[nodiscard]] bool is_constant() const { return switches_.empty(); }

    [[nodiscard]] bool value_at(Tick t) const;
    /// x(t-0). Tick-aligned signals have no switch strictly between t-1 and t.
    [[nodiscard]] bool left_limit(Tick t) const;

    friend bool operator==(const Signal&, const Signal&) = default;
    friend std::strong_ordering operator<=>(const Signal& a, const Signal& b);

    friend std::ostream& operator<<(std::ostream& os, const Signal& s);

private:
    friend Signal make_signal(bool initial, std::vector<Tick> switches);
    friend class SignalBuilder;

    Signal(bool initial, std::vector<Tick> switches) : initial_(initial), switches_(std::move(switches)) {}

    bool initial_ = false;
    std::vector<Tick> switches_;
};

/// Validating constructor. Throws ValidationError unless switches strictly increase.
Signal make_signal(bool initial, std::vector<Tick> switches);
inline Signal make_signal(bool initial, std::initializer_list<Tick> switches) {
    return make_signal(initial, std::vector<Tick>(switches));
}

/// Appends value assignments in nondecreasing time order and keeps the
/// result canonical. A later assignment at the same tick overrides.
class SignalBuilder {
public:
    explicit SignalBuilder(bool initial) : initial_(initial), current_(initial) {}

    void set(Tick at, bool value);
    [[nodiscard]] bool current() const { return current_; }
    Signal build() &&;

private:
    bool initial_;
    bool current_;
    std::vector<Tick> switches_;
};

struct Edge {
    enum class Direction { rising, falling };

    Tick at;
    Direction direction;

    friend bool operator==(const Edge&, const Edge&) = default;
};

[[nodiscard]] std::vector<Edge> edges(const Signal& s);

[[nodiscard]] Signal complement(const Signal& s);
[[nodiscard]] Signal signal_and(const Signal& a, const Signal& b);
[[nodiscard]] Signal signal_or(const Signal& a, const Signal& b);
/// Pointwise a(t) <= b(t) for every t.
[[nodiscard]] bool leq(const Signal& a, const Signal& b);

/// t -> s(t - d), the translation I_d.
[[nodiscard]] Signal translate(const Signal& s, Tick d);
/// Multiplies every switch time by k >= 1; used to refine the tick grid.
[[nodiscard]] Signal scale(const Signal& s, Tick::rep k);

/// t -> AND of s over the closed tick window [t-d, t-d+m]. Requires m >= 0.
[[nodiscard]] Signal window_and(const Signal& s, Tick d, Tick m);
/// t -> OR of s over the closed tick window [t-d, t-d+m]. Requires m >= 0.
[[nodiscard]] Signal window_or(const Signal& s, Tick d, Tick m);
/// t -> AND of s over [t, t+hold]. Requires hold >= 0.
[[nodiscard]] Signal forward_window_and(const Signal& s, Tick hold);

/// Combines signals pointwise. fn receives the input bits packed LSB-first
/// (bit i is inputs[i]) and returns the output bit.
[[nodiscard]] Signal combine(std::span<const Signal> inputs, const std::function<bool(unsigned)>& fn);

}  // namespace inertia
