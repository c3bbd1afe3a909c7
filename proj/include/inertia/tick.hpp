#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>

#include "inertia/error.hpp"

namespace inertia {

/// Integer time coordinate. One tick is one abstract time unit; all delay
/// parameters are tick counts as well. Arithmetic is overflow-checked.
class Tick {
public:
    using rep = std::int64_t;

    constexpr Tick() = default;
    constexpr Tick(rep v) : v_(v) {}  // NOLINT(google-explicit-constructor)

    [[nodiscard]] constexpr rep count() const { return v_; }

    friend constexpr auto operator<=>(Tick, Tick) = default;
    friend constexpr bool operator==(Tick, Tick) = default;

    friend Tick operator+(Tick a, Tick b) {
        rep r;
        if (__builtin_add_overflow(a.v_, b.v_, &r)) throw ValidationError("tick overflow in addition");
        return Tick(r);
    }
    friend Tick operator-(Tick a, Tick b) {
        rep r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw ValidationError("tick overflow in subtraction");
        return Tick(r);
    }
    friend Tick operator*(Tick a, rep k) {
        rep r;
        if (__builtin_mul_overflow(a.v_, k, &r)) throw ValidationError("tick overflow in scaling");
        return Tick(r);
    }
    Tick operator-() const { return Tick(0) - *this; }
    Tick& operator+=(Tick o) { return *this = *this + o; }
    Tick& operator-=(Tick o) { return *this = *this - o; }

    friend std::ostream& operator<<(std::ostream& os, Tick t) { return os << t.v_; }

private:
    rep v_ = 0;
};

}  // namespace inertia

template <>
struct std::hash<inertia::Tick> {
    std::size_t operator()(inertia::Tick t) const noexcept { return std::hash<std::int64_t>{}(t.count()); }
};
