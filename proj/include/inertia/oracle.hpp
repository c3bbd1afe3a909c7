#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "inertia/delay_algebra.hpp"
#include "inertia/signal.hpp"

namespace inertia::oracle {

/// Inclusive tick horizon for enumeration. Candidate outputs may switch only
/// at ticks in (lo, hi] and hold their boundary values outside.
struct GridConfig {
    Tick lo;
    Tick hi;
    /// Candidates with more switches than this are skipped.
    std::size_t max_switches = std::numeric_limits<std::size_t>::max();

    static constexpr Tick::rep max_span = 48;

    /// Throws ResourceError when the horizon is empty or wider than max_span.
    void validate() const;
};

/// Sorted, duplicate-free list of signals.
using SolutionSet = std::vector<Signal>;

/// Calls visit(x) for every tick-aligned x on the grid that satisfies expr
/// for input u at every tick of the padded horizon, in lexicographic order of
/// the bit vector x(lo..hi). visit returns false to stop early. Returns the
/// number of solutions visited.
///
/// The membership test is a direct pointwise evaluation of the defining
/// inequalities; it does not use the window operators of the signal module.
std::size_t for_each_solution(const Signal& u, const CondExpr& expr, const GridConfig& g,
                              const std::function<bool(const Signal&)>& visit);

[[nodiscard]] SolutionSet enumerate_solutions(const Signal& u, const CondExpr& expr, const GridConfig& g);
[[nodiscard]] bool has_solution(const Signal& u, const CondExpr& expr, const GridConfig& g);

/// Inputs to try in a witness search: every signal with at most
/// max_switches switches inside [first, last], followed (when
/// max_train_width > 0) by periodic pulse trains starting at `first` with
/// high and low widths up to max_train_width, truncated at every length
/// that still fits before `last`.
///
/// Trains matter for hold-time conditions: the slack between allowed and
/// required output edges shrinks a little per period, so the shortest
/// witness can need many more switches than an exhaustive search reaches.
struct InputFamily {
    Tick first;
    Tick last;
    std::size_t max_switches;
    Tick::rep max_train_width = 0;
    /// When false only the trains are produced.
    bool include_exhaustive = true;

    /// Exhaustive part first, by increasing switch count, initial value 0
    /// before 1, then lexicographically. visit returns false to stop.
    void for_each(const std::function<bool(const Signal&)>& visit) const;
};

/// First input of the family whose solution set is empty on the grid.
[[nodiscard]] std::optional<Signal> find_empty_witness(const CondExpr& expr, const GridConfig& g,
                                                       const InputFamily& inputs);

[[nodiscard]] SolutionSet normalize(SolutionSet s);
[[nodiscard]] bool set_equal(const SolutionSet& a, const SolutionSet& b);
[[nodiscard]] bool set_subset(const SolutionSet& a, const SolutionSet& b);

/// Largest delay, lag or hold appearing in expr.
[[nodiscard]] Tick max_span_of(const CondExpr& expr);

}  // namespace inertia::oracle
