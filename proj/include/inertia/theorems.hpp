#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace inertia::theorems {

/// One named property checked over many generated cases.
struct Check {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    /// The first few failing cases, human readable.
    std::vector<std::string> counterexamples;
};

struct Report {
    std::string theorem;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::vector<Check> checks;
    /// Free-form counters, e.g. how often each consistency regime fired.
    std::map<std::string, std::size_t> tallies;

    [[nodiscard]] std::size_t failures() const;
    [[nodiscard]] bool passed() const { return failures() == 0; }
    /// Deterministic JSON rendering (sorted keys, no timing data).
    [[nodiscard]] std::string to_json() const;
};

struct Options {
    /// Random cases for sampled suites; for parameter sweeps, the number of
    /// extra random inputs tried per parameter tuple.
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    /// Cap on counterexamples kept per check.
    std::size_t max_examples = 5;
};

/// t1, t14a ... t14g, baidc, baidc-serial, t42, t45, t47.
[[nodiscard]] std::span<const std::string_view> theorem_ids();

/// Runs the property suite for one theorem id. Throws ValidationError for
/// unknown ids.
[[nodiscard]] Report verify(std::string_view id, const Options& opt);

}  // namespace inertia::theorems
