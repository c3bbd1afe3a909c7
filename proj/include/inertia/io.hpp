#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "inertia/circuit.hpp"
#include "inertia/delay_algebra.hpp"

namespace inertia::io {

struct RunConfig {
    /// VCD timescale, e.g. "1ns" or "10ps".
    std::string time_unit = "1ns";
    /// Ticks per time unit in waveform files.
    std::int64_t resolution = 1;
    std::uint64_t seed = 1;

    /// Throws ValidationError on a malformed time unit or resolution < 1.
    void validate() const;
};

/// `key = value` lines; '#' starts a comment; values may be double-quoted.
/// Recognised keys: time_unit, resolution, seed. Unknown keys are errors.
[[nodiscard]] RunConfig parse_config(std::string_view text, RunConfig base = {});

/// INERTIA_SEED, when set to a valid unsigned integer.
[[nodiscard]] std::optional<std::uint64_t> seed_from_env();

/// One signal per line: `name initial t1 t2 ... tn`. Blank lines and lines
/// starting with '#' are skipped. Times may be decimals; they are multiplied
/// by `resolution` and must land exactly on a tick.
[[nodiscard]] circuit::Waves parse_waveforms(std::string_view text, std::int64_t resolution = 1);

/// Inverse of parse_waveforms at resolution 1, names in sorted order.
[[nodiscard]] std::string emit_waveforms(const circuit::Waves& waves);

/// Value change dump of every signal. Identical input gives identical bytes.
/// Throws ValidationError for switches at negative times.
[[nodiscard]] std::string emit_vcd(const circuit::Waves& waves, const RunConfig& cfg = {});

// Parameter objects. Values are integer ticks; unknown or missing keys are
// parse errors.
[[nodiscard]] BdcParams parse_bdc(std::string_view json);
[[nodiscard]] AicParams parse_aic(std::string_view json);
[[nodiscard]] RicParams parse_ric(std::string_view json);
[[nodiscard]] FixedDelay parse_fixed(std::string_view json);

[[nodiscard]] std::string to_json(const BdcParams& p);
[[nodiscard]] std::string to_json(const AicParams& a);
[[nodiscard]] std::string to_json(const RicParams& r);

/// {"inputs":[...], "gates":[{"name","inputs","table","delay"}], "outputs":[...]}
/// where table is an array of 0/1 (or a string of '0'/'1'), index LSB-first
/// over the gate inputs, and delay is {"kind":"fixed","d":n} or
/// {"kind":"bridc","mr":..,"dr":..,"mf":..,"df":..}.
[[nodiscard]] circuit::Netlist parse_netlist(std::string_view json);

}  // namespace inertia::io
