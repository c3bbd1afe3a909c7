#include "inertia/io.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <regex>
#include <set>
#include <sstream>

#include "inertia/error.hpp"
#include "json.hpp"

namespace inertia::io {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

[[noreturn]] void fail_line(std::size_t line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

// Exact decimal -> ticks: value * resolution must be an integer.
Tick parse_time(std::string_view tok, std::int64_t resolution, std::size_t line) {
    std::string_view s = tok;
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s.remove_prefix(1);
    }
    auto dot = s.find('.');
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    auto digits = [](std::string_view d) { return std::all_of(d.begin(), d.end(), [](char c) { return c >= '0' && c <= '9'; }); };
    if (whole.empty() && frac.empty()) fail_line(line, "malformed time '" + std::string(tok) + "'");
    if (!digits(whole) || !digits(frac) || (dot != std::string_view::npos && frac.empty()))
        fail_line(line, "malformed time '" + std::string(tok) + "'");
    if (frac.size() > 18) fail_line(line, "too many decimals in '" + std::string(tok) + "'");

    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    std::int64_t mantissa = 0;
    bool overflow = false;
    for (char c : std::string(whole) + std::string(frac)) {
        overflow |= __builtin_mul_overflow(mantissa, std::int64_t{10}, &mantissa);
        overflow |= __builtin_add_overflow(mantissa, std::int64_t{c - '0'}, &mantissa);
    }
    std::int64_t scaled = 0;
    overflow |= __builtin_mul_overflow(mantissa, resolution, &scaled);
    if (overflow) fail_line(line, "time '" + std::string(tok) + "' overflows the tick range");
    if (scaled % scale != 0)
        fail_line(line, "time '" + std::string(tok) + "' is not a multiple of 1/" + std::to_string(resolution));
    std::int64_t ticks = scaled / scale;
    return Tick(negative ? -ticks : ticks);
}

const json& require_key(const json& j, const char* key, std::string_view what) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string(what) + ": missing key '" + key + "'");
    return *it;
}

Tick require_ticks(const json& j, const char* key, std::string_view what) {
    const json& v = require_key(j, key, what);
    if (!v.is_number_integer()) throw ParseError(std::string(what) + ": '" + key + "' must be an integer tick count");
    return Tick(v.get<std::int64_t>());
}

json parse_object(std::string_view text, std::string_view what, std::initializer_list<const char*> allowed) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
    if (!j.is_object()) throw ParseError(std::string(what) + ": expected a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
            throw ParseError(std::string(what) + ": unknown key '" + key + "'");
    }
    return j;
}

std::vector<std::string> string_list(const json& j, const char* key, std::string_view what) {
    const json& v = require_key(j, key, what);
    if (!v.is_array()) throw ParseError(std::string(what) + ": '" + key + "' must be an array of names");
    std::vector<std::string> out;
    for (const json& e : v) {
        if (!e.is_string()) throw ParseError(std::string(what) + ": '" + key + "' must be an array of names");
        out.push_back(e.get<std::string>());
    }
    return out;
}

std::string vcd_id(std::size_t index) {
    std::string id;
    do {
        id.push_back(static_cast<char>('!' + index % 94));
        index /= 94;
    } while (index > 0);
    return id;
}

}  // namespace

// --- config -------------------------------------------------------------------

void RunConfig::validate() const {
    static const std::regex unit(R"((1|10|100)(s|ms|us|ns|ps|fs))");
    if (!std::regex_match(time_unit, unit))
        throw ValidationError("time unit must look like 1ns, 10ps or 100us, got '" + time_unit + "'");
    if (resolution < 1) throw ValidationError("resolution must be >= 1");
}

RunConfig parse_config(std::string_view text, RunConfig cfg) {
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string_view::npos) fail_line(line_no, "expected key = value");
        std::string key(trim(line.substr(0, eq)));
        std::string_view value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);

        auto as_int = [&](auto& out) {
            std::string v(value);
            char* end = nullptr;
            errno = 0;
            auto parsed = std::strtoll(v.c_str(), &end, 10);
            if (v.empty() || *end != '\0' || errno == ERANGE || parsed < 0)
                fail_line(line_no, "'" + key + "' needs a non-negative integer");
            out = static_cast<std::remove_reference_t<decltype(out)>>(parsed);
        };
        if (key == "time_unit") cfg.time_unit = std::string(value);
        else if (key == "resolution") as_int(cfg.resolution);
        else if (key == "seed") as_int(cfg.seed);
        else fail_line(line_no, "unknown key '" + key + "'");
    }
    cfg.validate();
    return cfg;
}

std::optional<std::uint64_t> seed_from_env() {
    const char* v = std::getenv("INERTIA_SEED");
    if (!v || !*v) return std::nullopt;
    char* end = nullptr;
    errno = 0;
    unsigned long long s = std::strtoull(v, &end, 10);
    if (*end != '\0' || errno == ERANGE || v[0] == '-') return std::nullopt;
    return s;
}

// --- waveforms ---------------------------------------------------------------

circuit::Waves parse_waveforms(std::string_view text, std::int64_t resolution) {
    if (resolution < 1) throw ValidationError("resolution must be >= 1");
    circuit::Waves out;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        auto tok = split_ws(line);
        if (tok.size() < 2) fail_line(line_no, "expected `name initial t1 ... tn`");
        if (tok[1] != "0" && tok[1] != "1") fail_line(line_no, "initial value must be 0 or 1");
        std::vector<Tick> times;
        for (std::size_t i = 2; i < tok.size(); ++i) times.push_back(parse_time(tok[i], resolution, line_no));
        Signal s;
        try {
            s = make_signal(tok[1] == "1", std::move(times));
        } catch (const ValidationError& e) {
            fail_line(line_no, e.what());
        }
        if (!out.emplace(std::string(tok[0]), std::move(s)).second)
            fail_line(line_no, "duplicate signal name '" + std::string(tok[0]) + "'");
    }
    return out;
}

std::string emit_waveforms(const circuit::Waves& waves) {
    std::ostringstream os;
    for (const auto& [name, s] : waves) {
        os << name << ' ' << (s.initial() ? 1 : 0);
        for (Tick t : s.switches()) os << ' ' << t;
        os << '\n';
    }
    return os.str();
}

std::string emit_vcd(const circuit::Waves& waves, const RunConfig& cfg) {
    cfg.validate();
    std::ostringstream os;
    os << "$version inertia 0.1.0 $end\n";
    os << "$timescale " << cfg.time_unit << " $end\n";
    os << "$scope module top $end\n";

    std::map<std::string, std::string> ids;
    std::size_t index = 0;
    for (const auto& [name, s] : waves) {
        if (name.empty() || name.find_first_of(" \t\r\n") != std::string::npos)
            throw ValidationError("VCD net names cannot contain whitespace: '" + name + "'");
        if (!s.switches().empty() && s.switches().front() < Tick(0))
            throw ValidationError("VCD cannot represent the switch of '" + name + "' at negative time " +
                                  std::to_string(s.switches().front().count()));
        ids[name] = vcd_id(index++);
        os << "$var wire 1 " << ids[name] << ' ' << name << " $end\n";
    }
    os << "$upscope $end\n$enddefinitions $end\n";
    if (waves.empty()) return os.str();

    os << "$dumpvars\n";
    for (const auto& [name, s] : waves) os << (s.initial() ? '1' : '0') << ids[name] << '\n';
    os << "$end\n";

    // (time, name) -> new value, visited in time order then name order.
    std::map<std::pair<Tick, std::string>, bool> changes;
    for (const auto& [name, s] : waves)
        for (const Edge& e : edges(s)) changes[{e.at, name}] = e.direction == Edge::Direction::rising;
    std::optional<Tick> now;
    for (const auto& [key, value] : changes) {
        if (!now || *now != key.first) {
            now = key.first;
            os << '#' << key.first << '\n';
        }
        os << (value ? '1' : '0') << ids[key.second] << '\n';
    }
    return os.str();
}

// --- parameters ---------------------------------------------------------------

BdcParams parse_bdc(std::string_view text) {
    json j = parse_object(text, "BDC parameters", {"mr", "dr", "mf", "df"});
    return BdcParams(require_ticks(j, "mr", "BDC parameters"), require_ticks(j, "dr", "BDC parameters"),
                     require_ticks(j, "mf", "BDC parameters"), require_ticks(j, "df", "BDC parameters"));
}

AicParams parse_aic(std::string_view text) {
    json j = parse_object(text, "AIC parameters", {"delta_r", "delta_f"});
    return AicParams(require_ticks(j, "delta_r", "AIC parameters"), require_ticks(j, "delta_f", "AIC parameters"));
}

RicParams parse_ric(std::string_view text) {
    json j = parse_object(text, "RIC parameters", {"mu_r", "delta_r", "mu_f", "delta_f"});
    return RicParams(require_ticks(j, "mu_r", "RIC parameters"), require_ticks(j, "delta_r", "RIC parameters"),
                     require_ticks(j, "mu_f", "RIC parameters"), require_ticks(j, "delta_f", "RIC parameters"));
}

FixedDelay parse_fixed(std::string_view text) {
    json j = parse_object(text, "fixed delay", {"d"});
    return FixedDelay(require_ticks(j, "d", "fixed delay"));
}

std::string to_json(const BdcParams& p) {
    nlohmann::ordered_json j{{"mr", p.rise_memory().count()},
                             {"dr", p.rise_delay().count()},
                             {"mf", p.fall_memory().count()},
                             {"df", p.fall_delay().count()}};
    return j.dump();
}

std::string to_json(const AicParams& a) {
    nlohmann::ordered_json j{{"delta_r", a.rise_hold().count()}, {"delta_f", a.fall_hold().count()}};
    return j.dump();
}

std::string to_json(const RicParams& r) {
    nlohmann::ordered_json j{{"mu_r", r.rise_memory().count()},
                             {"delta_r", r.rise_lag().count()},
                             {"mu_f", r.fall_memory().count()},
                             {"delta_f", r.fall_lag().count()}};
    return j.dump();
}

// --- netlists -----------------------------------------------------------------

circuit::Netlist parse_netlist(std::string_view text) {
    constexpr std::string_view what = "netlist";
    json j = parse_object(text, what, {"inputs", "gates", "outputs"});
    auto inputs = string_list(j, "inputs", what);
    auto outputs = string_list(j, "outputs", what);
    const json& gates = require_key(j, "gates", what);
    if (!gates.is_array()) throw ParseError("netlist: 'gates' must be an array");

    std::vector<circuit::Gate> out;
    for (const json& g : gates) {
        if (!g.is_object()) throw ParseError("netlist: every gate must be an object");
        for (const auto& [key, value] : g.items())
            if (key != "name" && key != "inputs" && key != "table" && key != "delay")
                throw ParseError("netlist gate: unknown key '" + key + "'");
        const json& name = require_key(g, "name", "netlist gate");
        if (!name.is_string()) throw ParseError("netlist gate: 'name' must be a string");
        const std::string gate = name.get<std::string>();
        const std::string ctx = "gate '" + gate + "'";

        circuit::Gate parsed{gate, string_list(g, "inputs", ctx), {}, FixedDelay(0)};
        const json& table = require_key(g, "table", ctx);
        if (table.is_string()) {
            for (char c : table.get<std::string>()) {
                if (c != '0' && c != '1') throw ParseError(ctx + ": table string may only hold '0' and '1'");
                parsed.table.push_back(c == '1');
            }
        } else if (table.is_array()) {
            for (const json& bit : table) {
                if (bit.is_boolean()) parsed.table.push_back(bit.get<bool>());
                else if (bit.is_number_integer() && (bit == 0 || bit == 1)) parsed.table.push_back(bit == 1);
                else throw ParseError(ctx + ": table entries must be 0, 1, true or false");
            }
        } else {
            throw ParseError(ctx + ": 'table' must be an array or a string of bits");
        }

        const json& delay = require_key(g, "delay", ctx);
        if (!delay.is_object()) throw ParseError(ctx + ": 'delay' must be an object");
        const json& kind = require_key(delay, "kind", ctx);
        json rest = delay;
        rest.erase("kind");
        if (kind == "fixed") parsed.delay = parse_fixed(rest.dump());
        else if (kind == "bridc") parsed.delay = circuit::DetBridc{parse_bdc(rest.dump())};
        else throw ParseError(ctx + ": delay kind must be \"fixed\" or \"bridc\"");
        out.push_back(std::move(parsed));
    }
    return circuit::Netlist(std::move(inputs), std::move(out), std::move(outputs));
}

}  // namespace inertia::io
