// Command-line front end. Talks to the library only through inertia.h.
//
// Exit codes: 0 the property holds, 1 it does not (or the parameters are
// inconsistent), 2 usage, parse or I/O error.

#include <inertia/inertia.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;

namespace {

constexpr int exit_holds = 0;
constexpr int exit_fails = 1;
constexpr int exit_usage = 2;

// Thrown for anything that should end in exit 2 (or 1 for consistency errors).
struct CliError : std::runtime_error {
    int code;
    CliError(int c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

void check(inertia_status s, const std::string& what) {
    if (s == INERTIA_OK) return;
    int code = s == INERTIA_ERR_CONSISTENCY || s == INERTIA_ERR_PRECONDITION ? exit_fails : exit_usage;
    throw CliError(code, what + ": " + inertia_last_error());
}

struct SignalDel {
    void operator()(inertia_signal* s) const { inertia_signal_free(s); }
};
struct WavesDel {
    void operator()(inertia_waves* w) const { inertia_waves_free(w); }
};
struct CondDel {
    void operator()(inertia_cond* c) const { inertia_cond_free(c); }
};
struct NetlistDel {
    void operator()(inertia_netlist* n) const { inertia_netlist_free(n); }
};
using SignalPtr = std::unique_ptr<inertia_signal, SignalDel>;
using WavesPtr = std::unique_ptr<inertia_waves, WavesDel>;
using CondPtr = std::unique_ptr<inertia_cond, CondDel>;
using NetlistPtr = std::unique_ptr<inertia_netlist, NetlistDel>;

std::string take(char* s) {
    std::string out(s ? s : "");
    inertia_string_free(s);
    return out;
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError(exit_usage, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Inline JSON, or @path to read it from a file.
json read_params(const std::string& arg) {
    std::string text = !arg.empty() && arg[0] == '@' ? read_file(arg.substr(1)) : arg;
    try {
        json j = json::parse(text);
        if (!j.is_object()) throw CliError(exit_usage, "parameters must be a JSON object");
        return j;
    } catch (const json::parse_error& e) {
        throw CliError(exit_usage, std::string("malformed parameter JSON: ") + e.what());
    }
}

// Sub-object of j with exactly the given keys; the rest is left for others.
std::string pick(const json& j, std::initializer_list<const char*> keys) {
    json out = json::object();
    for (const char* k : keys)
        if (j.contains(k)) out[k] = j.at(k);
    return out.dump();
}

void reject_extra(const json& j, std::initializer_list<const char*> keys) {
    for (const auto& [k, v] : j.items()) {
        bool known = false;
        for (const char* allowed : keys) known = known || k == allowed;
        if (!known) throw CliError(exit_usage, "unknown parameter key '" + k + "'");
    }
}

std::string signal_text(const inertia_signal* s) {
    char* out = nullptr;
    check(inertia_signal_format(s, &out), "format");
    return take(out);
}

json bdc_json(const inertia_bdc& p) { return {{"mr", p.mr}, {"dr", p.dr}, {"mf", p.mf}, {"df", p.df}}; }
json aic_json(const inertia_aic& a) { return {{"delta_r", a.delta_r}, {"delta_f", a.delta_f}}; }
json ric_json(const inertia_ric& r) {
    return {{"mu_r", r.mu_r}, {"delta_r", r.delta_r}, {"mu_f", r.mu_f}, {"delta_f", r.delta_f}};
}

// --- condition parameters shared by check and oracle -----------------------

struct CondParams {
    std::string kind;
    std::optional<inertia_bdc> bdc;
    std::optional<inertia_aic> aic;
    std::optional<inertia_ric> ric;
    std::optional<int64_t> fixed;

    json echo() const {
        json j = json::object();
        if (bdc) j["bdc"] = bdc_json(*bdc);
        if (aic) j["aic"] = aic_json(*aic);
        if (ric) j["ric"] = ric_json(*ric);
        if (fixed) j["fdc"] = {{"d", *fixed}};
        return j;
    }

    CondPtr build() const {
        inertia_cond* c = nullptr;
        check(inertia_cond_new(&c), "condition");
        CondPtr out(c);
        if (fixed) check(inertia_cond_add_fixed(c, *fixed), "fdc");
        if (bdc) check(inertia_cond_add_bdc(c, &*bdc), "bdc");
        if (aic) check(inertia_cond_add_aic(c, &*aic), "aic");
        if (ric) check(inertia_cond_add_ric(c, &*ric), "ric");
        return out;
    }
};

constexpr std::initializer_list<const char*> bdc_keys = {"mr", "dr", "mf", "df"};
constexpr std::initializer_list<const char*> aic_keys = {"delta_r", "delta_f"};
constexpr std::initializer_list<const char*> ric_keys = {"mu_r", "delta_r", "mu_f", "delta_f"};

inertia_bdc parse_bdc(const json& j) {
    inertia_bdc p{};
    check(inertia_bdc_parse(pick(j, bdc_keys).c_str(), &p), "bdc parameters");
    return p;
}

// One flat JSON object holding the keys of every part of the condition.
CondParams parse_cond(const std::string& kind, const json& j) {
    CondParams c;
    c.kind = kind;
    if (kind == "bdc") {
        reject_extra(j, bdc_keys);
        c.bdc = parse_bdc(j);
    } else if (kind == "fdc") {
        reject_extra(j, {"d"});
        int64_t d = 0;
        check(inertia_fixed_parse(j.dump().c_str(), &d), "fdc parameters");
        c.fixed = d;
    } else if (kind == "aic") {
        reject_extra(j, aic_keys);
        inertia_aic a{};
        check(inertia_aic_parse(j.dump().c_str(), &a), "aic parameters");
        c.aic = a;
    } else if (kind == "ric") {
        reject_extra(j, ric_keys);
        inertia_ric r{};
        check(inertia_ric_parse(j.dump().c_str(), &r), "ric parameters");
        c.ric = r;
    } else if (kind == "baidc") {
        reject_extra(j, {"mr", "dr", "mf", "df", "delta_r", "delta_f"});
        c.bdc = parse_bdc(j);
        inertia_aic a{};
        check(inertia_aic_parse(pick(j, aic_keys).c_str(), &a), "aic parameters");
        c.aic = a;
    } else if (kind == "bridc") {
        reject_extra(j, {"mr", "dr", "mf", "df", "mu_r", "delta_r", "mu_f", "delta_f"});
        c.bdc = parse_bdc(j);
        inertia_ric r{};
        check(inertia_ric_parse(pick(j, ric_keys).c_str(), &r), "ric parameters");
        c.ric = r;
    } else {
        throw CliError(exit_usage, "unknown condition '" + kind + "'");
    }
    return c;
}

// --- run configuration -------------------------------------------------------

struct Globals {
    std::string config_path;
    std::optional<int64_t> resolution;
    std::optional<std::string> time_unit;
    std::optional<uint64_t> seed;

    // Flag, then config file, then INERTIA_SEED, then the built-in default.
    inertia_run_config resolve() const {
        inertia_run_config cfg;
        inertia_config_default(&cfg);
        if (!config_path.empty()) check(inertia_config_parse(read_file(config_path).c_str(), &cfg), config_path);
        std::string overrides;
        if (resolution) overrides += "resolution = " + std::to_string(*resolution) + "\n";
        if (time_unit) overrides += "time_unit = \"" + *time_unit + "\"\n";
        if (seed) overrides += "seed = " + std::to_string(*seed) + "\n";
        if (!overrides.empty()) check(inertia_config_parse(overrides.c_str(), &cfg), "command line");
        return cfg;
    }
};

WavesPtr load_waves(const std::string& path, const inertia_run_config& cfg) {
    inertia_waves* w = nullptr;
    check(inertia_waves_parse(read_file(path).c_str(), cfg.resolution, &w), path);
    return WavesPtr(w);
}

// The named signal, or the only one in the file when no name is given.
SignalPtr load_signal(const std::string& path, const std::string& name, const inertia_run_config& cfg) {
    WavesPtr w = load_waves(path, cfg);
    std::string pick_name = name;
    if (pick_name.empty()) {
        size_t n = 0;
        check(inertia_waves_count(w.get(), &n), path);
        if (n != 1)
            throw CliError(exit_usage, path + " holds " + std::to_string(n) + " signals; name one with --*-name");
        const char* only = nullptr;
        check(inertia_waves_name(w.get(), 0, &only), path);
        pick_name = only;
    }
    inertia_signal* s = nullptr;
    check(inertia_waves_get(w.get(), pick_name.c_str(), &s), path);
    return SignalPtr(s);
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string emit(const inertia_waves* w, const std::string& format, const inertia_run_config& cfg) {
    char* out = nullptr;
    if (format == "vcd")
        check(inertia_waves_emit_vcd(w, cfg.time_unit, &out), "vcd");
    else
        check(inertia_waves_emit(w, &out), "waveforms");
    return take(out);
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError(exit_usage, "cannot write '" + path + "'");
    out << text;
}

// --- subcommands -------------------------------------------------------------

struct CheckArgs {
    std::string cond, params, input, output, in_name, out_name;
};

int run_check(const CheckArgs& a, const Globals& g) {
    auto cfg = g.resolve();
    CondParams c = parse_cond(a.cond, read_params(a.params));
    SignalPtr x = load_signal(a.output, a.out_name, cfg);
    SignalPtr u;
    if (a.cond != "aic") {
        if (a.input.empty()) throw CliError(exit_usage, "--input is required for " + a.cond);
        u = load_signal(a.input, a.in_name, cfg);
    }

    json parts = json::object();
    bool all = true;
    auto record = [&](const char* name, int v) {
        parts[name] = v != 0;
        all = all && v != 0;
    };
    int v = 0;
    if (c.fixed) {
        check(inertia_fdc_member(u.get(), x.get(), *c.fixed, &v), "fdc");
        record("fdc", v);
    }
    if (c.bdc) {
        check(inertia_bdc_member(u.get(), x.get(), &*c.bdc, &v), "bdc");
        record("bdc", v);
    }
    if (c.aic) {
        check(inertia_aic_member(x.get(), &*c.aic, &v), "aic");
        record("aic", v);
    }
    if (c.ric) {
        check(inertia_ric_member(u.get(), x.get(), &*c.ric, &v), "ric");
        record("ric", v);
    }

    json out;
    out["command"] = "check";
    out["condition"] = a.cond;
    out["params"] = c.echo();
    if (u) out["input"] = signal_text(u.get());
    out["output"] = signal_text(x.get());
    out["parts"] = parts;
    out["member"] = all;
    print_json(out);
    return all ? exit_holds : exit_fails;
}

struct SolveArgs {
    std::string cond, params, input, in_name, name = "x", format = "wav", out;
};

int run_solve(const SolveArgs& a, const Globals& g) {
    auto cfg = g.resolve();
    json j = read_params(a.params);
    SignalPtr u = load_signal(a.input, a.in_name, cfg);

    inertia_waves* raw = nullptr;
    check(inertia_waves_new(&raw), "waves");
    WavesPtr w(raw);
    auto put = [&](const std::string& name, inertia_signal* s) {
        SignalPtr owned(s);
        check(inertia_waves_set(w.get(), name.c_str(), s), "output");
    };

    inertia_signal* s = nullptr;
    if (a.cond == "fdc") {
        reject_extra(j, {"d"});
        int64_t d = 0;
        check(inertia_fixed_parse(j.dump().c_str(), &d), "fdc parameters");
        check(inertia_translate(u.get(), d, &s), "fdc");
        put(a.name, s);
    } else {
        reject_extra(j, bdc_keys);
        inertia_bdc p = parse_bdc(j);
        if (a.cond == "bdc-min") {
            check(inertia_bdc_min_solution(u.get(), &p, &s), "bdc-min");
            put(a.name, s);
        } else if (a.cond == "bdc-max") {
            check(inertia_bdc_max_solution(u.get(), &p, &s), "bdc-max");
            put(a.name, s);
        } else if (a.cond == "bdc-envelope") {
            check(inertia_bdc_min_solution(u.get(), &p, &s), "bdc-envelope");
            put(a.name + "_min", s);
            check(inertia_bdc_max_solution(u.get(), &p, &s), "bdc-envelope");
            put(a.name + "_max", s);
        } else if (a.cond == "bridc-det") {
            check(inertia_bridc_det_output(u.get(), &p, &s), "bridc-det");
            put(a.name, s);
        } else {
            throw CliError(exit_usage, "unknown solve mode '" + a.cond + "'");
        }
    }
    write_output(emit(w.get(), a.format, cfg), a.out);
    return exit_holds;
}

struct ConsistentArgs {
    std::string cond, params;
};

int run_consistent(const ConsistentArgs& a) {
    json j = read_params(a.params);
    json out;
    out["command"] = "consistent";
    out["condition"] = a.cond;

    auto cc_report = [&](const inertia_bdc& p) {
        int ok = 0;
        check(inertia_cc_holds(&p, &ok), "cc");
        json failed = json::array();
        if (p.dr < p.df - p.mf) failed.push_back("dr >= df - mf");
        if (p.df < p.dr - p.mr) failed.push_back("df >= dr - mr");
        out["cc"] = ok != 0;
        if (!ok) {
            out["violated"] = failed;
            out["report"] = "CC violated";
        }
        return ok != 0;
    };

    bool holds = false;
    if (a.cond == "cc") {
        CondParams c = parse_cond("bdc", j);
        out["params"] = c.echo();
        holds = cc_report(*c.bdc);
    } else if (a.cond == "baidc") {
        CondParams c = parse_cond("baidc", j);
        out["params"] = c.echo();
        holds = cc_report(*c.bdc);
        if (holds) {
            int v = 0;
            check(inertia_baidc_consistent(&*c.bdc, &*c.aic, &v), "baidc");
            holds = v != 0;
            out["report"] = holds ? "consistent" : "hold times exceed what the bounded delay can guarantee";
        }
    } else if (a.cond == "bridc") {
        CondParams c = parse_cond("bridc", j);
        out["params"] = c.echo();
        int v = 0;
        unsigned mask = 0;
        check(inertia_bridc_consistent(&*c.bdc, &*c.ric, &v, &mask), "bridc");
        json fired = json::array();
        const char* names[] = {"b.i", "b.ii", "b.iii", "b.iv"};
        for (unsigned k = 0; k < 4; ++k)
            if (mask & (1u << k)) fired.push_back(names[k]);
        out["regimes"] = fired;
        holds = v != 0;
        out["report"] = holds ? "consistent" : "no regime applies";
    } else {
        throw CliError(exit_usage, "unknown consistency test '" + a.cond + "'");
    }
    out["consistent"] = holds;
    print_json(out);
    return holds ? exit_holds : exit_fails;
}

struct AlgebraArgs {
    std::string op, p, q;
};

int run_algebra(const AlgebraArgs& a) {
    json pj = read_params(a.p);
    reject_extra(pj, bdc_keys);
    inertia_bdc p = parse_bdc(pj);
    const bool binary = a.op == "intersect" || a.op == "union-envelope" || a.op == "compose" || a.op == "includes";
    inertia_bdc q{};
    json out;
    out["command"] = "algebra";
    out["op"] = a.op;
    out["p"] = bdc_json(p);
    if (binary) {
        if (a.q.empty()) throw CliError(exit_usage, "--q is required for " + a.op);
        json qj = read_params(a.q);
        reject_extra(qj, bdc_keys);
        q = parse_bdc(qj);
        out["q"] = bdc_json(q);
    }

    int v = 0;
    bool holds = true;
    inertia_bdc r{};
    if (a.op == "intersect") {
        int exists = 0;
        check(inertia_bdc_intersection_consistent(&p, &q, &v), "intersect");
        out["consistent"] = v != 0;
        check(inertia_bdc_intersection(&p, &q, &r, &exists), "intersect");
        out["result"] = exists ? json(bdc_json(r)) : json(nullptr);
        holds = v != 0;
    } else if (a.op == "union-envelope") {
        check(inertia_bdc_union_envelope(&p, &q, &r), "union-envelope");
        out["result"] = bdc_json(r);
    } else if (a.op == "compose") {
        check(inertia_bdc_compose(&p, &q, &r), "compose");
        out["result"] = bdc_json(r);
    } else if (a.op == "includes") {
        check(inertia_bdc_includes(&p, &q, &v), "includes");
        out["result"] = v != 0;
        holds = v != 0;
    } else if (a.op == "deterministic") {
        int64_t d = 0;
        check(inertia_bdc_is_deterministic(&p, &v, &d), "deterministic");
        out["result"] = v != 0;
        if (v) out["translation"] = d;
        holds = v != 0;
    } else if (a.op == "symmetric") {
        check(inertia_bdc_is_symmetrical(&p, &v), "symmetric");
        out["result"] = v != 0;
        holds = v != 0;
    } else {
        throw CliError(exit_usage, "unknown algebra op '" + a.op + "'");
    }
    print_json(out);
    return holds ? exit_holds : exit_fails;
}

struct SimulateArgs {
    std::string netlist, stimuli, format = "vcd", out;
    int64_t lo = 0, hi = 0;
    bool envelope = false;
};

int run_simulate(const SimulateArgs& a, const Globals& g) {
    auto cfg = g.resolve();
    inertia_netlist* n = nullptr;
    check(inertia_netlist_parse(read_file(a.netlist).c_str(), &n), a.netlist);
    NetlistPtr net(n);
    WavesPtr stim = load_waves(a.stimuli, cfg);

    if (!a.envelope) {
        inertia_waves* w = nullptr;
        check(inertia_simulate(n, stim.get(), a.lo, a.hi, &w), "simulate");
        WavesPtr result(w);
        write_output(emit(w, a.format, cfg), a.out);
        return exit_holds;
    }

    inertia_waves *low = nullptr, *high = nullptr;
    check(inertia_envelope(n, stim.get(), &low, &high), "envelope");
    WavesPtr lo(low), hi(high);
    inertia_waves* merged = nullptr;
    check(inertia_waves_new(&merged), "waves");
    WavesPtr m(merged);
    size_t count = 0;
    check(inertia_waves_count(low, &count), "envelope");
    for (size_t i = 0; i < count; ++i) {
        const char* name = nullptr;
        check(inertia_waves_name(low, i, &name), "envelope");
        std::string base = name;
        inertia_signal *sl = nullptr, *sh = nullptr;
        check(inertia_waves_get(low, base.c_str(), &sl), "envelope");
        SignalPtr l(sl);
        check(inertia_waves_get(high, base.c_str(), &sh), "envelope");
        SignalPtr h(sh);
        check(inertia_waves_set(merged, (base + "_min").c_str(), sl), "envelope");
        check(inertia_waves_set(merged, (base + "_max").c_str(), sh), "envelope");
    }
    write_output(emit(merged, a.format, cfg), a.out);
    return exit_holds;
}

struct OracleArgs {
    std::string cond, params, input, in_name, theorem, format = "json";
    int64_t lo = 0, hi = 12, last = 8, train_width = 0;
    size_t max_switches = 4;
    size_t trials = 100;
};

int run_enumerate(const OracleArgs& a, const Globals& g) {
    auto cfg = g.resolve();
    CondParams c = parse_cond(a.cond, read_params(a.params));
    CondPtr cond = c.build();
    SignalPtr u = load_signal(a.input, a.in_name, cfg);
    inertia_waves* w = nullptr;
    check(inertia_oracle_enumerate(cond.get(), u.get(), a.lo, a.hi, a.max_switches, &w), "enumerate");
    WavesPtr sols(w);
    if (a.format == "wav") {
        std::cout << emit(w, "wav", cfg);
        return exit_holds;
    }
    size_t n = 0;
    check(inertia_waves_count(w, &n), "enumerate");
    json list = json::array();
    for (size_t i = 0; i < n; ++i) {
        const char* name = nullptr;
        check(inertia_waves_name(w, i, &name), "enumerate");
        inertia_signal* s = nullptr;
        check(inertia_waves_get(w, name, &s), "enumerate");
        SignalPtr owned(s);
        list.push_back(signal_text(s));
    }
    json out;
    out["command"] = "oracle enumerate";
    out["condition"] = a.cond;
    out["params"] = c.echo();
    out["input"] = signal_text(u.get());
    out["grid"] = {{"lo", a.lo}, {"hi", a.hi}};
    out["count"] = n;
    out["solutions"] = list;
    print_json(out);
    return n > 0 ? exit_holds : exit_fails;
}

// Exit 0 when some input has no admissible output, i.e. the witness exists.
int run_witness(const OracleArgs& a) {
    CondParams c = parse_cond(a.cond, read_params(a.params));
    CondPtr cond = c.build();
    int found = 0;
    inertia_signal* s = nullptr;
    check(inertia_oracle_witness(cond.get(), a.last, a.max_switches, a.train_width, &found, &s), "witness");
    SignalPtr w(s);
    json out;
    out["command"] = "oracle witness";
    out["condition"] = a.cond;
    out["params"] = c.echo();
    out["found"] = found != 0;
    out["witness"] = found ? json(signal_text(s)) : json(nullptr);
    print_json(out);
    return found ? exit_holds : exit_fails;
}

int run_verify(const OracleArgs& a, const Globals& g) {
    auto cfg = g.resolve();
    int passed = 0;
    char* report = nullptr;
    check(inertia_theorem_verify(a.theorem.c_str(), a.trials, cfg.seed, &passed, &report), "verify");
    std::cout << take(report) << '\n';
    return passed ? exit_holds : exit_fails;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Delay conditions on integer-tick Boolean signals"};
    app.set_version_flag("--version", std::string(inertia_version()));
    app.require_subcommand(1);

    Globals g;
    app.add_option("--config", g.config_path, "key=value file with time_unit, resolution, seed")
        ->check(CLI::ExistingFile);
    app.add_option("--resolution", g.resolution, "ticks per time unit in waveform files")->check(CLI::PositiveNumber);
    app.add_option("--time-unit", g.time_unit, "VCD timescale, e.g. 1ns");

    const std::vector<std::string> conds = {"bdc", "fdc", "aic", "ric", "baidc", "bridc"};

    CheckArgs ca;
    auto* check_cmd = app.add_subcommand("check", "is the output admissible for the input");
    check_cmd->add_option("--cond", ca.cond)->required()->check(CLI::IsMember(conds));
    check_cmd->add_option("--params", ca.params, "JSON object or @file")->required();
    check_cmd->add_option("--input", ca.input, "waveform file with the input");
    check_cmd->add_option("--output", ca.output, "waveform file with the output")->required();
    check_cmd->add_option("--in-name", ca.in_name);
    check_cmd->add_option("--out-name", ca.out_name);

    SolveArgs sa;
    auto* solve_cmd = app.add_subcommand("solve", "compute a distinguished output");
    solve_cmd->add_option("--cond", sa.cond)
        ->required()
        ->check(CLI::IsMember({"bdc-min", "bdc-max", "bdc-envelope", "bridc-det", "fdc"}));
    solve_cmd->add_option("--params", sa.params)->required();
    solve_cmd->add_option("--input", sa.input)->required();
    solve_cmd->add_option("--in-name", sa.in_name);
    solve_cmd->add_option("--name", sa.name, "name of the emitted signal")->capture_default_str();
    solve_cmd->add_option("--format", sa.format)->check(CLI::IsMember({"wav", "vcd"}))->capture_default_str();
    solve_cmd->add_option("-o,--out", sa.out);

    ConsistentArgs ka;
    auto* cons_cmd = app.add_subcommand("consistent", "decide consistency of parameters");
    cons_cmd->add_option("--cond", ka.cond)->required()->check(CLI::IsMember({"cc", "baidc", "bridc"}));
    cons_cmd->add_option("--params", ka.params)->required();

    AlgebraArgs aa;
    auto* alg_cmd = app.add_subcommand("algebra", "operations on bounded delay parameters");
    alg_cmd->add_option("--op", aa.op)
        ->required()
        ->check(CLI::IsMember({"intersect", "union-envelope", "compose", "includes", "deterministic", "symmetric"}));
    alg_cmd->add_option("--p", aa.p)->required();
    alg_cmd->add_option("--q", aa.q);

    SimulateArgs ma;
    auto* sim_cmd = app.add_subcommand("simulate", "event-driven gate-level simulation");
    sim_cmd->add_option("--netlist", ma.netlist)->required();
    sim_cmd->add_option("--stimuli", ma.stimuli)->required();
    sim_cmd->add_option("--lo", ma.lo)->capture_default_str();
    sim_cmd->add_option("--hi", ma.hi)->required();
    sim_cmd->add_flag("--envelope", ma.envelope, "min/max bounds per net instead of one run");
    sim_cmd->add_option("--format", ma.format)->check(CLI::IsMember({"wav", "vcd"}))->capture_default_str();
    sim_cmd->add_option("-o,--out", ma.out);

    OracleArgs oa;
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force solution sets");
    oracle_cmd->require_subcommand(1);
    auto* enum_cmd = oracle_cmd->add_subcommand("enumerate", "every solution on a tick grid");
    enum_cmd->add_option("--cond", oa.cond)->required()->check(CLI::IsMember(conds));
    enum_cmd->add_option("--params", oa.params)->required();
    enum_cmd->add_option("--input", oa.input)->required();
    enum_cmd->add_option("--in-name", oa.in_name);
    enum_cmd->add_option("--lo", oa.lo)->capture_default_str();
    enum_cmd->add_option("--hi", oa.hi)->capture_default_str();
    enum_cmd->add_option("--max-switches", oa.max_switches)->capture_default_str();
    enum_cmd->add_option("--format", oa.format)->check(CLI::IsMember({"json", "wav"}))->capture_default_str();

    auto* wit_cmd = oracle_cmd->add_subcommand("witness", "search for an input with no admissible output");
    wit_cmd->add_option("--cond", oa.cond)->required()->check(CLI::IsMember(conds));
    wit_cmd->add_option("--params", oa.params)->required();
    wit_cmd->add_option("--last", oa.last, "latest input switch")->capture_default_str();
    wit_cmd->add_option("--max-switches", oa.max_switches)->capture_default_str();
    wit_cmd->add_option("--train-width", oa.train_width, "also try pulse trains up to this width")
        ->capture_default_str();

    std::vector<std::string> ids;
    for (size_t i = 0; i < inertia_theorem_count(); ++i) ids.emplace_back(inertia_theorem_id(i));
    auto* ver_cmd = oracle_cmd->add_subcommand("verify", "property suite against the oracle");
    ver_cmd->add_option("--theorem", oa.theorem)->required()->check(CLI::IsMember(ids));
    ver_cmd->add_option("--trials", oa.trials)->capture_default_str();
    ver_cmd->add_option("--seed", g.seed, "default: config file, then INERTIA_SEED, then 1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : exit_usage;
    }

    try {
        if (*check_cmd) return run_check(ca, g);
        if (*solve_cmd) return run_solve(sa, g);
        if (*cons_cmd) return run_consistent(ka);
        if (*alg_cmd) return run_algebra(aa);
        if (*sim_cmd) return run_simulate(ma, g);
        if (*enum_cmd) return run_enumerate(oa, g);
        if (*wit_cmd) return run_witness(oa);
        if (*ver_cmd) return run_verify(oa, g);
    } catch (const CliError& e) {
        std::cerr << "inertia: " << e.what() << '\n';
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "inertia: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
