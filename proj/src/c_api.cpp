#include "inertia/inertia.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "inertia/circuit.hpp"
#include "inertia/delay_algebra.hpp"
#include "inertia/io.hpp"
#include "inertia/oracle.hpp"
#include "inertia/theorems.hpp"

using namespace inertia;

struct inertia_signal {
    Signal s;
};
struct inertia_waves {
    circuit::Waves w;
};
struct inertia_cond {
    std::vector<Atom> atoms;
};
struct inertia_netlist {
    circuit::Netlist n;
};

namespace {

thread_local std::string tl_error;

inertia_status fail(inertia_status code, const char* msg) {
    tl_error = msg;
    return code;
}

// Runs fn and maps library exceptions onto status codes.
template <class Fn>
inertia_status guarded(Fn&& fn) {
    try {
        fn();
        return INERTIA_OK;
    } catch (const ParseError& e) {
        return fail(INERTIA_ERR_PARSE, e.what());
    } catch (const ConsistencyError& e) {
        return fail(INERTIA_ERR_CONSISTENCY, e.what());
    } catch (const PreconditionError& e) {
        return fail(INERTIA_ERR_PRECONDITION, e.what());
    } catch (const ResourceError& e) {
        return fail(INERTIA_ERR_RESOURCE, e.what());
    } catch (const ValidationError& e) {
        return fail(INERTIA_ERR_INVALID, e.what());
    } catch (const std::bad_alloc&) {
        return fail(INERTIA_ERR_RESOURCE, "out of memory");
    } catch (const std::exception& e) {
        return fail(INERTIA_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(INERTIA_ERR_INTERNAL, "unknown exception");
    }
}

#define INERTIA_REQUIRE(p)                                                    \
    do {                                                                      \
        if (!(p)) return fail(INERTIA_ERR_INVALID, "null argument: " #p);     \
    } while (0)

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

BdcParams to_core(const inertia_bdc& p) { return BdcParams(p.mr, p.dr, p.mf, p.df); }
AicParams to_core(const inertia_aic& a) { return AicParams(a.delta_r, a.delta_f); }
RicParams to_core(const inertia_ric& r) { return RicParams(r.mu_r, r.delta_r, r.mu_f, r.delta_f); }

inertia_bdc from_core(const BdcParams& p) {
    return {p.rise_memory().count(), p.rise_delay().count(), p.fall_memory().count(), p.fall_delay().count()};
}
inertia_aic from_core(const AicParams& a) { return {a.rise_hold().count(), a.fall_hold().count()}; }
inertia_ric from_core(const RicParams& r) {
    return {r.rise_memory().count(), r.rise_lag().count(), r.fall_memory().count(), r.fall_lag().count()};
}

// Both sides must satisfy CC before the algebra is meaningful.
void require_cc(const BdcParams& p) {
    if (!cc_holds(p)) throw PreconditionError("bounded delay parameters violate CC");
}

inertia_signal* wrap(Signal s) { return new inertia_signal{std::move(s)}; }

void copy_config(const io::RunConfig& rc, inertia_run_config* cfg) {
    if (rc.time_unit.size() >= sizeof(cfg->time_unit)) throw ValidationError("time unit too long");
    std::memset(cfg->time_unit, 0, sizeof(cfg->time_unit));
    std::memcpy(cfg->time_unit, rc.time_unit.data(), rc.time_unit.size());
    cfg->resolution = rc.resolution;
    cfg->seed = rc.seed;
}

}  // namespace

extern "C" {

const char* inertia_version(void) { return "0.1.0"; }

const char* inertia_last_error(void) { return tl_error.c_str(); }

const char* inertia_status_name(inertia_status s) {
    switch (s) {
        case INERTIA_OK: return "ok";
        case INERTIA_ERR_INVALID: return "invalid argument";
        case INERTIA_ERR_PARSE: return "parse error";
        case INERTIA_ERR_CONSISTENCY: return "consistency error";
        case INERTIA_ERR_PRECONDITION: return "precondition violated";
        case INERTIA_ERR_RESOURCE: return "resource limit";
        case INERTIA_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void inertia_string_free(char* s) { std::free(s); }

// --- signals -------------------------------------------------------------

inertia_status inertia_signal_new(int initial, const int64_t* switches, size_t count, inertia_signal** out) {
    INERTIA_REQUIRE(out);
    if (count > 0 && !switches) return fail(INERTIA_ERR_INVALID, "null argument: switches");
    return guarded([&] {
        std::vector<Tick> ts(switches, switches + count);
        *out = wrap(make_signal(initial != 0, std::move(ts)));
    });
}

inertia_status inertia_signal_clone(const inertia_signal* s, inertia_signal** out) {
    INERTIA_REQUIRE(s);
    INERTIA_REQUIRE(out);
    return guarded([&] { *out = wrap(s->s); });
}

void inertia_signal_free(inertia_signal* s) { delete s; }

inertia_status inertia_signal_initial(const inertia_signal* s, int* out) {
    INERTIA_REQUIRE(s);
    INERTIA_REQUIRE(out);
    *out = s->s.initial() ? 1 : 0;
    return INERTIA_OK;
}

inertia_status inertia_signal_switch_count(const inertia_signal* s, size_t* out) {
    INERTIA_REQUIRE(s);
    INERTIA_REQUIRE(out);
    *out = s->s.switches().size();
    return INERTIA_OK;
}

inertia_status inertia_signal_switches(const inertia_signal* s, int64_t* buf, size_t capacity, size_t* count) {
    INERTIA_REQUIRE(s);
    if (capacity > 0) INERTIA_REQUIRE(buf);
    auto sw = s->s.switches();
    size_t n = std::min(capacity, sw.size());
    for (size_t i = 0; i < n; ++i) buf[i] = sw[i].count();
    if (count) *count = sw.size();
    return INERTIA_OK;
}

inertia_status inertia_signal_value_at(const inertia_signal* s, int64_t t, int* out) {
    INERTIA_REQUIRE(s);
    INERTIA_REQUIRE(out);
    *out = s->s.value_at(Tick(t)) ? 1 : 0;
    return INERTIA_OK;
}

inertia_status inertia_signal_equal(const inertia_signal* a, const inertia_signal* b, int* out) {
    INERTIA_REQUIRE(a);
    INERTIA_REQUIRE(b);
    INERTIA_REQUIRE(out);
    *out = a->s == b->s ? 1 : 0;
    return INERTIA_OK;
}

inertia_status inertia_signal_format(const inertia_signal* s, char** out) {
    INERTIA_REQUIRE(s);
    INERTIA_REQUIRE(out);
    return guarded([&] {
        std::ostringstream os;
        os << s->s;
        *out = dup_string(os.str());
    });
}

inertia_status inertia_translate(const inertia_signal* s, int64_t d, inertia_signal** out) {
    INERTIA_REQUIRE(s);
    INERTIA_REQUIRE(out);
    return guarded([&] { *out = wrap(translate(s->s, Tick(d))); });
}

inertia_status inertia_window_and(const inertia_signal* s, int64_t d, int64_t m, inertia_signal** out) {
    INERTIA_REQUIRE(s);
    INERTIA_REQUIRE(out);
    if (m < 0) return fail(INERTIA_ERR_INVALID, "window length must be non-negative");
    return guarded([&] { *out = wrap(window_and(s->s, Tick(d), Tick(m))); });
}

inertia_status inertia_window_or(const inertia_signal* s, int64_t d, int64_t m, inertia_signal** out) {
    INERTIA_REQUIRE(s);
    INERTIA_REQUIRE(out);
    if (m < 0) return fail(INERTIA_ERR_INVALID, "window length must be non-negative");
    return guarded([&] { *out = wrap(window_or(s->s, Tick(d), Tick(m))); });
}

// --- waveform sets -------------------------------------------------------

inertia_status inertia_waves_new(inertia_waves** out) {
    INERTIA_REQUIRE(out);
    return guarded([&] { *out = new inertia_waves{}; });
}

void inertia_waves_free(inertia_waves* w) { delete w; }

inertia_status inertia_waves_parse(const char* text, int64_t resolution, inertia_waves** out) {
    INERTIA_REQUIRE(text);
    INERTIA_REQUIRE(out);
    return guarded([&] { *out = new inertia_waves{io::parse_waveforms(text, resolution)}; });
}

inertia_status inertia_waves_set(inertia_waves* w, const char* name, const inertia_signal* s) {
    INERTIA_REQUIRE(w);
    INERTIA_REQUIRE(name);
    INERTIA_REQUIRE(s);
    if (!*name) return fail(INERTIA_ERR_INVALID, "empty signal name");
    return guarded([&] { w->w.insert_or_assign(name, s->s); });
}

inertia_status inertia_waves_get(const inertia_waves* w, const char* name, inertia_signal** out) {
    INERTIA_REQUIRE(w);
    INERTIA_REQUIRE(name);
    INERTIA_REQUIRE(out);
    auto it = w->w.find(name);
    if (it == w->w.end()) {
        tl_error = std::string("no signal named '") + name + "'";
        return INERTIA_ERR_INVALID;
    }
    return guarded([&] { *out = wrap(it->second); });
}

inertia_status inertia_waves_count(const inertia_waves* w, size_t* out) {
    INERTIA_REQUIRE(w);
    INERTIA_REQUIRE(out);
    *out = w->w.size();
    return INERTIA_OK;
}

inertia_status inertia_waves_name(const inertia_waves* w, size_t i, const char** out) {
    INERTIA_REQUIRE(w);
    INERTIA_REQUIRE(out);
    if (i >= w->w.size()) return fail(INERTIA_ERR_INVALID, "index out of range");
    *out = std::next(w->w.begin(), static_cast<std::ptrdiff_t>(i))->first.c_str();
    return INERTIA_OK;
}

inertia_status inertia_waves_emit(const inertia_waves* w, char** out) {
    INERTIA_REQUIRE(w);
    INERTIA_REQUIRE(out);
    return guarded([&] { *out = dup_string(io::emit_waveforms(w->w)); });
}

inertia_status inertia_waves_emit_vcd(const inertia_waves* w, const char* time_unit, char** out) {
    INERTIA_REQUIRE(w);
    INERTIA_REQUIRE(out);
    return guarded([&] {
        io::RunConfig cfg;
        if (time_unit) cfg.time_unit = time_unit;
        cfg.validate();
        *out = dup_string(io::emit_vcd(w->w, cfg));
    });
}

// --- configuration -------------------------------------------------------

void inertia_config_default(inertia_run_config* cfg) {
    if (!cfg) return;
    io::RunConfig rc;
    if (auto s = io::seed_from_env()) rc.seed = *s;
    copy_config(rc, cfg);
}

inertia_status inertia_config_parse(const char* text, inertia_run_config* cfg) {
    INERTIA_REQUIRE(text);
    INERTIA_REQUIRE(cfg);
    return guarded([&] {
        io::RunConfig base;
        base.time_unit = std::string(cfg->time_unit, strnlen(cfg->time_unit, sizeof(cfg->time_unit)));
        base.resolution = cfg->resolution;
        base.seed = cfg->seed;
        copy_config(io::parse_config(text, base), cfg);
    });
}

// --- parameters ----------------------------------------------------------

inertia_status inertia_bdc_parse(const char* json, inertia_bdc* out) {
    INERTIA_REQUIRE(json);
    INERTIA_REQUIRE(out);
    return guarded([&] { *out = from_core(io::parse_bdc(json)); });
}

inertia_status inertia_aic_parse(const char* json, inertia_aic* out) {
    INERTIA_REQUIRE(json);
    INERTIA_REQUIRE(out);
    return guarded([&] { *out = from_core(io::parse_aic(json)); });
}

inertia_status inertia_ric_parse(const char* json, inertia_ric* out) {
    INERTIA_REQUIRE(json);
    INERTIA_REQUIRE(out);
    return guarded([&] { *out = from_core(io::parse_ric(json)); });
}

inertia_status inertia_fixed_parse(const char* json, int64_t* d) {
    INERTIA_REQUIRE(json);
    INERTIA_REQUIRE(d);
    return guarded([&] { *d = io::parse_fixed(json).delay.count(); });
}

inertia_status inertia_bdc_format(const inertia_bdc* p, char** json) {
    INERTIA_REQUIRE(p);
    INERTIA_REQUIRE(json);
    return guarded([&] { *json = dup_string(io::to_json(to_core(*p))); });
}

inertia_status inertia_aic_format(const inertia_aic* a, char** json) {
    INERTIA_REQUIRE(a);
    INERTIA_REQUIRE(json);
    return guarded([&] { *json = dup_string(io::to_json(to_core(*a))); });
}

inertia_status inertia_ric_format(const inertia_ric* r, char** json) {
    INERTIA_REQUIRE(r);
    INERTIA_REQUIRE(json);
    return guarded([&] { *json = dup_string(io::to_json(to_core(*r))); });
}

// --- predicates and solutions --------------------------------------------

inertia_status inertia_cc_holds(const inertia_bdc* p, int* out) {
    INERTIA_REQUIRE(p);
    INERTIA_REQUIRE(out);
    return guarded([&] { *out = cc_holds(to_core(*p)); });
}

inertia_status inertia_bdc_member(const inertia_signal* u, const inertia_signal* x, const inertia_bdc* p, int* out) {
    INERTIA_REQUIRE(u);
    INERTIA_REQUIRE(x);
    INERTIA_REQUIRE(p);
    INERTIA_REQUIRE(out);
    return guarded([&] { *out = bdc_member(u->s, x->s, to_core(*p)); });
}

inertia_status inertia_fdc_member(const inertia_signal* u, const inertia_signal* x, int64_t d, int* out) {
    INERTIA_REQUIRE(u);
    INERTIA_REQUIRE(x);
    INERTIA_REQUIRE(out);
    return guarded([&] { *out = fdc_member(u->s, x->s, Tick(d)); });
}

inertia_status inertia_aic_member(const inertia_signal* x, const inertia_aic* a, int* out) {
    INERTIA_REQUIRE(x);
    INERTIA_REQUIRE(a);
    INERTIA_REQUIRE(out);
    return guarded([&] { *out = aic_member(x->s, to_core(*a)); });
}

inertia_status inertia_ric_member(const inertia_signal* u, const inertia_signal* x, const inertia_ric* r, int* out) {
    INERTIA_REQUIRE(u);
    INERTIA_REQUIRE(x);
    INERTIA_REQUIRE(r);
    INERTIA_REQUIRE(out);
    return guarded([&] { *out = ric_member(u->s, x->s, to_core(*r)); });
}

inertia_status inertia_bdc_min_solution(const inertia_signal* u, const inertia_bdc* p, inertia_signal** out) {
    INERTIA_REQUIRE(u);
    INERTIA_REQUIRE(p);
    INERTIA_REQUIRE(out);
    return guarded([&] { *out = wrap(bdc_min_solution(u->s, to_core(*p))); });
}

inertia_status inertia_bdc_max_solution(const inertia_signal* u, const inertia_bdc* p, inertia_signal** out) {
    INERTIA_REQUIRE(u);
    INERTIA_REQUIRE(p);
    INERTIA_REQUIRE(out);
    return guarded([&] { *out = wrap(bdc_max_solution(u->s, to_core(*p))); });
}

inertia_status inertia_bridc_det_output(const inertia_signal* u, const inertia_bdc* p, inertia_signal** out) {
    INERTIA_REQUIRE(u);
    INERTIA_REQUIRE(p);
    INERTIA_REQUIRE(out);
    return guarded([&] { *out = wrap(bridc_det_output(u->s, to_core(*p))); });
}

// --- consistency and parameter algebra -----------------------------------

inertia_status inertia_baidc_consistent(const inertia_bdc* p, const inertia_aic* a, int* out) {
    INERTIA_REQUIRE(p);
    INERTIA_REQUIRE(a);
    INERTIA_REQUIRE(out);
    return guarded([&] {
        BdcParams bp = to_core(*p);
        require_cc(bp);
        *out = baidc_consistent(bp, to_core(*a));
    });
}

inertia_status inertia_bridc_consistent(const inertia_bdc* p, const inertia_ric* r, int* out, unsigned* regimes) {
    INERTIA_REQUIRE(p);
    INERTIA_REQUIRE(r);
    INERTIA_REQUIRE(out);
    return guarded([&] {
        BridcVerdict v = bridc_consistent(to_core(*p), to_core(*r));
        *out = v.holds();
        if (regimes) {
            unsigned mask = 0;
            for (unsigned k = 0; k < 4; ++k)
                if (v.clauses[k]) mask |= 1u << k;
            *regimes = mask;
        }
    });
}

inertia_status inertia_ric_to_aic(const inertia_ric* r, inertia_aic* out, int* exists) {
    INERTIA_REQUIRE(r);
    INERTIA_REQUIRE(out);
    INERTIA_REQUIRE(exists);
    return guarded([&] {
        auto a = ric_to_aic(to_core(*r));
        *exists = a.has_value();
        if (a) *out = from_core(*a);
    });
}

inertia_status inertia_bdc_intersection(const inertia_bdc* p, const inertia_bdc* q, inertia_bdc* out, int* exists) {
    INERTIA_REQUIRE(p);
    INERTIA_REQUIRE(q);
    INERTIA_REQUIRE(out);
    INERTIA_REQUIRE(exists);
    return guarded([&] {
        BdcParams a = to_core(*p), b = to_core(*q);
        require_cc(a);
        require_cc(b);
        auto r = bdc_intersection(a, b);
        *exists = r.has_value();
        if (r) *out = from_core(*r);
    });
}

inertia_status inertia_bdc_intersection_consistent(const inertia_bdc* p, const inertia_bdc* q, int* out) {
    INERTIA_REQUIRE(p);
    INERTIA_REQUIRE(q);
    INERTIA_REQUIRE(out);
    return guarded([&] {
        BdcParams a = to_core(*p), b = to_core(*q);
        require_cc(a);
        require_cc(b);
        *out = bdc_intersection_consistent(a, b);
    });
}

inertia_status inertia_bdc_union_envelope(const inertia_bdc* p, const inertia_bdc* q, inertia_bdc* out) {
    INERTIA_REQUIRE(p);
    INERTIA_REQUIRE(q);
    INERTIA_REQUIRE(out);
    return guarded([&] {
        BdcParams a = to_core(*p), b = to_core(*q);
        require_cc(a);
        require_cc(b);
        *out = from_core(bdc_union_envelope(a, b));
    });
}

inertia_status inertia_bdc_compose(const inertia_bdc* p, const inertia_bdc* q, inertia_bdc* out) {
    INERTIA_REQUIRE(p);
    INERTIA_REQUIRE(q);
    INERTIA_REQUIRE(out);
    return guarded([&] {
        BdcParams a = to_core(*p), b = to_core(*q);
        require_cc(a);
        require_cc(b);
        *out = from_core(bdc_compose(a, b));
    });
}

inertia_status inertia_bdc_includes(const inertia_bdc* p, const inertia_bdc* q, int* out) {
    INERTIA_REQUIRE(p);
    INERTIA_REQUIRE(q);
    INERTIA_REQUIRE(out);
    return guarded([&] {
        BdcParams a = to_core(*p), b = to_core(*q);
        require_cc(a);
        require_cc(b);
        *out = bdc_includes(a, b);
    });
}

inertia_status inertia_bdc_is_deterministic(const inertia_bdc* p, int* out, int64_t* translation) {
    INERTIA_REQUIRE(p);
    INERTIA_REQUIRE(out);
    return guarded([&] {
        BdcParams a = to_core(*p);
        require_cc(a);
        *out = bdc_is_deterministic(a);
        if (translation)
            if (auto d = bdc_as_translation(a)) *translation = d->count();
    });
}

inertia_status inertia_bdc_is_symmetrical(const inertia_bdc* p, int* out) {
    INERTIA_REQUIRE(p);
    INERTIA_REQUIRE(out);
    return guarded([&] {
        BdcParams a = to_core(*p);
        require_cc(a);
        *out = bdc_is_symmetrical(a);
    });
}

// --- oracle --------------------------------------------------------------

inertia_status inertia_cond_new(inertia_cond** out) {
    INERTIA_REQUIRE(out);
    return guarded([&] { *out = new inertia_cond{}; });
}

void inertia_cond_free(inertia_cond* c) { delete c; }

inertia_status inertia_cond_add_fixed(inertia_cond* c, int64_t d) {
    INERTIA_REQUIRE(c);
    return guarded([&] { c->atoms.emplace_back(FixedDelay(Tick(d))); });
}

inertia_status inertia_cond_add_bdc(inertia_cond* c, const inertia_bdc* p) {
    INERTIA_REQUIRE(c);
    INERTIA_REQUIRE(p);
    return guarded([&] { c->atoms.emplace_back(to_core(*p)); });
}

inertia_status inertia_cond_add_aic(inertia_cond* c, const inertia_aic* a) {
    INERTIA_REQUIRE(c);
    INERTIA_REQUIRE(a);
    return guarded([&] { c->atoms.emplace_back(to_core(*a)); });
}

inertia_status inertia_cond_add_ric(inertia_cond* c, const inertia_ric* r) {
    INERTIA_REQUIRE(c);
    INERTIA_REQUIRE(r);
    return guarded([&] { c->atoms.emplace_back(to_core(*r)); });
}

inertia_status inertia_cond_member(const inertia_cond* c, const inertia_signal* u, const inertia_signal* x, int* out) {
    INERTIA_REQUIRE(c);
    INERTIA_REQUIRE(u);
    INERTIA_REQUIRE(x);
    INERTIA_REQUIRE(out);
    return guarded([&] { *out = member(u->s, x->s, CondExpr(c->atoms)); });
}

inertia_status inertia_oracle_enumerate(const inertia_cond* c, const inertia_signal* u, int64_t lo, int64_t hi,
                                        size_t max_switches, inertia_waves** out) {
    INERTIA_REQUIRE(c);
    INERTIA_REQUIRE(u);
    INERTIA_REQUIRE(out);
    return guarded([&] {
        oracle::GridConfig g{Tick(lo), Tick(hi), max_switches};
        auto sols = oracle::enumerate_solutions(u->s, CondExpr(c->atoms), g);
        const int width = static_cast<int>(std::to_string(sols.empty() ? 0 : sols.size() - 1).size());
        auto w = std::make_unique<inertia_waves>();
        for (size_t i = 0; i < sols.size(); ++i) {
            char name[32];
            std::snprintf(name, sizeof(name), "x%0*zu", width, i);
            w->w.emplace(name, std::move(sols[i]));
        }
        *out = w.release();
    });
}

inertia_status inertia_oracle_witness(const inertia_cond* c, int64_t last, size_t max_switches, int64_t train_width,
                                      int* found, inertia_signal** witness) {
    INERTIA_REQUIRE(c);
    INERTIA_REQUIRE(found);
    INERTIA_REQUIRE(witness);
    if (last < 1) return fail(INERTIA_ERR_INVALID, "last must be at least 1");
    return guarded([&] {
        CondExpr e(c->atoms);
        const Tick::rep span = oracle::max_span_of(e).count();
        oracle::InputFamily exhaustive{Tick(1), Tick(last), max_switches};
        auto w = oracle::find_empty_witness(e, {Tick(0), Tick(last + span + 1)}, exhaustive);
        if (!w && train_width > 0) {
            const Tick::rep hi = oracle::GridConfig::max_span;
            oracle::InputFamily trains{Tick(1), Tick(hi - span - 1), max_switches, train_width, false};
            w = oracle::find_empty_witness(e, {Tick(0), Tick(hi)}, trains);
        }
        *found = w.has_value();
        *witness = w ? wrap(std::move(*w)) : nullptr;
    });
}

size_t inertia_theorem_count(void) { return theorems::theorem_ids().size(); }

const char* inertia_theorem_id(size_t i) {
    auto ids = theorems::theorem_ids();
    // The registry holds string literals, so data() is NUL terminated.
    return i < ids.size() ? ids[i].data() : nullptr;
}

inertia_status inertia_theorem_verify(const char* id, size_t trials, uint64_t seed, int* passed, char** report_json) {
    INERTIA_REQUIRE(id);
    INERTIA_REQUIRE(passed);
    return guarded([&] {
        theorems::Options opt;
        opt.trials = trials;
        opt.seed = seed;
        auto rep = theorems::verify(id, opt);
        *passed = rep.passed();
        if (report_json) *report_json = dup_string(rep.to_json());
    });
}

// --- circuits ------------------------------------------------------------

inertia_status inertia_netlist_parse(const char* json, inertia_netlist** out) {
    INERTIA_REQUIRE(json);
    INERTIA_REQUIRE(out);
    return guarded([&] { *out = new inertia_netlist{io::parse_netlist(json)}; });
}

void inertia_netlist_free(inertia_netlist* n) { delete n; }

inertia_status inertia_netlist_gate_count(const inertia_netlist* n, size_t* out) {
    INERTIA_REQUIRE(n);
    INERTIA_REQUIRE(out);
    *out = n->n.gates().size();
    return INERTIA_OK;
}

inertia_status inertia_netlist_gate(const inertia_netlist* n, size_t i, const char** name, int* inertial) {
    INERTIA_REQUIRE(n);
    if (i >= n->n.gates().size()) return fail(INERTIA_ERR_INVALID, "gate index out of range");
    const auto& g = n->n.gates()[i];
    if (name) *name = g.name.c_str();
    if (inertial) *inertial = circuit::classify_delay(g.delay) == circuit::DelayClass::inertial;
    return INERTIA_OK;
}

inertia_status inertia_netlist_is_output(const inertia_netlist* n, const char* net, int* out) {
    INERTIA_REQUIRE(n);
    INERTIA_REQUIRE(net);
    INERTIA_REQUIRE(out);
    const auto& o = n->n.outputs();
    *out = std::find(o.begin(), o.end(), net) != o.end();
    return INERTIA_OK;
}

inertia_status inertia_netlist_is_input(const inertia_netlist* n, const char* net, int* out) {
    INERTIA_REQUIRE(n);
    INERTIA_REQUIRE(net);
    INERTIA_REQUIRE(out);
    const auto& in = n->n.inputs();
    *out = std::find(in.begin(), in.end(), net) != in.end();
    return INERTIA_OK;
}

inertia_status inertia_simulate(const inertia_netlist* n, const inertia_waves* stimuli, int64_t lo, int64_t hi,
                                inertia_waves** out) {
    INERTIA_REQUIRE(n);
    INERTIA_REQUIRE(stimuli);
    INERTIA_REQUIRE(out);
    return guarded([&] { *out = new inertia_waves{circuit::simulate(n->n, stimuli->w, Tick(lo), Tick(hi))}; });
}

inertia_status inertia_envelope(const inertia_netlist* n, const inertia_waves* stimuli, inertia_waves** low,
                                inertia_waves** high) {
    INERTIA_REQUIRE(n);
    INERTIA_REQUIRE(stimuli);
    INERTIA_REQUIRE(low);
    INERTIA_REQUIRE(high);
    return guarded([&] {
        auto env = circuit::envelope_propagate(n->n, stimuli->w);
        auto lo = std::make_unique<inertia_waves>();
        auto hi = std::make_unique<inertia_waves>();
        for (auto& [net, e] : env) {
            lo->w.emplace(net, e.low);
            hi->w.emplace(net, e.high);
        }
        *low = lo.release();
        *high = hi.release();
    });
}

}  // extern "C"
