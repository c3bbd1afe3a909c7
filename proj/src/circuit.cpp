#include "inertia/circuit.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <unordered_map>

#include "inertia/error.hpp"

namespace inertia::circuit {

namespace {

template <class... F>
struct overloaded : F... {
    using F::operator()...;
};

}  // namespace

DelayClass classify_delay(const DelayModel& m) {
    return std::visit(overloaded{[](const FixedDelay&) { return DelayClass::ideal; },
                                 [](const DetBridc& b) {
                                     return b.params.rise_memory() + b.params.fall_memory() > Tick(0)
                                                ? DelayClass::inertial
                                                : DelayClass::ideal;
                                 }},
                      m);
}

const char* to_string(DelayClass c) { return c == DelayClass::ideal ? "ideal" : "inertial"; }

Tick latency(const DelayModel& m) {
    return std::visit(overloaded{[](const FixedDelay& f) { return f.delay; },
                                 [](const DetBridc& b) {
                                     return std::min(b.params.rise_delay() - b.params.rise_memory(),
                                                     b.params.fall_delay() - b.params.fall_memory());
                                 }},
                      m);
}

BdcParams bounds_of(const DelayModel& m) {
    return std::visit(overloaded{[](const FixedDelay& f) { return BdcParams(0, f.delay, 0, f.delay); },
                                 [](const DetBridc& b) { return b.params; }},
                      m);
}

Signal apply_delay(const DelayModel& m, const Signal& z) {
    return std::visit(overloaded{[&](const FixedDelay& f) { return translate(z, f.delay); },
                                 [&](const DetBridc& b) { return bridc_det_output(z, b.params); }},
                      m);
}

Signal restrict_to(const Signal& s, Tick lo, Tick hi) {
    std::vector<Tick> kept;
    for (Tick t : s.switches())
        if (t >= lo && t <= hi) kept.push_back(t);
    return make_signal(s.value_at(lo - Tick(1)), std::move(kept));
}

// --- netlist ---------------------------------------------------------------

namespace {

bool evaluate(const Gate& g, const std::vector<bool>& bits) {
    std::size_t index = 0;
    for (std::size_t k = 0; k < bits.size(); ++k)
        if (bits[k]) index |= std::size_t{1} << k;
    return g.table[index];
}

}  // namespace

Netlist::Netlist(std::vector<std::string> inputs, std::vector<Gate> gates, std::vector<std::string> outputs)
    : inputs_(std::move(inputs)), gates_(std::move(gates)), outputs_(std::move(outputs)) {
    std::unordered_map<std::string, std::ptrdiff_t> driver;  // -1 for primary inputs
    for (const auto& name : inputs_) {
        if (name.empty()) throw ValidationError("net names must be non-empty");
        if (!driver.emplace(name, -1).second) throw ValidationError("net '" + name + "' is driven more than once");
    }
    for (std::size_t i = 0; i < gates_.size(); ++i) {
        const Gate& g = gates_[i];
        if (g.name.empty()) throw ValidationError("net names must be non-empty");
        if (!driver.emplace(g.name, static_cast<std::ptrdiff_t>(i)).second)
            throw ValidationError("net '" + g.name + "' is driven more than once");
        if (g.inputs.size() > max_fan_in)
            throw ValidationError("gate '" + g.name + "' has more than " + std::to_string(max_fan_in) + " inputs");
        if (g.table.size() != std::size_t{1} << g.inputs.size())
            throw ValidationError("gate '" + g.name + "' needs a truth table of " +
                                  std::to_string(std::size_t{1} << g.inputs.size()) + " entries, got " +
                                  std::to_string(g.table.size()));
        if (const auto* b = std::get_if<DetBridc>(&g.delay); b && !cc_holds(b->params))
            throw ValidationError("gate '" + g.name + "': inertial delay parameters violate CC");
    }
    for (const Gate& g : gates_)
        for (const auto& in : g.inputs)
            if (!driver.count(in)) throw ValidationError("gate '" + g.name + "' reads undriven net '" + in + "'");
    for (const auto& out : outputs_)
        if (!driver.count(out)) throw ValidationError("output net '" + out + "' is undriven");

    // Kahn over gate dependencies; the smallest ready index goes first so the
    // order is deterministic. Zero-latency edges must form a DAG on their own.
    const std::size_t n = gates_.size();
    auto run_kahn = [&](bool only_zero_latency) {
        std::vector<std::vector<std::size_t>> readers(n);
        std::vector<std::size_t> indegree(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            std::set<std::size_t> sources;
            for (const auto& in : gates_[i].inputs) {
                auto d = driver.at(in);
                if (d < 0) continue;
                auto j = static_cast<std::size_t>(d);
                if (only_zero_latency && latency(gates_[j].delay) > Tick(0)) continue;
                sources.insert(j);
            }
            for (std::size_t j : sources) {
                readers[j].push_back(i);
                ++indegree[i];
            }
        }
        std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
        for (std::size_t i = 0; i < n; ++i)
            if (indegree[i] == 0) ready.push(i);
        std::vector<std::size_t> order;
        while (!ready.empty()) {
            std::size_t j = ready.top();
            ready.pop();
            order.push_back(j);
            for (std::size_t i : readers[j])
                if (--indegree[i] == 0) ready.push(i);
        }
        return order;
    };

    auto instant = run_kahn(true);
    if (instant.size() != n) {
        std::vector<bool> placed(n, false);
        for (std::size_t i : instant) placed[i] = true;
        auto stuck = std::find(placed.begin(), placed.end(), false) - placed.begin();
        throw ValidationError("zero-delay combinational cycle through gate '" +
                              gates_[static_cast<std::size_t>(stuck)].name + "'");
    }
    topo_ = run_kahn(false);
    acyclic_ = topo_.size() == n;
    if (!acyclic_) topo_.clear();
}

// --- simulation --------------------------------------------------------------

namespace {

// Value history of one net, built in time order.
struct Trace {
    bool initial = false;
    bool current = false;
    std::vector<Tick> switches;

    void reset(bool v) {
        initial = current = v;
        switches.clear();
    }
    void set(Tick t, bool v) {
        if (v == current) return;
        switches.push_back(t);
        current = v;
    }
    bool at(Tick t) const {
        auto n = std::upper_bound(switches.begin(), switches.end(), t) - switches.begin();
        return initial != (n % 2 == 1);
    }
    // Holds v on every tick of [a, b].
    bool holds(Tick a, Tick b, bool v) const {
        if (at(a) != v) return false;
        auto it = std::upper_bound(switches.begin(), switches.end(), a);
        return it == switches.end() || *it > b;
    }
    Signal signal() const { return make_signal(initial, switches); }
};

class Simulator {
public:
    Simulator(const Netlist& n, const Waves& stimuli) : n_(n) {
        const auto& gates = n.gates();
        for (const auto& name : n.inputs()) {
            auto it = stimuli.find(name);
            if (it == stimuli.end()) throw PreconditionError("no stimulus for primary input '" + name + "'");
            net_index_[name] = inputs_.size();
            inputs_.push_back(&it->second);
        }
        for (std::size_t g = 0; g < gates.size(); ++g) net_index_[gates[g].name] = inputs_.size() + g;

        fan_in_.resize(gates.size());
        readers_.resize(inputs_.size() + gates.size());
        for (std::size_t g = 0; g < gates.size(); ++g) {
            for (const auto& in : gates[g].inputs) {
                std::size_t net = net_index_.at(in);
                fan_in_[g].push_back(net);
                auto& r = readers_[net];
                if (r.empty() || r.back() != g) r.push_back(g);
            }
        }
        rank_nodes();
    }

    Waves run(Tick lo, Tick hi) {
        settle();
        for (std::size_t i = 0; i < inputs_.size(); ++i)
            for (Tick t : inputs_[i]->switches())
                if (t <= hi) touch_readers(i, t);

        while (!agenda_.empty()) {
            auto it = agenda_.begin();
            const Tick t = it->first;
            if (t > hi) break;
            auto& pending = it->second;
            while (!pending.empty()) {
                std::size_t node = order_[*pending.begin()];
                pending.erase(pending.begin());
                if (node % 2 == 0) update_function(node / 2, t);
                else update_delay(node / 2, t);
            }
            agenda_.erase(it);
        }

        Waves out;
        for (std::size_t i = 0; i < inputs_.size(); ++i) out.emplace(n_.inputs()[i], restrict_to(*inputs_[i], lo, hi));
        for (std::size_t g = 0; g < nets_.size(); ++g)
            out.emplace(n_.gates()[g].name, restrict_to(nets_[g].signal(), lo, hi));
        return out;
    }

private:
    // Node 2g computes gate g's Boolean function, node 2g+1 its delayed output.
    // Within one tick nodes run in rank order: a delayed output with latency
    // feeds readers at the same tick, a function feeds its own zero-latency delay.
    void rank_nodes() {
        const auto& gates = n_.gates();
        const std::size_t nodes = 2 * gates.size();
        std::vector<std::vector<std::size_t>> next(nodes);
        std::vector<std::size_t> indegree(nodes, 0);
        auto edge = [&](std::size_t a, std::size_t b) {
            next[a].push_back(b);
            ++indegree[b];
        };
        for (std::size_t g = 0; g < gates.size(); ++g) {
            if (latency(gates[g].delay) == Tick(0)) edge(2 * g, 2 * g + 1);
            for (std::size_t r : readers_[inputs_.size() + g]) edge(2 * g + 1, 2 * r);
        }
        std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
        for (std::size_t v = 0; v < nodes; ++v)
            if (indegree[v] == 0) ready.push(v);
        rank_.assign(nodes, 0);
        while (!ready.empty()) {
            std::size_t v = ready.top();
            ready.pop();
            rank_[v] = order_.size();
            order_.push_back(v);
            for (std::size_t w : next[v])
                if (--indegree[w] == 0) ready.push(w);
        }
        // The netlist constructor already rejected zero-latency cycles.
    }

    bool net_now(std::size_t net, Tick t) const {
        if (net < inputs_.size()) return inputs_[net]->value_at(t);
        return nets_[net - inputs_.size()].current;
    }

    bool function_now(std::size_t g, Tick t) const {
        std::vector<bool> bits;
        bits.reserve(fan_in_[g].size());
        for (std::size_t net : fan_in_[g]) bits.push_back(net_now(net, t));
        return evaluate(n_.gates()[g], bits);
    }

    // Steady state before any input moves: every delay passes constants through,
    // so it is a fixed point of the gate functions.
    void settle() {
        const auto& gates = n_.gates();
        nets_.assign(gates.size(), Trace{});
        functions_.assign(gates.size(), Trace{});
        const Tick before(std::numeric_limits<Tick::rep>::min());
        const std::size_t limit = 2 * gates.size() + 2;
        bool changed = true;
        for (std::size_t round = 0; changed; ++round) {
            if (round == limit) throw ConsistencyError("feedback loop has no steady state for the initial inputs");
            changed = false;
            for (std::size_t g = 0; g < gates.size(); ++g) {
                bool v = function_now(g, before);
                if (v != nets_[g].current) {
                    nets_[g].reset(v);
                    changed = true;
                }
            }
        }
        for (std::size_t g = 0; g < gates.size(); ++g) functions_[g].reset(nets_[g].current);
    }

    void schedule(std::size_t node, Tick t) { agenda_[t].insert(rank_[node]); }

    void touch_readers(std::size_t net, Tick t) {
        for (std::size_t r : readers_[net]) schedule(2 * r, t);
    }

    void update_function(std::size_t g, Tick t) {
        bool v = function_now(g, t);
        if (v == functions_[g].current) return;
        functions_[g].set(t, v);
        std::visit(overloaded{[&](const FixedDelay& f) { schedule(2 * g + 1, t + f.delay); },
                              [&](const DetBridc& b) {
                                  schedule(2 * g + 1, t + (v ? b.params.rise_delay() : b.params.fall_delay()));
                              }},
                   n_.gates()[g].delay);
    }

    void update_delay(std::size_t g, Tick t) {
        const Trace& z = functions_[g];
        Trace& out = nets_[g];
        bool v = std::visit(overloaded{[&](const FixedDelay& f) { return z.at(t - f.delay); },
                                       [&](const DetBridc& b) {
                                           const BdcParams& p = b.params;
                                           if (!out.current)
                                               return z.holds(t - p.rise_delay(),
                                                              t - p.rise_delay() + p.rise_memory(), true);
                                           return !z.holds(t - p.fall_delay(), t - p.fall_delay() + p.fall_memory(),
                                                           false);
                                       }},
                            n_.gates()[g].delay);
        if (v == out.current) return;
        out.set(t, v);
        touch_readers(inputs_.size() + g, t);
    }

    const Netlist& n_;
    std::vector<const Signal*> inputs_;
    std::unordered_map<std::string, std::size_t> net_index_;
    std::vector<std::vector<std::size_t>> fan_in_;
    std::vector<std::vector<std::size_t>> readers_;  // per net: gates reading it
    std::vector<std::size_t> order_, rank_;
    std::vector<Trace> nets_, functions_;
    std::map<Tick, std::set<std::size_t>> agenda_;
};

}  // namespace

Waves simulate(const Netlist& n, const Waves& stimuli, Tick lo, Tick hi) {
    if (hi < lo) throw ValidationError("simulation horizon must satisfy lo <= hi");
    Simulator sim(n, stimuli);
    return sim.run(lo, hi);
}

// --- envelopes ----------------------------------------------------------------

std::map<std::string, Envelope> envelope_propagate(const Netlist& n, const Waves& stimuli) {
    if (!n.acyclic()) throw PreconditionError("envelope propagation needs an acyclic netlist");
    std::map<std::string, Envelope> env;
    for (const auto& name : n.inputs()) {
        auto it = stimuli.find(name);
        if (it == stimuli.end()) throw PreconditionError("no stimulus for primary input '" + name + "'");
        env.emplace(name, Envelope{it->second, it->second});
    }

    for (std::size_t gi : n.topological_order()) {
        const Gate& g = n.gates()[gi];
        std::vector<const Envelope*> in;
        std::vector<Tick> times;
        for (const auto& name : g.inputs) {
            const Envelope& e = env.at(name);
            in.push_back(&e);
            times.insert(times.end(), e.low.switches().begin(), e.low.switches().end());
            times.insert(times.end(), e.high.switches().begin(), e.high.switches().end());
        }
        std::sort(times.begin(), times.end());
        times.erase(std::unique(times.begin(), times.end()), times.end());

        // Extremes of the function over every input vector inside the bounds.
        auto corners = [&](auto&& low_at, auto&& high_at) {
            std::vector<std::size_t> free_bits;
            std::size_t base = 0;
            for (std::size_t k = 0; k < in.size(); ++k) {
                bool lo = low_at(*in[k]), hi = high_at(*in[k]);
                if (lo) base |= std::size_t{1} << k;
                else if (hi) free_bits.push_back(k);
            }
            bool any0 = false, any1 = false;
            for (std::size_t mask = 0; mask < (std::size_t{1} << free_bits.size()); ++mask) {
                std::size_t index = base;
                for (std::size_t b = 0; b < free_bits.size(); ++b)
                    if (mask >> b & 1u) index |= std::size_t{1} << free_bits[b];
                (g.table[index] ? any1 : any0) = true;
            }
            return std::pair{!any0, any1};  // (low, high)
        };

        auto [low0, high0] =
            corners([](const Envelope& e) { return e.low.initial(); }, [](const Envelope& e) { return e.high.initial(); });
        SignalBuilder low(low0), high(high0);
        for (Tick t : times) {
            auto [l, h] = corners([t](const Envelope& e) { return e.low.value_at(t); },
                                  [t](const Envelope& e) { return e.high.value_at(t); });
            low.set(t, l);
            high.set(t, h);
        }
        BdcParams p = bounds_of(g.delay);
        Signal z_low = std::move(low).build(), z_high = std::move(high).build();
        env.emplace(g.name, Envelope{bdc_min_solution(z_low, p), bdc_max_solution(z_high, p)});
    }
    return env;
}

}  // namespace inertia::circuit
