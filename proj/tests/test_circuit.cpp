#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "inertia/circuit.hpp"
#include "support.hpp"

using namespace inertia;
using namespace inertia::circuit;
using test::Gen;
using test::rep;

namespace {

Signal sig(bool init, std::initializer_list<Tick> sw) { return make_signal(init, sw); }
BdcParams bdc(rep mr, rep dr, rep mf, rep df) { return BdcParams(mr, dr, mf, df); }

const std::vector<bool> not_table = {true, false};
const std::vector<bool> buf_table = {false, true};
const std::vector<bool> and_table = {false, false, false, true};
const std::vector<bool> nor_table = {true, false, false, false};

Gate gate(std::string name, std::vector<std::string> in, std::vector<bool> table, DelayModel d) {
    return Gate{std::move(name), std::move(in), std::move(table), d};
}

bool eval_table(const Gate& g, const Waves& nets, rep t) {
    unsigned bits = 0;
    for (std::size_t k = 0; k < g.inputs.size(); ++k) bits |= (nets.at(g.inputs[k]).value_at(Tick(t)) ? 1u : 0u) << k;
    return g.table[bits];
}

// Acyclic reference: gates in dependency order, each output computed tick
// by tick from its gate function.
Waves reference(const Netlist& n, const Waves& stimuli) {
    Waves nets = stimuli;
    std::vector<const Gate*> pending;
    for (const Gate& g : n.gates()) pending.push_back(&g);
    while (!pending.empty()) {
        auto ready = std::find_if(pending.begin(), pending.end(), [&](const Gate* g) {
            return std::all_of(g->inputs.begin(), g->inputs.end(), [&](const std::string& in) { return nets.count(in); });
        });
        const Gate& g = **ready;
        Signal z = test::tabulate(test::far_lo, test::far_hi, [&](rep t) { return eval_table(g, nets, t); });
        if (auto* f = std::get_if<FixedDelay>(&g.delay))
            nets[g.name] = translate(z, f->delay);
        else
            nets[g.name] = test::ref_det_output(z, std::get<DetBridc>(g.delay).params);
        pending.erase(ready);
    }
    return nets;
}

void expect_same_on(const Signal& a, const Signal& b, rep lo, rep hi, const std::string& what) {
    for (rep t = lo; t <= hi; ++t) ASSERT_EQ(a.value_at(Tick(t)), b.value_at(Tick(t))) << what << " at " << t;
}

struct Random {
    std::vector<std::string> inputs;
    std::vector<Gate> gates;
    Waves stimuli;
};

Random random_circuit(Gen& g, bool allow_inertial) {
    Random r;
    r.inputs = {"a", "b", "c"};
    std::vector<std::string> nets = r.inputs;
    const int count = static_cast<int>(g.between(1, 6));
    for (int i = 0; i < count; ++i) {
        auto fan_in = static_cast<std::size_t>(g.between(1, 3));
        std::vector<std::string> in;
        for (std::size_t k = 0; k < fan_in; ++k)
            in.push_back(nets[static_cast<std::size_t>(g.between(0, static_cast<rep>(nets.size()) - 1))]);
        std::vector<bool> table(std::size_t{1} << fan_in);
        for (std::size_t k = 0; k < table.size(); ++k) table[k] = g.coin();
        DelayModel d = FixedDelay(Tick(g.between(0, 3)));
        if (allow_inertial && g.coin()) d = DetBridc{g.bdc_cc(3)};
        std::string name = "g" + std::to_string(i);
        r.gates.push_back(gate(name, in, table, d));
        nets.push_back(name);
    }
    for (const auto& in : r.inputs) r.stimuli[in] = g.signal(0, 20, 5);
    return r;
}

}  // namespace

TEST(Delay, Classification) {
    EXPECT_EQ(classify_delay(FixedDelay(Tick(2))), DelayClass::ideal);
    EXPECT_EQ(classify_delay(DetBridc{bdc(0, 2, 0, 2)}), DelayClass::ideal);
    EXPECT_EQ(classify_delay(DetBridc{bdc(1, 2, 1, 2)}), DelayClass::inertial);
    EXPECT_STREQ(to_string(DelayClass::inertial), "inertial");
    EXPECT_EQ(latency(FixedDelay(Tick(3))), Tick(3));
    EXPECT_EQ(latency(DetBridc{bdc(1, 3, 0, 2)}), Tick(2));
    EXPECT_EQ(bounds_of(FixedDelay(Tick(3))), bdc(0, 3, 0, 3));
    EXPECT_EQ(apply_delay(FixedDelay(Tick(1)), sig(false, {0})), sig(false, {1}));
}

TEST(Netlist, Validation) {
    EXPECT_THROW(Netlist({"a", "a"}, {}, {}), ValidationError);
    EXPECT_THROW(Netlist({"a"}, {gate("a", {"a"}, not_table, FixedDelay(Tick(1)))}, {}), ValidationError);
    EXPECT_THROW(Netlist({"a"}, {gate("x", {"b"}, not_table, FixedDelay(Tick(1)))}, {}), ValidationError);
    EXPECT_THROW(Netlist({"a"}, {gate("x", {"a"}, and_table, FixedDelay(Tick(1)))}, {}), ValidationError);
    EXPECT_THROW(Netlist({"a"}, {gate("x", {"a"}, not_table, DetBridc{bdc(0, 3, 0, 2)})}, {}), ValidationError);
    EXPECT_THROW(Netlist({"a"}, {}, {"y"}), ValidationError);
    std::vector<std::string> wide(9, "a");
    EXPECT_THROW(Netlist({"a"}, {gate("x", wide, std::vector<bool>(512), FixedDelay(Tick(1)))}, {}), ValidationError);
}

TEST(Netlist, ZeroDelayCycleRejected) {
    try {
        Netlist({}, {gate("x", {"x"}, not_table, FixedDelay(Tick(0)))}, {});
        FAIL() << "expected a validation error";
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("zero-delay combinational cycle"), std::string::npos);
    }
    // An inertial delay with zero latency on one side does not break the loop either.
    EXPECT_THROW(Netlist({}, {gate("x", {"x"}, buf_table, DetBridc{bdc(2, 2, 0, 1)})}, {}), ValidationError);
    Netlist ok({}, {gate("x", {"x"}, buf_table, FixedDelay(Tick(1)))}, {"x"});
    EXPECT_FALSE(ok.acyclic());
}

TEST(Simulate, WorkedExamples) {
    Netlist inv({"u"}, {gate("x", {"u"}, not_table, FixedDelay(Tick(1)))}, {"x"});
    EXPECT_EQ(simulate(inv, {{"u", sig(false, {0, 2})}}, Tick(-5), Tick(20)).at("x"), sig(true, {1, 3}));

    Netlist andg({"a", "b"}, {gate("x", {"a", "b"}, and_table, FixedDelay(Tick(2)))}, {"x"});
    auto w = simulate(andg, {{"a", sig(false, {0})}, {"b", sig(false, {1})}}, Tick(-5), Tick(20));
    EXPECT_EQ(w.at("x"), sig(false, {3}));

    Netlist filt({"u"}, {gate("x", {"u"}, not_table, DetBridc{bdc(1, 2, 1, 2)})}, {"x"});
    EXPECT_EQ(simulate(filt, {{"u", sig(false, {0, 1})}}, Tick(-5), Tick(20)).at("x"), Signal::constant(true));
}

TEST(Simulate, ReturnsEveryNetRestricted) {
    Netlist inv({"u"}, {gate("x", {"u"}, not_table, FixedDelay(Tick(1)))}, {"x"});
    auto w = simulate(inv, {{"u", sig(false, {0, 2})}}, Tick(2), Tick(20));
    ASSERT_EQ(w.size(), 2u);
    EXPECT_EQ(w.at("u"), sig(true, {2}));
    EXPECT_EQ(w.at("x"), sig(false, {3}));
    EXPECT_EQ(restrict_to(sig(false, {0, 5, 9}), Tick(3), Tick(6)), sig(true, {5}));
    EXPECT_THROW((void)simulate(inv, {}, Tick(0), Tick(5)), PreconditionError);
    EXPECT_THROW((void)simulate(inv, {{"u", Signal()}}, Tick(5), Tick(0)), ValidationError);
}

TEST(Simulate, LatchHoldsState) {
    // q = NOR(r, qn), qn = NOR(s, q); settles to q=1 from all zeros.
    Netlist latch({"s", "r"},
                  {gate("q", {"r", "qn"}, nor_table, FixedDelay(Tick(1))),
                   gate("qn", {"s", "q"}, nor_table, FixedDelay(Tick(1)))},
                  {"q"});
    auto w = simulate(latch, {{"s", Signal()}, {"r", sig(false, {5, 7})}}, Tick(-5), Tick(30));
    EXPECT_EQ(w.at("q"), sig(true, {6}));
    EXPECT_EQ(w.at("qn"), sig(false, {7}));
    auto set = simulate(latch, {{"s", sig(false, {12, 14})}, {"r", sig(false, {5, 7})}}, Tick(-5), Tick(30));
    EXPECT_EQ(set.at("q"), sig(true, {6, 14}));
    EXPECT_EQ(set.at("qn"), sig(false, {7, 13}));
    // A one-tick set pulse releases both NORs at once and the loop oscillates.
    auto osc = simulate(latch, {{"s", sig(false, {12, 13})}, {"r", sig(false, {5, 7})}}, Tick(-5), Tick(30));
    EXPECT_EQ(osc.at("q").switches().size(), 18u);
}

TEST(Simulate, RingWithoutSteadyStateIsAnError) {
    Netlist ring({}, {gate("x", {"x"}, not_table, FixedDelay(Tick(1)))}, {"x"});
    EXPECT_THROW((void)simulate(ring, {}, Tick(0), Tick(10)), ConsistencyError);
}

TEST(Envelope, Examples) {
    Netlist wire({"u"}, {gate("x", {"u"}, buf_table, DetBridc{bdc(1, 3, 1, 3)})}, {"x"});
    auto e = envelope_propagate(wire, {{"u", sig(false, {0, 5})}});
    EXPECT_EQ(e.at("x").low, sig(false, {3, 7}));
    EXPECT_EQ(e.at("x").high, sig(false, {2, 8}));

    Signal u = sig(false, {1, 4, 9});
    Netlist ident({"u"}, {gate("x", {"u"}, buf_table, DetBridc{bdc(0, 2, 0, 2)})}, {"x"});
    auto f = envelope_propagate(ident, {{"u", u}});
    EXPECT_EQ(f.at("x").low, translate(u, Tick(2)));
    EXPECT_EQ(f.at("x").high, translate(u, Tick(2)));

    Netlist andg({"a", "b"}, {gate("x", {"a", "b"}, and_table, DetBridc{bdc(1, 2, 1, 2)})}, {"x"});
    auto h = envelope_propagate(andg, {{"a", Signal()}, {"b", Signal()}});
    EXPECT_EQ(h.at("x").low, Signal());
    EXPECT_EQ(h.at("x").high, Signal());

    Netlist ring({}, {gate("x", {"x"}, buf_table, FixedDelay(Tick(1)))}, {"x"});
    EXPECT_THROW((void)envelope_propagate(ring, {}), PreconditionError);
}

// --- properties ----------------------------------------------------------------

TEST(CircuitProperty, MatchesGateByGateReference) {
    Gen g(41);
    for (int i = 0; i < 150; ++i) {
        Random r = random_circuit(g, true);
        Netlist n(r.inputs, r.gates, {});
        Waves got = simulate(n, r.stimuli, Tick(-10), Tick(60));
        Waves want = reference(n, r.stimuli);
        for (const auto& [net, s] : want) expect_same_on(got.at(net), s, -10, 60, net + " case " + std::to_string(i));
    }
}

TEST(CircuitProperty, FixedDelayChainsComposeTranslations) {
    Gen g(42);
    for (int i = 0; i < 100; ++i) {
        rep d1 = g.between(0, 4), d2 = g.between(0, 4);
        Netlist chain({"u"},
                      {gate("m", {"u"}, not_table, FixedDelay(Tick(d1))),
                       gate("x", {"m"}, not_table, FixedDelay(Tick(d2)))},
                      {"x"});
        Signal u = g.signal(0, 20, 6);
        expect_same_on(simulate(chain, {{"u", u}}, Tick(-5), Tick(40)).at("x"), translate(u, Tick(d1 + d2)), -5, 40,
                       "chain");
    }
}

TEST(CircuitProperty, InertialOutputsSatisfyTheirConditions) {
    Gen g(43);
    for (int i = 0; i < 150; ++i) {
        Random r = random_circuit(g, true);
        Netlist n(r.inputs, r.gates, {});
        Waves w = simulate(n, r.stimuli, Tick(-30), Tick(70));
        for (const Gate& gt : n.gates()) {
            auto* det = std::get_if<DetBridc>(&gt.delay);
            if (!det) continue;
            Signal z = test::tabulate(-30, 70, [&](rep t) { return eval_table(gt, w, t); });
            const BdcParams& p = det->params;
            RicParams ric(p.rise_memory(), p.rise_delay(), p.fall_memory(), p.fall_delay());
            ASSERT_TRUE(test::ref_bdc_member(z, w.at(gt.name), p)) << gt.name << " case " << i;
            ASSERT_TRUE(test::ref_ric_member(z, w.at(gt.name), ric)) << gt.name << " case " << i;
        }
    }
}

TEST(CircuitProperty, DeclarationOrderDoesNotMatter) {
    Gen g(44);
    for (int i = 0; i < 100; ++i) {
        Random r = random_circuit(g, true);
        Netlist a(r.inputs, r.gates, {});
        std::vector<Gate> shuffled = r.gates;
        std::reverse(shuffled.begin(), shuffled.end());
        std::rotate(shuffled.begin(), shuffled.begin() + (i % static_cast<int>(shuffled.size())), shuffled.end());
        Netlist b(r.inputs, shuffled, {});
        ASSERT_EQ(simulate(a, r.stimuli, Tick(-5), Tick(50)), simulate(b, r.stimuli, Tick(-5), Tick(50)));
    }
}

TEST(CircuitProperty, EnvelopeBracketsSimulation) {
    Gen g(45);
    for (int i = 0; i < 150; ++i) {
        Random r = random_circuit(g, true);
        Netlist n(r.inputs, r.gates, {});
        auto env = envelope_propagate(n, r.stimuli);
        Waves w = simulate(n, r.stimuli, Tick(-20), Tick(70));
        for (const auto& [net, e] : env) {
            ASSERT_TRUE(leq(e.low, e.high)) << net;
            for (rep t = -20; t <= 70; ++t) {
                bool v = w.at(net).value_at(Tick(t));
                ASSERT_TRUE(!e.low.value_at(Tick(t)) || v) << net << " at " << t << " case " << i;
                ASSERT_TRUE(!v || e.high.value_at(Tick(t))) << net << " at " << t << " case " << i;
            }
        }
    }
}

TEST(CircuitProperty, RepeatedRunsAreIdentical) {
    Gen g(46);
    for (int i = 0; i < 30; ++i) {
        Random r = random_circuit(g, true);
        Netlist n(r.inputs, r.gates, {});
        ASSERT_EQ(simulate(n, r.stimuli, Tick(0), Tick(40)), simulate(n, r.stimuli, Tick(0), Tick(40)));
    }
}
