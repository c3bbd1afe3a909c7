#include <gtest/gtest.h>

#include <limits>

#include "inertia/signal.hpp"
#include "support.hpp"

using namespace inertia;
using test::Gen;
using test::rep;

namespace {

Signal sig(bool init, std::initializer_list<Tick> sw) { return make_signal(init, sw); }

}  // namespace

TEST(Tick, CheckedArithmetic) {
    const Tick big(std::numeric_limits<Tick::rep>::max());
    EXPECT_THROW((void)(big + Tick(1)), ValidationError);
    EXPECT_THROW((void)(Tick(std::numeric_limits<Tick::rep>::min()) - Tick(1)), ValidationError);
    EXPECT_THROW((void)(big * 2), ValidationError);
    EXPECT_EQ((Tick(3) + Tick(4)).count(), 7);
    EXPECT_LT(Tick(-1), Tick(0));
}

TEST(Signal, Construction) {
    Signal zero = sig(false, {});
    EXPECT_TRUE(zero.is_constant());
    EXPECT_FALSE(zero.value_at(Tick(-100)));
    EXPECT_EQ(zero, Signal());

    Signal pulse = sig(false, {0, 5});
    for (rep t = -3; t < 0; ++t) EXPECT_FALSE(pulse.value_at(Tick(t)));
    for (rep t = 0; t < 5; ++t) EXPECT_TRUE(pulse.value_at(Tick(t)));
    for (rep t = 5; t < 9; ++t) EXPECT_FALSE(pulse.value_at(Tick(t)));

    Signal fall = sig(true, {3});
    EXPECT_TRUE(fall.value_at(Tick(2)));
    EXPECT_FALSE(fall.value_at(Tick(3)));
    EXPECT_FALSE(fall.final_value());
}

TEST(Signal, RejectsNonMonotoneSwitches) {
    EXPECT_THROW(sig(false, {5, 3}), ValidationError);
    EXPECT_THROW(sig(false, {2, 2}), ValidationError);
}

TEST(Signal, ValueAndLeftLimit) {
    Signal s = sig(false, {0, 5});
    EXPECT_TRUE(s.value_at(Tick(0)));
    EXPECT_FALSE(s.left_limit(Tick(0)));
    EXPECT_FALSE(s.value_at(Tick(5)));
    EXPECT_TRUE(s.left_limit(Tick(5)));
    EXPECT_TRUE(s.value_at(Tick(3)));
    EXPECT_TRUE(s.left_limit(Tick(3)));
}

TEST(Signal, BuilderStaysCanonical) {
    SignalBuilder b(false);
    b.set(Tick(1), true);
    b.set(Tick(1), false);  // same tick override cancels the switch
    b.set(Tick(2), false);
    b.set(Tick(4), true);
    EXPECT_EQ(std::move(b).build(), sig(false, {4}));
}

TEST(Window, AndExamples) {
    EXPECT_EQ(window_and(sig(false, {0, 5}), Tick(3), Tick(1)), sig(false, {3, 7}));
    Signal s = sig(true, {-2, 4, 9});
    EXPECT_EQ(window_and(s, Tick(2), Tick(0)), translate(s, Tick(2)));
    EXPECT_EQ(window_and(Signal::constant(true), Tick(5), Tick(3)), Signal::constant(true));
}

TEST(Window, OrExamples) {
    EXPECT_EQ(window_or(sig(false, {0, 5}), Tick(3), Tick(1)), sig(false, {2, 8}));
    EXPECT_EQ(window_or(Signal::constant(false), Tick(2), Tick(4)), Signal::constant(false));
}

TEST(Window, ForwardAndExamples) {
    EXPECT_EQ(forward_window_and(sig(false, {0, 5}), Tick(2)), sig(false, {0, 3}));
    Signal s = sig(false, {1, 3, 4, 9});
    EXPECT_EQ(forward_window_and(s, Tick(0)), s);
    EXPECT_EQ(forward_window_and(Signal::constant(true), Tick(3)), Signal::constant(true));
}

TEST(Pointwise, Examples) {
    EXPECT_TRUE(leq(sig(false, {0, 5}), sig(false, {0, 8})));
    EXPECT_FALSE(leq(sig(false, {0, 5}), sig(false, {1, 5})));
    EXPECT_EQ(signal_and(sig(false, {0, 5}), sig(false, {3, 8})), sig(false, {3, 5}));
}

TEST(Translate, Examples) {
    Signal s = sig(false, {0, 5});
    EXPECT_EQ(translate(s, Tick(2)), sig(false, {2, 7}));
    EXPECT_EQ(translate(s, Tick(0)), s);
    EXPECT_EQ(translate(translate(s, Tick(2)), Tick(-5)), translate(s, Tick(-3)));
}

TEST(Edges, Examples) {
    using D = Edge::Direction;
    EXPECT_EQ(edges(sig(false, {0, 5})), (std::vector<Edge>{{Tick(0), D::rising}, {Tick(5), D::falling}}));
    EXPECT_TRUE(edges(Signal::constant(true)).empty());
    EXPECT_EQ(edges(sig(true, {3, 7})), (std::vector<Edge>{{Tick(3), D::falling}, {Tick(7), D::rising}}));
}

// --- properties against tick-by-tick references -------------------------------

TEST(SignalProperty, WindowsMatchPointwiseDefinition) {
    Gen g(11);
    for (int i = 0; i < 400; ++i) {
        Signal s = g.signal(-6, 12, 6);
        rep d = g.between(-3, 6), m = g.between(0, 5);
        Signal wa = window_and(s, Tick(d), Tick(m));
        Signal wo = window_or(s, Tick(d), Tick(m));
        for (rep t = -20; t <= 30; ++t) {
            ASSERT_EQ(wa.value_at(Tick(t)), test::ref_window_and(s, t, d, m)) << s << " d=" << d << " m=" << m;
            ASSERT_EQ(wo.value_at(Tick(t)), test::ref_window_or(s, t, d, m)) << s << " d=" << d << " m=" << m;
        }
        ASSERT_EQ(wo, complement(window_and(complement(s), Tick(d), Tick(m))));
        ASSERT_TRUE(leq(wa, wo)) << s;
    }
}

TEST(SignalProperty, ForwardWindowMatchesPointwiseDefinition) {
    Gen g(12);
    for (int i = 0; i < 300; ++i) {
        Signal s = g.signal(-6, 12, 6);
        rep h = g.between(0, 5);
        Signal f = forward_window_and(s, Tick(h));
        for (rep t = -20; t <= 30; ++t) ASSERT_EQ(f.value_at(Tick(t)), test::all_on(s, t, t + h, true)) << s;
    }
}

TEST(SignalProperty, CombineMatchesPointwise) {
    Gen g(13);
    for (int i = 0; i < 300; ++i) {
        std::vector<Signal> in = {g.signal(-4, 10, 5), g.signal(-4, 10, 5), g.signal(-4, 10, 5)};
        unsigned table = static_cast<unsigned>(g.between(0, 255));
        Signal out = combine(in, [&](unsigned bits) { return ((table >> bits) & 1u) != 0; });
        for (rep t = -10; t <= 15; ++t) {
            unsigned bits = 0;
            for (unsigned k = 0; k < 3; ++k) bits |= (in[k].value_at(Tick(t)) ? 1u : 0u) << k;
            ASSERT_EQ(out.value_at(Tick(t)), ((table >> bits) & 1u) != 0);
        }
        ASSERT_EQ(signal_and(in[0], in[1]), combine(std::span(in).first(2), [](unsigned b) { return b == 3; }));
        ASSERT_EQ(signal_or(in[0], in[1]), complement(signal_and(complement(in[0]), complement(in[1]))));
    }
}

TEST(SignalProperty, LeqIsPointwise) {
    Gen g(14);
    for (int i = 0; i < 400; ++i) {
        Signal a = g.signal(-4, 8, 4), b = g.signal(-4, 8, 4);
        bool ref = true;
        for (rep t = -10; t <= 12; ++t) ref = ref && (!a.value_at(Tick(t)) || b.value_at(Tick(t)));
        ASSERT_EQ(leq(a, b), ref) << a << ' ' << b;
    }
}

TEST(SignalProperty, TranslateAndEdges) {
    Gen g(15);
    for (int i = 0; i < 300; ++i) {
        Signal s = g.signal(-8, 8, 6);
        rep d = g.between(-5, 5), e = g.between(-5, 5);
        ASSERT_EQ(translate(translate(s, Tick(d)), Tick(e)), translate(s, Tick(d + e)));
        for (rep t = -20; t <= 20; ++t) ASSERT_EQ(translate(s, Tick(d)).value_at(Tick(t)), s.value_at(Tick(t - d)));
        auto es = edges(s);
        ASSERT_EQ(es.size(), s.switches().size());
        for (std::size_t k = 0; k < es.size(); ++k) {
            bool rising = es[k].direction == Edge::Direction::rising;
            ASSERT_EQ(rising, s.value_at(es[k].at));
            ASSERT_EQ(rising, !s.left_limit(es[k].at));
        }
        ASSERT_EQ(complement(complement(s)), s);
    }
}

TEST(SignalProperty, ScaleRefinesGrid) {
    Gen g(16);
    for (int i = 0; i < 100; ++i) {
        Signal s = g.signal(-5, 5, 4);
        rep k = g.between(1, 4);
        Signal z = scale(s, k);
        for (rep t = -6; t <= 6; ++t) ASSERT_EQ(z.value_at(Tick(t * k)), s.value_at(Tick(t)));
    }
}
