#include <gtest/gtest.h>

#include "inertia/oracle.hpp"
#include "support.hpp"

using namespace inertia;
using namespace inertia::oracle;
using test::Gen;
using test::rep;

namespace {

Signal sig(bool init, std::initializer_list<Tick> sw) { return make_signal(init, sw); }
BdcParams bdc(rep mr, rep dr, rep mf, rep df) { return BdcParams(mr, dr, mf, df); }

bool ref_member(const Signal& u, const Signal& x, const CondExpr& e) {
    for (const Atom& a : e.atoms()) {
        bool ok = std::visit(
            [&](const auto& p) -> bool {
                using T = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<T, BdcParams>) return test::ref_bdc_member(u, x, p);
                if constexpr (std::is_same_v<T, AicParams>) return test::ref_aic_member(x, p);
                if constexpr (std::is_same_v<T, RicParams>) return test::ref_ric_member(u, x, p);
                if constexpr (std::is_same_v<T, FixedDelay>) return x == translate(u, p.delay);
            },
            a);
        if (!ok) return false;
    }
    return true;
}

// Every bit vector over [lo, hi], extended constantly, filtered by the
// pointwise definitions.
SolutionSet ref_enumerate(const Signal& u, const CondExpr& e, rep lo, rep hi) {
    SolutionSet out;
    const rep n = hi - lo + 1;
    for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
        auto at = [&](rep t) {
            t = std::clamp(t, lo, hi);
            return ((bits >> (t - lo)) & 1ull) != 0;
        };
        Signal x = test::tabulate(lo, hi, at);
        if (ref_member(u, x, e)) out.push_back(x);
    }
    return normalize(out);
}

}  // namespace

TEST(Grid, Validation) {
    EXPECT_THROW((GridConfig{Tick(0), Tick(0)}.validate()), ResourceError);
    EXPECT_THROW((GridConfig{Tick(0), Tick(GridConfig::max_span + 1)}.validate()), ResourceError);
    EXPECT_NO_THROW((GridConfig{Tick(-4), Tick(GridConfig::max_span - 4)}.validate()));
    EXPECT_THROW((void)enumerate_solutions(Signal(), CondExpr{bdc(0, 1, 0, 1)}, {Tick(0), Tick(60)}),
                 ResourceError);
}

TEST(Enumerate, DeterministicCaseIsSingleton) {
    Signal u = sig(false, {0, 1});
    auto s = enumerate_solutions(u, CondExpr{bdc(0, 1, 0, 1)}, {Tick(-4), Tick(8)});
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0], translate(u, Tick(1)));
}

TEST(Enumerate, MembersLieBetweenExtremes) {
    Signal u = sig(false, {0, 5});
    auto s = enumerate_solutions(u, CondExpr{bdc(1, 3, 1, 3)}, {Tick(-4), Tick(12)});
    ASSERT_FALSE(s.empty());
    for (const Signal& x : s) {
        EXPECT_TRUE(leq(sig(false, {3, 7}), x)) << x;
        EXPECT_TRUE(leq(x, sig(false, {2, 8}))) << x;
    }
    // 1-run may start at 2 or 3 and end at 7 or 8.
    EXPECT_EQ(s.size(), 4u);
}

TEST(Enumerate, InconsistentBridcHasEmptySet) {
    BdcParams p = bdc(0, 2, 0, 2);
    RicParams r(1, 5, 1, 5);
    ASSERT_FALSE(bridc_consistent(p, r).holds());
    EXPECT_TRUE(enumerate_solutions(sig(false, {0}), CondExpr{p, r}, {Tick(-2), Tick(12)}).empty());
}

TEST(Enumerate, EarlyStop) {
    Signal u = sig(false, {0, 5});
    std::vector<Signal> seen;
    std::size_t n = for_each_solution(u, CondExpr{bdc(1, 3, 1, 3)}, {Tick(-4), Tick(12)}, [&](const Signal& x) {
        seen.push_back(x);
        return seen.size() < 2;
    });
    EXPECT_EQ(n, 2u);
    EXPECT_EQ(seen.size(), 2u);
    EXPECT_TRUE(has_solution(u, CondExpr{bdc(1, 3, 1, 3)}, {Tick(-4), Tick(12)}));
}

TEST(Enumerate, MaxSwitchesFilters) {
    Signal u = sig(false, {0, 5});
    GridConfig g{Tick(-4), Tick(12), 0};
    EXPECT_TRUE(enumerate_solutions(u, CondExpr{bdc(1, 3, 1, 3)}, g).empty());
}

TEST(Witness, Examples) {
    InputFamily family{Tick(1), Tick(8), 3};
    auto w = find_empty_witness(CondExpr{bdc(0, 3, 0, 2)}, {Tick(0), Tick(12)}, family);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(enumerate_solutions(*w, CondExpr{bdc(0, 3, 0, 2)}, {Tick(0), Tick(12)}).empty());

    EXPECT_FALSE(find_empty_witness(CondExpr{bdc(1, 2, 1, 2)}, {Tick(0), Tick(12)}, family).has_value());

    // Short inputs do not expose this one; a long pulse train does.
    CondExpr baidc{bdc(1, 2, 1, 2), AicParams(2, 1)};
    EXPECT_FALSE(find_empty_witness(baidc, {Tick(0), Tick(12)}, family).has_value());
    const rep hi = GridConfig::max_span;
    auto b = find_empty_witness(baidc, {Tick(0), Tick(hi)}, InputFamily{Tick(1), Tick(hi - 3), 3, 4, false});
    ASSERT_TRUE(b.has_value());
    EXPECT_TRUE(enumerate_solutions(*b, baidc, {Tick(0), Tick(hi)}).empty());
}

TEST(InputFamily, OrderAndCount) {
    std::vector<Signal> seen;
    InputFamily{Tick(1), Tick(3), 2}.for_each([&](const Signal& s) {
        seen.push_back(s);
        return true;
    });
    // Two initial values times (1 + 3 + 3) switch sets.
    ASSERT_EQ(seen.size(), 14u);
    EXPECT_EQ(seen[0], Signal::constant(false));
    EXPECT_EQ(seen[1], Signal::constant(true));
    EXPECT_LE(seen.back().switches().size(), 2u);

    std::size_t trains = 0;
    InputFamily{Tick(1), Tick(12), 2, 2, false}.for_each([&](const Signal& s) {
        ++trains;
        EXPECT_GT(s.switches().size(), 2u);
        EXPECT_LE(s.switches().back(), Tick(12));
        return true;
    });
    EXPECT_GT(trains, 0u);
}

TEST(Sets, Helpers) {
    SolutionSet a = {sig(false, {2}), sig(false, {1}), sig(false, {1})};
    SolutionSet b = {sig(false, {1}), sig(false, {2}), sig(false, {3})};
    EXPECT_EQ(normalize(a).size(), 2u);
    EXPECT_TRUE(set_subset(a, b));
    EXPECT_FALSE(set_subset(b, a));
    EXPECT_TRUE(set_equal(a, {sig(false, {1}), sig(false, {2})}));
    EXPECT_EQ(max_span_of(CondExpr{bdc(1, 4, 0, 2), AicParams(5, 1)}), Tick(5));
}

// --- the enumerator against exhaustive pointwise filtering --------------------

TEST(OracleProperty, MatchesExhaustiveFiltering) {
    Gen g(31);
    for (int i = 0; i < 40; ++i) {
        const rep lo = -2, hi = 9;
        Signal u = g.signal(lo + 1, hi - 4, 3);
        std::vector<Atom> atoms;
        switch (g.between(0, 3)) {
            case 0: atoms = {g.bdc(3)}; break;
            case 1: atoms = {g.bdc(3), g.aic(2)}; break;
            case 2: atoms = {g.bdc(3), g.ric(3)}; break;
            default: atoms = {g.ric(3)}; break;
        }
        CondExpr e(atoms);
        auto got = normalize(enumerate_solutions(u, e, {Tick(lo), Tick(hi)}));
        auto want = ref_enumerate(u, e, lo, hi);
        ASSERT_EQ(got, want) << "u=" << u << " case " << i;
    }
}
