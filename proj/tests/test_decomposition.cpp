#include <random>
#include <set>

#include <gtest/gtest.h>

#include "depthforge/decomposition.hpp"
#include "depthforge/random.hpp"
#include "test_support.hpp"

namespace depthforge {
namespace {

using testing::associated_by_annihilators;
using testing::box;
using testing::ideal;
using testing::in_span;
using testing::max_exponents;
using testing::minimal_covers;
using testing::mono;

std::vector<std::vector<std::size_t>> as_lists(const std::vector<MonomialPrime>& primes) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& p : primes) out.push_back(p.vars());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::size_t>> sorted(std::vector<std::vector<std::size_t>> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// Membership in an irreducible component straight from its exponents.
bool in_component(const IrreducibleComponent& c, const Monomial& m) {
    for (std::size_t i = 0; i < m.num_vars(); ++i)
        if (c.exponent(i) > 0 && m[i] >= c.exponent(i)) return true;
    return false;
}

// Box large enough to separate any two ideals built from these exponents.
Monomial probe_bound(const MonomialIdeal& I) {
    auto top = max_exponents(I.generators(), I.num_vars());
    for (std::size_t i = 0; i < top.num_vars(); ++i) top[i] += 1;
    return top;
}

TEST(Decomposition, TwoGenerators) {
    const auto I = ideal(2, {mono({2, 0}), mono({1, 1})});
    const auto comps = irreducible_decomposition(I);
    ASSERT_EQ(comps.size(), 2u);
    EXPECT_EQ(comps[0].ideal(), ideal(2, {mono({1, 0})}));
    EXPECT_EQ(comps[1].ideal(), ideal(2, {mono({2, 0}), mono({0, 1})}));
}

TEST(Decomposition, ZeroIdeal) {
    const auto comps = irreducible_decomposition(MonomialIdeal::zero(3));
    ASSERT_EQ(comps.size(), 1u);
    EXPECT_TRUE(comps[0].is_zero());
    EXPECT_TRUE(comps[0].ideal().is_zero());
    const auto d = decompose(MonomialIdeal::zero(3));
    EXPECT_EQ(d.dimension, 3u);
    ASSERT_EQ(d.min_primes.size(), 1u);
    EXPECT_EQ(d.min_primes[0].height(), 0u);
}

TEST(Decomposition, UnitIdealRejected) {
    EXPECT_THROW(irreducible_decomposition(MonomialIdeal::unit(2)), ImproperIdeal);
    EXPECT_THROW(decompose(MonomialIdeal::unit(0)), ImproperIdeal);
}

TEST(Decomposition, ZeroVariables) {
    const auto d = decompose(MonomialIdeal::zero(0));
    EXPECT_EQ(d.dimension, 0u);
    EXPECT_EQ(d.components.size(), 1u);
}

TEST(Decomposition, AssociatedPrimesFourVariables) {
    // (x1^2, x1 x2, x1 x3 x4) = (x1) ∩ (x1^2, x2, x3) ∩ (x1^2, x2, x4)
    const auto I = ideal(4, {mono({2, 0, 0, 0}), mono({1, 1, 0, 0}), mono({1, 0, 1, 1})});
    const std::vector<std::vector<std::size_t>> expected{{0}, {0, 1, 2}, {0, 1, 3}};
    EXPECT_EQ(as_lists(associated_primes(I)), expected);
    EXPECT_EQ(as_lists(associated_primes(I)), sorted(associated_by_annihilators(I.generators(), 4)));
    EXPECT_EQ(as_lists(minimal_primes(I)), (std::vector<std::vector<std::size_t>>{{0}}));
}

TEST(Decomposition, MinimalPrimesAsVertexCovers) {
    const auto I = ideal(3, {mono({1, 1, 0}), mono({1, 0, 1})});
    const std::vector<std::vector<std::size_t>> expected{{0}, {1, 2}};
    EXPECT_EQ(as_lists(minimal_primes(I)), expected);
    EXPECT_EQ(sorted(minimal_covers(I.generators(), 3)), expected);
    EXPECT_EQ(dimension(I), 2u);
}

TEST(Decomposition, LemmaShapedIdeal) {
    // (x0) ∩ (x0, x1)^2 = (x0^2, x0 x1)
    const auto I = intersect(ideal(2, {mono({1, 0})}), power(ideal(2, {mono({1, 0}), mono({0, 1})}), 2));
    EXPECT_EQ(as_lists(associated_primes(I)), (std::vector<std::vector<std::size_t>>{{0}, {0, 1}}));
}

TEST(MonomialPrimeTest, Basics) {
    const MonomialPrime p(3, {2, 0, 2});
    EXPECT_EQ(p.vars(), (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(p.height(), 2u);
    EXPECT_TRUE(MonomialPrime(3, {0}).is_subset_of(p));
    EXPECT_FALSE(p.is_subset_of(MonomialPrime(3, {0})));
    EXPECT_THROW(MonomialPrime(2, {2}), DimensionMismatch);
    const auto j = p.joined(MonomialPrime(2, {1}));
    EXPECT_EQ(j.num_vars(), 5u);
    EXPECT_EQ(j.vars(), (std::vector<std::size_t>{0, 2, 4}));
}

class DecompositionProperties : public ::testing::Test {
protected:
    std::mt19937_64 rng{11};
    RandomIdealShape shape{4, 5, 3, 1};
};

TEST_F(DecompositionProperties, RoundTripAgainstMembership) {
    for (int trial = 0; trial < 150; ++trial) {
        const auto I = random_proper_ideal(rng, shape);
        const auto comps = irreducible_decomposition(I);
        EXPECT_EQ(intersect_components(comps, I.num_vars()), I);
        for (const auto& m : box(probe_bound(I))) {
            bool all = true;
            for (const auto& c : comps) all = all && in_component(c, m);
            ASSERT_EQ(all, in_span(I.generators(), m));
        }
    }
}

TEST_F(DecompositionProperties, Irredundant) {
    for (int trial = 0; trial < 150; ++trial) {
        const auto I = random_proper_ideal(rng, shape);
        const auto comps = irreducible_decomposition(I);
        if (comps.size() < 2) continue;
        for (std::size_t j = 0; j < comps.size(); ++j) {
            // Some monomial lies in every other component but not in I.
            bool witness = false;
            for (const auto& m : box(probe_bound(I))) {
                if (in_span(I.generators(), m)) continue;
                bool others = true;
                for (std::size_t k = 0; k < comps.size(); ++k)
                    if (k != j) others = others && in_component(comps[k], m);
                if (others) {
                    witness = true;
                    break;
                }
            }
            EXPECT_TRUE(witness) << "component " << j << " is redundant";
        }
    }
}

TEST_F(DecompositionProperties, PrimesAgainstOracles) {
    for (int trial = 0; trial < 150; ++trial) {
        const auto I = random_proper_ideal(rng, shape);
        const auto n = I.num_vars();
        const auto d = decompose(I);
        EXPECT_EQ(as_lists(d.ass_primes), sorted(associated_by_annihilators(I.generators(), n)));
        EXPECT_EQ(as_lists(d.min_primes), sorted(minimal_covers(I.generators(), n)));
        std::size_t h = n;
        for (const auto& p : minimal_covers(I.generators(), n)) h = std::min(h, p.size());
        EXPECT_EQ(d.dimension, n - h);
    }
}

TEST_F(DecompositionProperties, MinInsideAssAndRadicalInvariant) {
    for (int trial = 0; trial < 150; ++trial) {
        const auto I = random_proper_ideal(rng, shape);
        const auto ass = associated_primes(I);
        const auto min = minimal_primes(I);
        for (const auto& p : min) EXPECT_NE(std::find(ass.begin(), ass.end(), p), ass.end());
        EXPECT_EQ(min, minimal_primes(radical(I)));
        // A radical monomial ideal has no embedded primes.
        EXPECT_EQ(associated_primes(radical(I)), minimal_primes(radical(I)));
    }
}

TEST_F(DecompositionProperties, JoinMinimalPrimesAndDimension) {
    RandomIdealShape small{3, 4, 3, 1};
    for (int trial = 0; trial < 100; ++trial) {
        const auto I = random_proper_ideal(rng, small);
        const auto J = random_proper_ideal(rng, small);
        const auto B = join_ideals(I, J);
        std::set<MonomialPrime> expected;
        for (const auto& p : minimal_primes(I))
            for (const auto& q : minimal_primes(J)) expected.insert(p.joined(q));
        const auto got = minimal_primes(B);
        EXPECT_EQ(std::set<MonomialPrime>(got.begin(), got.end()), expected);
        EXPECT_EQ(as_lists(got), sorted(minimal_covers(B.generators(), B.num_vars())));
        EXPECT_EQ(dimension(B), dimension(I) + dimension(J));
    }
}

TEST_F(DecompositionProperties, JoinAssociatedPrimes) {
    // Ass of a tensor product over a field is the set of pairwise unions.
    RandomIdealShape small{3, 3, 2, 1};
    for (int trial = 0; trial < 60; ++trial) {
        const auto I = random_proper_ideal(rng, small);
        const auto J = random_proper_ideal(rng, small);
        const auto B = join_ideals(I, J);
        std::set<MonomialPrime> expected;
        for (const auto& p : associated_primes(I))
            for (const auto& q : associated_primes(J)) expected.insert(p.joined(q));
        const auto got = associated_primes(B);
        EXPECT_EQ(std::set<MonomialPrime>(got.begin(), got.end()), expected);
        EXPECT_EQ(as_lists(got), sorted(associated_by_annihilators(B.generators(), B.num_vars())));
    }
}

}  // namespace
}  // namespace depthforge
