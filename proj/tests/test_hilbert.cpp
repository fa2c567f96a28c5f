#include <random>

#include <gtest/gtest.h>

#include "depthforge/decomposition.hpp"
#include "depthforge/hilbert.hpp"
#include "depthforge/random.hpp"
#include "test_support.hpp"

namespace depthforge {
namespace {

using testing::ideal;
using testing::in_span;
using testing::mono;
using testing::monomials_of_degree;

// Number of standard monomials of each degree 0..max_degree, by enumeration.
std::vector<std::int64_t> count_standard(const MonomialIdeal& I, std::size_t max_degree) {
    std::vector<std::int64_t> out;
    for (std::size_t d = 0; d <= max_degree; ++d) {
        std::int64_t c = 0;
        for (const auto& m : monomials_of_degree(I.num_vars(), d)) c += in_span(I.generators(), m) ? 0 : 1;
        out.push_back(c);
    }
    return out;
}

TEST(Polynomial, Arithmetic) {
    const IntPolynomial a({1, 1});
    const IntPolynomial b({1, -1});
    EXPECT_EQ((a * b).coefficients(), (std::vector<std::int64_t>{1, 0, -1}));
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ((a * b).divided_by_one_minus_t(), a);
    EXPECT_EQ(IntPolynomial({1, 1, -1}).to_string(), "1 + t - t^2");
    EXPECT_EQ(IntPolynomial({0, -2, 0, 3}).to_string(), "-2t + 3t^3");
    EXPECT_EQ(IntPolynomial().to_string(), "0");
}

TEST(Hilbert, TwoGenerators) {
    const auto I = ideal(2, {mono({2, 0}), mono({1, 1})});
    const auto h = hilbert_series(I);
    EXPECT_EQ(h.numerator(), IntPolynomial({1, 1, -1}));
    EXPECT_EQ(h.denominator_exponent(), 1u);
    EXPECT_EQ(h.to_string(), "(1 + t - t^2)/(1-t)^1");
    EXPECT_EQ(h.coefficients(6), count_standard(I, 6));
    EXPECT_EQ(h.coefficients(6), (std::vector<std::int64_t>{1, 2, 1, 1, 1, 1, 1}));
}

TEST(Hilbert, ZeroAndFiniteLength) {
    const auto z = hilbert_series(MonomialIdeal::zero(2));
    EXPECT_EQ(z.numerator(), IntPolynomial({1}));
    EXPECT_EQ(z.denominator_exponent(), 2u);
    const auto m2 = hilbert_series(ideal(2, {mono({2, 0}), mono({1, 1}), mono({0, 2})}));
    EXPECT_EQ(m2.numerator(), IntPolynomial({1, 2}));
    EXPECT_EQ(m2.denominator_exponent(), 0u);
    const auto point = hilbert_series(MonomialIdeal::zero(0));
    EXPECT_EQ(point.numerator(), IntPolynomial({1}));
    EXPECT_EQ(point.denominator_exponent(), 0u);
    EXPECT_THROW(hilbert_series(MonomialIdeal::unit(1)), ImproperIdeal);
}

TEST(Hilbert, InclusionExclusionGuard) {
    std::vector<Monomial> gens;
    for (Exponent e = 0; e <= 21; ++e) gens.push_back(mono({e, 21 - e}));
    const auto I = MonomialIdeal::generated_by(2, gens);
    EXPECT_THROW(hilbert_series_inclusion_exclusion(I), ResourceLimit);
    EXPECT_NO_THROW(hilbert_series(I));
    EXPECT_EQ(hilbert_series(I).coefficients(25), count_standard(I, 25));
}

class HilbertProperties : public ::testing::Test {
protected:
    std::mt19937_64 rng{29};
    RandomIdealShape shape{4, 5, 3, 1};
};

TEST_F(HilbertProperties, MatchesEnumeration) {
    for (int trial = 0; trial < 150; ++trial) {
        const auto I = random_proper_ideal(rng, shape);
        const auto h = hilbert_series(I);
        ASSERT_EQ(h.coefficients(10), count_standard(I, 10));
    }
}

TEST_F(HilbertProperties, RoutesAgree) {
    for (int trial = 0; trial < 200; ++trial) {
        const auto I = random_proper_ideal(rng, shape);
        ASSERT_EQ(hilbert_series(I), hilbert_series_inclusion_exclusion(I));
    }
}

TEST_F(HilbertProperties, PoleOrderIsDimension) {
    for (int trial = 0; trial < 150; ++trial) {
        const auto I = random_proper_ideal(rng, shape);
        const auto h = hilbert_series(I);
        EXPECT_EQ(h.denominator_exponent(), dimension(I));
        EXPECT_GT(h.numerator().value_at_one(), 0);  // the multiplicity
    }
}

TEST_F(HilbertProperties, MultiplicativeOnJoins) {
    RandomIdealShape small{3, 4, 3, 1};
    for (int trial = 0; trial < 100; ++trial) {
        const auto I = random_proper_ideal(rng, small);
        const auto J = random_proper_ideal(rng, small);
        const auto B = join_ideals(I, J);
        EXPECT_EQ(hilbert_series(B), hilbert_series(I) * hilbert_series(J));
        EXPECT_EQ(hilbert_series(B).coefficients(8), count_standard(B, 8));
    }
}

}  // namespace
}  // namespace depthforge
