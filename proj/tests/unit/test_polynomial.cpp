#include <random>

#include <gtest/gtest.h>

#include "srdp/errors.hpp"
#include "srdp/polynomial.hpp"

using namespace srdp;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

const Polynomial X = Polynomial::x();
const Polynomial Y = Polynomial::y();

Polynomial random_poly(std::mt19937& rng, int max_deg = 4) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    std::uniform_int_distribution<int> nterms(0, 6);
    Polynomial p;
    const int n = nterms(rng);
    for (int k = 0; k < n; ++k) p += Polynomial::monomial(deg(rng), deg(rng), q(num(rng), den(rng)));
    return p;
}

}  // namespace

TEST(Polynomial, ExpandsProductOfLinearFactors) {
    const auto p = q(1, 4) * (Polynomial(q(1)) - X) * (Polynomial(q(1)) - Y);
    EXPECT_EQ(p.coefficient(0, 0), q(1, 4));
    EXPECT_EQ(p.coefficient(1, 0), q(-1, 4));
    EXPECT_EQ(p.coefficient(0, 1), q(-1, 4));
    EXPECT_EQ(p.coefficient(1, 1), q(1, 4));
    EXPECT_EQ(p.term_count(), 4u);
    EXPECT_EQ(p.to_string(), "1/4*x*y - 1/4*x - 1/4*y + 1/4");
}

TEST(Polynomial, DerivativeOfCubic) {
    const auto p = X - X * X * X;
    EXPECT_EQ(p.differentiate(Variable::x), Polynomial(q(1)) - q(3) * X * X);
    EXPECT_EQ(p.differentiate(Variable::x, 3), Polynomial(q(-6)));
    EXPECT_TRUE(p.differentiate(Variable::x, 4).is_zero());
    EXPECT_TRUE(p.differentiate(Variable::y).is_zero());
}

TEST(Polynomial, BoxIntegrals) {
    EXPECT_EQ(monomial_box_integral(0, 0), q(4));
    EXPECT_EQ(monomial_box_integral(2, 0), q(4, 3));
    EXPECT_EQ(monomial_box_integral(2, 2), q(4, 9));
    EXPECT_EQ(monomial_box_integral(1, 2), q(0));
    EXPECT_EQ((X * X * Y * Y).integrate_box(), q(4, 9));
    EXPECT_EQ(integrate_box(Polynomial(q(1))), q(4));
}

TEST(Polynomial, CancellationLeavesNoZeroTerms) {
    const auto p = (X + Y) - (X + Y);
    EXPECT_TRUE(p.is_zero());
    EXPECT_EQ(p, Polynomial());
    EXPECT_EQ((X * Polynomial(q(0))).term_count(), 0u);
}

TEST(Polynomial, EvaluateExactAndDouble) {
    const auto p = q(1, 2) * X * (X + Polynomial(q(1)));
    EXPECT_EQ(p.evaluate(q(1)), q(1));
    EXPECT_EQ(p.evaluate(q(-1)), q(0));
    EXPECT_EQ(p.evaluate(q(1, 3)), q(2, 9));
    EXPECT_DOUBLE_EQ(p.evaluate(0.5, 0.0), 0.375);
}

TEST(Polynomial, SwapAndRename) {
    const auto p = X * X + q(3) * X;
    EXPECT_EQ(p.in_y(), Y * Y + q(3) * Y);
    EXPECT_EQ((X * Y * Y).swap_xy(), X * X * Y);
    EXPECT_EQ(p.in_y().swap_xy(), p);
}

TEST(Polynomial, Degrees) {
    const auto p = X * X * X * Y + Y * Y;
    EXPECT_EQ(p.degree_x(), 3);
    EXPECT_EQ(p.degree_y(), 2);
    EXPECT_EQ(p.total_degree(), 4);
    EXPECT_FALSE(p.is_univariate());
}

TEST(Polynomial, FromCoefficients) {
    const auto p = Polynomial::from_coefficients({q(1), q(0), q(-1)});
    EXPECT_EQ(p, Polynomial(q(1)) - X * X);
}

TEST(PolynomialProperty, RingAxioms) {
    std::mt19937 rng(20140611);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_poly(rng);
        const auto b = random_poly(rng);
        const auto c = random_poly(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(a * Polynomial(q(1)), a);
    }
}

TEST(PolynomialProperty, EvaluationIsAHomomorphism) {
    std::mt19937 rng(7);
    const Rational x0 = q(-2, 3);
    const Rational y0 = q(5, 7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_poly(rng);
        const auto b = random_poly(rng);
        EXPECT_EQ((a * b).evaluate(x0, y0), a.evaluate(x0, y0) * b.evaluate(x0, y0));
        EXPECT_EQ((a + b).evaluate(x0, y0), a.evaluate(x0, y0) + b.evaluate(x0, y0));
    }
}

TEST(PolynomialProperty, IntegralSymmetryAndLeibniz) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_poly(rng);
        const auto b = random_poly(rng);
        EXPECT_EQ((a * b).integrate_box(), (b * a).integrate_box());
        EXPECT_EQ((a * b).differentiate(Variable::x),
                  a.differentiate(Variable::x) * b + a * b.differentiate(Variable::x));
        EXPECT_EQ(a.differentiate(Variable::x).differentiate(Variable::y),
                  a.differentiate(Variable::y).differentiate(Variable::x));
    }
}

TEST(Rational, ToDoubleRoundsToNearest) {
    EXPECT_EQ(to_double(q(1, 3)), 1.0 / 3.0);
    EXPECT_EQ(to_double(q(-2, 7)), -2.0 / 7.0);
    EXPECT_EQ(to_double(q(4, 9)), 4.0 / 9.0);
    EXPECT_EQ(to_double(q(0)), 0.0);
    // 2^53 + 1 sits exactly between two doubles; ties go to even.
    Rational big(mpz_class("9007199254740993"));
    EXPECT_EQ(to_double(big), 9007199254740992.0);
}

TEST(RationalSolve, HilbertSystemHasZeroResidual) {
    const std::size_t n = 6;
    RationalMatrix a(n, n);
    RationalVector b(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = q(1, static_cast<long>(i + j + 1));
        b[i] = q(static_cast<long>(i) - 2, 3);
    }
    const auto v = solve_rational_system(a, b);
    EXPECT_EQ(multiply(a, v), b);
    EXPECT_EQ(rational_rank(a), n);
}

TEST(RationalSolve, SingularThrows) {
    RationalMatrix a(2, 2);
    a(0, 0) = 1;
    a(0, 1) = 2;
    a(1, 0) = 2;
    a(1, 1) = 4;
    EXPECT_EQ(rational_rank(a), 1u);
    EXPECT_THROW(solve_rational_system(a, {q(1), q(2)}), SingularSystem);
}

TEST(RationalSolve, ConsistencyOfRectangularSystems) {
    RationalMatrix a(3, 2);
    a(0, 0) = 1;
    a(1, 1) = 1;
    a(2, 0) = 1;
    a(2, 1) = 1;
    const auto sols = solve_consistent(a, {{q(1), q(2), q(3)}, {q(1), q(2), q(4)}});
    ASSERT_EQ(sols.size(), 2u);
    ASSERT_TRUE(sols[0].has_value());
    EXPECT_EQ(*sols[0], (RationalVector{q(1), q(2)}));
    EXPECT_FALSE(sols[1].has_value());
}
