#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace srdp {

/// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

/// Builds num/den in canonical form. `den` must be nonzero.
Rational make_rational(long num, long den = 1);

/// Nearest IEEE double to an exact rational (ties to even).
double to_double(const Rational& q);

/// Exponent pair of a bivariate monomial x^x y^y.
struct Exponent {
    int x = 0;
    int y = 0;

    friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

enum class Variable { x, y };

/// Sparse bivariate polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored, so two polynomials are equal exactly
/// when their term maps are equal. A univariate polynomial is the special case
/// where every stored exponent has y == 0.
class Polynomial {
public:
    using TermMap = std::map<Exponent, Rational>;

    Polynomial() = default;
    explicit Polynomial(const Rational& constant);

    static Polynomial constant(const Rational& c) { return Polynomial(c); }
    static Polynomial monomial(int ex, int ey, const Rational& c = 1);
    static Polynomial x() { return monomial(1, 0); }
    static Polynomial y() { return monomial(0, 1); }

    /// Univariate polynomial in x from dense coefficients (coeffs[k] for x^k).
    static Polynomial from_coefficients(const std::vector<Rational>& coeffs);

    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
    [[nodiscard]] Rational coefficient(int ex, int ey) const;

    [[nodiscard]] int degree_x() const;
    [[nodiscard]] int degree_y() const;
    [[nodiscard]] int total_degree() const;
    [[nodiscard]] bool is_univariate() const { return degree_y() <= 0; }

    [[nodiscard]] Rational evaluate(const Rational& x0, const Rational& y0 = 0) const;
    [[nodiscard]] double evaluate(double x0, double y0) const;

    [[nodiscard]] Polynomial differentiate(Variable v, int order = 1) const;

    /// Exact integral over the reference square [-1,1]^2.
    [[nodiscard]] Rational integrate_box() const;

    /// Renames x -> y in a univariate polynomial (phi(x) becomes phi(y)).
    [[nodiscard]] Polynomial in_y() const;
    /// Exchanges the roles of x and y.
    [[nodiscard]] Polynomial swap_xy() const;

    /// Expanded form, e.g. "1/4*x*y - 1/4*x + 1".
    [[nodiscard]] std::string to_string() const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator-(Polynomial a);

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

private:
    void add_term(const Exponent& e, const Rational& c);

    TermMap terms_;
};

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial multiply(const Polynomial& a, const Polynomial& b);
Polynomial differentiate(const Polynomial& p, Variable v, int order);
Rational integrate_box(const Polynomial& p);
Rational evaluate(const Polynomial& p, const Rational& x0, const Rational& y0);

/// ∫_{-1}^{1}∫_{-1}^{1} x^i y^j dx dy.
Rational monomial_box_integral(int i, int j);

/// Dense row-major rational matrix.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    static RationalMatrix identity(std::size_t n);

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

using RationalVector = std::vector<Rational>;

/// Solves the square system A v = b exactly by Gaussian elimination.
/// Throws SingularSystem when A is rank deficient.
RationalVector solve_rational_system(const RationalMatrix& a, const RationalVector& b);

/// Rank of an arbitrary rational matrix.
std::size_t rational_rank(const RationalMatrix& a);

/// Rectangular system A v = b (A is m x n). For each right-hand side returns
/// a solution when the system is consistent (free variables set to zero), or
/// nullopt otherwise.
std::vector<std::optional<RationalVector>> solve_consistent(const RationalMatrix& a,
                                                            const std::vector<RationalVector>& rhs);

RationalVector multiply(const RationalMatrix& a, const RationalVector& v);

}  // namespace srdp
