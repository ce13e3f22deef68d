#include "srdp/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

#include "srdp/errors.hpp"

namespace srdp {

Rational make_rational(long num, long den) {
    if (den == 0) {
        throw Error("make_rational: zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

double to_double(const Rational& q) {
    // mpq_get_d truncates toward zero; pick the nearest of its neighbours.
    const double t = q.get_d();
    if (!std::isfinite(t)) {
        return t;
    }
    double best = t;
    Rational best_err = abs(q - Rational(t));
    for (double c : {std::nextafter(t, std::numeric_limits<double>::infinity()),
                     std::nextafter(t, -std::numeric_limits<double>::infinity())}) {
        const Rational err = abs(q - Rational(c));
        const int cmp_result = cmp(err, best_err);
        if (cmp_result < 0 ||
            (cmp_result == 0 && (std::bit_cast<std::uint64_t>(c) & 1U) == 0)) {
            best = c;
            best_err = err;
        }
    }
    return best;
}

Polynomial::Polynomial(const Rational& constant) {
    add_term({0, 0}, constant);
}

Polynomial Polynomial::monomial(int ex, int ey, const Rational& c) {
    Polynomial p;
    p.add_term({ex, ey}, c);
    return p;
}

Polynomial Polynomial::from_coefficients(const std::vector<Rational>& coeffs) {
    Polynomial p;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        p.add_term({static_cast<int>(k), 0}, coeffs[k]);
    }
    return p;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
    if (sgn(c) == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) {
            terms_.erase(it);
        }
    }
}

Rational Polynomial::coefficient(int ex, int ey) const {
    auto it = terms_.find({ex, ey});
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree_x() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.x);
    return d;
}

int Polynomial::degree_y() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.y);
    return d;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.x + e.y);
    return d;
}

namespace {

Rational rational_power(const Rational& base, int n) {
    Rational r = 1;
    for (int k = 0; k < n; ++k) r *= base;
    return r;
}

}  // namespace

Rational Polynomial::evaluate(const Rational& x0, const Rational& y0) const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        sum += c * rational_power(x0, e.x) * rational_power(y0, e.y);
    }
    return sum;
}

double Polynomial::evaluate(double x0, double y0) const {
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        sum += c.get_d() * std::pow(x0, e.x) * std::pow(y0, e.y);
    }
    return sum;
}

Polynomial Polynomial::differentiate(Variable v, int order) const {
    Polynomial out;
    for (const auto& [e, c] : terms_) {
        const int n = v == Variable::x ? e.x : e.y;
        if (n < order) {
            continue;
        }
        Rational f = c;
        for (int k = 0; k < order; ++k) f *= n - k;
        const Exponent de = v == Variable::x ? Exponent{e.x - order, e.y} : Exponent{e.x, e.y - order};
        out.add_term(de, f);
    }
    return out;
}

Rational monomial_box_integral(int i, int j) {
    if (i % 2 != 0 || j % 2 != 0) {
        return 0;
    }
    Rational r(4, (i + 1) * (j + 1));
    r.canonicalize();
    return r;
}

Rational Polynomial::integrate_box() const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        sum += c * monomial_box_integral(e.x, e.y);
    }
    return sum;
}

Polynomial Polynomial::in_y() const {
    Polynomial out;
    for (const auto& [e, c] : terms_) {
        if (e.y != 0) {
            throw Error("in_y: polynomial is not univariate in x");
        }
        out.add_term({0, e.x}, c);
    }
    return out;
}

Polynomial Polynomial::swap_xy() const {
    Polynomial out;
    for (const auto& [e, c] : terms_) out.add_term({e.y, e.x}, c);
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::vector<std::pair<Exponent, Rational>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        const int da = a.first.x + a.first.y;
        const int db = b.first.x + b.first.y;
        return da != db ? da > db : a.first.x > b.first.x;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : sorted) {
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        bool need_star = false;
        if (!unit || (e.x == 0 && e.y == 0)) {
            os << mag.get_str();
            need_star = true;
        }
        auto emit = [&](const char* var, int n) {
            if (n == 0) return;
            if (need_star) os << "*";
            os << var;
            if (n > 1) os << "^" << n;
            need_star = true;
        };
        emit("x", e.x);
        emit("y", e.y);
    }
    return os.str();
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add_term({ea.x + eb.x, ea.y + eb.y}, ca * cb);
        }
    }
    return out;
}

Polynomial operator-(Polynomial a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
}

Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial multiply(const Polynomial& a, const Polynomial& b) { return a * b; }
Polynomial differentiate(const Polynomial& p, Variable v, int order) { return p.differentiate(v, order); }
Rational integrate_box(const Polynomial& p) { return p.integrate_box(); }
Rational evaluate(const Polynomial& p, const Rational& x0, const Rational& y0) { return p.evaluate(x0, y0); }

// ---------------------------------------------------------------------------
// Exact linear algebra

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

namespace {

/// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t pivot_cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && sgn(m(sel, col)) == 0) ++sel;
        if (sel == m.rows()) {
            continue;
        }
        if (sel != row) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
        }
        const Rational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m(r, col)) == 0) {
                continue;
            }
            const Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

RationalVector solve_rational_system(const RationalMatrix& a, const RationalVector& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) {
        throw Error("solve_rational_system: dimension mismatch");
    }
    RationalMatrix aug(n, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n) = b[r];
    }
    const auto pivots = row_reduce(aug, n);
    if (pivots.size() != n) {
        throw SingularSystem("solve_rational_system: matrix has rank " + std::to_string(pivots.size()) +
                             " < " + std::to_string(n));
    }
    RationalVector x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = aug(r, n);
    return x;
}

std::size_t rational_rank(const RationalMatrix& a) {
    RationalMatrix m = a;
    return row_reduce(m, m.cols()).size();
}

std::vector<std::optional<RationalVector>> solve_consistent(const RationalMatrix& a,
                                                            const std::vector<RationalVector>& rhs) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    const std::size_t k = rhs.size();
    RationalMatrix aug(m, n + k);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    }
    for (std::size_t j = 0; j < k; ++j) {
        if (rhs[j].size() != m) {
            throw Error("solve_consistent: right-hand side has wrong length");
        }
        for (std::size_t r = 0; r < m; ++r) aug(r, n + j) = rhs[j][r];
    }
    const auto pivots = row_reduce(aug, n);

    std::vector<std::optional<RationalVector>> out;
    out.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        bool consistent = true;
        for (std::size_t r = pivots.size(); r < m; ++r) {
            if (sgn(aug(r, n + j)) != 0) {
                consistent = false;
                break;
            }
        }
        if (!consistent) {
            out.emplace_back(std::nullopt);
            continue;
        }
        RationalVector x(n, Rational(0));
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, n + j);
        out.emplace_back(std::move(x));
    }
    return out;
}

RationalVector multiply(const RationalMatrix& a, const RationalVector& v) {
    if (a.cols() != v.size()) {
        throw Error("multiply: dimension mismatch");
    }
    RationalVector out(a.rows(), Rational(0));
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out[r] += a(r, c) * v[c];
    }
    return out;
}

}  // namespace srdp
