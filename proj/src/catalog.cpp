#include "srdp/catalog.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "srdp/errors.hpp"

namespace srdp {

std::optional<Polynomial> divide_linear(const Polynomial& p, Variable v, const Rational& root) {
    // View p as a polynomial in v whose coefficients are powers of the other variable.
    std::map<int, std::map<int, Rational>> by_other;  // other exponent -> (v exponent -> coeff)
    for (const auto& [e, c] : p.terms()) {
        const int ev = v == Variable::x ? e.x : e.y;
        const int eo = v == Variable::x ? e.y : e.x;
        by_other[eo][ev] = c;
    }
    Polynomial quotient;
    for (const auto& [eo, coeffs] : by_other) {
        const int deg = coeffs.rbegin()->first;
        // Synthetic division from the top coefficient down.
        Rational carry = 0;
        for (int n = deg; n >= 0; --n) {
            auto it = coeffs.find(n);
            const Rational a = (it == coeffs.end() ? Rational(0) : it->second) + carry * root;
            if (n == 0) {
                if (sgn(a) != 0) return std::nullopt;
                break;
            }
            if (sgn(a) != 0) {
                quotient += v == Variable::x ? Polynomial::monomial(n - 1, eo, a) : Polynomial::monomial(eo, n - 1, a);
            }
            carry = a;
        }
    }
    return quotient;
}

namespace {

struct LinearFactor {
    Variable var;
    Rational root;
    const char* label;
};

}  // namespace

std::string factored_string(const Polynomial& p) {
    if (p.is_zero()) {
        return "0";
    }
    // Content: gcd of numerators over lcm of denominators.
    mpz_class num_gcd = 0;
    mpz_class den_lcm = 1;
    for (const auto& [e, c] : p.terms()) {
        num_gcd = gcd(num_gcd, c.get_num());
        den_lcm = lcm(den_lcm, c.get_den());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    // Sign follows the leading term of the expanded form.
    const std::string expanded = p.to_string();
    if (expanded.front() == '-') content = -content;

    Polynomial rest = p * (1 / content);

    static const LinearFactor candidates[] = {
        {Variable::x, Rational(0), "x"},      {Variable::x, Rational(1), "(x - 1)"},
        {Variable::x, Rational(-1), "(x + 1)"}, {Variable::y, Rational(0), "y"},
        {Variable::y, Rational(1), "(y - 1)"},  {Variable::y, Rational(-1), "(y + 1)"},
    };
    std::vector<std::string> parts;
    for (const auto& f : candidates) {
        int power = 0;
        while (rest.total_degree() > 0) {
            auto q = divide_linear(rest, f.var, f.root);
            if (!q) break;
            rest = std::move(*q);
            ++power;
        }
        if (power > 0) {
            parts.push_back(power > 1 ? std::string(f.label) + "^" + std::to_string(power) : f.label);
        }
    }
    // Monic factors keep the leading coefficient positive, so a constant
    // remainder of a primitive polynomial is exactly 1.
    if (rest.total_degree() > 0) {
        parts.push_back(rest.term_count() > 1 ? "(" + rest.to_string() + ")" : rest.to_string());
    }

    if (parts.empty()) {
        return content.get_str();
    }
    std::string out = content == 1 ? "" : (content == -1 ? "-" : content.get_str() + " ");
    for (std::size_t k = 0; k < parts.size(); ++k) {
        out += (k == 0 ? "" : " ") + parts[k];
    }
    return out;
}

void write_basis_text(std::ostream& os, const BasisArray& b) {
    os << to_string(b.family) << " basis, p = " << b.order << ", " << b.nonzero_count() << " functions\n";
    for (int i = 1; i <= b.grid.extent(); ++i) {
        for (int j = 1; j <= b.grid.extent(); ++j) {
            os << (j == 1 ? "" : " | ") << factored_string(b.at(i, j));
        }
        os << "\n";
    }
}

void write_basis_records(std::ostream& os, const BasisArray& b) {
    for (const auto& s : b.slots()) {
        const Polynomial& p = b.at(s.i, s.j);
        os << s.i << ' ' << s.j << ' ' << p.term_count();
        for (const auto& [e, c] : p.terms()) {
            os << ' ' << e.x << ' ' << e.y << ' ' << c.get_num().get_str() << ' ' << c.get_den().get_str();
        }
        os << '\n';
    }
}

std::vector<BasisRecord> parse_basis_records(std::istream& is) {
    std::vector<BasisRecord> out;
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ls(line);
        BasisRecord rec;
        std::size_t n = 0;
        if (!(ls >> rec.slot.i >> rec.slot.j >> n)) {
            throw Error("basis records: malformed header on line " + std::to_string(line_no));
        }
        for (std::size_t t = 0; t < n; ++t) {
            int ex = 0;
            int ey = 0;
            std::string num;
            std::string den;
            if (!(ls >> ex >> ey >> num >> den)) {
                throw Error("basis records: truncated term list on line " + std::to_string(line_no));
            }
            Rational c{mpz_class(num), mpz_class(den)};
            c.canonicalize();
            rec.polynomial += Polynomial::monomial(ex, ey, c);
        }
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace srdp
