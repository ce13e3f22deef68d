#include "srdp/basis1d.hpp"

#include <string>

#include "srdp/errors.hpp"

namespace srdp {

namespace {

void check_index(int p, int i) {
    if (p < 1) {
        throw InvalidIndex("order p must be >= 1, got " + std::to_string(p));
    }
    if (i < 1 || i > p + 1) {
        throw InvalidIndex("phi index " + std::to_string(i) + " outside [1, " + std::to_string(p + 1) + "]");
    }
}

/// d^k/dx^k x^n evaluated at `node`.
Rational monomial_derivative_at(int n, int k, int node) {
    if (k > n) {
        return 0;
    }
    Rational f = 1;
    for (int m = 0; m < k; ++m) f *= n - m;
    const int e = n - k;
    if (node == 0) {
        return e == 0 ? f : Rational(0);
    }
    if (node == -1 && e % 2 != 0) {
        return -f;
    }
    return f;
}

}  // namespace

std::vector<InterpolationCondition> interpolating_conditions(int p, int i) {
    check_index(p, i);
    std::vector<InterpolationCondition> out;
    if (p == 1) {
        out.push_back({-1, 0, i == 1 ? 1 : 0});
        out.push_back({1, 0, i == 2 ? 1 : 0});
        return out;
    }

    const bool nodal = i == 1 || i == 2 || i == p + 1;
    const int own_node = i == 1 ? -1 : (i == 2 ? 0 : 1);
    for (int node : {-1, 0, 1}) {
        out.push_back({node, 0, nodal && node == own_node ? 1 : 0});
    }
    for (int k = 1; k <= p - 2; ++k) {
        out.push_back({0, k, !nodal && k == i - 2 ? 1 : 0});
    }
    return out;
}

const Polynomial& Phi1D::phi(int i) const {
    if (i < 1 || i > static_cast<int>(functions.size())) {
        throw InvalidIndex("Phi1D::phi: index " + std::to_string(i) + " out of range");
    }
    return functions[static_cast<std::size_t>(i - 1)];
}

Phi1D generate_phi(int p) {
    if (p < 1) {
        throw InvalidIndex("generate_phi: order must be >= 1, got " + std::to_string(p));
    }
    Phi1D out;
    out.order = p;
    for (int i = 1; i <= p + 1; ++i) {
        const auto conds = interpolating_conditions(p, i);
        const int n_conds = static_cast<int>(conds.size());

        bool found = false;
        for (int d = n_conds - 1; d <= p && !found; ++d) {
            RationalMatrix a(conds.size(), static_cast<std::size_t>(d + 1));
            RationalVector b(conds.size());
            for (std::size_t r = 0; r < conds.size(); ++r) {
                for (int n = 0; n <= d; ++n) {
                    a(r, static_cast<std::size_t>(n)) = monomial_derivative_at(n, conds[r].derivative, conds[r].node);
                }
                b[r] = conds[r].value;
            }
            // Unique solvability at degree d: full column rank and consistent.
            if (rational_rank(a) != static_cast<std::size_t>(d + 1)) {
                continue;
            }
            auto sol = solve_consistent(a, {b});
            if (!sol.front()) {
                continue;
            }
            out.functions.push_back(Polynomial::from_coefficients(*sol.front()));
            out.solve_degree.push_back(d);
            found = true;
        }
        if (!found) {
            throw ConstructionFailure("no polynomial of degree <= " + std::to_string(p) +
                                      " satisfies the conditions for phi_" + std::to_string(i) +
                                      " (p = " + std::to_string(p) + ")");
        }
    }
    return out;
}

}  // namespace srdp
