#pragma once

#include <vector>

#include "srdp/polynomial.hpp"

namespace srdp {

/// One constraint phi^{(derivative)}(node) = value, with node in {-1, 0, 1}.
struct InterpolationCondition {
    int node = 0;
    int derivative = 0;
    Rational value;

    friend bool operator==(const InterpolationCondition&, const InterpolationCondition&) = default;
};

/// Constraint list defining phi_i of order p (1-based i in [1, p+1]).
///
/// phi_1, phi_2 and phi_{p+1} are Kronecker at -1, 0, 1 respectively.
/// phi_3..phi_p vanish on {-1, 0, 1}. Every function also fixes the
/// derivatives of orders 1..p-2 at 0: phi_i^{(i-2)}(0) = 1 for 3 <= i <= p,
/// all others zero. For p = 1 the two endpoint conditions are returned.
std::vector<InterpolationCondition> interpolating_conditions(int p, int i);

/// The univariate set Phi_p[x] = {phi_1, ..., phi_{p+1}} on [-1, 1].
struct Phi1D {
    int order = 0;
    std::vector<Polynomial> functions;
    /// Degree of the monomial space in which each phi_i was found.
    std::vector<int> solve_degree;

    /// 1-based access, phi(1) .. phi(order + 1).
    [[nodiscard]] const Polynomial& phi(int i) const;
};

/// Lowest-degree polynomials satisfying interpolating_conditions(p, i) for
/// each i, searched from degree (#conditions - 1) up to p.
Phi1D generate_phi(int p);

}  // namespace srdp
