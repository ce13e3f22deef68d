#pragma once

#include <iosfwd>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "srdp/basis2d.hpp"
#include "srdp/mesh.hpp"

namespace srdp {

/// Exact mass and stiffness matrices of a basis on [-1,1]^2, rows/columns in slot order.
struct LocalMatrices {
    Family family = Family::tensor;
    int order = 1;
    RationalMatrix mass;
    RationalMatrix stiffness;
};

LocalMatrices local_matrices(const BasisArray& basis);

/// Memoized local_matrices(make_basis(family, p)); safe to call concurrently.
const LocalMatrices& reference_matrices(Family family, int p);

struct ElementMatrices {
    Eigen::MatrixXd mass;
    Eigen::MatrixXd stiffness;
};

/// Maps the reference matrices to a square of side h: the mass matrix picks
/// up the Jacobian (h/2)^2, the 2D stiffness matrix is scale invariant.
/// Both are rounded to nearest double from the exact values.
ElementMatrices scale_to_element(const LocalMatrices& lm, const Rational& h);

struct SystemInfo {
    Domain domain = Domain::unit_square;
    BoundaryCondition bc = BoundaryCondition::neumann;
    Family family = Family::tensor;
    int order = 1;
    int n = 1;
};

using SparseMatrix = Eigen::SparseMatrix<double>;

/// Galerkin pencil (L, M) restricted to the free DOFs.
struct GlobalSystem {
    SparseMatrix mass;
    SparseMatrix stiffness;
    /// free index -> global DOF index
    std::vector<int> free_dofs;
    int total_dofs = 0;
    SystemInfo info;

    [[nodiscard]] int size() const { return static_cast<int>(free_dofs.size()); }
};

/// Element-loop accumulation. Dirichlet removes every boundary DOF; Neumann
/// keeps all of them. Throws EmptySystem when nothing is left.
GlobalSystem assemble(const Mesh& mesh, const DofMap& dofmap, const LocalMatrices& lm, BoundaryCondition bc);

/// Mesh, DOF map, reference matrices and assembly in one call.
GlobalSystem build_system(Domain domain, BoundaryCondition bc, Family family, int p, int n);

/// Number of free DOFs build_system would produce, without assembling.
int free_dof_count(Domain domain, BoundaryCondition bc, Family family, int p, int n);

/// Coordinate format: "row col value" per stored entry, 0-based, 17 significant digits.
void write_coordinate(std::ostream& os, const SparseMatrix& m);

}  // namespace srdp
