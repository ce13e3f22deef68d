#pragma once

#include <vector>

#include <Eigen/Dense>

#include "srdp/assembly.hpp"

namespace srdp {

struct EigenResult {
    /// Ascending.
    std::vector<double> eigenvalues;
    /// Columns are M-orthonormal eigenvectors; empty unless requested.
    Eigen::MatrixXd eigenvectors;
    SystemInfo info;
    int dofs = 0;
};

/// Dense symmetric-definite solve of L v = lambda M v.
///
/// M = C C^T is Cholesky-factored (MassNotPD if that fails), the congruent
/// standard problem C^{-1} L C^{-T} is solved by a symmetric eigensolver and
/// the spectrum is sorted ascending.
EigenResult solve_generalized(const GlobalSystem& sys, bool keep_vectors = false);
EigenResult solve_generalized(const Eigen::MatrixXd& stiffness, const Eigen::MatrixXd& mass,
                              bool keep_vectors = false);

/// The `multiplicity` eigenvalues closest to `target`, ties resolved toward the
/// smaller eigenvalue; returned in ascending order.
std::vector<double> select_near(const EigenResult& result, double target, int multiplicity = 1);

struct SpectrumErrorRow {
    int index = 0;
    double computed = 0.0;
    double exact = 0.0;
    double error = 0.0;  // computed - exact
};

/// Index-wise pairing of the sorted computed spectrum with a sorted exact one.
std::vector<SpectrumErrorRow> spectrum_error_profile(const EigenResult& result, const std::vector<double>& exact);

}  // namespace srdp
