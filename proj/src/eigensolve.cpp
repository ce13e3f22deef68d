#include "srdp/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "srdp/errors.hpp"

namespace srdp {

EigenResult solve_generalized(const Eigen::MatrixXd& stiffness, const Eigen::MatrixXd& mass, bool keep_vectors) {
    if (stiffness.rows() != stiffness.cols() || mass.rows() != mass.cols() || stiffness.rows() != mass.rows()) {
        throw Error("solve_generalized: matrices must be square and of equal size");
    }
    EigenResult out;
    out.dofs = static_cast<int>(mass.rows());
    if (mass.rows() == 0) {
        return out;
    }

    const Eigen::LLT<Eigen::MatrixXd> llt(mass);
    if (llt.info() != Eigen::Success) {
        throw MassNotPD("mass matrix is not positive definite (Cholesky failed)");
    }
    const auto c = llt.matrixL();
    // A = C^{-1} L C^{-T}
    Eigen::MatrixXd x = c.solve(stiffness);
    Eigen::MatrixXd a = c.solve(x.transpose());
    a = 0.5 * (a + a.transpose()).eval();

    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        a, keep_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw Error("solve_generalized: symmetric eigensolver did not converge");
    }
    const Eigen::VectorXd& vals = es.eigenvalues();  // already ascending
    out.eigenvalues.assign(vals.data(), vals.data() + vals.size());
    if (keep_vectors) {
        out.eigenvectors = llt.matrixU().solve(es.eigenvectors());
    }
    return out;
}

EigenResult solve_generalized(const GlobalSystem& sys, bool keep_vectors) {
    EigenResult out = solve_generalized(Eigen::MatrixXd(sys.stiffness), Eigen::MatrixXd(sys.mass), keep_vectors);
    out.info = sys.info;
    return out;
}

std::vector<double> select_near(const EigenResult& result, double target, int multiplicity) {
    if (multiplicity < 1) {
        throw Error("select_near: multiplicity must be >= 1");
    }
    const auto& ev = result.eigenvalues;
    if (ev.size() < static_cast<std::size_t>(multiplicity)) {
        throw InsufficientSpectrum("select_near: requested " + std::to_string(multiplicity) +
                                   " eigenvalues, spectrum has " + std::to_string(ev.size()));
    }
    std::vector<std::size_t> idx(ev.size());
    std::iota(idx.begin(), idx.end(), 0);
    // ev is ascending, so a stable sort on distance breaks ties toward the smaller value.
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(ev[a] - target) < std::abs(ev[b] - target);
    });
    std::vector<double> out;
    for (int k = 0; k < multiplicity; ++k) out.push_back(ev[idx[static_cast<std::size_t>(k)]]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SpectrumErrorRow> spectrum_error_profile(const EigenResult& result, const std::vector<double>& exact) {
    if (exact.size() > result.eigenvalues.size()) {
        throw InsufficientSpectrum("spectrum_error_profile: " + std::to_string(exact.size()) +
                                   " exact values but only " + std::to_string(result.eigenvalues.size()) +
                                   " computed");
    }
    std::vector<SpectrumErrorRow> rows;
    for (std::size_t k = 0; k < exact.size(); ++k) {
        const double lam = result.eigenvalues[k];
        rows.push_back({static_cast<int>(k), lam, exact[k], lam - exact[k]});
    }
    return rows;
}

}  // namespace srdp
