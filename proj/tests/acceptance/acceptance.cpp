// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Cholesky>

#include "reference_tables.hpp"
#include "srdp/assembly.hpp"
#include "srdp/basis1d.hpp"
#include "srdp/basis2d.hpp"
#include "srdp/eigensolve.hpp"
#include "srdp/errors.hpp"
#include "srdp/mesh.hpp"
#include "srdp/studies.hpp"

using namespace srdp;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi2 = 2 * pi * pi;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << "[fail] " << what << "; ";
        }
    }
    void note(const std::string& what) { detail << what << "; "; }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

// 1: Phi_p for p = 1..5 and serendipity arrays for p = 1..4 against the tables.
void basis_goldens(Outcome& o) {
    const auto t0 = Clock::now();
    for (int p = 1; p <= 5; ++p) {
        const auto phi = generate_phi(p);
        const auto want = reference::phi_table(p);
        o.require(phi.functions == want, "Phi_" + std::to_string(p) + " differs from table");
    }
    for (int p = 1; p <= 4; ++p) {
        const auto b = serendipity_basis(p);
        const auto want = reference::serendipity_table(p);
        std::size_t seen = 0;
        for (int i = 1; i <= p + 1; ++i) {
            for (int j = 1; j <= p + 1; ++j) {
                const auto it = want.find({i, j});
                const Polynomial expect = it == want.end() ? Polynomial() : it->second;
                if (it != want.end()) ++seen;
                o.require(b.at(i, j) == expect,
                          "S_" + std::to_string(p) + " slot (" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
        o.require(seen == want.size(), "table slots outside the array at p=" + std::to_string(p));
    }
    const double t = seconds_since(t0);
    o.require(t < 1.0, "runtime " + fmt(t) + " s >= 1 s");
    o.note("Phi_1..5 and S_1..4 compared, " + fmt(t) + " s");
}

// 2: local dimensions and global DOF totals.
void dimension_counts(Outcome& o) {
    for (int p = 1; p <= 6; ++p) {
        const int formula2 = p * p + 3 * p + 6;  // twice the stated count
        const int got = static_cast<int>(serendipity_basis(p).nonzero_count());
        o.require(2 * got == formula2, "serendipity p=" + std::to_string(p) + ": " + std::to_string(got) +
                                           " nonzero entries, (p^2+3p+6)/2 = " + std::to_string(formula2 / 2.0));
        o.require(static_cast<int>(tensor_basis(p).nonzero_count()) == (p + 1) * (p + 1),
                  "tensor p=" + std::to_string(p) + " nonzero count");
    }
    int checked = 0;
    for (Domain d : {Domain::unit_square, Domain::l_shape}) {
        for (int n = 1; n <= 5; ++n) {
            const int verts = d == Domain::unit_square ? (n + 1) * (n + 1) : 3 * n * n + 4 * n + 1;
            const int edges = d == Domain::unit_square ? 2 * n * (n + 1) : 6 * n * n + 4 * n;
            const int elems = d == Domain::unit_square ? n * n : 3 * n * n;
            const auto mesh = build_mesh(d, n);
            for (Family f : {Family::tensor, Family::serendipity}) {
                for (int p = 1; p <= 6; ++p) {
                    // interior counts: (p-1)^2, and (p-3)(p-2)/2 for p >= 2 (none at p = 1)
                    const int interior = f == Family::tensor ? (p - 1) * (p - 1) : (p >= 2 ? (p - 3) * (p - 2) / 2 : 0);
                    const int want = verts + (p - 1) * edges + interior * elems;
                    const int got = build_dof_map(mesh, f, p).total;
                    o.require(got == want, to_string(d) + " N=" + std::to_string(n) + " " + to_string(f) +
                                               " p=" + std::to_string(p) + ": " + std::to_string(got) +
                                               " != " + std::to_string(want));
                    ++checked;
                }
            }
        }
    }
    o.note(std::to_string(checked) + " DofMap totals checked");
}

// 3: P_p + span{x^p y, x y^p} inside every serendipity span; x^2 y^2 outside S_2.
void span_property(Outcome& o) {
    const auto t0 = Clock::now();
    for (int p = 1; p <= max_serendipity_order; ++p) {
        std::vector<Exponent> mons;
        for (int a = 0; a <= p; ++a)
            for (int b = 0; a + b <= p; ++b) mons.push_back({a, b});
        mons.push_back({p, 1});
        mons.push_back({1, p});
        const auto r = span_check(serendipity_basis(p), mons);
        o.require(r.all_representable(), "span fails at p=" + std::to_string(p));
    }
    const auto r = span_check(serendipity_basis(2), {{2, 2}});
    o.require(!r.results.at(0).representable, "x^2 y^2 accepted at p=2");
    const double t = seconds_since(t0);
    o.require(t < 5.0, "runtime " + fmt(t) + " s >= 5 s");
    o.note("p=1..6 spans verified, " + fmt(t) + " s");
}

// 4: square convergence at h = 1/4.
void square_convergence(Outcome& o) {
    const auto t0 = Clock::now();
    const auto d = solve_point(Domain::unit_square, BoundaryCondition::dirichlet, Family::serendipity, 3, 4, two_pi2);
    o.require(d.error <= 1e-5, "dirichlet serendipity p=3 N=4 error " + fmt(d.error) + " > 1e-5");
    o.note("dirichlet S p=3 N=4 error " + fmt(d.error));

    StudySpec s;
    s.domain = Domain::unit_square;
    s.bc = BoundaryCondition::neumann;
    s.target = two_pi2;
    s.sweep = SweepKind::p;
    s.fixed = 4;
    const auto rows = run_study(s).rows;
    std::vector<StudyRow> tensor, serendipity;
    for (const auto& r : rows) (r.family == Family::tensor ? tensor : serendipity).push_back(r);

    auto first_below = [](const std::vector<StudyRow>& rs) -> const StudyRow* {
        for (const auto& r : rs)
            if (r.error <= 1e-6) return &r;
        return nullptr;
    };
    const StudyRow* t = first_below(tensor);
    const StudyRow* sr = first_below(serendipity);
    o.require(t != nullptr, "no tensor p <= 6 reaches 1e-6");
    o.require(sr != nullptr, "no serendipity p <= 6 reaches 1e-6");
    if (t && sr) {
        o.note("neumann first <= 1e-6: tensor p=" + std::to_string(t->p) + " (" + std::to_string(t->ndofs) +
               " dofs, " + fmt(t->error) + "), serendipity p=" + std::to_string(sr->p) + " (" +
               std::to_string(sr->ndofs) + " dofs, " + fmt(sr->error) + ")");
    }
    // any qualifying pair: serendipity error <= tensor error, both <= 1e-6, dofs <= 60%
    bool saving = false;
    double best_ratio = INFINITY;
    for (const auto& a : serendipity) {
        for (const auto& b : tensor) {
            if (a.error > 1e-6 || b.error > 1e-6 || a.error > b.error) continue;
            const double ratio = static_cast<double>(a.ndofs) / b.ndofs;
            best_ratio = std::min(best_ratio, ratio);
            saving = saving || ratio <= 0.6;
        }
    }
    o.require(saving, "no serendipity run at equal-or-better error uses <= 60% of tensor dofs (best ratio " +
                          fmt(best_ratio) + ")");
    const double el = seconds_since(t0);
    o.require(el < 60.0, "runtime " + fmt(el) + " s >= 60 s");
}

// 5: min-max upper bound on the square.
void upper_bound(Outcome& o) {
    int systems = 0;
    double worst = INFINITY;
    for (auto bc : {BoundaryCondition::dirichlet, BoundaryCondition::neumann}) {
        for (auto f : {Family::tensor, Family::serendipity}) {
            for (int p = 1; p <= 3; ++p) {
                for (int n = 1; n <= 4; ++n) {
                    GlobalSystem sys;
                    try {
                        sys = build_system(Domain::unit_square, bc, f, p, n);
                    } catch (const EmptySystem&) {
                        continue;
                    }
                    const auto r = solve_generalized(sys);
                    const auto exact = square_exact_spectrum(bc, static_cast<int>(r.eigenvalues.size()));
                    for (std::size_t k = 0; k < exact.size(); ++k) {
                        const double gap = r.eigenvalues[k] - exact[k];
                        worst = std::min(worst, gap);
                        o.require(gap >= -1e-9, to_string(bc) + " " + to_string(f) + " p=" + std::to_string(p) +
                                                    " N=" + std::to_string(n) + " index " + std::to_string(k) +
                                                    " below exact by " + fmt(-gap));
                    }
                    ++systems;
                }
            }
        }
    }
    o.note(std::to_string(systems) + " systems, min(lambda_h - lambda) = " + fmt(worst));
}

// 6: bilinear h-convergence order, with the separable discrete eigenvalue as oracle.
void bilinear_order(Outcome& o) {
    std::vector<double> err;
    for (int n = 2; n <= 5; ++n) {
        const double h = 1.0 / n;
        const double c = std::cos(pi * h);
        const double oracle = 2 * (6 / (h * h)) * (1 - c) / (2 + c);
        const auto row = solve_point(Domain::unit_square, BoundaryCondition::dirichlet, Family::tensor, 1, n, two_pi2);
        o.require(std::abs(row.lambda_h - oracle) <= 1e-10 * oracle,
                  "N=" + std::to_string(n) + " lambda_h " + fmt(row.lambda_h) + " vs closed form " + fmt(oracle));
        err.push_back(row.error);
    }
    std::ostringstream slopes;
    for (std::size_t k = 1; k < err.size(); ++k) {
        const double n0 = static_cast<double>(k + 1), n1 = static_cast<double>(k + 2);
        const double slope = std::log(err[k - 1] / err[k]) / std::log(n1 / n0);
        slopes << (k > 1 ? ", " : "") << fmt(slope);
        o.require(slope >= 1.8 && slope <= 2.2, "slope " + fmt(slope) + " outside [1.8, 2.2]");
    }
    o.note("slopes N=2..5: " + slopes.str());
}

// 7: L-shape first nonzero Neumann eigenvalue.
void lshape_benchmark(Outcome& o) {
    std::vector<double> err;
    for (int n = 2; n <= 4; ++n) {
        err.push_back(
            solve_point(Domain::l_shape, BoundaryCondition::neumann, Family::serendipity, 4, n, lshape_neumann_1).error);
    }
    o.require(err.back() <= 1e-3, "N=4 error " + fmt(err.back()) + " > 1e-3");
    o.require(err[0] > err[1] && err[1] > err[2], "errors not strictly decreasing");
    o.note("errors N=2,3,4: " + fmt(err[0]) + ", " + fmt(err[1]) + ", " + fmt(err[2]));
}

// 8: structural invariants.
void structural(Outcome& o) {
    const auto t0 = Clock::now();
    double kernel = 0, trace = 0, perm = 0;
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> uni(-1, 1);
    for (Domain d : {Domain::unit_square, Domain::l_shape}) {
        for (Family f : {Family::tensor, Family::serendipity}) {
            for (int p = 1; p <= 6; ++p) {
                const int n = 2;
                const auto mesh = build_mesh(d, n);
                const auto b = make_basis(f, p);
                const auto dm = build_dof_map(mesh, b);
                const auto sys = build_system(d, BoundaryCondition::neumann, f, p, n);
                const Eigen::MatrixXd l(sys.stiffness);
                const Eigen::MatrixXd m(sys.mass);

                // constant function in the kernel of L
                const auto coords = span_check(b, {{0, 0}}).results.at(0).coordinates;
                Eigen::VectorXd c = Eigen::VectorXd::Zero(dm.total);
                for (const auto& dofs : dm.element_dofs)
                    for (std::size_t a = 0; a < dofs.size(); ++a) c(dofs[a]) = to_double(coords[a]);
                kernel = std::max(kernel, (l * c).norm() / (l.norm() * c.norm()));

                // mass positive definite
                o.require(Eigen::LLT<Eigen::MatrixXd>(m).info() == Eigen::Success,
                          "mass not PD: " + to_string(d) + " " + to_string(f) + " p=" + std::to_string(p));

                // trace continuity at 7 points per interior edge
                const auto fns = b.functions();
                std::vector<double> u(static_cast<std::size_t>(dm.total));
                for (auto& v : u) v = uni(rng);
                const double h = 1.0 / n;
                auto eval = [&](std::size_t el, double x, double y) {
                    const auto& org = mesh.elements[el].origin;
                    const double xi = 2 * (x - org.ix * h) / h - 1, eta = 2 * (y - org.iy * h) / h - 1;
                    double s = 0;
                    for (std::size_t a = 0; a < fns.size(); ++a)
                        s += u[static_cast<std::size_t>(dm.element_dofs[el][a])] * fns[a].evaluate(xi, eta);
                    return s;
                };
                for (std::size_t e1 = 0; e1 < mesh.elements.size(); ++e1) {
                    for (std::size_t e2 = 0; e2 < mesh.elements.size(); ++e2) {
                        const auto& a = mesh.elements[e1].origin;
                        const auto& c2 = mesh.elements[e2].origin;
                        const bool right = c2.ix == a.ix + 1 && c2.iy == a.iy;
                        const bool above = c2.iy == a.iy + 1 && c2.ix == a.ix;
                        if (!right && !above) continue;
                        for (int s = 0; s < 7; ++s) {
                            const double t = (s + 0.5) / 7;
                            const double x = right ? (a.ix + 1) * h : (a.ix + t) * h;
                            const double y = right ? (a.iy + t) * h : (a.iy + 1) * h;
                            trace = std::max(trace, std::abs(eval(e1, x, y) - eval(e2, x, y)));
                        }
                    }
                }

                // permutation invariance of the spectrum
                if (p <= 4) {
                    std::vector<int> idx(static_cast<std::size_t>(sys.size()));
                    std::iota(idx.begin(), idx.end(), 0);
                    std::shuffle(idx.begin(), idx.end(), rng);
                    Eigen::PermutationMatrix<Eigen::Dynamic> pm(sys.size());
                    for (int i = 0; i < sys.size(); ++i) pm.indices()[i] = idx[static_cast<std::size_t>(i)];
                    const auto a = solve_generalized(l, m).eigenvalues;
                    const auto bb =
                        solve_generalized(Eigen::MatrixXd(pm * l * pm.transpose()), Eigen::MatrixXd(pm * m * pm.transpose()))
                            .eigenvalues;
                    const double scale = std::max(1.0, std::abs(a.back()));
                    for (std::size_t k = 0; k < a.size(); ++k) perm = std::max(perm, std::abs(a[k] - bb[k]) / scale);
                }
            }
        }
    }
    o.require(kernel <= 1e-12, "kernel residual " + fmt(kernel));
    o.require(trace <= 1e-12, "trace jump " + fmt(trace));
    o.require(perm <= 1e-10, "permutation drift " + fmt(perm));
    const double t = seconds_since(t0);
    o.require(t < 30.0, "runtime " + fmt(t) + " s >= 30 s");
    o.note("kernel " + fmt(kernel) + ", trace jump " + fmt(trace) + ", permutation drift " + fmt(perm) + ", " + fmt(t) +
           " s");
}

// 9: the single interior node of the 2x2 bilinear mesh.
void micro_oracle(Outcome& o) {
    // reference entries from the 1D factors: mass (2/3)^2, stiffness 2 (1/2)(2/3)
    const Rational m_ref = Rational(2, 3) * Rational(2, 3);
    const Rational k_ref = 2 * Rational(1, 2) * Rational(2, 3);
    const Rational jac = Rational(1, 4) * Rational(1, 4);
    const Rational big_l = 4 * k_ref;
    const Rational big_m = 4 * m_ref * jac;
    o.require(big_l == Rational(8, 3) && big_m == Rational(1, 9), "hand assembly disagrees with (8/3, 1/9)");

    const auto sys = build_system(Domain::unit_square, BoundaryCondition::dirichlet, Family::tensor, 1, 2);
    o.require(sys.size() == 1, "system is " + std::to_string(sys.size()) + "x" + std::to_string(sys.size()));
    if (sys.size() == 1) {
        const double l = sys.stiffness.coeff(0, 0), m = sys.mass.coeff(0, 0);
        o.require(std::abs(l - to_double(big_l)) <= 1e-12, "L = " + fmt(l));
        o.require(std::abs(m - to_double(big_m)) <= 1e-12, "M = " + fmt(m));
        const double lam = solve_generalized(sys).eigenvalues.at(0);
        o.require(std::abs(lam - 24.0) <= 1e-12, "lambda_h = " + fmt(lam));
        o.note("L = " + fmt(l) + ", M = " + fmt(m) + ", lambda_h = " + fmt(lam));
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
        {"basis golden tables", basis_goldens},
        {"dimension counts", dimension_counts},
        {"serendipity span property", span_property},
        {"square exact-spectrum convergence", square_convergence},
        {"upper-bound property", upper_bound},
        {"bilinear h-refinement order", bilinear_order},
        {"L-shape benchmark", lshape_benchmark},
        {"structural invariants", structural},
        {"hand-assembled micro-oracle", micro_oracle},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            criteria[k].second(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "[exception] " << e.what();
        }
        failed += o.pass ? 0 : 1;
        std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                    o.detail.str().c_str());
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
