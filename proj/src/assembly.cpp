#include "srdp/assembly.hpp"

#include <iomanip>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <utility>

#include "srdp/errors.hpp"

namespace srdp {

namespace {

/// Dense coefficients of each polynomial over the monomials x^i y^j, 0 <= i, j <= deg.
RationalMatrix coefficient_rows(const std::vector<Polynomial>& fns, int deg) {
    const auto width = static_cast<std::size_t>((deg + 1) * (deg + 1));
    RationalMatrix c(fns.size(), width);
    for (std::size_t a = 0; a < fns.size(); ++a) {
        for (const auto& [e, coef] : fns[a].terms()) {
            if (e.x > deg || e.y > deg) {
                throw Error("local_matrices: basis polynomial exceeds the per-variable degree bound");
            }
            c(a, static_cast<std::size_t>(e.x * (deg + 1) + e.y)) = coef;
        }
    }
    return c;
}

/// G = C W C^T with W the box-integral Gram matrix of the monomials.
RationalMatrix gram(const RationalMatrix& c, int deg) {
    const std::size_t n = c.rows();
    const std::size_t m = c.cols();
    const auto stride = static_cast<std::size_t>(deg + 1);

    RationalMatrix w(m, m);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t s = 0; s < m; ++s) {
            w(r, s) = monomial_box_integral(static_cast<int>(r / stride + s / stride),
                                            static_cast<int>(r % stride + s % stride));
        }
    }
    RationalMatrix cw(n, m);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t r = 0; r < m; ++r) {
            if (sgn(c(a, r)) == 0) continue;
            for (std::size_t s = 0; s < m; ++s) {
                if (sgn(w(r, s)) != 0) cw(a, s) += c(a, r) * w(r, s);
            }
        }
    }
    RationalMatrix g(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            Rational sum = 0;
            for (std::size_t s = 0; s < m; ++s) {
                if (sgn(c(b, s)) != 0) sum += cw(a, s) * c(b, s);
            }
            g(a, b) = sum;
            g(b, a) = sum;
        }
    }
    return g;
}

}  // namespace

LocalMatrices local_matrices(const BasisArray& basis) {
    const auto fns = basis.functions();
    std::vector<Polynomial> dx;
    std::vector<Polynomial> dy;
    for (const auto& f : fns) {
        dx.push_back(f.differentiate(Variable::x));
        dy.push_back(f.differentiate(Variable::y));
    }
    const int deg = basis.order;
    LocalMatrices lm{basis.family, basis.order, gram(coefficient_rows(fns, deg), deg), {}};

    const RationalMatrix gx = gram(coefficient_rows(dx, deg), deg);
    const RationalMatrix gy = gram(coefficient_rows(dy, deg), deg);
    lm.stiffness = RationalMatrix(fns.size(), fns.size());
    for (std::size_t a = 0; a < fns.size(); ++a) {
        for (std::size_t b = 0; b < fns.size(); ++b) lm.stiffness(a, b) = gx(a, b) + gy(a, b);
    }
    return lm;
}

const LocalMatrices& reference_matrices(Family family, int p) {
    static std::mutex mutex;
    static std::map<std::pair<Family, int>, std::unique_ptr<LocalMatrices>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{family, p}];
    if (!slot) {
        slot = std::make_unique<LocalMatrices>(local_matrices(make_basis(family, p)));
    }
    return *slot;
}

ElementMatrices scale_to_element(const LocalMatrices& lm, const Rational& h) {
    if (sgn(h) <= 0) {
        throw Error("scale_to_element: h must be positive");
    }
    const Rational jac = (h / 2) * (h / 2);
    const auto n = static_cast<Eigen::Index>(lm.mass.rows());
    ElementMatrices out{Eigen::MatrixXd(n, n), Eigen::MatrixXd(n, n)};
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = 0; b < n; ++b) {
            const auto ua = static_cast<std::size_t>(a);
            const auto ub = static_cast<std::size_t>(b);
            out.mass(a, b) = to_double(lm.mass(ua, ub) * jac);
            out.stiffness(a, b) = to_double(lm.stiffness(ua, ub));
        }
    }
    return out;
}

GlobalSystem assemble(const Mesh& mesh, const DofMap& dofmap, const LocalMatrices& lm, BoundaryCondition bc) {
    if (lm.family != dofmap.family || lm.order != dofmap.order) {
        throw Error("assemble: local matrices and DOF map disagree on family/order");
    }
    GlobalSystem sys;
    sys.total_dofs = dofmap.total;
    sys.info = {mesh.domain, bc, dofmap.family, dofmap.order, mesh.n};

    std::vector<int> to_free(static_cast<std::size_t>(dofmap.total), -1);
    for (int d = 0; d < dofmap.total; ++d) {
        if (bc == BoundaryCondition::neumann || !dofmap.boundary[static_cast<std::size_t>(d)]) {
            to_free[static_cast<std::size_t>(d)] = static_cast<int>(sys.free_dofs.size());
            sys.free_dofs.push_back(d);
        }
    }
    if (sys.free_dofs.empty()) {
        throw EmptySystem("no free degrees of freedom remain after Dirichlet elimination (" + to_string(mesh.domain) +
                          ", N = " + std::to_string(mesh.n) + ", " + to_string(dofmap.family) +
                          ", p = " + std::to_string(dofmap.order) + ")");
    }

    const ElementMatrices em = scale_to_element(lm, mesh.h());
    const auto nloc = static_cast<Eigen::Index>(dofmap.local_slots.size());
    std::vector<Eigen::Triplet<double>> mass_t;
    std::vector<Eigen::Triplet<double>> stiff_t;
    mass_t.reserve(mesh.elements.size() * static_cast<std::size_t>(nloc * nloc));
    stiff_t.reserve(mass_t.capacity());
    for (const auto& dofs : dofmap.element_dofs) {
        for (Eigen::Index a = 0; a < nloc; ++a) {
            const int ra = to_free[static_cast<std::size_t>(dofs[static_cast<std::size_t>(a)])];
            if (ra < 0) continue;
            for (Eigen::Index b = 0; b < nloc; ++b) {
                const int cb = to_free[static_cast<std::size_t>(dofs[static_cast<std::size_t>(b)])];
                if (cb < 0) continue;
                mass_t.emplace_back(ra, cb, em.mass(a, b));
                stiff_t.emplace_back(ra, cb, em.stiffness(a, b));
            }
        }
    }
    const auto n = static_cast<Eigen::Index>(sys.free_dofs.size());
    sys.mass.resize(n, n);
    sys.stiffness.resize(n, n);
    sys.mass.setFromTriplets(mass_t.begin(), mass_t.end());
    sys.stiffness.setFromTriplets(stiff_t.begin(), stiff_t.end());
    return sys;
}

GlobalSystem build_system(Domain domain, BoundaryCondition bc, Family family, int p, int n) {
    const Mesh mesh = build_mesh(domain, n);
    const LocalMatrices& lm = reference_matrices(family, p);
    const DofMap dm = build_dof_map(mesh, make_basis(family, p));
    return assemble(mesh, dm, lm, bc);
}

int free_dof_count(Domain domain, BoundaryCondition bc, Family family, int p, int n) {
    const Mesh mesh = build_mesh(domain, n);
    const int total = expected_dof_count(mesh, family, p);
    if (bc == BoundaryCondition::neumann) {
        return total;
    }
    int boundary_vertices = 0;
    for (bool b : mesh.vertex_boundary) boundary_vertices += b ? 1 : 0;
    int boundary_edges = 0;
    for (const auto& e : mesh.edges) boundary_edges += e.boundary ? 1 : 0;
    return total - boundary_vertices - (p - 1) * boundary_edges;
}

void write_coordinate(std::ostream& os, const SparseMatrix& m) {
    const auto old_precision = os.precision(17);
    for (Eigen::Index col = 0; col < m.outerSize(); ++col) {
        for (SparseMatrix::InnerIterator it(m, col); it; ++it) {
            os << it.row() << ' ' << it.col() << ' ' << it.value() << '\n';
        }
    }
    os.precision(old_precision);
}

}  // namespace srdp
