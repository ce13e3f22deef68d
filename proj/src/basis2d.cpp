#include "srdp/basis2d.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "srdp/basis1d.hpp"
#include "srdp/errors.hpp"

namespace srdp {

std::string to_string(Family f) {
    return f == Family::tensor ? "tensor" : "serendipity";
}

Family parse_family(std::string_view name) {
    if (name == "tensor") return Family::tensor;
    if (name == "serendipity") return Family::serendipity;
    throw Error("unknown element family '" + std::string(name) + "'");
}

const Polynomial& ProductSet::at(int i, int j) const {
    if (i < 1 || i > p + 1 || j < 1 || j > q + 1) {
        throw InvalidIndex("ProductSet::at: slot out of range");
    }
    return entries[static_cast<std::size_t>((i - 1) * (q + 1) + (j - 1))];
}

ProductSet product_set(int p, int q) {
    const Phi1D px = generate_phi(p);
    const Phi1D py = generate_phi(q);
    ProductSet out{p, q, {}};
    out.entries.reserve(static_cast<std::size_t>((p + 1) * (q + 1)));
    for (int i = 1; i <= p + 1; ++i) {
        for (int j = 1; j <= q + 1; ++j) {
            out.entries.push_back(px.phi(i) * py.phi(j).in_y());
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

PolynomialGrid::PolynomialGrid(int array_order)
    : order_(array_order), cells_(static_cast<std::size_t>((array_order + 1) * (array_order + 1))) {}

std::size_t PolynomialGrid::index(int i, int j) const {
    if (i < 1 || i > order_ + 1 || j < 1 || j > order_ + 1) {
        throw InvalidIndex("PolynomialGrid: slot (" + std::to_string(i) + ", " + std::to_string(j) +
                           ") out of range");
    }
    return static_cast<std::size_t>((i - 1) * (order_ + 1) + (j - 1));
}

const Polynomial& PolynomialGrid::at(int i, int j) const { return cells_[index(i, j)]; }
Polynomial& PolynomialGrid::at(int i, int j) { return cells_[index(i, j)]; }

std::size_t PolynomialGrid::nonzero_count() const {
    return static_cast<std::size_t>(
        std::count_if(cells_.begin(), cells_.end(), [](const Polynomial& p) { return !p.is_zero(); }));
}

std::vector<Slot> PolynomialGrid::nonzero_slots() const {
    std::vector<Slot> out;
    for (int i = 1; i <= extent(); ++i) {
        for (int j = 1; j <= extent(); ++j) {
            if (!at(i, j).is_zero()) out.push_back({i, j});
        }
    }
    return out;
}

PolynomialGrid reindex(const ProductSet& source, int array_order) {
    if (array_order < std::max(source.p, source.q)) {
        throw InvalidTarget("reindex: array order " + std::to_string(array_order) + " < max(" +
                            std::to_string(source.p) + ", " + std::to_string(source.q) + ")");
    }
    PolynomialGrid grid(array_order);
    for (int i = 1; i <= source.p + 1; ++i) {
        for (int j = 1; j <= source.q + 1; ++j) {
            const int k = i == source.p + 1 ? array_order + 1 : i;
            const int l = j == source.q + 1 ? array_order + 1 : j;
            grid.at(k, l) = source.at(i, j);
        }
    }
    return grid;
}

PolynomialGrid array_sum(const std::vector<SignedTerm>& terms, int array_order) {
    PolynomialGrid out(array_order);
    for (const auto& term : terms) {
        const PolynomialGrid g = reindex(term.set, array_order);
        for (int i = 1; i <= out.extent(); ++i) {
            for (int j = 1; j <= out.extent(); ++j) {
                if (term.sign >= 0) {
                    out.at(i, j) += g.at(i, j);
                } else {
                    out.at(i, j) -= g.at(i, j);
                }
            }
        }
    }
    return out;
}

std::vector<Polynomial> BasisArray::functions() const {
    std::vector<Polynomial> out;
    for (const auto& s : slots()) out.push_back(at(s.i, s.j));
    return out;
}

BasisArray tensor_basis(int p) {
    if (p < 1) {
        throw UnsupportedOrder("tensor_basis: order must be >= 1");
    }
    return {Family::tensor, p, reindex(product_set(p, p), p)};
}

std::vector<SignedTerm> serendipity_combination(int p) {
    // {sign, r, s} for each Phi_rs term.
    struct Term {
        int sign, r, s;
    };
    static const std::map<int, std::vector<Term>> table = {
        {1, {{1, 1, 1}}},
        {2, {{1, 2, 1}, {1, 1, 2}, {-1, 1, 1}}},
        {3, {{1, 3, 1}, {1, 1, 3}, {-1, 1, 1}}},
        {4, {{1, 4, 1}, {1, 1, 4}, {1, 2, 2}, {-1, 2, 1}, {-1, 1, 2}}},
        {5, {{1, 5, 1}, {1, 1, 5}, {1, 3, 2}, {1, 2, 3}, {-1, 3, 1}, {-1, 1, 3}, {-1, 2, 2}}},
        {6, {{1, 6, 1}, {1, 1, 6}, {1, 4, 2}, {1, 2, 4}, {1, 3, 3}, {-1, 4, 1}, {-1, 1, 4}, {-1, 2, 3}, {-1, 3, 2}}},
    };
    auto it = table.find(p);
    if (it == table.end()) {
        throw UnsupportedOrder("serendipity basis is tabulated for 1 <= p <= " +
                               std::to_string(max_serendipity_order) + ", got p = " + std::to_string(p));
    }
    std::vector<SignedTerm> out;
    for (const auto& t : it->second) out.push_back({t.sign, product_set(t.r, t.s)});
    return out;
}

BasisArray serendipity_basis(int p) {
    return {Family::serendipity, p, array_sum(serendipity_combination(p), p)};
}

BasisArray make_basis(Family family, int p) {
    return family == Family::tensor ? tensor_basis(p) : serendipity_basis(p);
}

int interior_dof_count(Family family, int p) {
    if (p < 2) {
        return 0;
    }
    return family == Family::tensor ? (p - 1) * (p - 1) : (p - 3) * (p - 2) / 2;
}

int local_dimension(Family family, int p) {
    return 4 + 4 * (p - 1) + interior_dof_count(family, p);
}

// ---------------------------------------------------------------------------

DofKind classify_slot(int order, Slot s) {
    const int last = order + 1;
    const bool end_i = s.i == 1 || s.i == last;
    const bool end_j = s.j == 1 || s.j == last;
    DofKind kind;
    if (end_i && end_j) {
        kind.entity = DofEntity::vertex;
        kind.corner = (s.i == last ? 1 : 0) + (s.j == last ? 2 : 0);
    } else if (end_j) {
        kind.entity = DofEntity::edge;
        kind.side = s.j == 1 ? 0 : 2;
        kind.k = s.i - 2;
    } else if (end_i) {
        kind.entity = DofEntity::edge;
        kind.side = s.i == last ? 1 : 3;
        kind.k = s.j - 2;
    } else {
        kind.entity = DofEntity::interior;
        kind.ix = s.i - 2;
        kind.iy = s.j - 2;
    }
    return kind;
}

std::vector<SlotDof> classify_dofs(const BasisArray& b) {
    std::vector<SlotDof> out;
    for (const auto& s : b.slots()) out.push_back({s, classify_slot(b.order, s)});
    return out;
}

std::vector<Exponent> target_monomials(Family family, int p) {
    std::vector<Exponent> out;
    if (family == Family::tensor) {
        for (int i = 0; i <= p; ++i) {
            for (int j = 0; j <= p; ++j) out.push_back({i, j});
        }
        return out;
    }
    std::set<Exponent> seen;
    for (int i = 0; i <= p; ++i) {
        for (int j = 0; i + j <= p; ++j) seen.insert({i, j});
    }
    seen.insert({p, 1});
    seen.insert({1, p});
    return {seen.begin(), seen.end()};
}

bool SpanReport::all_representable() const {
    return std::all_of(results.begin(), results.end(), [](const MonomialSpan& m) { return m.representable; });
}

namespace {

/// Rows: every monomial appearing in the basis or in `extra`; columns: basis functions.
RationalMatrix coefficient_matrix(const std::vector<Polynomial>& fns, const std::vector<Exponent>& extra,
                                  std::vector<Exponent>& rows) {
    std::set<Exponent> keys(extra.begin(), extra.end());
    for (const auto& f : fns) {
        for (const auto& [e, c] : f.terms()) keys.insert(e);
    }
    rows.assign(keys.begin(), keys.end());
    RationalMatrix a(rows.size(), fns.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < fns.size(); ++c) a(r, c) = fns[c].coefficient(rows[r].x, rows[r].y);
    }
    return a;
}

}  // namespace

SpanReport span_check(const BasisArray& b, const std::vector<Exponent>& monomials) {
    const auto fns = b.functions();
    std::vector<Exponent> rows;
    const RationalMatrix a = coefficient_matrix(fns, monomials, rows);

    std::vector<RationalVector> rhs;
    for (const auto& m : monomials) {
        RationalVector v(rows.size(), Rational(0));
        v[static_cast<std::size_t>(std::find(rows.begin(), rows.end(), m) - rows.begin())] = 1;
        rhs.push_back(std::move(v));
    }
    const auto sols = solve_consistent(a, rhs);

    SpanReport report;
    for (std::size_t k = 0; k < monomials.size(); ++k) {
        MonomialSpan ms{monomials[k], sols[k].has_value(), {}};
        if (sols[k]) ms.coordinates = *sols[k];
        report.results.push_back(std::move(ms));
    }
    return report;
}

SpanReport span_check(const BasisArray& b) {
    return span_check(b, target_monomials(b.family, b.order));
}

std::size_t basis_rank(const BasisArray& b) {
    std::vector<Exponent> rows;
    return rational_rank(coefficient_matrix(b.functions(), {}, rows));
}

Point2 corner_point(int corner) {
    return {Rational((corner & 1) != 0 ? 1 : -1), Rational((corner & 2) != 0 ? 1 : -1)};
}

Point2 side_midpoint(int side) {
    switch (side) {
        case 0: return {0, -1};
        case 1: return {1, 0};
        case 2: return {0, 1};
        case 3: return {-1, 0};
        default: throw InvalidIndex("side_midpoint: side must be in [0, 3]");
    }
}

}  // namespace srdp
