#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "srdp/polynomial.hpp"

namespace srdp {

enum class Family { tensor, serendipity };

std::string to_string(Family f);
/// Accepts "tensor" or "serendipity"; throws Error otherwise.
Family parse_family(std::string_view name);

/// 1-based slot (i, j) of a basis array: i indexes the x factor, j the y factor.
struct Slot {
    int i = 0;
    int j = 0;

    friend bool operator==(const Slot&, const Slot&) = default;
};

/// Phi_pq = { phi_i(x) phi_j(y) : phi_i in Phi_p[x], phi_j in Phi_q[y] }.
struct ProductSet {
    int p = 0;
    int q = 0;
    std::vector<Polynomial> entries;  // (p+1) x (q+1), row-major in i

    [[nodiscard]] const Polynomial& at(int i, int j) const;
};

ProductSet product_set(int p, int q);

/// Square (M+1) x (M+1) grid of polynomials. Zero entries are empty slots.
class PolynomialGrid {
public:
    PolynomialGrid() = default;
    explicit PolynomialGrid(int array_order);

    [[nodiscard]] int array_order() const { return order_; }
    [[nodiscard]] int extent() const { return order_ + 1; }

    [[nodiscard]] const Polynomial& at(int i, int j) const;
    Polynomial& at(int i, int j);

    [[nodiscard]] std::size_t nonzero_count() const;
    /// Nonzero slots in grid order (i outer, j inner).
    [[nodiscard]] std::vector<Slot> nonzero_slots() const;

    friend bool operator==(const PolynomialGrid&, const PolynomialGrid&) = default;

private:
    [[nodiscard]] std::size_t index(int i, int j) const;

    int order_ = 0;
    std::vector<Polynomial> cells_;
};

/// Places Phi_pq into an (M+1) x (M+1) grid: the last row/column of the
/// source moves to row/column M+1, everything else keeps its index.
/// Throws InvalidTarget if M < max(p, q).
PolynomialGrid reindex(const ProductSet& source, int array_order);

struct SignedTerm {
    int sign = 1;  // +1 or -1
    ProductSet set;
};

/// Slotwise signed sum of the reindexed terms.
PolynomialGrid array_sum(const std::vector<SignedTerm>& terms, int array_order);

/// Basis of an order-p element on [-1,1]^2, stored as a (p+1) x (p+1) grid.
struct BasisArray {
    Family family = Family::tensor;
    int order = 0;
    PolynomialGrid grid;

    [[nodiscard]] const Polynomial& at(int i, int j) const { return grid.at(i, j); }
    [[nodiscard]] std::size_t nonzero_count() const { return grid.nonzero_count(); }
    [[nodiscard]] std::vector<Slot> slots() const { return grid.nonzero_slots(); }
    /// Nonzero entries in slot order.
    [[nodiscard]] std::vector<Polynomial> functions() const;
};

BasisArray tensor_basis(int p);

/// Highest order with a tabulated serendipity combination.
inline constexpr int max_serendipity_order = 6;

/// Signed Phi_rs combination for the serendipity basis of order p.
/// Throws UnsupportedOrder outside [1, max_serendipity_order].
std::vector<SignedTerm> serendipity_combination(int p);

BasisArray serendipity_basis(int p);

BasisArray make_basis(Family family, int p);

/// Interior DOFs per element: (p-1)^2 for tensor, (p-3)(p-2)/2 for
/// serendipity when p >= 2, zero at p = 1.
int interior_dof_count(Family family, int p);
/// Total DOFs per element: 4 + 4(p-1) + interior.
int local_dimension(Family family, int p);

enum class DofEntity { vertex, edge, interior };

/// Geometric role of a basis slot.
///
/// Corners: 0 = (-1,-1), 1 = (1,-1), 2 = (-1,1), 3 = (1,1).
/// Sides: 0 = bottom (y=-1), 1 = right (x=1), 2 = top (y=1), 3 = left (x=-1).
/// For edges, `k` is the derivative order at the edge midpoint along the
/// edge direction (k = 0 is the midpoint value). For interior slots,
/// (ix, iy) are the derivative orders of the multi-index.
struct DofKind {
    DofEntity entity = DofEntity::interior;
    int corner = -1;
    int side = -1;
    int k = -1;
    int ix = -1;
    int iy = -1;
};

struct SlotDof {
    Slot slot;
    DofKind kind;
};

DofKind classify_slot(int order, Slot s);
/// Classification of every nonzero slot, in slot order.
std::vector<SlotDof> classify_dofs(const BasisArray& b);

/// Monomials spanning the element space: Q_p for tensor,
/// P_p + span{x^p y, x y^p} for serendipity.
std::vector<Exponent> target_monomials(Family family, int p);

struct MonomialSpan {
    Exponent monomial;
    bool representable = false;
    /// Coordinates in the basis (slot order); empty when not representable.
    RationalVector coordinates;
};

struct SpanReport {
    std::vector<MonomialSpan> results;

    [[nodiscard]] bool all_representable() const;
};

SpanReport span_check(const BasisArray& b, const std::vector<Exponent>& monomials);
SpanReport span_check(const BasisArray& b);

/// Rank of the monomial coefficient matrix of the nonzero entries.
std::size_t basis_rank(const BasisArray& b);

/// Coordinates of the reference corners and edge midpoints.
struct Point2 {
    Rational x;
    Rational y;
};
Point2 corner_point(int corner);
Point2 side_midpoint(int side);

}  // namespace srdp
