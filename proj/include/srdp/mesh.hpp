#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "srdp/basis2d.hpp"

namespace srdp {

enum class Domain { unit_square, l_shape };

std::string to_string(Domain d);
/// Accepts "square"/"unit_square" and "lshape"/"l_shape".
Domain parse_domain(std::string_view name);

enum class Axis { horizontal, vertical };

/// Vertex position in units of h.
struct GridPoint {
    int ix = 0;
    int iy = 0;

    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

/// Edges run left->right (horizontal) or bottom->top (vertical): v0 < v1 in
/// that direction.
struct MeshEdge {
    int v0 = 0;
    int v1 = 0;
    Axis axis = Axis::horizontal;
    bool boundary = false;
};

/// Axis-aligned square cell; corner and side ids follow DofKind.
struct MeshElement {
    GridPoint origin;
    std::array<int, 4> vertices{};
    std::array<int, 4> edges{};
};

struct Mesh {
    Domain domain = Domain::unit_square;
    int n = 1;  // h = 1/n
    std::vector<GridPoint> vertices;
    std::vector<bool> vertex_boundary;
    std::vector<MeshEdge> edges;
    std::vector<MeshElement> elements;

    [[nodiscard]] Rational h() const { return Rational(1, n); }
    [[nodiscard]] double x(int vertex) const;
    [[nodiscard]] double y(int vertex) const;
};

/// Uniform mesh of [0,1]^2 (n^2 cells) or of the L-shape [0,2]^2 \ (1,2]^2
/// (3n^2 cells). Throws Error if n < 1.
Mesh build_mesh(Domain domain, int n);

/// Plain-text entity listing (vertices, edges, elements with boundary flags).
void write_mesh(std::ostream& os, const Mesh& mesh);

enum class BoundaryCondition { dirichlet, neumann };

std::string to_string(BoundaryCondition bc);
BoundaryCondition parse_boundary_condition(std::string_view name);

/// Global numbering: vertex DOFs first (by vertex id), then edge DOFs grouped
/// by edge and ordered by derivative order k, then interior DOFs grouped by
/// element. Element-local DOFs follow the slot order of the basis array.
struct DofMap {
    Family family = Family::tensor;
    int order = 1;
    int per_edge = 0;
    int per_element_interior = 0;
    int edge_offset = 0;
    int interior_offset = 0;
    int total = 0;

    std::vector<Slot> local_slots;
    std::vector<DofKind> local_kinds;
    /// element -> global DOF index of each local slot
    std::vector<std::vector<int>> element_dofs;
    std::vector<bool> boundary;
};

DofMap build_dof_map(const Mesh& mesh, const BasisArray& basis);
DofMap build_dof_map(const Mesh& mesh, Family family, int p);

/// Closed-form count #vertices + (p-1) #edges + interior * #elements.
int expected_dof_count(const Mesh& mesh, Family family, int p);

/// All DOFs on boundary vertices and boundary edges (every derivative order), sorted.
std::vector<int> boundary_dofs(const DofMap& dm);
/// Complement of boundary_dofs, sorted.
std::vector<int> interior_dofs(const DofMap& dm);

}  // namespace srdp
