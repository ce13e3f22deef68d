#include "srdp/mesh.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>

#include "srdp/errors.hpp"

namespace srdp {

std::string to_string(Domain d) {
    return d == Domain::unit_square ? "square" : "lshape";
}

Domain parse_domain(std::string_view name) {
    if (name == "square" || name == "unit_square") return Domain::unit_square;
    if (name == "lshape" || name == "l_shape") return Domain::l_shape;
    throw Error("unknown domain '" + std::string(name) + "'");
}

std::string to_string(BoundaryCondition bc) {
    return bc == BoundaryCondition::dirichlet ? "dirichlet" : "neumann";
}

BoundaryCondition parse_boundary_condition(std::string_view name) {
    if (name == "dirichlet") return BoundaryCondition::dirichlet;
    if (name == "neumann") return BoundaryCondition::neumann;
    throw Error("unknown boundary condition '" + std::string(name) + "'");
}

double Mesh::x(int vertex) const {
    return static_cast<double>(vertices[static_cast<std::size_t>(vertex)].ix) / n;
}

double Mesh::y(int vertex) const {
    return static_cast<double>(vertices[static_cast<std::size_t>(vertex)].iy) / n;
}

namespace {

std::vector<GridPoint> cell_origins(Domain domain, int n) {
    std::vector<GridPoint> cells;
    const int extent = domain == Domain::unit_square ? n : 2 * n;
    for (int cy = 0; cy < extent; ++cy) {
        for (int cx = 0; cx < extent; ++cx) {
            if (domain == Domain::l_shape && cx >= n && cy >= n) {
                continue;
            }
            cells.push_back({cx, cy});
        }
    }
    return cells;
}

/// Row-major ordering (iy outer, ix inner).
bool row_major_less(const GridPoint& a, const GridPoint& b) {
    return a.iy != b.iy ? a.iy < b.iy : a.ix < b.ix;
}

}  // namespace

Mesh build_mesh(Domain domain, int n) {
    if (n < 1) {
        throw Error("build_mesh: N must be >= 1, got " + std::to_string(n));
    }
    Mesh mesh;
    mesh.domain = domain;
    mesh.n = n;

    const auto cells = cell_origins(domain, n);

    std::vector<GridPoint> points;
    for (const auto& c : cells) {
        for (int dy = 0; dy <= 1; ++dy) {
            for (int dx = 0; dx <= 1; ++dx) points.push_back({c.ix + dx, c.iy + dy});
        }
    }
    std::sort(points.begin(), points.end(), row_major_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    mesh.vertices = points;

    std::map<GridPoint, int> vertex_id;
    for (std::size_t v = 0; v < points.size(); ++v) vertex_id[points[v]] = static_cast<int>(v);

    // Edge key: (v0, v1) with canonical orientation.
    std::map<std::pair<int, int>, int> edge_id;
    std::map<std::pair<int, int>, int> edge_use;
    auto corner_ids = [&](const GridPoint& c) {
        return std::array<int, 4>{vertex_id.at({c.ix, c.iy}), vertex_id.at({c.ix + 1, c.iy}),
                                  vertex_id.at({c.ix, c.iy + 1}), vertex_id.at({c.ix + 1, c.iy + 1})};
    };
    auto side_keys = [](const std::array<int, 4>& v) {
        return std::array<std::pair<int, int>, 4>{std::pair{v[0], v[1]}, std::pair{v[1], v[3]},
                                                  std::pair{v[2], v[3]}, std::pair{v[0], v[2]}};
    };
    std::set<std::pair<int, int>> keys;
    for (const auto& c : cells) {
        for (const auto& k : side_keys(corner_ids(c))) {
            keys.insert(k);
            ++edge_use[k];
        }
    }
    for (const auto& k : keys) {
        const GridPoint& a = points[static_cast<std::size_t>(k.first)];
        const GridPoint& b = points[static_cast<std::size_t>(k.second)];
        edge_id[k] = static_cast<int>(mesh.edges.size());
        mesh.edges.push_back({k.first, k.second, a.iy == b.iy ? Axis::horizontal : Axis::vertical,
                              edge_use[k] == 1});
    }

    mesh.vertex_boundary.assign(points.size(), false);
    for (const auto& e : mesh.edges) {
        if (e.boundary) {
            mesh.vertex_boundary[static_cast<std::size_t>(e.v0)] = true;
            mesh.vertex_boundary[static_cast<std::size_t>(e.v1)] = true;
        }
    }

    for (const auto& c : cells) {
        MeshElement el;
        el.origin = c;
        el.vertices = corner_ids(c);
        const auto sides = side_keys(el.vertices);
        for (std::size_t s = 0; s < 4; ++s) el.edges[s] = edge_id.at(sides[s]);
        mesh.elements.push_back(el);
    }
    return mesh;
}

void write_mesh(std::ostream& os, const Mesh& mesh) {
    os << "domain " << to_string(mesh.domain) << " N " << mesh.n << "\n";
    os << "vertices " << mesh.vertices.size() << "\n";
    for (std::size_t v = 0; v < mesh.vertices.size(); ++v) {
        os << v << ' ' << mesh.x(static_cast<int>(v)) << ' ' << mesh.y(static_cast<int>(v)) << ' '
           << (mesh.vertex_boundary[v] ? "boundary" : "interior") << "\n";
    }
    os << "edges " << mesh.edges.size() << "\n";
    for (std::size_t e = 0; e < mesh.edges.size(); ++e) {
        const auto& ed = mesh.edges[e];
        os << e << ' ' << ed.v0 << ' ' << ed.v1 << ' ' << (ed.axis == Axis::horizontal ? 'h' : 'v') << ' '
           << (ed.boundary ? "boundary" : "interior") << "\n";
    }
    os << "elements " << mesh.elements.size() << "\n";
    for (std::size_t k = 0; k < mesh.elements.size(); ++k) {
        const auto& el = mesh.elements[k];
        os << k;
        for (int v : el.vertices) os << ' ' << v;
        os << " :";
        for (int e : el.edges) os << ' ' << e;
        os << "\n";
    }
}

DofMap build_dof_map(const Mesh& mesh, const BasisArray& basis) {
    DofMap dm;
    dm.family = basis.family;
    dm.order = basis.order;
    dm.per_edge = basis.order - 1;

    for (const auto& sd : classify_dofs(basis)) {
        dm.local_slots.push_back(sd.slot);
        dm.local_kinds.push_back(sd.kind);
        if (sd.kind.entity == DofEntity::interior) ++dm.per_element_interior;
    }

    const int nv = static_cast<int>(mesh.vertices.size());
    const int ne = static_cast<int>(mesh.edges.size());
    const int nel = static_cast<int>(mesh.elements.size());
    dm.edge_offset = nv;
    dm.interior_offset = nv + dm.per_edge * ne;
    dm.total = dm.interior_offset + dm.per_element_interior * nel;

    dm.boundary.assign(static_cast<std::size_t>(dm.total), false);
    for (int v = 0; v < nv; ++v) dm.boundary[static_cast<std::size_t>(v)] = mesh.vertex_boundary[static_cast<std::size_t>(v)];
    for (int e = 0; e < ne; ++e) {
        if (!mesh.edges[static_cast<std::size_t>(e)].boundary) continue;
        for (int k = 0; k < dm.per_edge; ++k) dm.boundary[static_cast<std::size_t>(dm.edge_offset + e * dm.per_edge + k)] = true;
    }

    dm.element_dofs.reserve(mesh.elements.size());
    for (int el = 0; el < nel; ++el) {
        const auto& elem = mesh.elements[static_cast<std::size_t>(el)];
        std::vector<int> dofs;
        dofs.reserve(dm.local_kinds.size());
        int interior_local = 0;
        for (const auto& kind : dm.local_kinds) {
            switch (kind.entity) {
                case DofEntity::vertex:
                    dofs.push_back(elem.vertices[static_cast<std::size_t>(kind.corner)]);
                    break;
                case DofEntity::edge:
                    dofs.push_back(dm.edge_offset + elem.edges[static_cast<std::size_t>(kind.side)] * dm.per_edge + kind.k);
                    break;
                case DofEntity::interior:
                    dofs.push_back(dm.interior_offset + el * dm.per_element_interior + interior_local++);
                    break;
            }
        }
        dm.element_dofs.push_back(std::move(dofs));
    }
    return dm;
}

DofMap build_dof_map(const Mesh& mesh, Family family, int p) {
    return build_dof_map(mesh, make_basis(family, p));
}

int expected_dof_count(const Mesh& mesh, Family family, int p) {
    return static_cast<int>(mesh.vertices.size()) + (p - 1) * static_cast<int>(mesh.edges.size()) +
           interior_dof_count(family, p) * static_cast<int>(mesh.elements.size());
}

std::vector<int> boundary_dofs(const DofMap& dm) {
    std::vector<int> out;
    for (int d = 0; d < dm.total; ++d) {
        if (dm.boundary[static_cast<std::size_t>(d)]) out.push_back(d);
    }
    return out;
}

std::vector<int> interior_dofs(const DofMap& dm) {
    std::vector<int> out;
    for (int d = 0; d < dm.total; ++d) {
        if (!dm.boundary[static_cast<std::size_t>(d)]) out.push_back(d);
    }
    return out;
}

}  // namespace srdp
