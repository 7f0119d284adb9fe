#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "torusec/error.hpp"

namespace torusec {

// Vertices and edges of C_r^d are addressed arithmetically. A vertex is a
// mixed-radix index over its d coordinates (base r, coordinate 0 least
// significant). An edge is identified by its base vertex and the dimension it
// varies: edge (v, j) joins v and v + e_j (mod r). For r >= 3 this canonical
// form is unique per edge.
struct VertexId {
    uint32_t idx = 0;
    friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

struct EdgeId {
    uint32_t idx = 0;
    friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

struct PlaneHandle {
    int dim = 0;   // dimension whose coordinate is fixed, 0-based
    int level = 0; // the fixed value of that coordinate
    friend auto operator<=>(const PlaneHandle&, const PlaneHandle&) = default;
};

struct DimensionHandle {
    int dim = 0;
    friend auto operator<=>(const DimensionHandle&, const DimensionHandle&) = default;
};

struct LayerHandle {
    int dim = 0;
    VertexId anchor; // representative with coordinate `dim` equal to 0
    friend auto operator<=>(const LayerHandle&, const LayerHandle&) = default;
};

class Torus {
public:
    Torus(int r, int d);

    int r() const { return r_; }
    int d() const { return d_; }
    bool even() const { return r_ % 2 == 0; }
    int chromatic_index() const { return even() ? 2 * d_ : 2 * d_ + 1; }

    uint32_t vertex_count() const { return nv_; }
    uint32_t edge_count() const { return ne_; }

    // --- coordinates -------------------------------------------------------
    int coord(VertexId v, int dim) const { return int(v.idx / pow_[dim] % uint32_t(r_)); }
    std::vector<int> coords(VertexId v) const;
    VertexId vertex(std::span<const int> coords) const;
    VertexId shift(VertexId v, int dim, int delta) const;
    VertexId with_coord(VertexId v, int dim, int value) const;

    // --- edges --------------------------------------------------------------
    EdgeId edge(VertexId base, int dim) const { return EdgeId{base.idx * uint32_t(d_) + uint32_t(dim)}; }
    VertexId edge_base(EdgeId e) const { return VertexId{e.idx / uint32_t(d_)}; }
    int edge_dim(EdgeId e) const { return int(e.idx % uint32_t(d_)); }
    std::pair<VertexId, VertexId> endpoints(EdgeId e) const;
    bool is_endpoint(EdgeId e, VertexId v) const;
    VertexId other_endpoint(EdgeId e, VertexId v) const;
    // The <= 2d edges incident with v: for each dimension j, (v, j) and (v - e_j, j).
    void incident_edges(VertexId v, std::vector<EdgeId>& out) const;
    std::vector<EdgeId> incident_edges(VertexId v) const;
    bool adjacent_edges(EdgeId e, EdgeId f) const;

    // --- metric -------------------------------------------------------------
    int vertex_distance(VertexId a, VertexId b) const;
    // Number of edges on a shortest path between an endpoint of e and an
    // endpoint of f; adjacent edges are at distance 0. Throws same_edge.
    int edge_distance(EdgeId e, EdgeId f) const;

    // --- decomposition ------------------------------------------------------
    std::vector<DimensionHandle> dimensions() const;
    std::vector<PlaneHandle> planes(int dim) const;
    std::vector<EdgeId> dimension_edges(int dim) const;
    // Edges of the plane (all edges with both endpoints at the fixed level).
    std::vector<EdgeId> plane_edges(PlaneHandle p) const;
    std::vector<VertexId> plane_vertices(PlaneHandle p) const;
    bool in_plane(VertexId v, PlaneHandle p) const { return coord(v, p.dim) == p.level; }
    bool in_plane(EdgeId e, PlaneHandle p) const;
    // Edges of dimension `dim` whose base coordinate equals `level`; they join
    // plane `level` to plane `level + 1`.
    std::vector<EdgeId> gap_edges(int dim, int level) const;
    std::vector<LayerHandle> layers(int dim) const;
    LayerHandle layer_through(VertexId v, int dim) const;
    // The r edges of a layer in cyclic order of their base level.
    std::vector<EdgeId> layer_edges(LayerHandle l) const;

    // --- correspondence -----------------------------------------------------
    VertexId translate(VertexId v, int dim, int delta) const { return shift(v, dim, delta); }
    EdgeId translate(EdgeId e, int dim, int delta) const;
    // Canonical translation between adjacent planes of the same dimension.
    VertexId corresponding(VertexId v, PlaneHandle from, PlaneHandle to) const;
    EdgeId corresponding(EdgeId e, PlaneHandle from, PlaneHandle to) const;

    // --- small cycles -------------------------------------------------------
    // Every 4-cycle through e as an ordered quadruple (e, e1, e3, e2), where
    // e3 is the edge opposite e and e1, e2 are the edges adjacent to e.
    std::vector<std::array<EdgeId, 4>> four_cycles_through(EdgeId e) const;

    // --- export ---------------------------------------------------------------
    std::string vertex_name(VertexId v) const;

private:
    int r_;
    int d_;
    uint32_t nv_;
    uint32_t ne_;
    std::array<uint32_t, 16> pow_{};
};

// A plane of C_r^d viewed as a standalone C_r^{d-1} together with the
// embedding of its vertices and edges back into the parent graph. Deleting
// the fixed coordinate makes recursion structural rather than simulated.
class PlaneSub {
public:
    PlaneSub(const Torus& parent, PlaneHandle p);

    const Torus& sub() const { return sub_; }
    PlaneHandle plane() const { return plane_; }

    VertexId to_parent(VertexId sub_v) const;
    VertexId to_sub(VertexId parent_v) const;
    EdgeId to_parent(EdgeId sub_e) const;
    EdgeId to_sub(EdgeId parent_e) const;

private:
    const Torus* parent_;
    Torus sub_;
    PlaneHandle plane_;
};

} // namespace torusec
