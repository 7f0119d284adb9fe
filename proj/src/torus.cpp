#include "torusec/torus.hpp"

#include <algorithm>

namespace torusec {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::invalid_parameters: return "InvalidParameters";
    case Errc::degenerate_dimension: return "DegenerateDimension";
    case Errc::not_adjacent_planes: return "NotAdjacentPlanes";
    case Errc::not_in_plane: return "NotInPlane";
    case Errc::same_edge: return "SameEdge";
    case Errc::color_out_of_range: return "ColorOutOfRange";
    case Errc::start_not_in_colors: return "StartNotInColors";
    case Errc::stale_component: return "StaleComponent";
    case Errc::conflict_with_existing: return "ConflictWithExisting";
    case Errc::boundary_conflict: return "BoundaryConflict";
    case Errc::overlapping_domains: return "OverlappingDomains";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::all_lists_identical: return "AllListsIdentical";
    case Errc::improper_precoloring: return "ImproperPrecoloring";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::hypothesis_not_met: return "HypothesisNotMet";
    case Errc::unsupported_girth: return "UnsupportedGirth";
    case Errc::claim_violated: return "ClaimViolated";
    case Errc::not_distance4_matching: return "NotDistance4Matching";
    case Errc::odd_cycle_length: return "OddCycleLength";
    case Errc::neighborhood_disturbed: return "NeighborhoodDisturbed";
    case Errc::construction_not_found: return "ConstructionNotFound";
    case Errc::internal_assertion: return "InternalAssertion";
    case Errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

Torus::Torus(int r, int d) : r_(r), d_(d) {
    TORUSEC_CHECK(r >= 3, Errc::invalid_parameters, "cycle length must be at least 3");
    TORUSEC_CHECK(d >= 1, Errc::invalid_parameters, "power must be at least 1");
    TORUSEC_CHECK(d <= 12, Errc::invalid_parameters, "power too large for desk scale");
    uint64_t n = 1;
    for (int j = 0; j < d; ++j) {
        pow_[j] = uint32_t(n);
        n *= uint64_t(r);
        TORUSEC_CHECK(n * uint64_t(d) < (uint64_t(1) << 31), Errc::invalid_parameters,
                      "instance too large");
    }
    nv_ = uint32_t(n);
    ne_ = nv_ * uint32_t(d);
}

std::vector<int> Torus::coords(VertexId v) const {
    std::vector<int> c(size_t(d_));
    for (int j = 0; j < d_; ++j) c[size_t(j)] = coord(v, j);
    return c;
}

VertexId Torus::vertex(std::span<const int> coords) const {
    TORUSEC_CHECK(int(coords.size()) == d_, Errc::invalid_parameters, "coordinate arity mismatch");
    uint32_t idx = 0;
    for (int j = d_ - 1; j >= 0; --j) {
        int c = coords[size_t(j)];
        TORUSEC_CHECK(c >= 0 && c < r_, Errc::invalid_parameters, "coordinate out of range");
        idx = idx * uint32_t(r_) + uint32_t(c);
    }
    return VertexId{idx};
}

VertexId Torus::shift(VertexId v, int dim, int delta) const {
    int c = coord(v, dim);
    int nc = ((c + delta) % r_ + r_) % r_;
    return VertexId{v.idx + uint32_t(nc - c) * pow_[dim]};
}

VertexId Torus::with_coord(VertexId v, int dim, int value) const {
    int c = coord(v, dim);
    return VertexId{v.idx + uint32_t(value - c) * pow_[dim]};
}

std::pair<VertexId, VertexId> Torus::endpoints(EdgeId e) const {
    VertexId b = edge_base(e);
    return {b, shift(b, edge_dim(e), 1)};
}

bool Torus::is_endpoint(EdgeId e, VertexId v) const {
    auto [a, b] = endpoints(e);
    return a == v || b == v;
}

VertexId Torus::other_endpoint(EdgeId e, VertexId v) const {
    auto [a, b] = endpoints(e);
    TORUSEC_CHECK(a == v || b == v, Errc::invalid_parameters, "vertex not on edge");
    return a == v ? b : a;
}

void Torus::incident_edges(VertexId v, std::vector<EdgeId>& out) const {
    out.clear();
    for (int j = 0; j < d_; ++j) {
        out.push_back(edge(v, j));
        out.push_back(edge(shift(v, j, -1), j));
    }
}

std::vector<EdgeId> Torus::incident_edges(VertexId v) const {
    std::vector<EdgeId> out;
    out.reserve(size_t(2 * d_));
    incident_edges(v, out);
    return out;
}

bool Torus::adjacent_edges(EdgeId e, EdgeId f) const {
    if (e == f) return false;
    auto [a, b] = endpoints(e);
    return is_endpoint(f, a) || is_endpoint(f, b);
}

int Torus::vertex_distance(VertexId a, VertexId b) const {
    int dist = 0;
    for (int j = 0; j < d_; ++j) {
        int diff = coord(a, j) - coord(b, j);
        if (diff < 0) diff = -diff;
        dist += std::min(diff, r_ - diff);
    }
    return dist;
}

int Torus::edge_distance(EdgeId e, EdgeId f) const {
    TORUSEC_CHECK(e != f, Errc::same_edge, "edge distance requires distinct edges");
    auto [a, b] = endpoints(e);
    auto [c, dd] = endpoints(f);
    int best = vertex_distance(a, c);
    best = std::min(best, vertex_distance(a, dd));
    best = std::min(best, vertex_distance(b, c));
    best = std::min(best, vertex_distance(b, dd));
    return best;
}

std::vector<DimensionHandle> Torus::dimensions() const {
    std::vector<DimensionHandle> out;
    for (int j = 0; j < d_; ++j) out.push_back({j});
    return out;
}

std::vector<PlaneHandle> Torus::planes(int dim) const {
    std::vector<PlaneHandle> out;
    for (int a = 0; a < r_; ++a) out.push_back({dim, a});
    return out;
}

std::vector<EdgeId> Torus::dimension_edges(int dim) const {
    std::vector<EdgeId> out;
    out.reserve(nv_);
    for (uint32_t v = 0; v < nv_; ++v) out.push_back(edge(VertexId{v}, dim));
    return out;
}

std::vector<VertexId> Torus::plane_vertices(PlaneHandle p) const {
    std::vector<VertexId> out;
    for (uint32_t v = 0; v < nv_; ++v)
        if (coord(VertexId{v}, p.dim) == p.level) out.push_back(VertexId{v});
    return out;
}

std::vector<EdgeId> Torus::plane_edges(PlaneHandle p) const {
    std::vector<EdgeId> out;
    for (uint32_t v = 0; v < nv_; ++v) {
        if (coord(VertexId{v}, p.dim) != p.level) continue;
        for (int j = 0; j < d_; ++j)
            if (j != p.dim) out.push_back(edge(VertexId{v}, j));
    }
    return out;
}

bool Torus::in_plane(EdgeId e, PlaneHandle p) const {
    return edge_dim(e) != p.dim && coord(edge_base(e), p.dim) == p.level;
}

std::vector<EdgeId> Torus::gap_edges(int dim, int level) const {
    std::vector<EdgeId> out;
    for (uint32_t v = 0; v < nv_; ++v)
        if (coord(VertexId{v}, dim) == ((level % r_ + r_) % r_)) out.push_back(edge(VertexId{v}, dim));
    return out;
}

std::vector<LayerHandle> Torus::layers(int dim) const {
    std::vector<LayerHandle> out;
    for (uint32_t v = 0; v < nv_; ++v)
        if (coord(VertexId{v}, dim) == 0) out.push_back(LayerHandle{dim, VertexId{v}});
    return out;
}

LayerHandle Torus::layer_through(VertexId v, int dim) const {
    return LayerHandle{dim, with_coord(v, dim, 0)};
}

std::vector<EdgeId> Torus::layer_edges(LayerHandle l) const {
    std::vector<EdgeId> out;
    out.reserve(size_t(r_));
    for (int a = 0; a < r_; ++a) out.push_back(edge(with_coord(l.anchor, l.dim, a), l.dim));
    return out;
}

EdgeId Torus::translate(EdgeId e, int dim, int delta) const {
    return edge(shift(edge_base(e), dim, delta), edge_dim(e));
}

VertexId Torus::corresponding(VertexId v, PlaneHandle from, PlaneHandle to) const {
    TORUSEC_CHECK(from.dim == to.dim, Errc::not_adjacent_planes, "planes of different dimensions");
    int delta = to.level - from.level;
    int fwd = ((delta % r_) + r_) % r_;
    TORUSEC_CHECK(fwd == 1 || fwd == r_ - 1, Errc::not_adjacent_planes, "planes are not adjacent");
    TORUSEC_CHECK(in_plane(v, from), Errc::not_in_plane, "vertex not in source plane");
    return shift(v, from.dim, fwd == 1 ? 1 : -1);
}

EdgeId Torus::corresponding(EdgeId e, PlaneHandle from, PlaneHandle to) const {
    TORUSEC_CHECK(from.dim == to.dim, Errc::not_adjacent_planes, "planes of different dimensions");
    int delta = to.level - from.level;
    int fwd = ((delta % r_) + r_) % r_;
    TORUSEC_CHECK(fwd == 1 || fwd == r_ - 1, Errc::not_adjacent_planes, "planes are not adjacent");
    TORUSEC_CHECK(in_plane(e, from), Errc::not_in_plane, "edge not in source plane");
    return translate(e, from.dim, fwd == 1 ? 1 : -1);
}

std::vector<std::array<EdgeId, 4>> Torus::four_cycles_through(EdgeId e) const {
    std::vector<std::array<EdgeId, 4>> out;
    VertexId v = edge_base(e);
    int j = edge_dim(e);
    VertexId w = shift(v, j, 1);
    // Cross-dimension squares: v, v+e_j, v+e_j+s*e_l, v+s*e_l.
    for (int l = 0; l < d_; ++l) {
        if (l == j) continue;
        for (int s : {1, -1}) {
            EdgeId e1 = s == 1 ? edge(v, l) : edge(shift(v, l, -1), l);
            EdgeId e2 = s == 1 ? edge(w, l) : edge(shift(w, l, -1), l);
            EdgeId e3 = edge(shift(v, l, s), j);
            out.push_back({e, e1, e3, e2});
        }
    }
    // The layer itself is a 4-cycle when r = 4.
    if (r_ == 4) {
        EdgeId e1 = edge(w, j);
        EdgeId e2 = edge(shift(v, j, -1), j);
        EdgeId e3 = edge(shift(v, j, 2), j);
        out.push_back({e, e1, e3, e2});
    }
    return out;
}

std::string Torus::vertex_name(VertexId v) const {
    std::string s = "(";
    for (int j = 0; j < d_; ++j) {
        if (j) s += ",";
        s += std::to_string(coord(v, j));
    }
    s += ")";
    return s;
}

PlaneSub::PlaneSub(const Torus& parent, PlaneHandle p)
    : parent_(&parent), sub_(parent.r(), parent.d() - 1), plane_(p) {
    TORUSEC_CHECK(parent.d() >= 2, Errc::degenerate_dimension,
                  "a 1-dimensional torus has no plane sub-instances");
}

VertexId PlaneSub::to_parent(VertexId sub_v) const {
    std::vector<int> sc = sub_.coords(sub_v);
    std::vector<int> pc(size_t(parent_->d()));
    int k = 0;
    for (int j = 0; j < parent_->d(); ++j)
        pc[size_t(j)] = (j == plane_.dim) ? plane_.level : sc[size_t(k++)];
    return parent_->vertex(pc);
}

VertexId PlaneSub::to_sub(VertexId parent_v) const {
    TORUSEC_CHECK(parent_->in_plane(parent_v, plane_), Errc::not_in_plane, "vertex not in plane");
    std::vector<int> pc = parent_->coords(parent_v);
    std::vector<int> sc;
    sc.reserve(size_t(parent_->d() - 1));
    for (int j = 0; j < parent_->d(); ++j)
        if (j != plane_.dim) sc.push_back(pc[size_t(j)]);
    return sub_.vertex(sc);
}

EdgeId PlaneSub::to_parent(EdgeId sub_e) const {
    int sd = sub_.edge_dim(sub_e);
    int pd = sd < plane_.dim ? sd : sd + 1;
    return parent_->edge(to_parent(sub_.edge_base(sub_e)), pd);
}

EdgeId PlaneSub::to_sub(EdgeId parent_e) const {
    TORUSEC_CHECK(parent_->in_plane(parent_e, plane_), Errc::not_in_plane, "edge not in plane");
    int pd = parent_->edge_dim(parent_e);
    int sd = pd < plane_.dim ? pd : pd - 1;
    return sub_.edge(to_sub(parent_->edge_base(parent_e)), sd);
}

} // namespace torusec
