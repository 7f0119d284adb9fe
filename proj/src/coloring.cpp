#include "torusec/coloring.hpp"

#include <algorithm>
#include <sstream>

namespace torusec {

int nth_smallest_color(ColorSet s, int n) {
    while (s) {
        int c = smallest_color(s);
        if (n-- == 0) return c;
        s &= s - 1;
    }
    return 0;
}

Coloring::Coloring(const Torus& G, int palette)
    : palette_(palette), color_(G.edge_count(), 0) {
    TORUSEC_CHECK(palette >= 1 && palette <= 30, Errc::invalid_parameters, "palette size out of range");
}

void Coloring::set(EdgeId e, int c) {
    TORUSEC_CHECK(c >= 1 && c <= palette_, Errc::color_out_of_range, "color outside palette");
    if (color_[e.idx] == 0) ++colored_;
    color_[e.idx] = int16_t(c);
}

void Coloring::unset(EdgeId e) {
    if (color_[e.idx] != 0) --colored_;
    color_[e.idx] = 0;
}

std::vector<EdgeId> Coloring::domain() const {
    std::vector<EdgeId> out;
    out.reserve(colored_);
    for (uint32_t i = 0; i < color_.size(); ++i)
        if (color_[i] != 0) out.push_back(EdgeId{i});
    return out;
}

ColorSet used_colors_at(const Torus& G, const Coloring& f, VertexId v) {
    ColorSet s = 0;
    for (int j = 0; j < G.d(); ++j) {
        int c1 = f.color(G.edge(v, j));
        int c2 = f.color(G.edge(G.shift(v, j, -1), j));
        if (c1) s |= color_bit(c1);
        if (c2) s |= color_bit(c2);
    }
    return s;
}

ColorSet missing_colors(const Torus& G, const Coloring& f, VertexId v) {
    return f.palette_mask() & ~used_colors_at(G, f, v);
}

bool proper_at(const Torus& G, const Coloring& f, VertexId v) {
    ColorSet seen = 0;
    for (int j = 0; j < G.d(); ++j) {
        for (EdgeId e : {G.edge(v, j), G.edge(G.shift(v, j, -1), j)}) {
            int c = f.color(e);
            if (!c) continue;
            if (has_color(seen, c)) return false;
            seen |= color_bit(c);
        }
    }
    return true;
}

bool is_proper(const Torus& G, const Coloring& f) {
    for (uint32_t v = 0; v < G.vertex_count(); ++v)
        if (!proper_at(G, f, VertexId{v})) return false;
    return true;
}

bool agrees_with(const Coloring& g, const Coloring& f) {
    for (EdgeId e : f.domain())
        if (g.color(e) != f.color(e)) return false;
    return true;
}

ColorSet used_colors(const Torus& G, const Coloring& f) {
    ColorSet s = 0;
    for (uint32_t i = 0; i < G.edge_count(); ++i) {
        int c = f.color(EdgeId{i});
        if (c) s |= color_bit(c);
    }
    return s;
}

namespace {

// The unique edge at v colored a or b other than `via`, if any.
std::optional<EdgeId> next_kempe_edge(const Torus& G, const Coloring& f, VertexId v, EdgeId via,
                                      int a, int b) {
    for (int j = 0; j < G.d(); ++j) {
        for (EdgeId e : {G.edge(v, j), G.edge(G.shift(v, j, -1), j)}) {
            if (e == via) continue;
            int c = f.color(e);
            if (c == a || c == b) return e;
        }
    }
    return std::nullopt;
}

KempeComponent walk_from_edge(const Torus& G, const Coloring& f, EdgeId start, int a, int b) {
    KempeComponent comp;
    comp.a = a;
    comp.b = b;
    comp.edges.push_back(start);

    auto [va, vb] = G.endpoints(start);
    // Extend forward from vb.
    {
        EdgeId cur = start;
        VertexId at = vb;
        while (true) {
            auto next = next_kempe_edge(G, f, at, cur, a, b);
            if (!next) break;
            if (*next == start) {
                comp.is_cycle = true;
                break;
            }
            comp.edges.push_back(*next);
            at = G.other_endpoint(*next, at);
            cur = *next;
        }
    }
    if (!comp.is_cycle) {
        // Extend backward from va, prepending.
        std::vector<EdgeId> back;
        EdgeId cur = start;
        VertexId at = va;
        while (true) {
            auto next = next_kempe_edge(G, f, at, cur, a, b);
            if (!next) break;
            back.push_back(*next);
            at = G.other_endpoint(*next, at);
            cur = *next;
        }
        std::reverse(back.begin(), back.end());
        back.insert(back.end(), comp.edges.begin(), comp.edges.end());
        comp.edges = std::move(back);
    }
    comp.colors_seen.reserve(comp.edges.size());
    for (EdgeId e : comp.edges) comp.colors_seen.push_back(int16_t(f.color(e)));
    return comp;
}

} // namespace

KempeComponent kempe_component(const Torus& G, const Coloring& f, EdgeId start, int a, int b) {
    TORUSEC_CHECK(a != b, Errc::invalid_parameters, "kempe colors must differ");
    int c = f.color(start);
    TORUSEC_CHECK(c == a || c == b, Errc::start_not_in_colors,
                  "start edge not colored with either kempe color");
    return walk_from_edge(G, f, start, a, b);
}

KempeComponent kempe_component(const Torus& G, const Coloring& f, VertexId start, int a, int b) {
    TORUSEC_CHECK(a != b, Errc::invalid_parameters, "kempe colors must differ");
    for (int j = 0; j < G.d(); ++j) {
        for (EdgeId e : {G.edge(start, j), G.edge(G.shift(start, j, -1), j)}) {
            int c = f.color(e);
            if (c == a || c == b) return walk_from_edge(G, f, e, a, b);
        }
    }
    KempeComponent comp;
    comp.a = a;
    comp.b = b;
    return comp;
}

Coloring swap_component(const Torus& G, const Coloring& f, const KempeComponent& comp) {
    Coloring g = f;
    for (size_t i = 0; i < comp.edges.size(); ++i) {
        int c = f.color(comp.edges[i]);
        TORUSEC_CHECK(c == comp.colors_seen[i], Errc::stale_component,
                      "coloring changed since component was computed");
        g.set(comp.edges[i], c == comp.a ? comp.b : comp.a);
    }
    TORUSEC_CHECK(is_proper(G, g), Errc::stale_component, "swap produced an improper coloring");
    return g;
}

Coloring copy_correspondingly(const Torus& G, const Coloring& f, PlaneHandle src, PlaneHandle dst) {
    TORUSEC_CHECK(src.dim == dst.dim, Errc::not_adjacent_planes,
                  "correspondence requires planes of one dimension");
    int delta = dst.level - src.level;
    Coloring g = f;
    for (EdgeId e : G.plane_edges(src)) {
        int c = f.color(e);
        if (!c) continue;
        EdgeId img = G.translate(e, src.dim, delta);
        if (f.is_colored(img) && f.color(img) != c)
            fail(Errc::conflict_with_existing, "destination edge already colored differently");
        g.set(img, c);
    }
    for (VertexId v : G.plane_vertices(dst))
        if (!proper_at(G, g, v))
            fail(Errc::conflict_with_existing, "copied colors clash at a destination vertex");
    return g;
}

Coloring permute_colors(const Torus& G, const Coloring& f, std::span<const int> perm,
                        std::span<const EdgeId> scope) {
    TORUSEC_CHECK(int(perm.size()) == f.palette() + 1, Errc::invalid_parameters,
                  "permutation arity mismatch");
    std::vector<bool> hit(perm.size(), false);
    for (int c = 1; c <= f.palette(); ++c) {
        TORUSEC_CHECK(perm[size_t(c)] >= 1 && perm[size_t(c)] <= f.palette(),
                      Errc::invalid_parameters, "permutation image out of palette");
        TORUSEC_CHECK(!hit[size_t(perm[size_t(c)])], Errc::invalid_parameters,
                      "permutation is not a bijection");
        hit[size_t(perm[size_t(c)])] = true;
    }
    Coloring g = f;
    for (EdgeId e : scope) {
        int c = f.color(e);
        if (c) g.set(e, perm[size_t(c)]);
    }
    // Relabeling is proper inside the scope; check the seams.
    for (EdgeId e : scope) {
        auto [a, b] = G.endpoints(e);
        if (!proper_at(G, g, a) || !proper_at(G, g, b))
            fail(Errc::boundary_conflict, "relabeled scope clashes with surrounding colors");
    }
    return g;
}

bool no_conflicts(const Torus& G, const Coloring& f1, const Coloring& f2) {
    Coloring merged = f1;
    for (EdgeId e : f2.domain()) {
        if (f1.is_colored(e)) fail(Errc::overlapping_domains, "colorings share an edge");
        merged.set(e, f2.color(e));
    }
    return is_proper(G, merged);
}

std::pair<Coloring, StripRecord> strip_colors(const Coloring& f, ColorSet colors) {
    Coloring g = f;
    StripRecord rec;
    for (EdgeId e : f.domain()) {
        int c = f.color(e);
        if (has_color(colors, c)) {
            rec.removed.push_back({e, c});
            g.unset(e);
        }
    }
    return {std::move(g), std::move(rec)};
}

Coloring restore_colors(const Coloring& f, const StripRecord& record) {
    Coloring g = f;
    for (auto [e, c] : record.removed) g.set(e, c);
    return g;
}

std::string coloring_to_json(const Torus& G, const Coloring& f) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (uint32_t i = 0; i < G.edge_count(); ++i) {
        EdgeId e{i};
        if (!f.is_colored(e)) continue;
        if (!first) os << ",";
        first = false;
        os << "{\"edge\":{\"base\":[";
        VertexId b = G.edge_base(e);
        for (int j = 0; j < G.d(); ++j) {
            if (j) os << ",";
            os << G.coord(b, j);
        }
        os << "],\"dim\":" << (G.edge_dim(e) + 1) << "},\"color\":" << f.color(e) << "}";
    }
    os << "]";
    return os.str();
}

} // namespace torusec
