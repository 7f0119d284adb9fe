#include "torusec/oracle.hpp"

#include <algorithm>

namespace torusec {

Verdict solve_masked(const Torus& G, const Coloring& phi, ColorSet allowed) {
    TORUSEC_CHECK(is_proper(G, phi), Errc::improper_precoloring, "precoloring is not proper");
    for (EdgeId e : phi.domain())
        TORUSEC_CHECK(has_color(allowed, phi.color(e)), Errc::improper_precoloring,
                      "precolored edge outside the allowed palette");

    const uint32_t ne = G.edge_count();
    std::vector<int16_t> color(ne, 0);
    std::vector<ColorSet> used(G.vertex_count(), 0);
    std::vector<EdgeId> open;
    open.reserve(ne);
    for (uint32_t i = 0; i < ne; ++i) {
        EdgeId e{i};
        int c = phi.color(e);
        auto [a, b] = G.endpoints(e);
        if (c) {
            color[i] = int16_t(c);
            used[a.idx] |= color_bit(c);
            used[b.idx] |= color_bit(c);
        } else {
            open.push_back(e);
        }
    }

    Verdict v;
    struct Frame {
        uint32_t slot;      // index into `open` chosen at this depth (swapped into place)
        ColorSet remaining; // colors not yet tried
    };
    std::vector<Frame> stack;
    stack.reserve(open.size());
    size_t fixed = 0; // open[0..fixed) are assigned

    auto avail_of = [&](EdgeId e) {
        auto [a, b] = G.endpoints(e);
        return allowed & ~(used[a.idx] | used[b.idx]);
    };

    while (true) {
        if (fixed == open.size()) {
            Coloring w(G, phi.palette());
            for (uint32_t i = 0; i < ne; ++i)
                if (color[i]) w.set(EdgeId{i}, color[i]);
            v.extendable = true;
            v.witness = std::move(w);
            return v;
        }
        // Most constrained open edge; ties by smallest edge index.
        size_t best = fixed;
        int best_n = 99;
        uint32_t best_idx = UINT32_MAX;
        for (size_t i = fixed; i < open.size(); ++i) {
            int n = popcount(avail_of(open[i]));
            if (n < best_n || (n == best_n && open[i].idx < best_idx)) {
                best_n = n;
                best_idx = open[i].idx;
                best = i;
                if (n == 0) break;
            }
        }
        std::swap(open[fixed], open[best]);
        stack.push_back({uint32_t(fixed), avail_of(open[fixed])});

        // Descend / backtrack loop.
        while (true) {
            if (stack.empty()) return v; // not extendable
            Frame& f = stack.back();
            EdgeId e = open[f.slot];
            auto [a, b] = G.endpoints(e);
            if (color[e.idx]) { // undo previous try at this frame
                ColorSet bit = color_bit(color[e.idx]);
                used[a.idx] &= ~bit;
                used[b.idx] &= ~bit;
                color[e.idx] = 0;
            }
            if (!f.remaining) {
                stack.pop_back();
                --fixed;
                continue;
            }
            int c = smallest_color(f.remaining);
            f.remaining &= ~color_bit(c);
            color[e.idx] = int16_t(c);
            used[a.idx] |= color_bit(c);
            used[b.idx] |= color_bit(c);
            ++v.nodes_explored;
            ++fixed;
            break;
        }
    }
}

Verdict solve(const Torus& G, const Coloring& phi, int palette) {
    TORUSEC_CHECK(phi.palette() <= palette, Errc::improper_precoloring,
                  "precoloring palette exceeds the requested palette");
    return solve_masked(G, phi, full_palette(palette));
}

uint64_t precoloring_enumeration_bound(const Torus& G, int palette, int max_edges) {
    const uint64_t ne = G.edge_count();
    uint64_t total = 0;
    uint64_t subsets = 1; // C(ne, k)
    uint64_t colorings = 1;
    for (int k = 0; k <= max_edges; ++k) {
        uint64_t term;
        if (__builtin_mul_overflow(subsets, colorings, &term)) return UINT64_MAX;
        if (__builtin_add_overflow(total, term, &total)) return UINT64_MAX;
        if (__builtin_mul_overflow(subsets, ne - uint64_t(k), &subsets)) return UINT64_MAX;
        subsets /= uint64_t(k) + 1;
        if (__builtin_mul_overflow(colorings, uint64_t(palette), &colorings)) return UINT64_MAX;
    }
    return total;
}

namespace {

// Depth-first over increasing edge indices; at each chosen edge try each
// proper color. Emits every proper precoloring with <= max_edges edges.
bool enum_rec(const Torus& G, Coloring& cur, std::vector<ColorSet>& used, uint32_t first, int left,
              const std::function<bool(const Coloring&)>& visit) {
    if (!visit(cur)) return false;
    if (left == 0) return true;
    for (uint32_t i = first; i < G.edge_count(); ++i) {
        EdgeId e{i};
        auto [a, b] = G.endpoints(e);
        ColorSet avail = cur.palette_mask() & ~(used[a.idx] | used[b.idx]);
        while (avail) {
            int c = smallest_color(avail);
            avail &= ~color_bit(c);
            cur.set(e, c);
            used[a.idx] |= color_bit(c);
            used[b.idx] |= color_bit(c);
            bool go = enum_rec(G, cur, used, i + 1, left - 1, visit);
            cur.unset(e);
            used[a.idx] &= ~color_bit(c);
            used[b.idx] &= ~color_bit(c);
            if (!go) return false;
        }
    }
    return true;
}

} // namespace

void enumerate_precolorings(const Torus& G, int palette, int max_edges,
                            const std::function<bool(const Coloring&)>& visit, EnumLimits limits) {
    TORUSEC_CHECK(max_edges >= 0, Errc::invalid_parameters, "max_edges must be nonnegative");
    uint64_t bound = precoloring_enumeration_bound(G, palette, max_edges);
    TORUSEC_CHECK(bound <= limits.cap, Errc::budget_exceeded,
                  "exhaustive enumeration estimate exceeds the configured cap");
    Coloring cur(G, palette);
    std::vector<ColorSet> used(G.vertex_count(), 0);
    enum_rec(G, cur, used, 0, max_edges, visit);
}

void sample_precolorings(const Torus& G, int palette, int num_edges, uint64_t seed, uint64_t n,
                         const std::function<bool(const Coloring&)>& visit) {
    TORUSEC_CHECK(num_edges >= 0 && uint32_t(num_edges) <= G.edge_count(), Errc::invalid_parameters,
                  "sample size out of range");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint32_t> edge_dist(0, G.edge_count() - 1);
    std::uniform_int_distribution<int> color_dist(1, palette);
    for (uint64_t k = 0; k < n; ++k) {
        while (true) {
            Coloring cur(G, palette);
            std::vector<uint32_t> picked;
            while (int(picked.size()) < num_edges) {
                uint32_t e = edge_dist(rng);
                if (std::find(picked.begin(), picked.end(), e) == picked.end())
                    picked.push_back(e);
            }
            for (uint32_t e : picked) cur.set(EdgeId{e}, color_dist(rng));
            if (!is_proper(G, cur)) continue;
            if (!visit(cur)) return;
            break;
        }
    }
}

bool is_distance_matching(const Torus& G, std::span<const EdgeId> M, int t) {
    for (size_t i = 0; i < M.size(); ++i)
        for (size_t j = i + 1; j < M.size(); ++j) {
            if (M[i] == M[j]) return false;
            if (G.adjacent_edges(M[i], M[j])) return false;
            if (G.edge_distance(M[i], M[j]) < t) return false;
        }
    return true;
}

namespace {

bool matching_rec(const Torus& G, std::vector<EdgeId>& cur, uint32_t first, int t, int min_size,
                  int max_size, uint64_t& visited, uint64_t cap,
                  const std::function<bool(const MatchingSpec&)>& visit) {
    if (int(cur.size()) >= min_size) {
        TORUSEC_CHECK(++visited <= cap, Errc::budget_exceeded, "matching enumeration exceeds cap");
        if (!visit(MatchingSpec{cur, t})) return false;
    }
    if (int(cur.size()) == max_size) return true;
    for (uint32_t i = first; i < G.edge_count(); ++i) {
        EdgeId e{i};
        bool ok = true;
        for (EdgeId m : cur) {
            if (G.adjacent_edges(m, e) || G.edge_distance(m, e) < t) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        cur.push_back(e);
        bool go = matching_rec(G, cur, i + 1, t, min_size, max_size, visited, cap, visit);
        cur.pop_back();
        if (!go) return false;
    }
    return true;
}

} // namespace

void enumerate_matchings(const Torus& G, int t_distance, int min_size, int max_size,
                         const std::function<bool(const MatchingSpec&)>& visit, EnumLimits limits) {
    TORUSEC_CHECK(t_distance >= 0, Errc::invalid_parameters, "distance must be nonnegative");
    std::vector<EdgeId> cur;
    uint64_t visited = 0;
    matching_rec(G, cur, 0, t_distance, std::max(min_size, 1), max_size, visited, limits.cap,
                 visit);
}

void sample_matchings(const Torus& G, int t_distance, int min_size, int max_size, uint64_t seed,
                      uint64_t n, const std::function<bool(const MatchingSpec&)>& visit) {
    std::mt19937_64 rng(seed);
    std::vector<uint32_t> order(G.edge_count());
    for (uint32_t i = 0; i < G.edge_count(); ++i) order[i] = i;
    for (uint64_t k = 0; k < n; ++k) {
        std::uniform_int_distribution<int> size_dist(min_size, max_size);
        int target = size_dist(rng);
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<EdgeId> cur;
        for (uint32_t i : order) {
            if (int(cur.size()) == target) break;
            EdgeId e{i};
            bool ok = true;
            for (EdgeId m : cur) {
                if (G.adjacent_edges(m, e) || G.edge_distance(m, e) < t_distance) {
                    ok = false;
                    break;
                }
            }
            if (ok) cur.push_back(e);
        }
        if (int(cur.size()) < min_size) continue; // instance family too sparse for this draw
        std::sort(cur.begin(), cur.end());
        if (!visit(MatchingSpec{cur, t_distance})) return;
    }
}

} // namespace torusec
