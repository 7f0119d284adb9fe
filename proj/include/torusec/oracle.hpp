#pragma once

#include <functional>
#include <optional>
#include <random>

#include "torusec/coloring.hpp"

namespace torusec {

struct Verdict {
    bool extendable = false;
    std::optional<Coloring> witness;
    uint64_t nodes_explored = 0;
};

// Complete backtracking decision: is there a proper coloring of all edges
// from `allowed` agreeing with phi? Most-constrained-edge-first with forward
// checking on both endpoints, smallest color first. Deterministic.
Verdict solve_masked(const Torus& G, const Coloring& phi, ColorSet allowed);
Verdict solve(const Torus& G, const Coloring& phi, int palette);

struct EnumLimits {
    uint64_t cap = 100'000'000;
};

// Upper bound on the number of (edge set, color) candidates the exhaustive
// enumeration will touch; used for the budget check.
uint64_t precoloring_enumeration_bound(const Torus& G, int palette, int max_edges);

// Every proper precoloring with at most max_edges colored edges, exactly
// once, in canonical order (edge sets ascending lexicographically, then color
// vectors ascending). Return false from the callback to stop early.
void enumerate_precolorings(const Torus& G, int palette, int max_edges,
                            const std::function<bool(const Coloring&)>& visit,
                            EnumLimits limits = {});

// n uniformly generated proper precolorings with exactly num_edges colored
// edges, reproducible from seed (rejection sampling).
void sample_precolorings(const Torus& G, int palette, int num_edges, uint64_t seed, uint64_t n,
                         const std::function<bool(const Coloring&)>& visit);

struct MatchingSpec {
    std::vector<EdgeId> edges;
    int min_distance = 0;
};

bool is_distance_matching(const Torus& G, std::span<const EdgeId> M, int t);

// All matchings with pairwise edge distance >= t_distance and size within
// [min_size, max_size], edges ascending.
void enumerate_matchings(const Torus& G, int t_distance, int min_size, int max_size,
                         const std::function<bool(const MatchingSpec&)>& visit,
                         EnumLimits limits = {});

// Seeded random distance-t matchings: a target size is drawn, then edges are
// accepted greedily from a shuffled order.
void sample_matchings(const Torus& G, int t_distance, int min_size, int max_size, uint64_t seed,
                      uint64_t n, const std::function<bool(const MatchingSpec&)>& visit);

} // namespace torusec
