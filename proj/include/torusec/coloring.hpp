#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "torusec/torus.hpp"

namespace torusec {

// Colors are integers 1..t. A set of colors is a bitmask with bit c set for
// color c (bit 0 unused).
using ColorSet = uint32_t;

inline ColorSet color_bit(int c) { return ColorSet(1) << c; }
inline ColorSet full_palette(int t) { return (ColorSet(1) << (t + 1)) - 2; }
inline bool has_color(ColorSet s, int c) { return (s >> c) & 1; }
inline int popcount(ColorSet s) { return __builtin_popcount(s); }
inline int smallest_color(ColorSet s) { return s ? __builtin_ctz(s) : 0; }
int nth_smallest_color(ColorSet s, int n); // 0-based rank; 0 if absent

// A proper partial edge coloring. Uncolored edges are simply absent from the
// assignment; they are never reported as color 0.
class Coloring {
public:
    Coloring() = default;
    Coloring(const Torus& G, int palette);

    int palette() const { return palette_; }
    ColorSet palette_mask() const { return full_palette(palette_); }
    uint32_t size() const { return colored_; }
    bool empty() const { return colored_ == 0; }
    bool complete(const Torus& G) const { return colored_ == G.edge_count(); }

    bool is_colored(EdgeId e) const { return color_[e.idx] != 0; }
    int color(EdgeId e) const { return color_[e.idx]; }

    void set(EdgeId e, int c);
    void unset(EdgeId e);

    std::vector<EdgeId> domain() const;

    friend bool operator==(const Coloring& a, const Coloring& b) = default;

private:
    int palette_ = 0;
    uint32_t colored_ = 0;
    std::vector<int16_t> color_;
};

// --- queries -----------------------------------------------------------------

ColorSet used_colors_at(const Torus& G, const Coloring& f, VertexId v);
ColorSet missing_colors(const Torus& G, const Coloring& f, VertexId v);
bool is_proper(const Torus& G, const Coloring& f);
bool proper_at(const Torus& G, const Coloring& f, VertexId v);
// True iff g agrees with f on every edge colored under f.
bool agrees_with(const Coloring& g, const Coloring& f);
ColorSet used_colors(const Torus& G, const Coloring& f);

// --- Kempe machinery -----------------------------------------------------------

struct KempeComponent {
    int a = 0;
    int b = 0;
    bool is_cycle = false;
    std::vector<EdgeId> edges;          // path or cycle order
    std::vector<int16_t> colors_seen;   // colors at capture time, for staleness checks
};

KempeComponent kempe_component(const Torus& G, const Coloring& f, EdgeId start, int a, int b);
KempeComponent kempe_component(const Torus& G, const Coloring& f, VertexId start, int a, int b);
Coloring swap_component(const Torus& G, const Coloring& f, const KempeComponent& comp);

// --- structural operations ------------------------------------------------------

// Colors dst's edges the way src's corresponding edges are colored. src and
// dst must lie in the same dimension; the translation composes unit steps.
Coloring copy_correspondingly(const Torus& G, const Coloring& f, PlaneHandle src, PlaneHandle dst);

// Relabels colors on `scope` only. perm[c] is the image of color c
// (perm[0] ignored). Throws boundary_conflict if the relabeled scope clashes
// with colors outside it.
Coloring permute_colors(const Torus& G, const Coloring& f, std::span<const int> perm,
                        std::span<const EdgeId> scope);

bool no_conflicts(const Torus& G, const Coloring& f1, const Coloring& f2);

struct StripRecord {
    std::vector<std::pair<EdgeId, int>> removed;
};

std::pair<Coloring, StripRecord> strip_colors(const Coloring& f, ColorSet colors);
Coloring restore_colors(const Coloring& f, const StripRecord& record);

// --- serialization ---------------------------------------------------------------

// Canonical JSON: [{"edge":{"base":[...],"dim":j},"color":c},...] sorted by
// edge index, dimensions 1-based.
std::string coloring_to_json(const Torus& G, const Coloring& f);

} // namespace torusec
