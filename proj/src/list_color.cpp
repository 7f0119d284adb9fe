#include "torusec/list_color.hpp"

#include <algorithm>

namespace torusec {

namespace {

bool valid_cycle_coloring(std::span<const ColorSet> lists, const std::vector<int>& col) {
    size_t n = lists.size();
    for (size_t i = 0; i < n; ++i) {
        if (!has_color(lists[i], col[i])) return false;
        if (col[i] == col[(i + 1) % n]) return false;
    }
    return true;
}

bool all_identical(std::span<const ColorSet> lists) {
    for (size_t i = 1; i < lists.size(); ++i)
        if (lists[i] != lists[0]) return false;
    return true;
}

// Seed a color c on position p with c not in the list of position p+1, then
// color p-1, p-2, ..., p+1 greedily; the final position only has to avoid its
// already-colored neighbor at p+2 since c cannot clash with it.
std::vector<int> seeded_cycle_coloring(std::span<const ColorSet> lists, size_t p, int c) {
    size_t n = lists.size();
    std::vector<int> col(n, 0);
    col[p] = c;
    size_t at = (p + n - 1) % n;
    int prev = c;
    while (at != p) {
        ColorSet avail = lists[at] & ~color_bit(prev);
        if (!avail) return {};
        prev = smallest_color(avail);
        col[at] = prev;
        at = (at + n - 1) % n;
    }
    return col;
}

std::vector<int> cycle_coloring(std::span<const ColorSet> lists, bool require_even) {
    size_t n = lists.size();
    TORUSEC_CHECK(n >= 3, Errc::precondition_violated, "cycle needs at least 3 edges");
    TORUSEC_CHECK(require_even == (n % 2 == 0), Errc::precondition_violated,
                  "cycle parity mismatch");
    for (ColorSet l : lists)
        TORUSEC_CHECK(popcount(l) >= 2, Errc::precondition_violated, "list of size < 2");

    if (all_identical(lists)) {
        if (!require_even) fail(Errc::all_lists_identical, "odd cycle with identical lists");
        // Alternate the two smallest colors of the common list.
        int a = nth_smallest_color(lists[0], 0);
        int b = nth_smallest_color(lists[0], 1);
        std::vector<int> col(n);
        for (size_t i = 0; i < n; ++i) col[i] = (i % 2 == 0) ? a : b;
        return col;
    }

    // Some adjacent pair has different lists; seed across that seam.
    for (size_t p = 0; p < n; ++p) {
        size_t q = (p + 1) % n;
        ColorSet only = lists[p] & ~lists[q];
        if (!only) continue;
        auto col = seeded_cycle_coloring(lists, p, smallest_color(only));
        if (!col.empty() && valid_cycle_coloring(lists, col)) return col;
    }

    // The seam search cannot fail, but keep a complete search as a
    // desk-scale safety net.
    auto col = exhaustive_cycle_coloring(lists);
    TORUSEC_ASSERT(!col.empty(), "cycle list coloring unexpectedly infeasible");
    return col;
}

} // namespace

std::vector<int> color_even_cycle(std::span<const ColorSet> lists) {
    return cycle_coloring(lists, true);
}

std::vector<int> color_odd_cycle(std::span<const ColorSet> lists) {
    return cycle_coloring(lists, false);
}

std::vector<int> color_path(std::span<const ColorSet> lists) {
    size_t n = lists.size();
    TORUSEC_CHECK(n >= 1, Errc::precondition_violated, "empty path");
    TORUSEC_CHECK(popcount(lists[0]) >= 1, Errc::precondition_violated, "first list empty");
    for (size_t i = 1; i < n; ++i)
        TORUSEC_CHECK(popcount(lists[i]) >= 2, Errc::precondition_violated, "list of size < 2");
    std::vector<int> col(n);
    col[0] = smallest_color(lists[0]);
    for (size_t i = 1; i < n; ++i) {
        ColorSet avail = lists[i] & ~color_bit(col[i - 1]);
        col[i] = smallest_color(avail);
    }
    return col;
}

std::vector<int> exhaustive_cycle_coloring(std::span<const ColorSet> lists) {
    size_t n = lists.size();
    std::vector<int> col(n, 0);
    // Depth-first over positions, smallest color first.
    size_t i = 0;
    std::vector<ColorSet> remaining(n, 0);
    remaining[0] = lists[0];
    while (true) {
        if (!remaining[i]) {
            if (i == 0) return {};
            col[i] = 0;
            --i;
            continue;
        }
        int c = smallest_color(remaining[i]);
        remaining[i] &= ~color_bit(c);
        if (i > 0 && c == col[i - 1]) continue;
        if (i + 1 == n && c == col[0]) continue;
        col[i] = c;
        if (i + 1 == n) return col;
        ++i;
        remaining[i] = lists[i];
        col[i] = 0;
    }
}

} // namespace torusec
