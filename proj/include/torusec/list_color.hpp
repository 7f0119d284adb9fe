#pragma once

#include <span>
#include <vector>

#include "torusec/coloring.hpp"

namespace torusec {

// List edge coloring of cycles and paths, stated positionally: position i is
// adjacent to positions i-1 and i+1 (and 0 to n-1 on a cycle). Callers map
// edge identities themselves.
//
// Every returned coloring respects the lists and is proper; the smallest
// admissible color is chosen wherever there is a choice.

// Requires an even number of positions, every list of size >= 2.
std::vector<int> color_even_cycle(std::span<const ColorSet> lists);

// Requires an odd number of positions, every list of size >= 2. Fails with
// all_lists_identical exactly when every list is the same set.
std::vector<int> color_odd_cycle(std::span<const ColorSet> lists);

// Requires the first list nonempty and every later list of size >= 2.
std::vector<int> color_path(std::span<const ColorSet> lists);

// Exhaustive list coloring of a cycle, used as the small-size safety net and
// as an independent oracle in tests. Empty result means no coloring exists.
std::vector<int> exhaustive_cycle_coloring(std::span<const ColorSet> lists);

} // namespace torusec
