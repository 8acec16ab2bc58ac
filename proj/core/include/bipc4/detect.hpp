#pragma once

#include <optional>

#include "bipc4/bigraph.hpp"

namespace bipc4 {

/// Finds a directed 4-cycle a1 -> b1 -> a2 -> b2 -> a1, or nullopt if none
/// exists. Runs over ordered pairs a1 < a2 of side-A vertices and tests
/// N+(a1) & N-(a2) and N+(a2) & N-(a1) with word-parallel row intersections,
/// so the cost is O(m^2 * ceil(n/64)).
///
/// The witness is canonical: smallest a1, then smallest a2, then b1 the
/// least element of N+(a1) & N-(a2) and b2 the least of N+(a2) & N-(a1).
/// (b1 == b2 cannot happen: it would require both orientations on one pair.)
std::optional<DirectedC4Certificate> find_directed_c4(const OrientedBipartiteGraph& g);

/// Finds a rainbow 4-cycle by scanning quadruples a1 < a2, b1 < b2 in
/// lexicographic (a1, a2, b1, b2) order and returns the first whose four
/// edges exist with pairwise distinct colors, or nullopt. The restriction
/// to b1 < b2 loses nothing: swapping b1 and b2 reflects the same cycle.
std::optional<RainbowC4Certificate> find_rainbow_c4_exhaustive(const ColoredBipartiteGraph& g);

}  // namespace bipc4
