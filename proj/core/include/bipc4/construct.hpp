#pragma once

#include <cstdint>

#include "bipc4/bigraph.hpp"

namespace bipc4 {

/// The extremal orientation D*(m, n) for m, n positive multiples of 3. Side A
/// splits into consecutive blocks M_0, M_1, M_2 of size m/3 and side B into
/// N_0, N_1, N_2 of size n/3; every arc of M_i x N_i points A to B and every
/// arc of N_i x M_{i+1 mod 3} points B to A. No other pairs are adjacent, so
/// the graph has 2mn/3 arcs, every out-degree meets the threshold 3*d+ = n
/// (resp. m) with equality, and no directed 4-cycle exists.
/// Throws DivisibilityError unless m and n are positive multiples of 3.
OrientedBipartiteGraph gen_dstar(int m, int n);

/// Result of padding a graph up to side sizes divisible by 3.
struct PaddingResult {
  OrientedBipartiteGraph padded;
  int added_a;  // new side-A vertices, appended after index m-1
  int added_b;  // new side-B vertices, appended after index n-1
};

/// Appends (3 - m mod 3) mod 3 vertices to side A and likewise for side B.
/// Each new side-A vertex gets out-arcs to every original side-B vertex and
/// each new side-B vertex gets out-arcs to every original side-A vertex. New
/// vertices receive no in-arcs and no arcs join two new vertices, so no
/// directed cycle passes through a new vertex: every directed 4-cycle of the
/// result already lay in the input. If the input meets the out-degree
/// hypothesis (3*d+ at least the opposite side size) at its own sizes, the
/// output meets it at the padded sizes.
PaddingResult pad_to_multiple_of_three(const OrientedBipartiteGraph& g);

/// Proper edge coloring of the complete bipartite graph K_{n,n}: edge
/// (a_i, b_j) gets color ((i + j) mod n) + 1. Exactly n colors, each
/// appearing once at every vertex. Throws InvalidVertexError for n < 1.
ColoredBipartiteGraph gen_proper_coloring_complete(int n);

/// Distribution over the three states of a single A-B pair. The entries must
/// be nonnegative and sum to 1.
struct OrientationProfile {
  double p_none = 1.0 / 3;
  double p_a_to_b = 1.0 / 3;
  double p_b_to_a = 1.0 / 3;
};

/// Random orientation of a subgraph of K_{m,n}, a pure function of its
/// arguments. Pairs are visited in ascending (a, b) order and each consumes
/// exactly one uniform draw, mapped to no-arc / A-to-B / B-to-A by the
/// profile's cumulative thresholds.
///
/// With enforce_hypothesis set, the sample is repaired so that every side-A
/// vertex u has 3 * outdeg(u) >= n and every side-B vertex v has
/// 3 * outdeg(v) >= m: deficient vertices are visited in scan order (side A
/// ascending, then side B ascending) and each receives out-arcs to uniformly
/// chosen non-adjacent opposite vertices until its threshold holds. Existing
/// arcs are never flipped, so earlier repairs persist. If a vertex runs out
/// of non-adjacent partners the sample is abandoned; up to 100 samples are
/// drawn from the continuing stream before GenerationFailureError is thrown
/// carrying the seed and the vertex that could not be repaired.
OrientedBipartiteGraph gen_random_oriented(int m, int n, const OrientationProfile& profile,
                                           std::uint64_t seed, bool enforce_hypothesis);

/// Random edge coloring of a subgraph of K_{m,n}, a pure function of its
/// arguments. Pairs are visited in ascending (a, b) order; each consumes one
/// uniform draw against edge_prob and, when the edge is present, one color
/// draw uniform over 1..palette.
///
/// With enforce_hypothesis set the sample is rejected and redrawn (up to 100
/// attempts) until every side-A vertex x has 5 * cd(x) >= 3n + 8 and every
/// side-B vertex y has 5 * cd(y) >= 3m + 8, where cd is the color degree.
/// Samples are never patched up, so accepted graphs are exact draws from the
/// conditional distribution. After 100 rejections GenerationFailureError is
/// thrown carrying the seed and the first deficient vertex of the last
/// attempt.
ColoredBipartiteGraph gen_random_colored(int m, int n, double edge_prob, int palette,
                                         std::uint64_t seed, bool enforce_hypothesis);

}  // namespace bipc4
