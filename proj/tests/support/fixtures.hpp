// Hand-built colored graphs that steer the reduction pipeline into specific
// branches. Both are constructed so that every anchor-square edge color is
// one of the three admissible values, which pins the auxiliary orientation
// exactly.
#pragma once

#include "bipc4/bigraph.hpp"

namespace bipc4::test {

/// A (14,14) coloring satisfying the color-degree hypothesis (threshold 10,
/// met with equality on the core vertices) whose reduction at anchor (0, 0)
/// yields a 9x9 auxiliary orientation with 72 arcs: cell (i, j) of the
/// interior goes A-to-B when (j - i) mod 9 is 1..4 and B-to-A when it is
/// 5..8, with the diagonal colored c0. The orientation has directed 4-cycles
/// and is not block-extremal, so the guided search must take the lift route.
ColoredBipartiteGraph fixture_lifted_14();

/// A (9,9) coloring (not hypothesis-satisfying; the extremal branch is
/// unreachable under the hypothesis) whose reduction at anchor (0, 0) yields
/// exactly the extremal orientation on (6, 6) with blocks {0,1},{2,3},{4,5},
/// plus one c0-colored edge at local pair (0, 2) that closes the escape
/// search's first directed 3-path into a rainbow 4-cycle.
ColoredBipartiteGraph fixture_escape_9();

/// A seeded coloring whose reduction at anchor (0, 0) always reaches a full
/// context with a dense auxiliary orientation. Column 0 and row 0 carry
/// pairwise-distinct colors (so A1 = {1..m-1} and B1 = {1..n-1} up to
/// truncation), and every interior pair is independently left absent, colored
/// c0, or colored to form an arc in either direction — never a fresh color,
/// so the builder cannot return early. With sides at most 7 the arc density
/// makes directed 4-cycles plentiful, which random palettes essentially
/// never produce (any fresh interior color ends the build at once).
ColoredBipartiteGraph planted_context_graph(int m, int n, std::uint64_t seed);

}  // namespace bipc4::test
