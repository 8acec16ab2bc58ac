#pragma once

#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "bipc4/bigraph.hpp"
#include "bipc4/verify.hpp"

namespace bipc4 {

/// Which matching rule created an arc of the auxiliary orientation.
enum class ArcRule {
  matches_x_edge,  // C(x_i, y_j) = C(x, y_j): arc x_i -> y_j
  matches_y_edge,  // C(x_i, y_j) = C(y, x_i): arc y_j -> x_i
};

/// Why an edge of G[A1, B1] received no arc.
enum class SkipReason {
  color_equals_base,      // C(x_i, y_j) = c0, the color of edge xy
  anchor_colors_collide,  // C(x, y_j) = C(y, x_i): neither rule is well-defined
};

struct SkippedEdge {
  int i;  // position in A1
  int j;  // position in B1
  SkipReason reason;
  friend bool operator==(const SkippedEdge&, const SkippedEdge&) = default;
};

/// The auxiliary-orientation state built from a colored graph around one
/// anchor edge xy: the selected color neighborhoods A1 and B1, the orientation
/// D over them, and the provenance of every arc and skipped edge.
///
/// D's side-A vertex i stands for A1[i] and its side-B vertex j for B1[j].
/// Invariants established by build_reduction:
///   - the colors C(x, b) over b in {y} union B1 are pairwise distinct, and
///     likewise C(a, y) over a in {x} union A1;
///   - every arc i -> j has C(A1[i], B1[j]) = C(x, B1[j]) and every arc
///     j -> i has C(A1[i], B1[j]) = C(y, A1[i]); in both cases the color
///     differs from c0 and C(x, B1[j]) != C(y, A1[i]).
struct ReductionContext {
  int x;   // side-A anchor
  int y;   // side-B anchor
  int c0;  // color of edge xy
  int s;   // ceil((3m+8)/5): target size of {x} union A1
  int r;   // ceil((3n+8)/5): target size of {y} union B1

  std::vector<int> A1;  // side-A vertices, ascending, at most s-1 of them
  std::vector<int> B1;  // side-B vertices, ascending, at most r-1 of them

  std::vector<int> x_colors;  // C(x, B1[j]) per j, pairwise distinct
  std::vector<int> y_colors;  // C(y, A1[i]) per i, pairwise distinct

  OrientedBipartiteGraph D;  // orientation over local indices (|A1|, |B1|)

  std::map<std::pair<int, int>, ArcRule> arc_provenance;  // keyed by local (i, j)
  std::vector<SkippedEdge> skipped_edges;
};

/// Result of build_reduction: either the context, or a rainbow 4-cycle found
/// immediately because some edge color escaped the three admissible values.
using ReductionOutcome = std::variant<ReductionContext, RainbowC4Certificate>;

/// Builds the auxiliary orientation for anchor edge (x, y) of G.
///
/// A1 is color_neighborhood(G, y, must_include = x) minus x, truncated to its
/// first s-1 entries; B1 symmetrically with r-1 entries. For each edge
/// (A1[i], B1[j]) of G, scanned in ascending (i, j) order: colors equal to c0
/// or with C(x, B1[j]) = C(y, A1[i]) are recorded as skipped; a color equal
/// to C(x, B1[j]) becomes arc i -> j and one equal to C(y, A1[i]) becomes
/// arc j -> i; any other color closes the rainbow 4-cycle
/// x - B1[j] - A1[i] - y - x, which is returned at once.
///
/// Color degrees below s or r simply truncate A1/B1 short; the context
/// reports s, r and the achieved sizes so callers can detect the deficit.
/// Throws InvalidVertexError when x or y is out of range and Error when the
/// edge xy is absent.
ReductionOutcome build_reduction(const ColoredBipartiteGraph& g, int x, int y);

/// Lifts a directed 4-cycle of ctx.D to a rainbow 4-cycle of the source
/// graph. The four cycle arcs carry colors C(x, .) and C(y, .) alternately,
/// and each of the six color pairs is distinct either by the color-
/// neighborhood choice of A1/B1 or by the arc filter on one of the four
/// cycle pairs, so the lift needs no further search. Throws
/// InvalidCertificateError when dc4 is not a directed 4-cycle of ctx.D.
RainbowC4Certificate lift_directed_c4(const ReductionContext& ctx, const DirectedC4Certificate& dc4);

/// Escape from the extremal case, plus whether the proof-shaped scheme
/// itself produced the certificate (false means the exhaustive fallback did,
/// which the caller should surface as a proof-gap diagnostic).
struct EscapeOutcome {
  RainbowC4Certificate certificate;
  bool scheme_found;
};

/// Finds a rainbow 4-cycle when ctx.D is the extremal orientation: searches
/// for a directed 3-path in ctx.D whose three colors are pairwise distinct
/// (always true over extremal blocks) closed by an edge of G that carries no
/// arc in ctx.D and whose color avoids the path's three. Falls back to
/// find_rainbow_c4_exhaustive(g) when the scheme yields nothing. Throws
/// CounterexampleError when g has no rainbow 4-cycle at all. The blocks
/// witness is accepted as stated; inputs whose ctx.D is not actually
/// extremal are still searched.
EscapeOutcome extremal_escape(const ColoredBipartiteGraph& g, const ReductionContext& ctx,
                              const BlockDecomposition& blocks);

/// How the guided search settled, for diagnostics and reports.
enum class GuidedRoute {
  early_rainbow,        // build_reduction found the cycle directly
  lifted,               // directed C4 in ctx.D, lifted back
  extremal_escape,      // ctx.D extremal, escape search succeeded
  exhaustive_fallback,  // none of the above: plain exhaustive search
};

struct GuidedFind {
  RainbowC4Certificate certificate;
  GuidedRoute route;
  /// True when the certificate came from a fallback search on a branch the
  /// underlying argument says should be settled by its own scheme.
  bool proof_gap;
};

using GuidedOutcome = std::variant<GuidedFind, HypothesisViolation>;

/// The full guided pipeline: check the color-degree hypothesis exactly
/// (returning the first violator as a value); anchor at the
/// lexicographically least edge; build the reduction (an early rainbow
/// returns at once); look for a directed 4-cycle in ctx.D and lift it;
/// otherwise escape the extremal case; otherwise fall back to the exhaustive
/// finder with proof_gap set. Throws Error on an edgeless graph and
/// CounterexampleError when no rainbow 4-cycle exists despite the
/// hypothesis.
GuidedOutcome find_rainbow_c4_guided(const ColoredBipartiteGraph& g);

}  // namespace bipc4
