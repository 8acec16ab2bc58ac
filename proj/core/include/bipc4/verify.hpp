#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bipc4/bigraph.hpp"
#include "bipc4/construct.hpp"

namespace bipc4 {

/// A vertex failing a degree-threshold hypothesis, with the observed value
/// and the least value that would pass.
struct HypothesisViolation {
  VertexRef vertex;
  int degree;
  int required;
  friend bool operator==(const HypothesisViolation&, const HypothesisViolation&) = default;
};

/// Out-degree hypothesis for oriented graphs: 3 * outdeg(u) >= n on side A
/// and 3 * outdeg(v) >= m on side B, compared in exact integers. Returns the
/// first violator in scan order (side A ascending, then side B ascending),
/// or nullopt when every vertex passes.
std::optional<HypothesisViolation> check_out_degree_hypothesis(const OrientedBipartiteGraph& g);

/// Color-degree hypothesis for colored graphs: 5 * cd(u) >= 3n + 8 on side A
/// and 5 * cd(v) >= 3m + 8 on side B (strict mode uses > instead of >=).
/// Same scan order and return convention as above.
std::optional<HypothesisViolation> check_color_degree_hypothesis(const ColoredBipartiteGraph& g,
                                                                 bool strict = false);

/// Witness that a graph is a relabeling of the extremal construction: three
/// side-A blocks and three side-B blocks, each listed in ascending index
/// order, such that the arc set is exactly all M_i -> N_i and N_i -> M_{i+1}.
struct BlockDecomposition {
  std::array<std::vector<int>, 3> a_blocks;  // M_0, M_1, M_2
  std::array<std::vector<int>, 3> b_blocks;  // N_0, N_1, N_2
};

/// Recognizes graphs isomorphic to gen_dstar(m, n) under side-preserving
/// relabeling and returns the block decomposition as a checkable witness, or
/// nullopt. Requires m, n >= 3 and divisible by 3 and exactly 2mn/3 arcs;
/// then the blocks are forced: N_0 is the out-neighborhood of side-A vertex
/// 0, M_1 the union of out-neighborhoods over N_0, and so on around the
/// cycle; the candidate passes iff the blocks have sizes m/3 and n/3,
/// partition both sides, and reproduce the arc set exactly.
std::optional<BlockDecomposition> is_dstar(const OrientedBipartiteGraph& g);

/// How a single hypothesis-satisfying oriented instance is accounted for.
enum class InstanceCategory {
  with_cycle,      // find_directed_c4 succeeds
  extremal,        // no directed C4 but is_dstar succeeds
  counterexample,  // neither: the instance falsifies the directed-C4 claim
};

/// Category of one instance: cycle found, extremal, or counterexample.
InstanceCategory classify_oriented_instance(const OrientedBipartiteGraph& g);

/// A falsifying instance from a verification run, serialized in full so it
/// can be reproduced and re-checked independently.
struct OrientedCounterexample {
  std::uint64_t index;  // enumeration index or trial number
  std::uint64_t seed;   // per-trial seed (0 in exhaustive mode)
  OrientedBipartiteGraph graph;
};

struct ColoredCounterexample {
  std::uint64_t index;
  std::uint64_t seed;
  ColoredBipartiteGraph graph;
};

/// Which proof route settled each randomized rainbow trial.
struct RouteCounts {
  std::uint64_t early_rainbow = 0;
  std::uint64_t lifted = 0;
  std::uint64_t extremal_escape = 0;
  std::uint64_t exhaustive_fallback = 0;
  friend bool operator==(const RouteCounts&, const RouteCounts&) = default;
};

/// Outcome of a verification sweep. The ledger identity
///   hypothesis_satisfied = with_cycle + extremal + #counterexamples
/// holds in every mode (extremal stays 0 in rainbow mode), and all counts
/// are independent of the parallelism degree.
struct VerificationReport {
  std::string theorem;  // "directed-c4" or "rainbow-c4"
  std::string mode;     // "exhaustive" or "random"
  int m = 0;
  int n = 0;
  int jobs = 1;

  // Random-mode parameters, echoed for reproducibility.
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  OrientationProfile profile;  // oriented random mode
  int palette = 0;             // rainbow mode
  double edge_prob = 0.0;      // rainbow mode

  std::uint64_t instances_examined = 0;  // exhaustive: all 3^(mn); random: generated instances
  std::uint64_t hypothesis_satisfied = 0;
  std::uint64_t with_cycle = 0;
  std::uint64_t extremal = 0;
  std::uint64_t generation_failures = 0;  // random mode only

  std::vector<OrientedCounterexample> oriented_counterexamples;
  std::vector<ColoredCounterexample> colored_counterexamples;

  // Rainbow mode: how trials were settled, and how often a fallback search
  // (rather than the guided scheme itself) produced the certificate.
  RouteCounts routes;
  std::uint64_t proof_gap_count = 0;

  double elapsed_seconds = 0.0;
};

/// Exhaustively enumerates all 3^(mn) orientation assignments of K_{m,n}
/// pairs and classifies every one that satisfies the out-degree hypothesis.
/// Requires 2 <= m, n and mn <= 16 (BudgetExceededError carries the 3^(mn)
/// estimate otherwise; sizes with a side below 2 are refused as outside the
/// verified range).
///
/// Assignments are ordered as base-3 numerals over the pair index a*n + b
/// (digit 0 = no arc, 1 = A-to-B, 2 = B-to-A) and pruned when a vertex can
/// no longer reach its threshold; pruned subtrees are still counted, so
/// instances_examined always equals 3^(mn). Work is partitioned into fixed
/// prefix tasks whose results are aggregated in task order, making the
/// report independent of the worker schedule.
VerificationReport verify_directed_exhaustive(int m, int n, int jobs = 1);

/// Classifies `trials` hypothesis-enforced random orientations. Trial i uses
/// the derived seed RandomStream::derive(seed, i), so the report does not
/// depend on jobs. Generation failures are counted, not fatal.
VerificationReport verify_directed_random(int m, int n, std::uint64_t trials, std::uint64_t seed,
                                          const OrientationProfile& profile = {}, int jobs = 1);

/// Runs the guided rainbow search on `trials` hypothesis-enforced random
/// colorings, checking every returned certificate against the graph. Trials
/// draw derived seeds as above; failures of the guided scheme's own route
/// are tallied in routes/proof_gap_count, and an instance with no rainbow C4
/// at all is recorded as a counterexample.
VerificationReport verify_rainbow_random(int m, int n, std::uint64_t trials, int palette,
                                         double edge_prob, std::uint64_t seed, int jobs = 1);

}  // namespace bipc4
