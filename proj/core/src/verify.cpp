#include "bipc4/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "bipc4/bitrows.hpp"
#include "bipc4/detect.hpp"
#include "bipc4/parallel.hpp"
#include "bipc4/reduction.hpp"
#include "bipc4/rng.hpp"

namespace bipc4 {

namespace {

int ceil_div(int p, int q) { return (p + q - 1) / q; }

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

std::optional<HypothesisViolation> check_out_degree_hypothesis(const OrientedBipartiteGraph& g) {
  for (int a = 0; a < g.m(); ++a) {
    int d = g.out_degree({Side::A, a});
    if (3 * d < g.n()) return HypothesisViolation{{Side::A, a}, d, ceil_div(g.n(), 3)};
  }
  for (int b = 0; b < g.n(); ++b) {
    int d = g.out_degree({Side::B, b});
    if (3 * d < g.m()) return HypothesisViolation{{Side::B, b}, d, ceil_div(g.m(), 3)};
  }
  return std::nullopt;
}

std::optional<HypothesisViolation> check_color_degree_hypothesis(const ColoredBipartiteGraph& g,
                                                                 bool strict) {
  auto required = [&](int opposite) {
    int bound = 3 * opposite + 8;
    return strict ? bound / 5 + 1 : ceil_div(bound, 5);
  };
  auto fails = [&](int cd, int opposite) {
    return strict ? 5 * cd <= 3 * opposite + 8 : 5 * cd < 3 * opposite + 8;
  };
  for (int a = 0; a < g.m(); ++a) {
    int cd = color_degree(g, {Side::A, a});
    if (fails(cd, g.n())) return HypothesisViolation{{Side::A, a}, cd, required(g.n())};
  }
  for (int b = 0; b < g.n(); ++b) {
    int cd = color_degree(g, {Side::B, b});
    if (fails(cd, g.m())) return HypothesisViolation{{Side::B, b}, cd, required(g.m())};
  }
  return std::nullopt;
}

namespace {

/// Union of out-neighbor rows over the side-A vertices listed in `members`
/// (a bit mask over side B).
std::vector<std::uint64_t> out_union_of_a(const OrientedBipartiteGraph& g,
                                          const std::vector<std::uint64_t>& members) {
  std::vector<std::uint64_t> result(static_cast<std::size_t>(detail::words_for(g.n())), 0);
  for (int a = 0; a < g.m(); ++a) {
    if (!(members[static_cast<std::size_t>(a / 64)] >> (a % 64) & 1)) continue;
    auto row = g.out_row(a);
    for (std::size_t w = 0; w < result.size(); ++w) result[w] |= row[w];
  }
  return result;
}

/// Union of out-neighbor sets over the side-B vertices in `members` (a bit
/// mask over side A). B's out-arcs are the BtoA plane, read column-wise.
std::vector<std::uint64_t> out_union_of_b(const OrientedBipartiteGraph& g,
                                          const std::vector<std::uint64_t>& members) {
  std::vector<std::uint64_t> result(static_cast<std::size_t>(detail::words_for(g.m())), 0);
  for (int a = 0; a < g.m(); ++a) {
    auto row = g.in_row(a);  // bit b here means arc b -> a
    for (std::size_t w = 0; w < row.size(); ++w) {
      if (row[w] & members[w]) {
        result[static_cast<std::size_t>(a / 64)] |= std::uint64_t{1} << (a % 64);
        break;
      }
    }
  }
  return result;
}

int popcount_mask(const std::vector<std::uint64_t>& mask) {
  int total = 0;
  for (std::uint64_t w : mask) total += std::popcount(w);
  return total;
}

std::vector<int> mask_to_indices(const std::vector<std::uint64_t>& mask, int limit) {
  std::vector<int> result;
  for (int v = 0; v < limit; ++v)
    if (mask[static_cast<std::size_t>(v / 64)] >> (v % 64) & 1) result.push_back(v);
  return result;
}

bool spans_equal(std::span<const std::uint64_t> row, const std::vector<std::uint64_t>& mask) {
  for (std::size_t w = 0; w < mask.size(); ++w)
    if (row[w] != mask[w]) return false;
  return true;
}

}  // namespace

std::optional<BlockDecomposition> is_dstar(const OrientedBipartiteGraph& g) {
  const int m = g.m();
  const int n = g.n();
  if (m < 3 || n < 3 || m % 3 != 0 || n % 3 != 0) return std::nullopt;
  if (g.arc_count() != 2 * m * n / 3) return std::nullopt;

  // The blocks are forced: walk the out-neighborhood chain starting from
  // side-A vertex 0 and check that it closes into the exact arc pattern.
  const std::size_t wa = static_cast<std::size_t>(detail::words_for(m));
  std::array<std::vector<std::uint64_t>, 3> a_blocks;  // masks over side A
  std::array<std::vector<std::uint64_t>, 3> b_blocks;  // masks over side B

  std::vector<std::uint64_t> a0(wa, 0);
  a0[0] = 1;  // start block seed {vertex 0}; replaced by the closing step
  b_blocks[0] = out_union_of_a(g, a0);
  a_blocks[1] = out_union_of_b(g, b_blocks[0]);
  b_blocks[1] = out_union_of_a(g, a_blocks[1]);
  a_blocks[2] = out_union_of_b(g, b_blocks[1]);
  b_blocks[2] = out_union_of_a(g, a_blocks[2]);
  a_blocks[0] = out_union_of_b(g, b_blocks[2]);

  for (const auto& mask : a_blocks)
    if (popcount_mask(mask) != m / 3) return std::nullopt;
  for (const auto& mask : b_blocks)
    if (popcount_mask(mask) != n / 3) return std::nullopt;

  // Disjoint blocks of total size m (resp. n) partition the side.
  std::vector<std::uint64_t> a_any(wa, 0);
  for (const auto& mask : a_blocks)
    for (std::size_t w = 0; w < wa; ++w) {
      if (a_any[w] & mask[w]) return std::nullopt;
      a_any[w] |= mask[w];
    }
  const std::size_t wb = static_cast<std::size_t>(detail::words_for(n));
  std::vector<std::uint64_t> b_any(wb, 0);
  for (const auto& mask : b_blocks)
    for (std::size_t w = 0; w < wb; ++w) {
      if (b_any[w] & mask[w]) return std::nullopt;
      b_any[w] |= mask[w];
    }
  if (popcount_mask(a_any) != m || popcount_mask(b_any) != n) return std::nullopt;

  // Every side-A row must match the pattern exactly: out-arcs to its own
  // N block, in-arcs from the previous one. Rows cover all arcs, so this
  // pins the whole arc set.
  for (int i = 0; i < 3; ++i) {
    for (int a : mask_to_indices(a_blocks[static_cast<std::size_t>(i)], m)) {
      if (!spans_equal(g.out_row(a), b_blocks[static_cast<std::size_t>(i)])) return std::nullopt;
      if (!spans_equal(g.in_row(a), b_blocks[static_cast<std::size_t>((i + 2) % 3)]))
        return std::nullopt;
    }
  }

  BlockDecomposition decomposition;
  for (int i = 0; i < 3; ++i) {
    decomposition.a_blocks[static_cast<std::size_t>(i)] =
        mask_to_indices(a_blocks[static_cast<std::size_t>(i)], m);
    decomposition.b_blocks[static_cast<std::size_t>(i)] =
        mask_to_indices(b_blocks[static_cast<std::size_t>(i)], n);
  }
  return decomposition;
}

InstanceCategory classify_oriented_instance(const OrientedBipartiteGraph& g) {
  if (find_directed_c4(g)) return InstanceCategory::with_cycle;
  if (is_dstar(g)) return InstanceCategory::extremal;
  return InstanceCategory::counterexample;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of all 3^(mn) orientation assignments.
//
// Assignments are base-3 numerals over pair index p = a*n + b, digit 0/1/2 =
// none / A-to-B / B-to-A, most significant digit first. A subtree is pruned
// as soon as some vertex can no longer reach its out-degree threshold even
// if it wins every remaining pair; pruned subtrees are added to
// instances_examined wholesale, so the total always equals 3^(mn). Pruning
// checks fire exactly at each vertex's last pair, so every surviving leaf
// satisfies the hypothesis by construction.
// ---------------------------------------------------------------------------

namespace {

struct EnumCounts {
  std::uint64_t instances = 0;
  std::uint64_t hypothesis = 0;
  std::uint64_t with_cycle = 0;
  std::uint64_t extremal = 0;
  std::vector<OrientedCounterexample> counterexamples;
};

struct EnumState {
  int m = 0;
  int n = 0;
  std::array<std::uint64_t, 16> row_out{};  // per side-A vertex, bits over B: a -> b
  std::array<std::uint64_t, 16> row_in{};   // per side-A vertex, bits over B: b -> a
  std::array<int, 16> out_a{};
  std::array<int, 16> out_b{};

  void apply(int p, int digit) {
    int a = p / n, b = p % n;
    if (digit == 1) {
      row_out[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
      ++out_a[static_cast<std::size_t>(a)];
    } else if (digit == 2) {
      row_in[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
      ++out_b[static_cast<std::size_t>(b)];
    }
  }
  void undo(int p, int digit) {
    int a = p / n, b = p % n;
    if (digit == 1) {
      row_out[static_cast<std::size_t>(a)] &= ~(std::uint64_t{1} << b);
      --out_a[static_cast<std::size_t>(a)];
    } else if (digit == 2) {
      row_in[static_cast<std::size_t>(a)] &= ~(std::uint64_t{1} << b);
      --out_b[static_cast<std::size_t>(b)];
    }
  }

  /// After assigning pair (a, b) = (p / n, p % n): dead iff vertex a or b
  /// cannot reach its threshold with the pairs it has left.
  bool dead(int p) const {
    int a = p / n, b = p % n;
    if (3 * (out_a[static_cast<std::size_t>(a)] + (n - 1 - b)) < n) return true;
    if (3 * (out_b[static_cast<std::size_t>(b)] + (m - 1 - a)) < m) return true;
    return false;
  }

  bool has_directed_c4() const {
    for (int a1 = 0; a1 + 1 < m; ++a1)
      for (int a2 = a1 + 1; a2 < m; ++a2)
        if ((row_out[static_cast<std::size_t>(a1)] & row_in[static_cast<std::size_t>(a2)]) &&
            (row_out[static_cast<std::size_t>(a2)] & row_in[static_cast<std::size_t>(a1)]))
          return true;
    return false;
  }

  OrientedBipartiteGraph to_graph() const {
    OrientedBipartiteGraph g(m, n);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < n; ++b) {
        if (row_out[static_cast<std::size_t>(a)] >> b & 1) g.add_arc(a, b, ArcDir::AtoB);
        if (row_in[static_cast<std::size_t>(a)] >> b & 1) g.add_arc(a, b, ArcDir::BtoA);
      }
    return g;
  }
};

std::uint64_t pow3(int e) {
  std::uint64_t result = 1;
  while (e-- > 0) result *= 3;
  return result;
}

/// Depth-first enumeration of digits [from, total); index_base is the value
/// of the already-fixed digits as a base-3 numeral (for counterexample ids).
void enumerate_tail(EnumState& state, int from, int total, std::uint64_t index_base,
                    EnumCounts& counts) {
  if (from == total) {
    ++counts.instances;
    ++counts.hypothesis;  // all row/column checks passed on the way down
    if (state.has_directed_c4()) {
      ++counts.with_cycle;
      return;
    }
    OrientedBipartiteGraph g = state.to_graph();
    if (is_dstar(g))
      ++counts.extremal;
    else
      counts.counterexamples.push_back({index_base, 0, std::move(g)});
    return;
  }
  for (int digit = 0; digit < 3; ++digit) {
    state.apply(from, digit);
    std::uint64_t index = index_base * 3 + static_cast<std::uint64_t>(digit);
    if (state.dead(from))
      counts.instances += pow3(total - from - 1);
    else
      enumerate_tail(state, from + 1, total, index, counts);
    state.undo(from, digit);
  }
}

/// A live prefix of fixed digits, ready to be finished by a worker.
struct PrefixTask {
  std::array<std::int8_t, 16> digits{};
  std::uint64_t index_base = 0;
};

/// Enumerates prefixes of length k, collecting live ones and accounting
/// pruned ones directly into `counts`.
void collect_prefixes(EnumState& state, int from, int k, int total, std::uint64_t index_base,
                      std::array<std::int8_t, 16>& digits, std::vector<PrefixTask>& tasks,
                      EnumCounts& counts) {
  if (from == k) {
    PrefixTask task;
    task.digits = digits;
    task.index_base = index_base;
    tasks.push_back(task);
    return;
  }
  for (int digit = 0; digit < 3; ++digit) {
    state.apply(from, digit);
    digits[static_cast<std::size_t>(from)] = static_cast<std::int8_t>(digit);
    std::uint64_t index = index_base * 3 + static_cast<std::uint64_t>(digit);
    if (state.dead(from))
      counts.instances += pow3(total - from - 1);
    else
      collect_prefixes(state, from + 1, k, total, index, digits, tasks, counts);
    state.undo(from, digit);
  }
}

}  // namespace

VerificationReport verify_directed_exhaustive(int m, int n, int jobs) {
  const auto start = Clock::now();
  if (m < 2 || n < 2)
    throw Error("exhaustive verification covers sides of size at least 2, got m=" +
                std::to_string(m) + " n=" + std::to_string(n));
  const int total = m * n;
  if (total > 16)
    throw BudgetExceededError("instance space 3^" + std::to_string(total) +
                                  " exceeds the 3^16 enumeration budget",
                              std::pow(3.0, total));
  if (jobs < 1) jobs = 1;

  VerificationReport report;
  report.theorem = "directed-c4";
  report.mode = "exhaustive";
  report.m = m;
  report.n = n;
  report.jobs = jobs;

  // Fixed prefix depth (independent of jobs, so reports are too): leave at
  // most 3^8 leaves per task.
  const int k = std::max(0, total - 8);

  EnumCounts prefix_counts;
  std::vector<PrefixTask> tasks;
  {
    EnumState state;
    state.m = m;
    state.n = n;
    std::array<std::int8_t, 16> digits{};
    collect_prefixes(state, 0, k, total, 0, digits, tasks, prefix_counts);
  }

  std::vector<EnumCounts> slots(tasks.size());
  parallel_for_indexed(tasks.size(), jobs, [&](std::uint64_t t) {
    const PrefixTask& task = tasks[static_cast<std::size_t>(t)];
    EnumState state;
    state.m = m;
    state.n = n;
    for (int p = 0; p < k; ++p) state.apply(p, task.digits[static_cast<std::size_t>(p)]);
    enumerate_tail(state, k, total, task.index_base, slots[static_cast<std::size_t>(t)]);
  });

  report.instances_examined = prefix_counts.instances;
  for (EnumCounts& slot : slots) {
    report.instances_examined += slot.instances;
    report.hypothesis_satisfied += slot.hypothesis;
    report.with_cycle += slot.with_cycle;
    report.extremal += slot.extremal;
    for (OrientedCounterexample& ce : slot.counterexamples)
      report.oriented_counterexamples.push_back(std::move(ce));
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

// ---------------------------------------------------------------------------
// Randomized verification: per-trial derived seeds keep trials independent
// of each other and of the worker schedule; per-trial result slots are
// aggregated in trial order.
// ---------------------------------------------------------------------------

namespace {

struct TrialSlot {
  enum class Kind { gen_failure, with_cycle, extremal, counterexample } kind = Kind::gen_failure;
  std::uint64_t seed = 0;
  GuidedRoute route = GuidedRoute::early_rainbow;  // rainbow mode only
  bool proof_gap = false;                          // rainbow mode only
  std::optional<OrientedBipartiteGraph> oriented_graph;
  std::optional<ColoredBipartiteGraph> colored_graph;
  std::exception_ptr unexpected;
};

void require_random_pre(int m, int n, std::uint64_t trials) {
  if (m < 2 || n < 2)
    throw Error("randomized verification covers sides of size at least 2, got m=" +
                std::to_string(m) + " n=" + std::to_string(n));
  if (trials < 1) throw Error("trials must be at least 1");
}

}  // namespace

VerificationReport verify_directed_random(int m, int n, std::uint64_t trials, std::uint64_t seed,
                                          const OrientationProfile& profile, int jobs) {
  const auto start = Clock::now();
  require_random_pre(m, n, trials);
  if (jobs < 1) jobs = 1;

  std::vector<TrialSlot> slots(trials);
  parallel_for_indexed(trials, jobs, [&](std::uint64_t i) {
    TrialSlot& slot = slots[static_cast<std::size_t>(i)];
    slot.seed = RandomStream::derive(seed, i);
    try {
      OrientedBipartiteGraph g = gen_random_oriented(m, n, profile, slot.seed, true);
      switch (classify_oriented_instance(g)) {
        case InstanceCategory::with_cycle:
          slot.kind = TrialSlot::Kind::with_cycle;
          break;
        case InstanceCategory::extremal:
          slot.kind = TrialSlot::Kind::extremal;
          break;
        case InstanceCategory::counterexample:
          slot.kind = TrialSlot::Kind::counterexample;
          slot.oriented_graph = std::move(g);
          break;
      }
    } catch (const GenerationFailureError&) {
      slot.kind = TrialSlot::Kind::gen_failure;
    } catch (...) {
      slot.unexpected = std::current_exception();
    }
  });

  VerificationReport report;
  report.theorem = "directed-c4";
  report.mode = "random";
  report.m = m;
  report.n = n;
  report.jobs = jobs;
  report.seed = seed;
  report.trials = trials;
  report.profile = profile;
  for (std::uint64_t i = 0; i < trials; ++i) {
    TrialSlot& slot = slots[static_cast<std::size_t>(i)];
    if (slot.unexpected) std::rethrow_exception(slot.unexpected);
    switch (slot.kind) {
      case TrialSlot::Kind::gen_failure:
        ++report.generation_failures;
        break;
      case TrialSlot::Kind::with_cycle:
        ++report.instances_examined, ++report.hypothesis_satisfied, ++report.with_cycle;
        break;
      case TrialSlot::Kind::extremal:
        ++report.instances_examined, ++report.hypothesis_satisfied, ++report.extremal;
        break;
      case TrialSlot::Kind::counterexample:
        ++report.instances_examined, ++report.hypothesis_satisfied;
        report.oriented_counterexamples.push_back({i, slot.seed, std::move(*slot.oriented_graph)});
        break;
    }
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

VerificationReport verify_rainbow_random(int m, int n, std::uint64_t trials, int palette,
                                         double edge_prob, std::uint64_t seed, int jobs) {
  const auto start = Clock::now();
  require_random_pre(m, n, trials);
  if (jobs < 1) jobs = 1;

  std::vector<TrialSlot> slots(trials);
  parallel_for_indexed(trials, jobs, [&](std::uint64_t i) {
    TrialSlot& slot = slots[static_cast<std::size_t>(i)];
    slot.seed = RandomStream::derive(seed, i);
    try {
      ColoredBipartiteGraph g = gen_random_colored(m, n, edge_prob, palette, slot.seed, true);
      try {
        GuidedOutcome outcome = find_rainbow_c4_guided(g);
        const GuidedFind& find = std::get<GuidedFind>(outcome);  // hypothesis was enforced
        verify_rainbow_c4(g, find.certificate);
        slot.kind = TrialSlot::Kind::with_cycle;
        slot.route = find.route;
        slot.proof_gap = find.proof_gap;
      } catch (const CounterexampleError&) {
        slot.kind = TrialSlot::Kind::counterexample;
        slot.colored_graph = std::move(g);
      }
    } catch (const GenerationFailureError&) {
      slot.kind = TrialSlot::Kind::gen_failure;
    } catch (...) {
      slot.unexpected = std::current_exception();
    }
  });

  VerificationReport report;
  report.theorem = "rainbow-c4";
  report.mode = "random";
  report.m = m;
  report.n = n;
  report.jobs = jobs;
  report.seed = seed;
  report.trials = trials;
  report.palette = palette;
  report.edge_prob = edge_prob;
  for (std::uint64_t i = 0; i < trials; ++i) {
    TrialSlot& slot = slots[static_cast<std::size_t>(i)];
    if (slot.unexpected) std::rethrow_exception(slot.unexpected);
    switch (slot.kind) {
      case TrialSlot::Kind::gen_failure:
        ++report.generation_failures;
        break;
      case TrialSlot::Kind::with_cycle:
        ++report.instances_examined, ++report.hypothesis_satisfied, ++report.with_cycle;
        switch (slot.route) {
          case GuidedRoute::early_rainbow: ++report.routes.early_rainbow; break;
          case GuidedRoute::lifted: ++report.routes.lifted; break;
          case GuidedRoute::extremal_escape: ++report.routes.extremal_escape; break;
          case GuidedRoute::exhaustive_fallback: ++report.routes.exhaustive_fallback; break;
        }
        if (slot.proof_gap) ++report.proof_gap_count;
        break;
      case TrialSlot::Kind::counterexample:
        ++report.instances_examined, ++report.hypothesis_satisfied;
        report.colored_counterexamples.push_back({i, slot.seed, std::move(*slot.colored_graph)});
        break;
      case TrialSlot::Kind::extremal:
        break;  // not produced in rainbow mode
    }
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

}  // namespace bipc4
