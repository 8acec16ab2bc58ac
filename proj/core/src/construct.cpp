#include "bipc4/construct.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "bipc4/rng.hpp"

namespace bipc4 {

namespace {

constexpr int kAttemptBudget = 100;

bool meets_out_threshold(const OrientedBipartiteGraph& g, Side side, int index) {
  int opposite = side == Side::A ? g.n() : g.m();
  return 3 * g.out_degree({side, index}) >= opposite;
}

bool meets_color_threshold(const ColoredBipartiteGraph& g, Side side, int index) {
  int opposite = side == Side::A ? g.n() : g.m();
  return 5 * color_degree(g, {side, index}) >= 3 * opposite + 8;
}

}  // namespace

OrientedBipartiteGraph gen_dstar(int m, int n) {
  if (m < 3 || n < 3 || m % 3 != 0 || n % 3 != 0)
    throw DivisibilityError("sides must be positive multiples of 3, got m=" + std::to_string(m) +
                            " n=" + std::to_string(n));
  OrientedBipartiteGraph g(m, n);
  const int mb = m / 3;
  const int nb = n / 3;
  auto a_block = [&](int a) { return a / mb; };
  auto b_block = [&](int b) { return b / nb; };
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a_block(a) == b_block(b))
        g.add_arc(a, b, ArcDir::AtoB);  // M_i -> N_i
      else if ((b_block(b) + 1) % 3 == a_block(a))
        g.add_arc(a, b, ArcDir::BtoA);  // N_i -> M_{i+1}
    }
  }
  return g;
}

PaddingResult pad_to_multiple_of_three(const OrientedBipartiteGraph& g) {
  const int add_a = (3 - g.m() % 3) % 3;
  const int add_b = (3 - g.n() % 3) % 3;
  OrientedBipartiteGraph padded(g.m() + add_a, g.n() + add_b);
  for (const Arc& arc : g.arcs()) padded.add_arc(arc.a, arc.b, arc.dir);
  // New vertices get out-arcs to every original opposite vertex and nothing
  // else; in particular no arcs join two new vertices.
  for (int a = g.m(); a < padded.m(); ++a)
    for (int b = 0; b < g.n(); ++b) padded.add_arc(a, b, ArcDir::AtoB);
  for (int b = g.n(); b < padded.n(); ++b)
    for (int a = 0; a < g.m(); ++a) padded.add_arc(a, b, ArcDir::BtoA);
  return {std::move(padded), add_a, add_b};
}

ColoredBipartiteGraph gen_proper_coloring_complete(int n) {
  if (n < 1) throw InvalidVertexError("side size must be positive, got n=" + std::to_string(n));
  ColoredBipartiteGraph g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.add_edge(i, j, (i + j) % n + 1);
  return g;
}

OrientedBipartiteGraph gen_random_oriented(int m, int n, const OrientationProfile& profile,
                                           std::uint64_t seed, bool enforce_hypothesis) {
  if (profile.p_none < 0 || profile.p_a_to_b < 0 || profile.p_b_to_a < 0 ||
      std::abs(profile.p_none + profile.p_a_to_b + profile.p_b_to_a - 1.0) > 1e-9)
    throw Error("orientation profile entries must be nonnegative and sum to 1");

  RandomStream stream(seed);
  VertexRef last_deficient{Side::A, 0};

  for (int attempt = 0; attempt < kAttemptBudget; ++attempt) {
    OrientedBipartiteGraph g(m, n);
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < n; ++b) {
        double u = stream.next_unit();
        if (u < profile.p_none) continue;
        g.add_arc(a, b, u < profile.p_none + profile.p_a_to_b ? ArcDir::AtoB : ArcDir::BtoA);
      }
    }
    if (!enforce_hypothesis) return g;

    // Repair pass: visit vertices in scan order and raise each deficient
    // out-degree by adding arcs to random non-adjacent opposite vertices.
    // Arcs are only ever added, so vertices repaired earlier stay repaired.
    bool stuck = false;
    for (Side side : {Side::A, Side::B}) {
      int count = side == Side::A ? m : n;
      int opposite = side == Side::A ? n : m;
      for (int v = 0; v < count && !stuck; ++v) {
        while (!meets_out_threshold(g, side, v)) {
          std::vector<int> candidates;
          for (int u = 0; u < opposite; ++u) {
            bool adjacent = side == Side::A ? g.has_pair(v, u) : g.has_pair(u, v);
            if (!adjacent) candidates.push_back(u);
          }
          if (candidates.empty()) {
            last_deficient = {side, v};
            stuck = true;
            break;
          }
          int u = candidates[stream.next_below(candidates.size())];
          if (side == Side::A)
            g.add_arc(v, u, ArcDir::AtoB);
          else
            g.add_arc(u, v, ArcDir::BtoA);
        }
      }
      if (stuck) break;
    }
    if (!stuck) return g;
  }
  throw GenerationFailureError(
      "could not meet the out-degree hypothesis within " + std::to_string(kAttemptBudget) +
          " attempts (seed " + std::to_string(seed) + ")",
      seed, static_cast<int>(last_deficient.side), last_deficient.index);
}

ColoredBipartiteGraph gen_random_colored(int m, int n, double edge_prob, int palette,
                                         std::uint64_t seed, bool enforce_hypothesis) {
  if (edge_prob < 0.0 || edge_prob > 1.0)
    throw Error("edge_prob must lie in [0, 1]");
  if (palette < 1) throw Error("palette must be at least 1");

  RandomStream stream(seed);
  VertexRef last_deficient{Side::A, 0};

  for (int attempt = 0; attempt < kAttemptBudget; ++attempt) {
    ColoredBipartiteGraph g(m, n);
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < n; ++b) {
        if (stream.next_unit() >= edge_prob) continue;
        g.add_edge(a, b, 1 + static_cast<int>(stream.next_below(
                             static_cast<std::uint64_t>(palette))));
      }
    }
    if (!enforce_hypothesis) return g;

    // Pure reject-and-retry: accepted samples are exact draws from the
    // conditional distribution, never patched-up ones.
    bool deficient = false;
    for (Side side : {Side::A, Side::B}) {
      int count = side == Side::A ? m : n;
      for (int v = 0; v < count; ++v) {
        if (!meets_color_threshold(g, side, v)) {
          last_deficient = {side, v};
          deficient = true;
          break;
        }
      }
      if (deficient) break;
    }
    if (!deficient) return g;
  }
  throw GenerationFailureError(
      "could not meet the color-degree hypothesis within " + std::to_string(kAttemptBudget) +
          " attempts (seed " + std::to_string(seed) + "; vertex " +
          (last_deficient.side == Side::A ? "A[" : "B[") + std::to_string(last_deficient.index) +
          "] was deficient on the last attempt)",
      seed, static_cast<int>(last_deficient.side), last_deficient.index);
}

}  // namespace bipc4
