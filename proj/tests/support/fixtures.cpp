#include "support/fixtures.hpp"

#include "bipc4/rng.hpp"

namespace bipc4::test {

ColoredBipartiteGraph fixture_lifted_14() {
  ColoredBipartiteGraph g(14, 14);
  g.add_edge(0, 0, 1);                                  // anchor, c0 = 1
  for (int i = 1; i <= 9; ++i) g.add_edge(i, 0, 1 + i);   // anchor column: 2..10
  for (int j = 1; j <= 9; ++j) g.add_edge(0, j, 10 + j);  // anchor row: 11..19
  // Interior: diagonal carries c0; otherwise the color copies the anchor row
  // (an A-to-B arc) or the anchor column (a B-to-A arc) by circulant offset.
  for (int i = 1; i <= 9; ++i)
    for (int j = 1; j <= 9; ++j) {
      int d = ((j - i) % 9 + 9) % 9;
      if (d == 0)
        g.add_edge(i, j, 1);
      else if (d <= 4)
        g.add_edge(i, j, 10 + j);
      else
        g.add_edge(i, j, 1 + i);
    }
  // Fresh-color padding lifts every core vertex to color degree exactly 10
  // and the four extra vertices per side well past it.
  for (int i = 1; i <= 9; ++i)
    for (int t = 1; t <= 4; ++t) g.add_edge(i, 9 + t, 19 + 4 * (i - 1) + t);  // 20..55
  for (int u = 1; u <= 4; ++u)
    for (int j = 1; j <= 9; ++j) g.add_edge(9 + u, j, 55 + 9 * (u - 1) + j);  // 56..91
  for (int u = 1; u <= 4; ++u)
    for (int t = 1; t <= 4; ++t) g.add_edge(9 + u, 9 + t, 91 + 4 * (u - 1) + t);  // 92..107
  return g;
}

ColoredBipartiteGraph fixture_escape_9() {
  ColoredBipartiteGraph g(9, 9);
  g.add_edge(0, 0, 1);                                 // anchor, c0 = 1
  for (int i = 1; i <= 6; ++i) g.add_edge(i, 0, 1 + i);  // anchor column: 2..7
  for (int j = 1; j <= 6; ++j) g.add_edge(0, j, 7 + j);  // anchor row: 8..13
  // Extremal pattern on the 6x6 interior with blocks {0,1},{2,3},{4,5} per
  // side (local index = global - 1): M_t -> N_t edges copy the anchor row,
  // N_t -> M_{t+1} edges copy the anchor column.
  for (int li = 0; li < 6; ++li)
    for (int lj = 0; lj < 6; ++lj) {
      if (li / 2 == lj / 2)
        g.add_edge(li + 1, lj + 1, 7 + (lj + 1));  // arc A-to-B
      else if (li / 2 == (lj / 2 + 1) % 3)
        g.add_edge(li + 1, lj + 1, 1 + (li + 1));  // arc B-to-A
    }
  g.add_edge(1, 3, 1);  // c0 edge on arc-free local pair (0, 2): the escape's close
  return g;
}

ColoredBipartiteGraph planted_context_graph(int m, int n, std::uint64_t seed) {
  ColoredBipartiteGraph g(m, n);
  g.add_edge(0, 0, 1);                                     // anchor, c0 = 1
  for (int i = 1; i < m; ++i) g.add_edge(i, 0, 100 + i);   // distinct column colors
  for (int j = 1; j < n; ++j) g.add_edge(0, j, 200 + j);   // distinct row colors
  RandomStream rng(seed);
  for (int i = 1; i < m; ++i)
    for (int j = 1; j < n; ++j) {
      // Only the three admissible colors ever appear, weighted toward arcs.
      switch (rng.next_below(8)) {
        case 0: break;                            // pair absent
        case 1: g.add_edge(i, j, 1); break;       // skipped: color equals c0
        case 2:
        case 3:
        case 4: g.add_edge(i, j, 200 + j); break;  // matches the row: arc i -> j
        default: g.add_edge(i, j, 100 + i); break; // matches the column: arc j -> i
      }
    }
  return g;
}

}  // namespace bipc4::test
