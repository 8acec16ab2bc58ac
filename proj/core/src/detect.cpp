#include "bipc4/detect.hpp"

#include "bipc4/bitrows.hpp"

namespace bipc4 {

std::optional<DirectedC4Certificate> find_directed_c4(const OrientedBipartiteGraph& g) {
  // A directed C4 through a1 and a2 exists iff N+(a1) & N-(a2) and
  // N+(a2) & N-(a1) are both nonempty; taking the least element of each
  // yields the lexicographically least (a1, a2, b1, b2) witness.
  for (int a1 = 0; a1 + 1 < g.m(); ++a1) {
    for (int a2 = a1 + 1; a2 < g.m(); ++a2) {
      int b1 = detail::first_common_bit(g.out_row(a1), g.in_row(a2));
      if (b1 < 0) continue;
      int b2 = detail::first_common_bit(g.out_row(a2), g.in_row(a1));
      if (b2 < 0) continue;
      return DirectedC4Certificate{a1, b1, a2, b2};
    }
  }
  return std::nullopt;
}

std::optional<RainbowC4Certificate> find_rainbow_c4_exhaustive(const ColoredBipartiteGraph& g) {
  // First hit in lexicographic (a1, a2, b1, b2) order with a1 < a2 and
  // b1 < b2; the b1 < b2 restriction drops only reflections of the same
  // cycle, so this is the least witness outright.
  for (int a1 = 0; a1 + 1 < g.m(); ++a1) {
    for (int a2 = a1 + 1; a2 < g.m(); ++a2) {
      for (int b1 = 0; b1 + 1 < g.n(); ++b1) {
        int c1 = g.color(a1, b1);
        if (c1 == 0) continue;
        int c2 = g.color(a2, b1);
        if (c2 == 0 || c2 == c1) continue;
        for (int b2 = b1 + 1; b2 < g.n(); ++b2) {
          int c3 = g.color(a2, b2);
          if (c3 == 0 || c3 == c1 || c3 == c2) continue;
          int c4 = g.color(a1, b2);
          if (c4 == 0 || c4 == c1 || c4 == c2 || c4 == c3) continue;
          return RainbowC4Certificate{a1, b1, a2, b2, {c1, c2, c3, c4}};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace bipc4
