#include "bipc4/bigraph.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>

namespace bipc4 {

namespace {

std::string vertex_name(Side side, int index) {
  return (side == Side::A ? "A[" : "B[") + std::to_string(index) + "]";
}

void require_in_range(int index, int limit, Side side) {
  if (index < 0 || index >= limit)
    throw InvalidVertexError(vertex_name(side, index) + " out of range (side size " +
                             std::to_string(limit) + ")");
}

// Empty sides are allowed: an auxiliary orientation built from truncated
// color neighborhoods can legitimately have no vertices on a side.
void require_valid_sides(int m, int n) {
  if (m < 0 || n < 0)
    throw InvalidVertexError("side sizes must be nonnegative, got m=" + std::to_string(m) +
                             " n=" + std::to_string(n));
}

}  // namespace

OrientedBipartiteGraph::OrientedBipartiteGraph(int m, int n)
    : m_(m), n_(n), out_(m, n), in_(m, n) {
  require_valid_sides(m, n);
}

void OrientedBipartiteGraph::add_arc(int a, int b, ArcDir dir) {
  require_in_range(a, m_, Side::A);
  require_in_range(b, n_, Side::B);
  if (has_pair(a, b))
    throw Error("pair (" + std::to_string(a) + ", " + std::to_string(b) +
                ") already carries an arc");
  (dir == ArcDir::AtoB ? out_ : in_).set(a, b);
  raw_.push_back({a, b, dir});
}

OrientedBipartiteGraph OrientedBipartiteGraph::from_arcs_unchecked(int m, int n,
                                                                   std::vector<Arc> arcs) {
  OrientedBipartiteGraph g(m, n);
  for (const Arc& arc : arcs) {
    if (arc.a >= 0 && arc.a < m && arc.b >= 0 && arc.b < n)
      (arc.dir == ArcDir::AtoB ? g.out_ : g.in_).set(arc.a, arc.b);
  }
  g.raw_ = std::move(arcs);
  return g;
}

int OrientedBipartiteGraph::out_degree(VertexRef v) const {
  if (v.side == Side::A) {
    require_in_range(v.index, m_, Side::A);
    return out_.popcount_row(v.index);
  }
  require_in_range(v.index, n_, Side::B);
  int count = 0;
  for (int a = 0; a < m_; ++a) count += in_.test(a, v.index) ? 1 : 0;
  return count;
}

int OrientedBipartiteGraph::in_degree(VertexRef v) const {
  if (v.side == Side::A) {
    require_in_range(v.index, m_, Side::A);
    return in_.popcount_row(v.index);
  }
  require_in_range(v.index, n_, Side::B);
  int count = 0;
  for (int a = 0; a < m_; ++a) count += out_.test(a, v.index) ? 1 : 0;
  return count;
}

int OrientedBipartiteGraph::arc_count() const {
  int total = 0;
  for (int a = 0; a < m_; ++a) total += out_.popcount_row(a) + in_.popcount_row(a);
  return total;
}

std::vector<Arc> OrientedBipartiteGraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(static_cast<std::size_t>(arc_count()));
  for (int a = 0; a < m_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (out_.test(a, b)) result.push_back({a, b, ArcDir::AtoB});
      else if (in_.test(a, b)) result.push_back({a, b, ArcDir::BtoA});
    }
  }
  return result;
}

ColoredBipartiteGraph::ColoredBipartiteGraph(int m, int n)
    : m_(m), n_(n), color_(static_cast<std::size_t>(m) * static_cast<std::size_t>(n), 0),
      adj_(m, n) {
  require_valid_sides(m, n);
}

void ColoredBipartiteGraph::add_edge(int a, int b, int color) {
  require_in_range(a, m_, Side::A);
  require_in_range(b, n_, Side::B);
  if (color <= 0)
    throw Error("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                ") has nonpositive color " + std::to_string(color));
  if (has_edge(a, b))
    throw Error("edge (" + std::to_string(a) + ", " + std::to_string(b) + ") already present");
  color_[cell(a, b)] = color;
  adj_.set(a, b);
  raw_.push_back({a, b, color});
}

ColoredBipartiteGraph ColoredBipartiteGraph::from_edges_unchecked(int m, int n,
                                                                  std::vector<ColoredEdge> edges) {
  ColoredBipartiteGraph g(m, n);
  for (const ColoredEdge& e : edges) {
    if (e.a >= 0 && e.a < m && e.b >= 0 && e.b < n && e.color > 0) {
      g.color_[g.cell(e.a, e.b)] = e.color;
      g.adj_.set(e.a, e.b);
    }
  }
  g.raw_ = std::move(edges);
  return g;
}

int ColoredBipartiteGraph::degree(VertexRef v) const {
  if (v.side == Side::A) {
    require_in_range(v.index, m_, Side::A);
    return adj_.popcount_row(v.index);
  }
  require_in_range(v.index, n_, Side::B);
  int count = 0;
  for (int a = 0; a < m_; ++a) count += adj_.test(a, v.index) ? 1 : 0;
  return count;
}

int ColoredBipartiteGraph::edge_count() const {
  int total = 0;
  for (int a = 0; a < m_; ++a) total += adj_.popcount_row(a);
  return total;
}

std::vector<ColoredEdge> ColoredBipartiteGraph::edges() const {
  std::vector<ColoredEdge> result;
  result.reserve(static_cast<std::size_t>(edge_count()));
  for (int a = 0; a < m_; ++a)
    for (int b = 0; b < n_; ++b)
      if (int c = color_[cell(a, b)]; c != 0) result.push_back({a, b, c});
  return result;
}

int color_degree(const ColoredBipartiteGraph& g, VertexRef v) {
  std::unordered_set<int> colors;
  if (v.side == Side::A) {
    require_in_range(v.index, g.m(), Side::A);
    for (int b = 0; b < g.n(); ++b)
      if (int c = g.color(v.index, b); c != 0) colors.insert(c);
  } else {
    require_in_range(v.index, g.n(), Side::B);
    for (int a = 0; a < g.m(); ++a)
      if (int c = g.color(a, v.index); c != 0) colors.insert(c);
  }
  return static_cast<int>(colors.size());
}

std::vector<int> color_neighborhood(const ColoredBipartiteGraph& g, VertexRef v,
                                    std::optional<int> must_include) {
  const bool on_a = v.side == Side::A;
  require_in_range(v.index, on_a ? g.m() : g.n(), on_a ? Side::A : Side::B);
  const int opposite = on_a ? g.n() : g.m();
  auto edge_color = [&](int u) { return on_a ? g.color(v.index, u) : g.color(u, v.index); };

  std::vector<int> chosen;
  std::unordered_set<int> used_colors;
  if (must_include) {
    int u = *must_include;
    if (u < 0 || u >= opposite || edge_color(u) == 0)
      throw InvalidVertexError("must_include vertex " + std::to_string(u) +
                               " is not a neighbor of " +
                               vertex_name(v.side, v.index));
    chosen.push_back(u);
    used_colors.insert(edge_color(u));
  }
  // One representative per color: ascending scan keeps the first vertex seen
  // for each color not yet represented.
  for (int u = 0; u < opposite; ++u) {
    int c = edge_color(u);
    if (c != 0 && used_colors.insert(c).second) chosen.push_back(u);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::vector<Violation> validate(const OrientedBipartiteGraph& g) {
  std::vector<Violation> violations;
  std::set<std::pair<int, int>> forward;  // pairs seen with direction AtoB
  std::set<std::pair<int, int>> backward;
  for (const Arc& arc : g.raw_arcs()) {
    if (arc.a < 0 || arc.a >= g.m() || arc.b < 0 || arc.b >= g.n()) {
      violations.push_back({Violation::Kind::index_out_of_range, arc.a, arc.b,
                            "arc endpoint outside (" + std::to_string(g.m()) + ", " +
                                std::to_string(g.n()) + ")"});
      continue;
    }
    std::pair<int, int> key{arc.a, arc.b};
    auto& same_dir = arc.dir == ArcDir::AtoB ? forward : backward;
    auto& other_dir = arc.dir == ArcDir::AtoB ? backward : forward;
    if (same_dir.contains(key)) {
      violations.push_back({Violation::Kind::duplicate_pair, arc.a, arc.b,
                            "pair listed more than once with the same direction"});
    } else if (other_dir.contains(key)) {
      violations.push_back(
          {Violation::Kind::digon, arc.a, arc.b, "both orientations present on one pair"});
    }
    same_dir.insert(key);
  }
  return violations;
}

std::vector<Violation> validate(const ColoredBipartiteGraph& g) {
  std::vector<Violation> violations;
  std::set<std::pair<int, int>> seen;
  for (const ColoredEdge& e : g.raw_edges()) {
    if (e.a < 0 || e.a >= g.m() || e.b < 0 || e.b >= g.n()) {
      violations.push_back({Violation::Kind::index_out_of_range, e.a, e.b,
                            "edge endpoint outside (" + std::to_string(g.m()) + ", " +
                                std::to_string(g.n()) + ")"});
      continue;
    }
    if (e.color <= 0)
      violations.push_back({Violation::Kind::nonpositive_color, e.a, e.b,
                            "color " + std::to_string(e.color) + " is not positive"});
    if (!seen.insert({e.a, e.b}).second)
      violations.push_back(
          {Violation::Kind::duplicate_pair, e.a, e.b, "pair listed more than once"});
  }
  return violations;
}

void verify_directed_c4(const OrientedBipartiteGraph& g, const DirectedC4Certificate& cert) {
  auto in_range = [&](int a_or_b, int limit) { return a_or_b >= 0 && a_or_b < limit; };
  if (!in_range(cert.a1, g.m()) || !in_range(cert.a2, g.m()) || !in_range(cert.b1, g.n()) ||
      !in_range(cert.b2, g.n()))
    throw InvalidCertificateError("cycle vertex out of range");
  if (cert.a1 == cert.a2 || cert.b1 == cert.b2)
    throw InvalidCertificateError("degenerate cycle: repeated vertex on one side");
  auto require_arc = [&](int a, int b, ArcDir dir, const char* name) {
    if (!g.has_arc(a, b, dir))
      throw InvalidCertificateError(std::string("missing arc ") + name);
  };
  require_arc(cert.a1, cert.b1, ArcDir::AtoB, "a1->b1");
  require_arc(cert.a2, cert.b1, ArcDir::BtoA, "b1->a2");
  require_arc(cert.a2, cert.b2, ArcDir::AtoB, "a2->b2");
  require_arc(cert.a1, cert.b2, ArcDir::BtoA, "b2->a1");
}

void verify_rainbow_c4(const ColoredBipartiteGraph& g, const RainbowC4Certificate& cert) {
  auto in_range = [&](int v, int limit) { return v >= 0 && v < limit; };
  if (!in_range(cert.a1, g.m()) || !in_range(cert.a2, g.m()) || !in_range(cert.b1, g.n()) ||
      !in_range(cert.b2, g.n()))
    throw InvalidCertificateError("cycle vertex out of range");
  if (cert.a1 == cert.a2 || cert.b1 == cert.b2)
    throw InvalidCertificateError("degenerate cycle: repeated vertex on one side");
  // Edge order matches the stored color order: a1b1, a2b1, a2b2, a1b2.
  const std::array<std::pair<int, int>, 4> cycle_edges{{{cert.a1, cert.b1},
                                                        {cert.a2, cert.b1},
                                                        {cert.a2, cert.b2},
                                                        {cert.a1, cert.b2}}};
  for (int k = 0; k < 4; ++k) {
    auto [a, b] = cycle_edges[static_cast<std::size_t>(k)];
    int actual = g.color(a, b);
    if (actual == 0)
      throw InvalidCertificateError("missing edge (" + std::to_string(a) + ", " +
                                    std::to_string(b) + ")");
    if (actual != cert.colors[static_cast<std::size_t>(k)])
      throw InvalidCertificateError("color mismatch on edge (" + std::to_string(a) + ", " +
                                    std::to_string(b) + "): graph has " +
                                    std::to_string(actual) + ", certificate claims " +
                                    std::to_string(cert.colors[static_cast<std::size_t>(k)]));
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (cert.colors[static_cast<std::size_t>(i)] == cert.colors[static_cast<std::size_t>(j)])
        throw InvalidCertificateError("not rainbow: color " +
                                      std::to_string(cert.colors[static_cast<std::size_t>(i)]) +
                                      " repeats");
}

}  // namespace bipc4
