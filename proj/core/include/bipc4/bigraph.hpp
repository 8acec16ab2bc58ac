#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bipc4/bitrows.hpp"
#include "bipc4/errors.hpp"

namespace bipc4 {

/// Which side of the bipartition a vertex lives on. Side A has m vertices
/// (indices 0..m-1), side B has n vertices (indices 0..n-1).
enum class Side : int { A = 0, B = 1 };

struct VertexRef {
  Side side;
  int index;
  friend bool operator==(const VertexRef&, const VertexRef&) = default;
};

/// Direction of an arc between a in A and b in B.
enum class ArcDir : int { AtoB = 0, BtoA = 1 };

struct Arc {
  int a;
  int b;
  ArcDir dir;
  friend bool operator==(const Arc&, const Arc&) = default;
};

struct ColoredEdge {
  int a;
  int b;
  int color;  // positive
  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

/// A structural problem found by validate().
struct Violation {
  enum class Kind {
    index_out_of_range,
    digon,            // both orientations present on the same pair
    duplicate_pair,   // same (a,b) listed more than once
    nonpositive_color
  };
  Kind kind;
  int a;
  int b;
  std::string detail;
};

/// An orientation of a subgraph of the complete bipartite graph K_{m,n}:
/// each pair (a,b) carries at most one arc, either a->b or b->a.
///
/// Adjacency is stored as bit rows over side B: out_ bit (a,b) means arc
/// a->b, in_ bit (a,b) means arc b->a. The raw arc list is retained in
/// insertion order so validate() can report duplicates and digons exactly
/// as they were supplied.
class OrientedBipartiteGraph {
 public:
  OrientedBipartiteGraph(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }

  /// Adds an arc, throwing InvalidVertexError on out-of-range endpoints
  /// and Error on a duplicate pair or digon.
  void add_arc(int a, int b, ArcDir dir);

  /// Builds a graph keeping every arc in the list (including duplicates and
  /// digons) for later inspection by validate(). Out-of-range arcs are kept
  /// in the raw list but excluded from the adjacency matrices.
  static OrientedBipartiteGraph from_arcs_unchecked(int m, int n, std::vector<Arc> arcs);

  bool has_arc(int a, int b, ArcDir dir) const {
    return dir == ArcDir::AtoB ? out_.test(a, b) : in_.test(a, b);
  }
  bool has_pair(int a, int b) const { return out_.test(a, b) || in_.test(a, b); }

  int out_degree(VertexRef v) const;
  int in_degree(VertexRef v) const;

  int arc_count() const;

  /// Arcs sorted by (a, b), derived from the adjacency matrices.
  std::vector<Arc> arcs() const;

  /// The arc list exactly as supplied, for validation diagnostics.
  const std::vector<Arc>& raw_arcs() const { return raw_; }

  /// Row over side B of out-neighbors of a in A (bit b set iff a->b).
  std::span<const std::uint64_t> out_row(int a) const { return out_.row(a); }
  /// Row over side B of in-neighbors of a in A (bit b set iff b->a).
  std::span<const std::uint64_t> in_row(int a) const { return in_.row(a); }

  /// Structural equality: same sizes and same arc set.
  friend bool operator==(const OrientedBipartiteGraph& x, const OrientedBipartiteGraph& y) {
    return x.m_ == y.m_ && x.n_ == y.n_ && x.out_ == y.out_ && x.in_ == y.in_;
  }

 private:
  int m_;
  int n_;
  detail::BitRows out_;  // rows: side A, bits: side B; a->b
  detail::BitRows in_;   // rows: side A, bits: side B; b->a
  std::vector<Arc> raw_;
};

/// An edge coloring of a subgraph of K_{m,n} with positive integer colors.
/// color(a, b) == 0 encodes absence of the edge.
class ColoredBipartiteGraph {
 public:
  ColoredBipartiteGraph(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }

  /// Adds an edge, throwing InvalidVertexError on out-of-range endpoints and
  /// Error on a duplicate pair or nonpositive color.
  void add_edge(int a, int b, int color);

  /// Keeps every listed edge for validate(); out-of-range or nonpositive
  /// entries stay in the raw list but not in the color matrix.
  static ColoredBipartiteGraph from_edges_unchecked(int m, int n, std::vector<ColoredEdge> edges);

  bool has_edge(int a, int b) const { return color_[cell(a, b)] != 0; }
  int color(int a, int b) const { return color_[cell(a, b)]; }

  int degree(VertexRef v) const;
  int edge_count() const;

  /// Edges sorted by (a, b), derived from the color matrix.
  std::vector<ColoredEdge> edges() const;

  const std::vector<ColoredEdge>& raw_edges() const { return raw_; }

  /// Row over the opposite side of neighbors of a side-A vertex.
  std::span<const std::uint64_t> adj_row(int a) const { return adj_.row(a); }

  friend bool operator==(const ColoredBipartiteGraph& x, const ColoredBipartiteGraph& y) {
    return x.m_ == y.m_ && x.n_ == y.n_ && x.color_ == y.color_;
  }

 private:
  std::size_t cell(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(b);
  }

  int m_;
  int n_;
  std::vector<int> color_;  // m*n, 0 = absent
  detail::BitRows adj_;     // rows: side A, bits: side B
  std::vector<ColoredEdge> raw_;
};

/// Number of distinct colors on edges at v.
int color_degree(const ColoredBipartiteGraph& g, VertexRef v);

/// One neighbor per distinct color at v, scanning neighbors in ascending
/// index order and keeping the first vertex seen for each color. When
/// must_include is set, that neighbor is seeded first so it represents its
/// color class; it must be adjacent to v or InvalidVertexError is thrown.
std::vector<int> color_neighborhood(const ColoredBipartiteGraph& g, VertexRef v,
                                    std::optional<int> must_include = std::nullopt);

/// Structural validation; an empty result means the graph is well-formed.
std::vector<Violation> validate(const OrientedBipartiteGraph& g);
std::vector<Violation> validate(const ColoredBipartiteGraph& g);

/// Directed 4-cycle a1 -> b1 -> a2 -> b2 -> a1 with a1, a2 in A and
/// b1, b2 in B.
struct DirectedC4Certificate {
  int a1;
  int b1;
  int a2;
  int b2;
  friend bool operator==(const DirectedC4Certificate&, const DirectedC4Certificate&) = default;
};

/// 4-cycle a1 - b1 - a2 - b2 - a1 whose four edge colors, listed in cycle
/// order (a1b1, a2b1, a2b2, a1b2), are pairwise distinct.
struct RainbowC4Certificate {
  int a1;
  int b1;
  int a2;
  int b2;
  std::array<int, 4> colors;
  friend bool operator==(const RainbowC4Certificate&, const RainbowC4Certificate&) = default;
};

/// Checks that the four arcs of the claimed cycle are present. Returns
/// normally on success and throws InvalidCertificateError naming the first
/// missing arc otherwise.
void verify_directed_c4(const OrientedBipartiteGraph& g, const DirectedC4Certificate& cert);

/// Checks that the four edges exist, carry the stated colors, and that the
/// colors are pairwise distinct. Throws InvalidCertificateError otherwise.
void verify_rainbow_c4(const ColoredBipartiteGraph& g, const RainbowC4Certificate& cert);

}  // namespace bipc4
