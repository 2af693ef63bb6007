#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bdc/exact.hpp"

namespace bdc {

struct Edge {
  int u = 0;
  int v = 0;
  bool operator==(const Edge&) const = default;
};

/// Undirected multigraph on vertices 0..n-1. Loops are representable so
/// that validation code can detect them.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int vertex_count) : n_(vertex_count) {}

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  int add_vertex() { return n_++; }
  int add_edge(int u, int v);

  int degree(int v) const;  // loops count twice
  int multiplicity(int u, int v) const;
  bool has_loop() const;
  bool is_connected() const;
  bool is_bipartite() const;
  bool is_forest() const;

  /// Full Laplacian with the convention used for Goeritz forms:
  /// L(i,i) = -deg(i), L(i,j) = multiplicity(i,j). Loops are ignored.
  IntMatrix signed_laplacian() const;

  /// Subgraph induced on `keep` (vertices renumbered in the given order).
  Multigraph induced(std::span<const int> keep) const;

  /// Connected components, each sorted, ordered by smallest member.
  std::vector<std::vector<int>> components() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// A graph with a distinguished (marked) vertex, e.g. a Tait graph.
struct MarkedGraph {
  Multigraph graph;
  int marked = 0;

  /// Unmarked vertices in increasing order; this is the Goeritz index order.
  std::vector<int> unmarked() const;
};

/// Number of spanning trees by bundle deletion-contraction with memoization.
/// Independent of any determinant code. Throws Disconnected.
BigInt spanning_tree_count(const Multigraph& g);

/// Plane multigraph given by a rotation system. Edge e has darts 2e (from
/// edges()[e].u) and 2e+1 (from edges()[e].v); rotation(v) lists the darts
/// leaving v in counterclockwise order.
class PlaneGraph {
 public:
  PlaneGraph() = default;
  explicit PlaneGraph(int vertex_count) : rot_(static_cast<std::size_t>(vertex_count)) {}

  int vertex_count() const noexcept { return static_cast<int>(rot_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<int>& rotation(int v) const { return rot_.at(static_cast<std::size_t>(v)); }

  int add_vertex();
  /// Appends the new darts at the end of both rotations.
  int add_edge(int u, int v);
  /// Inserts the new edge so that its dart at u sits immediately after
  /// `after_u` (ccw) and its dart at v immediately after `after_v`. Pass -1
  /// for a vertex with an empty rotation.
  int insert_edge(int u, int after_u, int v, int after_v);
  void set_rotation(int v, std::vector<int> darts);

  static int edge_of(int dart) noexcept { return dart >> 1; }
  static int twin(int dart) noexcept { return dart ^ 1; }
  int tail(int dart) const;
  int head(int dart) const;

  /// Position of a dart inside rotation(tail(dart)).
  int position(int dart) const;
  int next_ccw(int dart) const;
  int prev_ccw(int dart) const;

  /// Face boundary walks with the face on the left. Each face is the list
  /// of darts d such that the corner (tail(d), between d and next_ccw(d))
  /// belongs to the face. Faces are discovered by scanning vertices in
  /// order and each rotation in order, so ids are deterministic.
  std::vector<std::vector<int>> faces() const;

  /// face_of_dart()[d] = index into faces().
  std::vector<int> face_of_dart() const;

  /// V - E + F == 1 + (#components), counting isolated vertices as
  /// components with one face each.
  bool satisfies_euler() const;
  bool rotations_consistent() const;

  Multigraph abstract() const;

  /// Keeps only the listed vertices (renumbered in order) and the edges
  /// between them, restricting rotations. Returns the map old edge -> new
  /// edge (-1 when dropped) through `edge_map` when non-null.
  PlaneGraph induced(std::span<const int> keep, std::vector<int>* edge_map = nullptr) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> rot_;
};

}  // namespace bdc
