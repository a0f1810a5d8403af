#pragma once

#include <array>
#include <utility>
#include <vector>

#include "tourney/core.hpp"

namespace tourney {

/// Simple undirected graph. Edges are stored normalized (u < v), sorted and
/// unique.
class Graph {
 public:
  Graph() = default;
  /// Throws Error on self-loops, out-of-range ids or duplicate edges.
  Graph(int n, std::vector<std::pair<int, int>> edges);

  static Graph complete(int n);
  static Graph cycle(int n);

  int size() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool has_edge(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

using GraphColoring = std::vector<int>;

/// True when no edge joins two vertices of the same color.
bool is_proper(const Graph& g, const GraphColoring& colors);
int palette_size(const GraphColoring& colors);

/// 3-uniform hypergraph. Edges keep their input order and vertex order; the
/// order inside an edge fixes triangle orientation in the reductions.
class Hypergraph3 {
 public:
  using Edge = std::array<int, 3>;

  Hypergraph3() = default;
  /// Throws Error on repeated vertices inside an edge, out-of-range ids or
  /// duplicate edges (as sets).
  Hypergraph3(int n, std::vector<Edge> edges);

  /// All C(n,3) triples in lexicographic order.
  static Hypergraph3 complete(int n);
  /// The Fano plane on 7 points.
  static Hypergraph3 fano();

  int size() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const Hypergraph3&, const Hypergraph3&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// True when no hyperedge is monochromatic.
bool is_proper(const Hypergraph3& h, const std::vector<int>& colors);

/// Bipartite graph between X = {0..left-1} and Y = {0..right-1}.
struct BipartiteGraph {
  int left = 0;
  int right = 0;
  /// adjacency[x][y]
  std::vector<std::vector<bool>> adjacency;

  BipartiteGraph() = default;
  BipartiteGraph(int l, int r)
      : left(l), right(r), adjacency(static_cast<std::size_t>(l), std::vector<bool>(static_cast<std::size_t>(r), false)) {}
  bool edge(int x, int y) const { return adjacency[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }
  void set(int x, int y, bool e = true) { adjacency[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = e; }
};

}  // namespace tourney
