#pragma once

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tourney/vertex_set.hpp"

namespace tourney {

/// Raised when an input violates a documented precondition.
class Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// A directed triangle t[0] -> t[1] -> t[2] -> t[0].
using Triangle = std::array<Vertex, 3>;

/// Complete oriented graph on vertices 0..n-1, stored as out- and in-rows.
class Tournament {
 public:
  Tournament() = default;

  /// Validates an n x n relation. Throws Error naming the offending pair on
  /// self-loops, missing arcs and digons.
  static Tournament from_matrix(const std::vector<std::vector<bool>>& arcs);
  /// 0 -> 1 -> ... -> n-1 with every arc pointing to the larger id.
  static Tournament transitive(int n);
  static Tournament single_vertex() { return transitive(1); }

  int size() const { return static_cast<int>(out_.size()); }
  bool arc(Vertex u, Vertex v) const { return out_[idx(u)].contains(v); }
  const VertexSet& out(Vertex v) const { return out_[idx(v)]; }
  const VertexSet& in(Vertex v) const { return in_[idx(v)]; }
  int out_degree(Vertex v) const { return out_[idx(v)].count(); }
  VertexSet all() const { return VertexSet::full(size()); }
  bool valid_vertex(Vertex v) const { return v >= 0 && v < size(); }

  friend bool operator==(const Tournament& a, const Tournament& b) { return a.out_ == b.out_; }

 private:
  friend class TournamentBuilder;
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

/// Incremental construction; every pair must be oriented exactly once
/// before build(). Re-orienting a pair overwrites the earlier direction.
class TournamentBuilder {
 public:
  explicit TournamentBuilder(int n);

  int size() const { return static_cast<int>(out_.size()); }
  void add_arc(Vertex u, Vertex v);
  /// All arcs from every vertex of `from` to every vertex of `to`.
  void add_all(const VertexSet& from, const VertexSet& to);
  /// Copies the arcs of t onto the vertices offset..offset+|t|-1.
  void embed(const Tournament& t, Vertex offset);

  Tournament build() &&;

 private:
  std::vector<VertexSet> out_;
};

/// Dense coloring: entry v is the color id of vertex v.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::vector<int> colors);

  int size() const { return static_cast<int>(colors_.size()); }
  int operator[](Vertex v) const { return colors_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& colors() const { return colors_; }
  /// Number of distinct ids present.
  int palette_size() const { return palette_size_; }
  /// Vertices of each color, indexed by color id (ids may leave gaps).
  std::vector<VertexSet> classes() const;
  /// Same partition with ids renumbered 0.. in order of first appearance.
  Coloring compacted() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<int> colors_;
  int palette_size_ = 0;
};

struct Induced {
  Tournament tournament;
  /// to_parent[i] is the parent id of induced vertex i (ascending).
  std::vector<Vertex> to_parent;
};

void check_subset(const Tournament& t, const VertexSet& s);

Induced induced(const Tournament& t, const VertexSet& s);

/// N(uv) = N^-(u) ∩ N^+(v): the vertices closing a triangle with arc u->v.
VertexSet arc_neighborhood(const Tournament& t, Vertex u, Vertex v);
/// N^±(S): vertices outside S with an in- and an out-neighbor inside S.
VertexSet mixed_neighborhood(const Tournament& t, const VertexSet& s);

/// nullopt iff T[S] is acyclic; otherwise a directed triangle inside S.
std::optional<Triangle> transitivity_check(const Tournament& t, const VertexSet& s);
bool is_transitive(const Tournament& t, const VertexSet& s);
bool is_transitive(const Tournament& t);

struct MonochromaticTriangle {
  Triangle triangle;
  int color = 0;
};

/// nullopt iff every color class is acyclic. Throws Error on length mismatch.
std::optional<MonochromaticTriangle> verify_coloring(const Tournament& t, const Coloring& c);

/// Strongly connected components, source component first: every arc between
/// two components points from the earlier to the later one.
std::vector<VertexSet> scc_decomposition(const Tournament& t);
/// Components of T[scope], same order convention.
std::vector<VertexSet> scc_decomposition(const Tournament& t, const VertexSet& scope);

/// BFS path u -> v exploring out-neighbors in increasing id order.
std::optional<std::vector<Vertex>> shortest_path(const Tournament& t, Vertex u, Vertex v);
/// Same, restricted to paths inside T[scope].
std::optional<std::vector<Vertex>> shortest_path(const Tournament& t, Vertex u, Vertex v, const VertexSet& scope);
/// Breadth-first distances from u; -1 marks unreachable vertices.
std::vector<int> distances_from(const Tournament& t, Vertex u);
std::vector<int> distances_from(const Tournament& t, Vertex u, const VertexSet& scope);

/// Δ(T1,T2,T3): T1 ⇒ T2 ⇒ T3 ⇒ T1, vertices laid out T1, T2, T3.
Tournament delta_compose(const Tournament& t1, const Tournament& t2, const Tournament& t3);

/// First-fit coloring of T[S]: each vertex takes the smallest color that
/// keeps its class acyclic. Indexed by position in S.members().
Coloring greedy_coloring(const Tournament& t, const VertexSet& s);

/// Expands per-subset colorings into one coloring of T. Entry i of `parts`
/// colors the members of `subsets[i]` (in increasing id order) and is
/// shifted by `offsets[i]`.
Coloring assemble(int n, const std::vector<VertexSet>& subsets,
                  const std::vector<Coloring>& parts, const std::vector<int>& offsets);

}  // namespace tourney
