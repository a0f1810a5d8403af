#pragma once

#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "tourney/core.hpp"
#include "tourney/decomposition.hpp"

// An arc uv is heavy when N(uv) contains a directed triangle; a tournament
// without heavy arcs is light. Every function taking a scope works inside
// T[scope], so "heavy" is then relative to the subtournament.

namespace tourney {

struct HeavyArc {
  Arc arc;
  Triangle witness;
};

struct HeavyArcReport {
  std::vector<HeavyArc> heavy_arcs;
};

/// Witness triangle inside N(uv), or nullopt. Throws Error unless u->v.
std::optional<Triangle> is_heavy_arc(const Tournament& t, Vertex u, Vertex v);
std::optional<Triangle> is_heavy_arc(const Tournament& t, Vertex u, Vertex v, const VertexSet& scope);

/// All heavy arcs, tails ascending, heads ascending per tail.
HeavyArcReport heavy_arcs(const Tournament& t);
HeavyArcReport heavy_arcs(const Tournament& t, const VertexSet& scope);

/// nullopt when light; otherwise the lexicographically first heavy arc.
std::optional<HeavyArc> find_heavy_arc(const Tournament& t);
std::optional<HeavyArc> find_heavy_arc(const Tournament& t, const VertexSet& scope);
bool is_light(const Tournament& t);
bool is_light(const Tournament& t, const VertexSet& scope);

struct LightPartition {
  VertexSet first;
  VertexSet second;
};

/// Closed walk of heavy arcs with odd length; consecutive arcs (and the
/// last and first) share an endpoint.
struct OddHeavyCycle {
  std::vector<Arc> arcs;
};

/// For every ordered pair (u, v) of distinct scope vertices, a triangle in
/// (N+(u) ∪ N-(v)) ∩ scope.
struct AllPairsBlocked {
  std::map<std::pair<Vertex, Vertex>, Triangle> entries;
};

/// Proof that T[scope] is not 2-colorable.
struct NonTwoColorCertificate {
  std::variant<OddHeavyCycle, AllPairsBlocked> proof;
  VertexSet scope;
};

/// Two-colors the heavy-arc graph by BFS (roots and neighbors in id order).
/// Vertices touching no heavy arc go to the first part.
std::variant<LightPartition, OddHeavyCycle> light_partition(const Tournament& t);
std::variant<LightPartition, OddHeavyCycle> light_partition(const Tournament& t, const VertexSet& scope);

using LightColoring = std::variant<Coloring, NonTwoColorCertificate>;

/// At most 5 colors through a (1,1)-vertex chain per strong component, or
/// an all-pairs certificate for the component that has none. Throws Error
/// when the input is not light. With a scope the coloring is indexed by
/// scope members.
LightColoring color_light_2col_5(const Tournament& t);
LightColoring color_light_2col_5(const Tournament& t, const VertexSet& scope);

/// Vertex-disjoint triangles X_1 ⇒ X_2 ⇒ ... ⇒ X_l with zones and the
/// clear/unclear split of the remaining vertices W.
struct C3Chain {
  std::vector<Triangle> triangles;
  /// zones[i] holds the w in W whose highest i with X_i ⇒ w is i (1-based;
  /// zone 0 when there is none).
  std::vector<VertexSet> zones;
  /// w ⇒ X_i or X_i ⇒ w for every i.
  VertexSet clear;
  VertexSet unclear;
};

/// Chain, zones and clear set for a given triangle sequence.
C3Chain describe_c3_chain(const Tournament& t, const VertexSet& scope, std::vector<Triangle> triangles);

/// Starts from the first triangle and inserts a triangle from the first
/// zone whose clear part is not transitive until the clear set is
/// transitive. Lightness is not checked; on heavy inputs the extension can
/// stall, which throws Error, as does triangle-free input.
C3Chain find_maximal_c3_chain(const Tournament& t);
C3Chain find_maximal_c3_chain(const Tournament& t, const VertexSet& scope);

/// a = first vertex of X_1, z = last vertex of X_l. `three` colors N-(a)
/// and N+(z) (each on its own) with 3 colors, `five` colors any subset of
/// N-(a) ∪ N+(z) with 5 colors.
struct LightEndpoints {
  Vertex a = 0;
  Vertex z = 0;
  C3Chain chain;
  SubColorer three;
  SubColorer five;
};

/// Requires a light, strongly connected T[scope] with a triangle.
LightEndpoints light_endpoints(const Tournament& t);
LightEndpoints light_endpoints(const Tournament& t, const VertexSet& scope);

/// At most 8 colors. Per strong component: a shortest path from z to a of
/// length >= 4 is a (3,1)-vertex chain (7 colors); a shorter one colors
/// N+(z) ∪ N-(a) with 5 colors and the arc zones with 3 more. Throws Error
/// when the input is not light.
Coloring color_light_8(const Tournament& t);
Coloring color_light_8(const Tournament& t, const VertexSet& scope);

/// H_0 is a single vertex and H_{k+1} = Δ(H_k, 1, 1).
Tournament hero(int k);

}  // namespace tourney
