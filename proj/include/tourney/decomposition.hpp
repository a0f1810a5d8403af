#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "tourney/core.hpp"

namespace tourney {

/// A shortest directed path v_0 .. v_k, so every arc between non-consecutive
/// vertices points backward.
struct VertexChain {
  std::vector<Vertex> vertices;

  /// Number of arcs k.
  int length() const { return static_cast<int>(vertices.size()) - 1; }
  /// e_i = (v_{i-1}, v_i), returned as e_1 .. e_k.
  std::vector<Arc> arcs() const;
};

/// Zones D_0 .. D_{k+1} built from a chain.
struct PathDecomposition {
  std::vector<VertexSet> zones;
};

/// Colors T[S] for an arbitrary subset S with at most `budget` colors.
/// The coloring is indexed by position in S.members(); nullopt means the
/// colorer could not color S.
struct SubColorer {
  using Fn = std::function<std::optional<Coloring>(const Tournament&, const VertexSet&)>;
  int budget = 0;
  Fn fn;
};

/// Calls the colorer and enforces its contract (size, validity, budget),
/// throwing std::logic_error on a violation. The empty set is colored
/// without calling. Ids come back compacted.
std::optional<Coloring> run_colorer(const SubColorer& colorer, const Tournament& t, const VertexSet& s);

/// Budget 1: succeeds exactly on transitive sets.
SubColorer transitive_colorer();
/// Serves subsets of `domain` from a precomputed coloring of it; fails on
/// anything outside the domain.
SubColorer fixed_colorer(VertexSet domain, Coloring coloring, int budget);

/// The coloring of `part` read off a coloring of `domain` (part ⊆ domain).
Coloring restrict_coloring(const VertexSet& domain, const Coloring& c, const VertexSet& part);
/// Inverse direction: the coloring indexed by scope members, taken from a
/// vertex-indexed vector.
Coloring gather(const VertexSet& scope, const std::vector<int>& by_vertex);

std::optional<VertexChain> build_vertex_chain(const Tournament& t, Vertex u, Vertex w);
/// Chain inside T[scope].
std::optional<VertexChain> build_vertex_chain(const Tournament& t, Vertex u, Vertex w, const VertexSet& scope);

PathDecomposition build_path_decomposition(const Tournament& t, const VertexChain& chain);
/// Zones of T[scope]; they partition scope.
PathDecomposition build_path_decomposition(const Tournament& t, const VertexChain& chain, const VertexSet& scope);

/// The colorer for zone `zone` gave up. For chains of length at most 3 the
/// endpoint zones are colored together and report zone 0.
struct ZoneFailure {
  int zone = 0;
  friend bool operator==(const ZoneFailure&, const ZoneFailure&) = default;
};

using ChainColoring = std::variant<Coloring, ZoneFailure>;

/// Colors T with the zones of the chain. The endpoint colorer (budget c) is
/// asked for N+(v_0) ∪ N-(v_k) when k <= 3 and for N+(v_0) and N-(v_k)
/// separately otherwise; the arc colorer (budget d) is asked for each
/// N(e_i). Uses at most c+3d colors when k <= 3 and c+4d otherwise.
/// Throws Error when c < d.
ChainColoring color_via_chain(const Tournament& t, const VertexChain& chain, const SubColorer& endpoint,
                              const SubColorer& arc);
/// Same on T[scope]; the coloring is indexed by scope members.
ChainColoring color_via_chain(const Tournament& t, const VertexSet& scope, const VertexChain& chain,
                              const SubColorer& endpoint, const SubColorer& arc);

/// Color bound promised by color_via_chain for a chain of length k.
int chain_color_bound(int k, int c, int d);

struct EndpointPair {
  Vertex u = 0;
  Vertex w = 0;
  /// N+(u) ∪ N-(w), restricted to the scope.
  VertexSet domain;
  /// Indexed by domain members.
  Coloring coloring;
};

/// First ordered pair (u, w), u != w, in lexicographic order whose
/// N+(u) ∪ N-(w) the colorer accepts.
std::optional<EndpointPair> find_endpoint_pair(const Tournament& t, const SubColorer& colorer);
std::optional<EndpointPair> find_endpoint_pair(const Tournament& t, const VertexSet& scope, const SubColorer& colorer);

}  // namespace tourney
