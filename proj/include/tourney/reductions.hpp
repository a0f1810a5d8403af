#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tourney/core.hpp"
#include "tourney/graph.hpp"

// Hardness constructions, built as concrete instances. Orderings inside
// every construction follow input order.

namespace tourney {

/// Where a vertex of a constructed tournament came from.
struct BlockTag {
  /// Block name: "T1", "T2", "T3" for the basic construction; "H", "G.T1",
  /// "G.T2", "G.T3", "H'" for the gap construction.
  std::string block;
  /// Source hypergraph vertex, or the position inside the fixed triangle.
  int source = -1;
  /// Hyperedge index for per-edge triangles, -1 otherwise.
  int edge = -1;

  friend bool operator==(const BlockTag&, const BlockTag&) = default;
};

struct ReductionArtifact {
  Tournament tournament;
  std::vector<BlockTag> block_map;
};

/// One triangle per hyperedge (T1, forward between edges), a triangle (T2)
/// and a transitive copy of the vertex set (T3); T1 ⇒ T2 ⇒ T3, and the
/// copy of vertex b points back to exactly the T1 vertices of b.
/// 3m + 3 + n vertices; 2-colorable iff H is.
ReductionArtifact hyper_to_tournament_basic(const Hypergraph3& h);

/// H-block ⇒ basic construction ⇒ H'-block, where both blocks are the
/// per-edge triangles and v'_{b,j} -> v_{a,i} iff a = b. 9m + 3 + n
/// vertices.
ReductionArtifact hyper_to_tournament_gap(const Hypergraph3& h);

/// Coloring of the basic construction from a proper 2-coloring of H.
Coloring basic_two_coloring(const Hypergraph3& h, const std::vector<int>& h_colors);
/// Coloring of the gap construction from a proper 2-coloring of H.
Coloring gap_two_coloring(const Hypergraph3& h, const std::vector<int>& h_colors);

/// 2-coloring of H read off a valid 2-coloring of the basic construction
/// (the colors of the T3 copies). Throws Error on invalid input.
std::vector<int> decode_basic(const Hypergraph3& h, const Coloring& c);

struct GapDecoding {
  /// Proper coloring of H with ids in 0..5.
  std::vector<int> colors;
  /// True when the embedded basic construction used two colors and the
  /// 2-coloring branch was taken.
  bool two_color_branch = false;
};

/// Decodes a valid coloring of the gap construction with at most 3 colors.
/// Throws Error when the coloring is invalid, uses more than 3 colors, or
/// leaves some vertex with neither S_a nor Q_a monochromatic.
GapDecoding decode_gap(const Hypergraph3& h, const Coloring& c);

/// S_1 is a single vertex, S_{i+1} = Δ(S_1, S_i, S_i); 2^i - 1 vertices.
Tournament s_chain(int i);
/// i-coloring of s_chain(i).
Coloring s_chain_coloring(int i);

/// R'_{a+b} = Δ(R1, R2, s_chain(a+b)), R'_{j+1} = Δ(R1, R2, R'_j); returns
/// R'_{c+d}. Requires positive parameters with a + b < c + d.
Tournament gadget_amplify(const Tournament& r1, const Tournament& r2, int a, int b, int c, int d);
/// (a+b)-coloring of gadget_amplify from an a-coloring of R1 and a
/// b-coloring of R2 (ids 0..a-1 and 0..b-1).
Coloring gadget_coloring(const Coloring& r1, const Coloring& r2, int a, int b, int c, int d);

struct Tower {
  Tournament tournament;
  /// k-coloring built from a 2-coloring of H, when H has one.
  std::optional<Coloring> coloring;
};

/// T_2 = gap construction, T_3 = Δ(T_2, T_2, T_2), T_{h+1} by
/// gadget_amplify on T_floor((h+1)/2), T_ceil((h+1)/2). The hypergraph
/// 2-coloring behind the emitted coloring comes from the exact oracle
/// (budgeted); without one the coloring is absent.
Tower hardness_tower(const Hypergraph3& h, int k, std::uint64_t budget = 5'000'000);

/// Vertices v_1, T_1, v_2, ..., T_{n-1}, v_n (copies of T) in this order;
/// every arc points forward except v_j -> v_i for edges ij of G.
/// (n-1)|T| + n vertices.
Tournament backedge_step(const Graph& g, const Tournament& t);
/// Coloring of backedge_step from colorings of G and T.
Coloring backedge_coloring(const Graph& g, const GraphColoring& g_colors, const Tournament& t, const Coloring& t_colors);

inline constexpr long long kDefaultTowerCap = 20000;

/// Vertex count of graph_tower(g, k, l) without building it.
long long graph_tower_size(const Graph& g, int k, int l);
/// T_k = s_chain(k), T_{c+1} = backedge_step(G, T_c) up to T_l. Requires
/// 3 <= k < l; throws Error when the predicted size exceeds `cap`.
Tournament graph_tower(const Graph& g, int k, int l, long long cap = kDefaultTowerCap);

/// X = 0..n-1 and Y = n..2n-1, each transitive by index; x -> y iff xy is
/// an edge of B. Requires |X| = |Y|.
Tournament ramsey_pair(const BipartiteGraph& b);

/// Bipartite coupling for the blocks of vertices i < j.
using BipartiteSource = std::function<BipartiteGraph(int size, int i, int j)>;
/// Independent fair coin per (block pair, x, y).
BipartiteSource random_bipartite_source(std::uint64_t seed);

/// One transitive block of `block_size` vertices per vertex of G (block i
/// at i*block_size); edges ij (i<j) are coupled as ramsey_pair(source) with
/// block i as X, non-edges get all arcs from block i to block j.
Tournament ramsey_blowup(const Graph& g, int block_size, const BipartiteSource& source);
/// Every vertex of block i takes color g_colors[i].
Coloring blowup_coloring(const GraphColoring& g_colors, int block_size);

}  // namespace tourney
