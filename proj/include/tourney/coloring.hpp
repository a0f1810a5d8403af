#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tourney/core.hpp"
#include "tourney/graph.hpp"
#include "tourney/light.hpp"
#include "tourney/oracle.hpp"

namespace tourney {

/// Colors a graph expected to be k-colorable. Must always return a proper
/// coloring, whatever the input.
using GraphColorer = std::function<GraphColoring(const Graph&, int k)>;

/// Wigderson: while some vertex has degree >= n^(1-1/(k-1)) among the
/// remaining vertices, color its neighborhood recursively with k-1 and
/// fresh colors and drop it; first-fit on the rest. A neighborhood that is
/// not (k-1)-colorable in the expected way falls back to first-fit.
GraphColoring default_graph_colorer(const Graph& g, int k);
/// Optimal colorings from the exact oracle; throws Error past the budget.
GraphColorer exact_graph_colorer(std::uint64_t budget = kDefaultBudget);
/// First-fit in id order.
GraphColoring greedy_graph_coloring(const Graph& g);

using TwoColorResult = std::variant<Coloring, NonTwoColorCertificate>;

/// Per strong component: light partition, then color_light_2col_5 on each
/// part with palettes 0..4 and 5..9. With a scope the coloring is indexed by
/// scope members.
TwoColorResult color_2col_10(const Tournament& t);
TwoColorResult color_2col_10(const Tournament& t, const VertexSet& scope);

struct CertificateCheck {
  bool valid = false;
  std::string reason;
};

CertificateCheck check_certificate(const Tournament& t, const NonTwoColorCertificate& cert);

/// 40 sqrt(n): the palette bound asserted for color_3col_sqrt.
double sqrt_palette_bound(int n);

/// Every vertex of the residual tournament had an out-neighborhood that
/// color_2col_10 rejected; each rejection comes with its certificate.
struct SqrtFailure {
  VertexSet residual;
  std::vector<std::pair<Vertex, NonTwoColorCertificate>> evidence;
};

/// Repeatedly extracts a transitive set and gives it a fresh color: low
/// outdegree vertices are peeled into a set S while possible (at most half
/// of the residual), then the out-neighborhoods of the remaining vertices
/// are tried with color_2col_10 in ascending outdegree order and the
/// largest class Q of the first success joins S.
std::variant<Coloring, SqrtFailure> color_3col_sqrt(const Tournament& t);

struct GraphReduction {
  Coloring coloring;
  /// Arcs whose neighborhood the lower level could not color.
  std::vector<Arc> hard_arcs;
  /// Colors used on the graph (V, hard_arcs).
  int graph_palette = 0;
  /// Colors granted per endpoint and per arc zone: 10 for the 2-colorable
  /// level, the largest palette seen on arc neighborhoods above it.
  int level_budget = 0;
};

/// A class of the graph coloring without an endpoint pair; the input is
/// not k-colorable.
struct ClassFailure {
  int graph_class = 0;
  VertexSet members;
  std::string reason;
};

using ReductionResult = std::variant<GraphReduction, ClassFailure>;

/// k = 3 case of color_kcol_recursive.
ReductionResult color_3col_via_graph(const Tournament& t, const GraphColorer& gc);

/// k = 2 runs color_2col_10. For k > 2 every arc neighborhood is tried at
/// level k-1; the failing arcs form a graph colored by gc, and each class
/// is colored through an endpoint pair and a chain with c = d = budget of
/// level k-1, so at most 5 * budget * graph palette colors.
ReductionResult color_kcol_recursive(const Tournament& t, int k, const GraphColorer& gc);
ReductionResult color_kcol_recursive(const Tournament& t, const VertexSet& scope, int k, const GraphColorer& gc);

}  // namespace tourney
