#include "tourney/decomposition.hpp"

#include <string>

namespace tourney {

namespace {

bool classes_acyclic(const Tournament& t, const VertexSet& s, const Coloring& c) {
  std::vector<VertexSet> classes(static_cast<std::size_t>(c.palette_size()), VertexSet(t.size()));
  int i = 0;
  s.for_each([&](Vertex v) { classes[static_cast<std::size_t>(c[i++])].insert(v); });
  for (const auto& cls : classes)
    if (!is_transitive(t, cls)) return false;
  return true;
}

}  // namespace

std::vector<Arc> VertexChain::arcs() const {
  std::vector<Arc> out;
  for (std::size_t i = 1; i < vertices.size(); ++i) out.push_back({vertices[i - 1], vertices[i]});
  return out;
}

std::optional<Coloring> run_colorer(const SubColorer& colorer, const Tournament& t, const VertexSet& s) {
  if (s.empty()) return Coloring{};
  auto result = colorer.fn(t, s);
  if (!result) return std::nullopt;
  if (result->size() != s.count())
    throw std::logic_error("sub-colorer returned " + std::to_string(result->size()) + " colors for " +
                           std::to_string(s.count()) + " vertices");
  Coloring c = result->compacted();
  if (c.palette_size() > colorer.budget)
    throw std::logic_error("sub-colorer used " + std::to_string(c.palette_size()) + " colors, budget " +
                           std::to_string(colorer.budget));
  if (!classes_acyclic(t, s, c)) throw std::logic_error("sub-colorer returned an invalid coloring");
  return c;
}

SubColorer transitive_colorer() {
  return {1, [](const Tournament& t, const VertexSet& s) -> std::optional<Coloring> {
            if (!is_transitive(t, s)) return std::nullopt;
            return Coloring(std::vector<int>(static_cast<std::size_t>(s.count()), 0));
          }};
}

SubColorer fixed_colorer(VertexSet domain, Coloring coloring, int budget) {
  return {budget,
          [domain = std::move(domain), coloring = std::move(coloring)](
              const Tournament&, const VertexSet& s) -> std::optional<Coloring> {
            if (!s.is_subset_of(domain)) return std::nullopt;
            return restrict_coloring(domain, coloring, s);
          }};
}

Coloring restrict_coloring(const VertexSet& domain, const Coloring& c, const VertexSet& part) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(part.count()));
  int i = 0;
  domain.for_each([&](Vertex v) {
    if (part.contains(v)) out.push_back(c[i]);
    ++i;
  });
  if (static_cast<int>(out.size()) != part.count()) throw std::logic_error("restrict_coloring: part not in domain");
  return Coloring(std::move(out));
}

Coloring gather(const VertexSet& scope, const std::vector<int>& by_vertex) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(scope.count()));
  scope.for_each([&](Vertex v) { out.push_back(by_vertex[static_cast<std::size_t>(v)]); });
  return Coloring(std::move(out));
}

std::optional<VertexChain> build_vertex_chain(const Tournament& t, Vertex u, Vertex w) {
  return build_vertex_chain(t, u, w, t.all());
}

std::optional<VertexChain> build_vertex_chain(const Tournament& t, Vertex u, Vertex w, const VertexSet& scope) {
  auto path = shortest_path(t, u, w, scope);
  if (!path) return std::nullopt;
  return VertexChain{std::move(*path)};
}

PathDecomposition build_path_decomposition(const Tournament& t, const VertexChain& chain) {
  return build_path_decomposition(t, chain, t.all());
}

PathDecomposition build_path_decomposition(const Tournament& t, const VertexChain& chain, const VertexSet& scope) {
  const auto& v = chain.vertices;
  const int k = chain.length();
  if (k < 1) throw Error("chain needs at least one arc");
  PathDecomposition pd;
  VertexSet covered = t.out(v.front()) & scope;
  pd.zones.push_back(covered);
  for (int i = 1; i <= k; ++i) {
    VertexSet zone = arc_neighborhood(t, v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]) & scope;
    zone -= covered;
    covered |= zone;
    pd.zones.push_back(std::move(zone));
  }
  VertexSet last = (t.in(v.back()) & scope) - covered;
  covered |= last;
  pd.zones.push_back(std::move(last));
  if (covered != scope) throw std::logic_error("path decomposition does not cover the vertex set");
  return pd;
}

int chain_color_bound(int k, int c, int d) { return k <= 3 ? c + 3 * d : c + 4 * d; }

ChainColoring color_via_chain(const Tournament& t, const VertexChain& chain, const SubColorer& endpoint,
                              const SubColorer& arc) {
  return color_via_chain(t, t.all(), chain, endpoint, arc);
}

ChainColoring color_via_chain(const Tournament& t, const VertexSet& scope, const VertexChain& chain,
                              const SubColorer& endpoint, const SubColorer& arc) {
  const int c = endpoint.budget;
  const int d = arc.budget;
  if (c < d) throw Error("endpoint budget " + std::to_string(c) + " is below arc budget " + std::to_string(d));
  const int k = chain.length();
  const auto pd = build_path_decomposition(t, chain, scope);
  const auto& v = chain.vertices;
  std::vector<int> color(static_cast<std::size_t>(t.size()), -1);

  auto paint = [&](const VertexSet& domain, const Coloring& col, const VertexSet& zone, auto&& map) {
    int i = 0;
    domain.for_each([&](Vertex x) {
      if (zone.contains(x)) color[static_cast<std::size_t>(x)] = map(col[i]);
      ++i;
    });
  };
  auto arc_domain = [&](int i) {
    return arc_neighborhood(t, v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]) & scope;
  };
  const VertexSet head_out = t.out(v.front()) & scope;
  const VertexSet tail_in = t.in(v.back()) & scope;
  const auto& zones = pd.zones;
  const auto last = static_cast<std::size_t>(k + 1);

  if (k <= 3) {
    const VertexSet domain = head_out | tail_in;
    const auto col = run_colorer(endpoint, t, domain);
    if (!col) return ZoneFailure{0};
    paint(domain, *col, zones[0] | zones[last], [](int x) { return x; });
    for (int i = 1; i <= k; ++i) {
      const VertexSet dom = arc_domain(i);
      const auto ac = run_colorer(arc, t, dom);
      if (!ac) return ZoneFailure{i};
      const int offset = c + (i - 1) * d;
      paint(dom, *ac, zones[static_cast<std::size_t>(i)], [offset](int x) { return offset + x; });
    }
  } else {
    // Ids 0..c-d-1 are the extra endpoint colors; palette p occupies
    // c-d+p*d .. c-d+p*d+d-1 and serves every zone whose index is p mod 5.
    auto palette = [&](int zone) { return c - d + (zone % 5) * d; };
    auto endpoint_zone = [&](const VertexSet& domain, int zone) -> bool {
      const auto col = run_colorer(endpoint, t, domain);
      if (!col) return false;
      const int base = palette(zone);
      paint(domain, *col, zones[static_cast<std::size_t>(zone)],
            [base, d](int x) { return x < d ? base + x : x - d; });
      return true;
    };
    if (!endpoint_zone(head_out, 0)) return ZoneFailure{0};
    if (!endpoint_zone(tail_in, k + 1)) return ZoneFailure{k + 1};
    for (int i = 1; i <= k; ++i) {
      const VertexSet dom = arc_domain(i);
      const auto ac = run_colorer(arc, t, dom);
      if (!ac) return ZoneFailure{i};
      const int base = palette(i);
      paint(dom, *ac, zones[static_cast<std::size_t>(i)], [base](int x) { return base + x; });
    }
  }
  return gather(scope, color);
}

std::optional<EndpointPair> find_endpoint_pair(const Tournament& t, const SubColorer& colorer) {
  return find_endpoint_pair(t, t.all(), colorer);
}

std::optional<EndpointPair> find_endpoint_pair(const Tournament& t, const VertexSet& scope, const SubColorer& colorer) {
  check_subset(t, scope);
  for (Vertex u = scope.first(); u >= 0; u = scope.next(u)) {
    const VertexSet head = t.out(u) & scope;
    for (Vertex w = scope.first(); w >= 0; w = scope.next(w)) {
      if (w == u) continue;
      VertexSet domain = head | (t.in(w) & scope);
      if (auto col = run_colorer(colorer, t, domain))
        return EndpointPair{u, w, std::move(domain), std::move(*col)};
    }
  }
  return std::nullopt;
}

}  // namespace tourney
