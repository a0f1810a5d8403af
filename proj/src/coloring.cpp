#include "tourney/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>

#include "tourney/decomposition.hpp"

namespace tourney {

namespace {

std::optional<GraphColoring> bipartite_coloring(const Graph& g) {
  GraphColoring side(static_cast<std::size_t>(g.size()), -1);
  for (int root = 0; root < g.size(); ++root) {
    if (side[static_cast<std::size_t>(root)] >= 0) continue;
    side[static_cast<std::size_t>(root)] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int y : g.neighbors(x)) {
        auto& sy = side[static_cast<std::size_t>(y)];
        if (sy < 0) {
          sy = 1 - side[static_cast<std::size_t>(x)];
          queue.push_back(y);
        } else if (sy == side[static_cast<std::size_t>(x)]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

Graph induced_graph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.size()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (int y : g.neighbors(vertices[i])) {
      const int j = index[static_cast<std::size_t>(y)];
      if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
    }
  return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

// nullopt when some 2-coloring step meets an odd cycle.
std::optional<GraphColoring> wigderson(const Graph& g, int k) {
  const int n = g.size();
  if (n == 0) return GraphColoring{};
  if (k <= 2) return bipartite_coloring(g);
  const double threshold = std::ceil(std::pow(static_cast<double>(n), 1.0 - 1.0 / (k - 1)));
  GraphColoring color(static_cast<std::size_t>(n), -1);
  int next = 0;
  while (true) {
    int pick = -1;
    std::vector<int> nb;
    for (int v = 0; v < n && pick < 0; ++v) {
      nb.clear();
      for (int y : g.neighbors(v))
        if (color[static_cast<std::size_t>(y)] < 0) nb.push_back(y);
      if (static_cast<double>(nb.size()) >= threshold) pick = v;
    }
    if (pick < 0) break;
    auto sub = wigderson(induced_graph(g, nb), k - 1);
    if (!sub) return std::nullopt;
    int width = 0;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      color[static_cast<std::size_t>(nb[i])] = next + (*sub)[i];
      width = std::max(width, (*sub)[i] + 1);
    }
    next += width;
  }
  // First-fit on what is left; earlier colors are all below `next`.
  for (int v = 0; v < n; ++v) {
    if (color[static_cast<std::size_t>(v)] >= 0) continue;
    std::set<int> taken;
    for (int y : g.neighbors(v)) taken.insert(color[static_cast<std::size_t>(y)]);
    int c = next;
    while (taken.count(c)) ++c;
    color[static_cast<std::size_t>(v)] = c;
  }
  return color;
}

std::optional<Coloring> two_col_attempt(const Tournament& t, const VertexSet& s) {
  auto r = color_2col_10(t, s);
  if (auto* c = std::get_if<Coloring>(&r)) return std::move(*c);
  return std::nullopt;
}

}  // namespace

GraphColoring greedy_graph_coloring(const Graph& g) {
  GraphColoring color(static_cast<std::size_t>(g.size()), -1);
  for (int v = 0; v < g.size(); ++v) {
    std::set<int> taken;
    for (int y : g.neighbors(v)) taken.insert(color[static_cast<std::size_t>(y)]);
    int c = 0;
    while (taken.count(c)) ++c;
    color[static_cast<std::size_t>(v)] = c;
  }
  return color;
}

GraphColoring default_graph_colorer(const Graph& g, int k) {
  if (auto c = wigderson(g, k)) return *c;
  return greedy_graph_coloring(g);
}

GraphColorer exact_graph_colorer(std::uint64_t budget) {
  return [budget](const Graph& g, int) {
    auto r = exact_graph_chromatic(g, budget);
    if (!r.found()) throw Error("exact graph coloring exceeded its budget");
    return *r.value;
  };
}

TwoColorResult color_2col_10(const Tournament& t) { return color_2col_10(t, t.all()); }

TwoColorResult color_2col_10(const Tournament& t, const VertexSet& scope) {
  std::vector<int> color(static_cast<std::size_t>(t.size()), -1);
  for (const auto& comp : scc_decomposition(t, scope)) {
    if (comp.count() < 3) {
      comp.for_each([&](Vertex v) { color[static_cast<std::size_t>(v)] = 0; });
      continue;
    }
    auto split = light_partition(t, comp);
    if (auto* cycle = std::get_if<OddHeavyCycle>(&split)) return NonTwoColorCertificate{std::move(*cycle), comp};
    const auto& parts = std::get<LightPartition>(split);
    const std::pair<const VertexSet*, int> halves[] = {{&parts.first, 0}, {&parts.second, 5}};
    for (auto [part, offset] : halves) {
      if (part->empty()) continue;
      auto r = color_light_2col_5(t, *part);
      if (auto* cert = std::get_if<NonTwoColorCertificate>(&r)) return std::move(*cert);
      const auto& col = std::get<Coloring>(r);
      int i = 0;
      part->for_each([&](Vertex v) { color[static_cast<std::size_t>(v)] = offset + col[i++]; });
    }
  }
  return gather(scope, color);
}

CertificateCheck check_certificate(const Tournament& t, const NonTwoColorCertificate& cert) {
  const VertexSet& scope = cert.scope;
  if (scope.universe() != t.size()) return {false, "scope has the wrong universe"};
  if (const auto* cycle = std::get_if<OddHeavyCycle>(&cert.proof)) {
    const auto& arcs = cycle->arcs;
    if (arcs.size() < 3) return {false, "cycle too short"};
    if (arcs.size() % 2 == 0) return {false, "cycle length is even"};
    for (const auto& a : arcs) {
      if (!t.valid_vertex(a.tail) || !t.valid_vertex(a.head) || a.tail == a.head || !t.arc(a.tail, a.head))
        return {false, "not an arc"};
      if (!scope.contains(a.tail) || !scope.contains(a.head)) return {false, "arc outside scope"};
      if (!is_heavy_arc(t, a.tail, a.head, scope)) return {false, "arc not heavy"};
    }
    // Walk the cycle: the start is the endpoint of the first arc that the
    // second arc does not touch.
    auto touches = [](const Arc& a, Vertex v) { return a.tail == v || a.head == v; };
    const Vertex start = touches(arcs[1], arcs[0].head) ? arcs[0].tail : arcs[0].head;
    Vertex cur = start == arcs[0].tail ? arcs[0].head : arcs[0].tail;
    for (std::size_t i = 1; i < arcs.size(); ++i) {
      if (!touches(arcs[i], cur)) return {false, "arcs do not form a closed walk"};
      cur = arcs[i].tail == cur ? arcs[i].head : arcs[i].tail;
    }
    if (cur != start) return {false, "arcs do not form a closed walk"};
    return {true, ""};
  }
  const auto& blocked = std::get<AllPairsBlocked>(cert.proof);
  if (scope.count() < 3) return {false, "scope too small"};
  for (const auto& [pair, tri] : blocked.entries) {
    const auto [u, v] = pair;
    if (!t.valid_vertex(u) || !t.valid_vertex(v) || u == v || !scope.contains(u) || !scope.contains(v))
      return {false, "entry outside scope"};
    const VertexSet allowed = (t.out(u) | t.in(v)) & scope;
    for (Vertex x : tri)
      if (!t.valid_vertex(x) || !allowed.contains(x)) return {false, "triangle outside N+(u) ∪ N-(v)"};
    if (!(t.arc(tri[0], tri[1]) && t.arc(tri[1], tri[2]) && t.arc(tri[2], tri[0])))
      return {false, "not a directed triangle"};
  }
  for (Vertex u = scope.first(); u >= 0; u = scope.next(u))
    for (Vertex v = scope.first(); v >= 0; v = scope.next(v))
      if (u != v && !blocked.entries.count({u, v})) return {false, "pair uncovered"};
  return {true, ""};
}

double sqrt_palette_bound(int n) { return 40.0 * std::sqrt(static_cast<double>(n)); }

std::variant<Coloring, SqrtFailure> color_3col_sqrt(const Tournament& t) {
  const int n = t.size();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  auto outdeg = [&](Vertex v, const VertexSet& within) { return t.out(v).count_common(within); };

  for (const auto& comp : scc_decomposition(t)) {
    VertexSet residual = comp;
    int next = 0;
    while (!residual.empty()) {
      if (is_transitive(t, residual)) {
        residual.for_each([&](Vertex v) { color[static_cast<std::size_t>(v)] = next; });
        break;
      }
      const int m = residual.count();
      const double threshold = std::sqrt(static_cast<double>(m));

      // Peel vertices of small outdegree; each keeps only in-neighbors of
      // the peeled ones, so peeled vertices form a transitive set.
      VertexSet peeled(n);
      VertexSet rest = residual;
      int removed = 0;
      while (!rest.empty() && 2 * removed < m) {
        Vertex best = -1;
        int best_deg = m + 1;
        rest.for_each([&](Vertex v) {
          const int d = outdeg(v, rest);
          if (d < best_deg) {
            best_deg = d;
            best = v;
          }
        });
        if (best_deg >= threshold) break;
        peeled.insert(best);
        VertexSet closed = t.out(best) & rest;
        closed.insert(best);
        removed += closed.count();
        rest -= closed;
      }

      VertexSet extracted = peeled;
      if (!rest.empty() && 2 * removed < m) {
        std::vector<Vertex> order = rest.members();
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        for (Vertex v : order) deg[static_cast<std::size_t>(v)] = outdeg(v, rest);
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
          return deg[static_cast<std::size_t>(a)] < deg[static_cast<std::size_t>(b)];
        });
        std::vector<std::pair<Vertex, NonTwoColorCertificate>> evidence;
        bool found = false;
        for (Vertex v : order) {
          const VertexSet out = t.out(v) & rest;
          auto r = color_2col_10(t, out);
          if (auto* cert = std::get_if<NonTwoColorCertificate>(&r)) {
            evidence.emplace_back(v, std::move(*cert));
            continue;
          }
          const auto& col = std::get<Coloring>(r);
          std::vector<int> sizes;
          for (int i = 0; i < col.size(); ++i) {
            const auto c = static_cast<std::size_t>(col[i]);
            if (sizes.size() <= c) sizes.resize(c + 1, 0);
            ++sizes[c];
          }
          const int largest = static_cast<int>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
          int i = 0;
          out.for_each([&](Vertex x) {
            if (col[i++] == largest) extracted.insert(x);
          });
          found = true;
          break;
        }
        if (!found && extracted.empty()) return SqrtFailure{residual, std::move(evidence)};
      }
      if (!is_transitive(t, extracted)) throw std::logic_error("extracted set is not transitive");
      extracted.for_each([&](Vertex v) { color[static_cast<std::size_t>(v)] = next; });
      ++next;
      residual -= extracted;
    }
  }
  return Coloring(std::move(color));
}

ReductionResult color_3col_via_graph(const Tournament& t, const GraphColorer& gc) {
  return color_kcol_recursive(t, 3, gc);
}

ReductionResult color_kcol_recursive(const Tournament& t, int k, const GraphColorer& gc) {
  return color_kcol_recursive(t, t.all(), k, gc);
}

ReductionResult color_kcol_recursive(const Tournament& t, const VertexSet& scope, int k, const GraphColorer& gc) {
  if (k < 2) throw Error("color_kcol_recursive needs k >= 2");
  check_subset(t, scope);
  if (k == 2) {
    auto r = color_2col_10(t, scope);
    if (auto* c = std::get_if<Coloring>(&r)) return GraphReduction{std::move(*c), {}, scope.empty() ? 0 : 1, 10};
    return ClassFailure{0, scope, "not 2-colorable: certificate emitted"};
  }
  const int n = t.size();
  auto lower = [&](const VertexSet& s) -> std::optional<Coloring> {
    if (k - 1 == 2) return two_col_attempt(t, s);
    auto r = color_kcol_recursive(t, s, k - 1, gc);
    if (auto* g = std::get_if<GraphReduction>(&r)) return std::move(g->coloring);
    return std::nullopt;
  };

  struct Attempt {
    VertexSet domain;
    std::optional<Coloring> coloring;
  };
  std::map<std::pair<Vertex, Vertex>, Attempt> attempts;
  std::vector<Arc> hard;
  int budget = k - 1 == 2 ? 10 : 1;
  scope.for_each([&](Vertex u) {
    t.out(u).for_each_common(scope, [&](Vertex v) {
      VertexSet dom = arc_neighborhood(t, u, v) & scope;
      auto col = lower(dom);
      if (!col) hard.push_back({u, v});
      else if (k - 1 > 2) budget = std::max(budget, col->palette_size());
      attempts.emplace(std::pair{u, v}, Attempt{std::move(dom), std::move(col)});
    });
  });

  const std::vector<Vertex> members = scope.members();
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < members.size(); ++i) index[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (const auto& a : hard) edges.emplace_back(index[static_cast<std::size_t>(a.tail)], index[static_cast<std::size_t>(a.head)]);
  const Graph g(static_cast<int>(members.size()), std::move(edges));
  const GraphColoring gcol = gc(g, k);
  if (!is_proper(g, gcol)) throw std::logic_error("graph colorer returned an improper coloring");

  std::vector<int> palette(gcol.begin(), gcol.end());
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());

  const SubColorer capped{budget, [&](const Tournament&, const VertexSet& s) -> std::optional<Coloring> {
                            auto c = lower(s);
                            if (c && c->palette_size() > budget) return std::nullopt;
                            return c;
                          }};
  const int per_class = 5 * budget;
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (std::size_t ci = 0; ci < palette.size(); ++ci) {
    VertexSet cls(n);
    for (std::size_t i = 0; i < members.size(); ++i)
      if (gcol[i] == palette[ci]) cls.insert(members[i]);
    const int offset = static_cast<int>(ci) * per_class;
    for (const auto& comp : scc_decomposition(t, cls)) {
      if (comp.count() < 3) {
        comp.for_each([&](Vertex v) { color[static_cast<std::size_t>(v)] = offset; });
        continue;
      }
      auto pair = find_endpoint_pair(t, comp, capped);
      if (!pair)
        return ClassFailure{static_cast<int>(ci), cls, "no endpoint pair in a strong component of the class"};
      const auto chain = build_vertex_chain(t, pair->u, pair->w, comp);
      if (!chain) throw std::logic_error("strong component without a path");
      const auto chain_arcs = chain->arcs();
      const SubColorer arc_colorer{budget, [&](const Tournament&, const VertexSet& s) -> std::optional<Coloring> {
                                     for (const auto& a : chain_arcs) {
                                       const auto& at = attempts.at({a.tail, a.head});
                                       if (at.coloring && s.is_subset_of(at.domain))
                                         return restrict_coloring(at.domain, *at.coloring, s);
                                     }
                                     return std::nullopt;
                                   }};
      const auto result =
          color_via_chain(t, comp, *chain, fixed_colorer(pair->domain, pair->coloring, budget), arc_colorer);
      if (const auto* fail = std::get_if<ZoneFailure>(&result))
        throw std::logic_error("class coloring failed in zone " + std::to_string(fail->zone));
      const auto& col = std::get<Coloring>(result);
      int i = 0;
      comp.for_each([&](Vertex v) { color[static_cast<std::size_t>(v)] = offset + col[i++]; });
    }
  }
  return GraphReduction{gather(scope, color), std::move(hard), static_cast<int>(palette.size()), budget};
}

}  // namespace tourney
