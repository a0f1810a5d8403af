#include "tourney/light.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace tourney {

namespace {

std::string arc_name(Vertex u, Vertex v) { return std::to_string(u) + "->" + std::to_string(v); }

void require_light(const Tournament& t, const VertexSet& scope) {
  if (auto h = find_heavy_arc(t, scope))
    throw Error("tournament is not light: heavy arc " + arc_name(h->arc.tail, h->arc.head));
}

Arc oriented(const Tournament& t, Vertex p, Vertex q) { return t.arc(p, q) ? Arc{p, q} : Arc{q, p}; }

OddHeavyCycle close_cycle(const Tournament& t, const std::vector<Vertex>& parent, Vertex x, Vertex y) {
  std::vector<Vertex> up_x{x}, up_y{y};
  while (parent[static_cast<std::size_t>(up_x.back())] >= 0) up_x.push_back(parent[static_cast<std::size_t>(up_x.back())]);
  while (parent[static_cast<std::size_t>(up_y.back())] >= 0) up_y.push_back(parent[static_cast<std::size_t>(up_y.back())]);
  // Strip the shared tail above the lowest common ancestor.
  while (up_x.size() >= 2 && up_y.size() >= 2 && up_x[up_x.size() - 2] == up_y[up_y.size() - 2]) {
    up_x.pop_back();
    up_y.pop_back();
  }
  std::vector<Vertex> walk = up_x;  // x .. lca
  for (auto it = up_y.rbegin() + 1; it != up_y.rend(); ++it) walk.push_back(*it);  // .. y
  OddHeavyCycle cycle;
  for (std::size_t i = 0; i < walk.size(); ++i)
    cycle.arcs.push_back(oriented(t, walk[i], walk[(i + 1) % walk.size()]));
  return cycle;
}

AllPairsBlocked all_pairs_blocked(const Tournament& t, const VertexSet& scope) {
  AllPairsBlocked blocked;
  scope.for_each([&](Vertex u) {
    scope.for_each([&](Vertex v) {
      if (u == v) return;
      auto tri = transitivity_check(t, (t.out(u) | t.in(v)) & scope);
      if (!tri) throw std::logic_error("all_pairs_blocked: pair " + arc_name(u, v) + " is not blocked");
      blocked.entries.emplace(std::pair{u, v}, *tri);
    });
  });
  return blocked;
}

C3Chain maximal_chain(const Tournament& t, const VertexSet& scope) {
  auto first = transitivity_check(t, scope);
  if (!first) throw Error("C3-chain needs a triangle; the tournament is transitive");
  std::vector<Triangle> triangles{*first};
  while (true) {
    C3Chain chain = describe_c3_chain(t, scope, triangles);
    if (is_transitive(t, chain.clear)) return chain;
    bool extended = false;
    for (std::size_t i = 0; i < chain.zones.size() && !extended; ++i) {
      if (auto y = transitivity_check(t, chain.zones[i] & chain.clear)) {
        triangles.insert(triangles.begin() + static_cast<std::ptrdiff_t>(i), *y);
        extended = true;
      }
    }
    if (!extended) throw Error("C3-chain cannot be extended: the clear set has a triangle spread over several zones");
  }
}

// Classifies every vertex of s into the first listed set containing it.
std::optional<Coloring> classify(const VertexSet& s, const std::vector<const VertexSet*>& sets) {
  std::vector<int> colors;
  colors.reserve(static_cast<std::size_t>(s.count()));
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (!ok) return;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (sets[i]->contains(v)) {
        colors.push_back(static_cast<int>(i));
        return;
      }
    }
    ok = false;
  });
  if (!ok) return std::nullopt;
  return Coloring(std::move(colors));
}

}  // namespace

std::optional<Triangle> is_heavy_arc(const Tournament& t, Vertex u, Vertex v) {
  return is_heavy_arc(t, u, v, t.all());
}

std::optional<Triangle> is_heavy_arc(const Tournament& t, Vertex u, Vertex v, const VertexSet& scope) {
  return transitivity_check(t, arc_neighborhood(t, u, v) & scope);
}

HeavyArcReport heavy_arcs(const Tournament& t) { return heavy_arcs(t, t.all()); }

HeavyArcReport heavy_arcs(const Tournament& t, const VertexSet& scope) {
  check_subset(t, scope);
  HeavyArcReport report;
  scope.for_each([&](Vertex u) {
    t.out(u).for_each_common(scope, [&](Vertex v) {
      const VertexSet nb = t.in(u) & t.out(v) & scope;
      if (nb.count() < 3) return;
      if (auto tri = transitivity_check(t, nb)) report.heavy_arcs.push_back({{u, v}, *tri});
    });
  });
  return report;
}

std::optional<HeavyArc> find_heavy_arc(const Tournament& t) { return find_heavy_arc(t, t.all()); }

std::optional<HeavyArc> find_heavy_arc(const Tournament& t, const VertexSet& scope) {
  check_subset(t, scope);
  for (Vertex u = scope.first(); u >= 0; u = scope.next(u)) {
    const VertexSet heads = t.out(u) & scope;
    for (Vertex v = heads.first(); v >= 0; v = heads.next(v)) {
      const VertexSet nb = t.in(u) & t.out(v) & scope;
      if (nb.count() < 3) continue;
      if (auto tri = transitivity_check(t, nb)) return HeavyArc{{u, v}, *tri};
    }
  }
  return std::nullopt;
}

bool is_light(const Tournament& t) { return !find_heavy_arc(t); }
bool is_light(const Tournament& t, const VertexSet& scope) { return !find_heavy_arc(t, scope); }

std::variant<LightPartition, OddHeavyCycle> light_partition(const Tournament& t) {
  return light_partition(t, t.all());
}

std::variant<LightPartition, OddHeavyCycle> light_partition(const Tournament& t, const VertexSet& scope) {
  const int n = t.size();
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (const auto& h : heavy_arcs(t, scope).heavy_arcs) {
    adj[static_cast<std::size_t>(h.arc.tail)].push_back(h.arc.head);
    adj[static_cast<std::size_t>(h.arc.head)].push_back(h.arc.tail);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  for (Vertex root = scope.first(); root >= 0; root = scope.next(root)) {
    if (side[static_cast<std::size_t>(root)] >= 0 || adj[static_cast<std::size_t>(root)].empty()) continue;
    side[static_cast<std::size_t>(root)] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : adj[static_cast<std::size_t>(x)]) {
        auto& sy = side[static_cast<std::size_t>(y)];
        if (sy < 0) {
          sy = 1 - side[static_cast<std::size_t>(x)];
          parent[static_cast<std::size_t>(y)] = x;
          queue.push_back(y);
        } else if (sy == side[static_cast<std::size_t>(x)]) {
          return close_cycle(t, parent, x, y);
        }
      }
    }
  }
  LightPartition parts{VertexSet(n), VertexSet(n)};
  scope.for_each([&](Vertex v) {
    (side[static_cast<std::size_t>(v)] == 1 ? parts.second : parts.first).insert(v);
  });
  return parts;
}

LightColoring color_light_2col_5(const Tournament& t) { return color_light_2col_5(t, t.all()); }

LightColoring color_light_2col_5(const Tournament& t, const VertexSet& scope) {
  require_light(t, scope);
  std::vector<int> color(static_cast<std::size_t>(t.size()), -1);
  for (const auto& comp : scc_decomposition(t, scope)) {
    if (comp.count() < 3) {
      comp.for_each([&](Vertex v) { color[static_cast<std::size_t>(v)] = 0; });
      continue;
    }
    auto pair = find_endpoint_pair(t, comp, transitive_colorer());
    if (!pair) return NonTwoColorCertificate{all_pairs_blocked(t, comp), comp};
    const auto chain = build_vertex_chain(t, pair->u, pair->w, comp);
    if (!chain) throw std::logic_error("strong component without a path " + arc_name(pair->u, pair->w));
    const auto result = color_via_chain(t, comp, *chain, fixed_colorer(pair->domain, pair->coloring, 1),
                                        transitive_colorer());
    if (const auto* fail = std::get_if<ZoneFailure>(&result))
      throw std::logic_error("light tournament with an arc zone that is not transitive: zone " +
                             std::to_string(fail->zone));
    const auto& col = std::get<Coloring>(result);
    int i = 0;
    comp.for_each([&](Vertex v) { color[static_cast<std::size_t>(v)] = col[i++]; });
  }
  return gather(scope, color);
}

C3Chain describe_c3_chain(const Tournament& t, const VertexSet& scope, std::vector<Triangle> triangles) {
  const int n = t.size();
  C3Chain chain;
  chain.triangles = std::move(triangles);
  const auto l = chain.triangles.size();
  chain.zones.assign(l + 1, VertexSet(n));
  chain.clear = VertexSet(n);
  chain.unclear = VertexSet(n);
  VertexSet rest = scope;
  std::vector<VertexSet> tri_sets;
  for (const auto& tri : chain.triangles) {
    tri_sets.push_back(VertexSet::of(n, tri));
    for (Vertex v : tri) rest.erase(v);
  }
  rest.for_each([&](Vertex w) {
    std::size_t highest = 0;
    bool clear = true;
    for (std::size_t i = 0; i < l; ++i) {
      const VertexSet& x = tri_sets[i];
      if (x.is_subset_of(t.in(w))) highest = i + 1;
      else if (!x.is_subset_of(t.out(w))) clear = false;
    }
    chain.zones[highest].insert(w);
    (clear ? chain.clear : chain.unclear).insert(w);
  });
  return chain;
}

C3Chain find_maximal_c3_chain(const Tournament& t) { return find_maximal_c3_chain(t, t.all()); }

C3Chain find_maximal_c3_chain(const Tournament& t, const VertexSet& scope) {
  check_subset(t, scope);
  return maximal_chain(t, scope);
}

LightEndpoints light_endpoints(const Tournament& t) { return light_endpoints(t, t.all()); }

LightEndpoints light_endpoints(const Tournament& t, const VertexSet& scope) {
  require_light(t, scope);
  LightEndpoints ep;
  ep.chain = maximal_chain(t, scope);
  const auto [a, b, c] = ep.chain.triangles.front();
  const auto [x, y, z] = ep.chain.triangles.back();
  ep.a = a;
  ep.z = z;
  // N-(a) minus the clear part sits in N(ab) ∪ N(bc) together with c;
  // N+(z) minus the clear part sits in N(xy) ∪ N(yz) together with x.
  const VertexSet clear = ep.chain.clear;
  const VertexSet nab = arc_neighborhood(t, a, b) & scope;
  const VertexSet nbc = arc_neighborhood(t, b, c) & scope;
  const VertexSet nxy = arc_neighborhood(t, x, y) & scope;
  const VertexSet nyz = arc_neighborhood(t, y, z) & scope;
  ep.three = {3, [=](const Tournament&, const VertexSet& s) {
                if (auto col = classify(s, {&clear, &nab, &nbc})) return col;
                return classify(s, {&clear, &nxy, &nyz});
              }};
  ep.five = {5, [=](const Tournament&, const VertexSet& s) {
               return classify(s, {&clear, &nab, &nbc, &nxy, &nyz});
             }};
  return ep;
}

Coloring color_light_8(const Tournament& t) { return color_light_8(t, t.all()); }

Coloring color_light_8(const Tournament& t, const VertexSet& scope) {
  require_light(t, scope);
  std::vector<int> color(static_cast<std::size_t>(t.size()), -1);
  for (const auto& comp : scc_decomposition(t, scope)) {
    if (comp.count() < 3) {
      comp.for_each([&](Vertex v) { color[static_cast<std::size_t>(v)] = 0; });
      continue;
    }
    const LightEndpoints ep = light_endpoints(t, comp);
    const auto chain = build_vertex_chain(t, ep.z, ep.a, comp);
    if (!chain) throw std::logic_error("strong component without a path " + arc_name(ep.z, ep.a));
    // A long path makes N+(z) and N-(a) independent, so 3 colors each
    // suffice (3 + 4 = 7); a short one needs the joint 5-coloring (5 + 3).
    const auto result = chain->length() >= 4
                            ? color_via_chain(t, comp, *chain, ep.three, transitive_colorer())
                            : color_via_chain(t, comp, *chain, ep.five, transitive_colorer());
    if (const auto* fail = std::get_if<ZoneFailure>(&result))
      throw std::logic_error("light coloring failed in zone " + std::to_string(fail->zone));
    const auto& col = std::get<Coloring>(result);
    int i = 0;
    comp.for_each([&](Vertex v) { color[static_cast<std::size_t>(v)] = col[i++]; });
  }
  return gather(scope, color);
}

Tournament hero(int k) {
  if (k < 0) throw Error("hero index must be nonnegative");
  Tournament h = Tournament::single_vertex();
  for (int i = 0; i < k; ++i) h = delta_compose(h, Tournament::single_vertex(), Tournament::single_vertex());
  return h;
}

}  // namespace tourney
