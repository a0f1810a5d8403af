#include "tourney/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace tourney {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw Error("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw Error("duplicate edge " + std::to_string(dup->first) + " " + std::to_string(dup->second));
  edges_ = std::move(edges);
  adj_.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : edges_) {
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph Graph::cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

bool Graph::has_edge(int u, int v) const {
  const auto& a = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

bool is_proper(const Graph& g, const GraphColoring& colors) {
  if (static_cast<int>(colors.size()) != g.size()) return false;
  for (auto [u, v] : g.edges())
    if (colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)]) return false;
  return true;
}

int palette_size(const GraphColoring& colors) {
  return static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
}

Hypergraph3::Hypergraph3(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw Error("negative vertex count");
  std::set<Edge> seen;
  for (const auto& e : edges_) {
    for (int v : e)
      if (v < 0 || v >= n) throw Error("hyperedge vertex out of range: " + std::to_string(v));
    if (e[0] == e[1] || e[1] == e[2] || e[0] == e[2])
      throw Error("hyperedge repeats a vertex: " + std::to_string(e[0]) + " " + std::to_string(e[1]) +
                  " " + std::to_string(e[2]));
    Edge key = e;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second)
      throw Error("duplicate hyperedge " + std::to_string(key[0]) + " " + std::to_string(key[1]) + " " +
                  std::to_string(key[2]));
  }
}

Hypergraph3 Hypergraph3::complete(int n) {
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) e.push_back({a, b, c});
  return Hypergraph3(n, std::move(e));
}

Hypergraph3 Hypergraph3::fano() {
  return Hypergraph3(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

bool is_proper(const Hypergraph3& h, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != h.size()) return false;
  for (const auto& e : h.edges()) {
    const int c = colors[static_cast<std::size_t>(e[0])];
    if (c == colors[static_cast<std::size_t>(e[1])] && c == colors[static_cast<std::size_t>(e[2])]) return false;
  }
  return true;
}

}  // namespace tourney
