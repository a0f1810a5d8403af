#pragma once

// Independent brute-force references for the unit tests. They share no code
// with the library beyond the Tournament container.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "tourney/core.hpp"
#include "tourney/graph.hpp"

namespace tourney::testing {

inline Tournament from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::vector<bool>> m(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (auto [u, v] : arcs) m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
  return Tournament::from_matrix(m);
}

inline Tournament c3() { return from_arcs(3, {{0, 1}, {1, 2}, {2, 0}}); }

/// Any directed triangle among the given vertices, by triple enumeration.
inline bool has_triangle(const Tournament& t, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      for (std::size_t k = j + 1; k < vs.size(); ++k) {
        const Vertex a = vs[i], b = vs[j], c = vs[k];
        if ((t.arc(a, b) && t.arc(b, c) && t.arc(c, a)) || (t.arc(a, c) && t.arc(c, b) && t.arc(b, a))) return true;
      }
  return false;
}

inline bool is_triangle(const Tournament& t, const Triangle& x) {
  return t.arc(x[0], x[1]) && t.arc(x[1], x[2]) && t.arc(x[2], x[0]);
}

inline bool brute_valid(const Tournament& t, const std::vector<int>& colors) {
  const int n = t.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        const auto ca = colors[static_cast<std::size_t>(a)];
        if (ca != colors[static_cast<std::size_t>(b)] || ca != colors[static_cast<std::size_t>(c)]) continue;
        if (has_triangle(t, {a, b, c})) return false;
      }
  return true;
}

/// Exhaustive k-colorability over all k^n assignments (tiny n only).
inline bool brute_k_colorable(const Tournament& t, int k) {
  const int n = t.size();
  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  while (true) {
    if (brute_valid(t, colors)) return true;
    int i = 0;
    while (i < n && ++colors[static_cast<std::size_t>(i)] == k) colors[static_cast<std::size_t>(i++)] = 0;
    if (i == n) return false;
  }
}

inline int brute_chromatic(const Tournament& t) {
  for (int k = 1;; ++k)
    if (brute_k_colorable(t, k)) return k;
}

/// Maximum acyclic subset size over all 2^n subsets.
inline int brute_max_acyclic(const Tournament& t) {
  const int n = t.size();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    std::vector<Vertex> vs;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1U) vs.push_back(v);
    if (static_cast<int>(vs.size()) > best && !has_triangle(t, vs)) best = static_cast<int>(vs.size());
  }
  return best;
}

/// Permutation p with a->b in s iff p[a]->p[b] in t, by trying all n!.
inline std::optional<std::vector<int>> find_isomorphism(const Tournament& s, const Tournament& t) {
  const int n = s.size();
  if (t.size() != n) return std::nullopt;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        if (a != b && s.arc(a, b) != t.arc(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)])) ok = false;
    if (ok) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

/// Breadth-first distance by repeated frontier expansion over the matrix.
inline int brute_distance(const Tournament& t, Vertex u, Vertex v) {
  const int n = t.size();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<Vertex> frontier{u};
  seen[static_cast<std::size_t>(u)] = true;
  for (int d = 0; !frontier.empty(); ++d) {
    for (Vertex x : frontier)
      if (x == v) return d;
    std::vector<Vertex> next;
    for (Vertex x : frontier)
      for (Vertex y = 0; y < n; ++y)
        if (y != x && !seen[static_cast<std::size_t>(y)] && t.arc(x, y)) {
          seen[static_cast<std::size_t>(y)] = true;
          next.push_back(y);
        }
    frontier = std::move(next);
  }
  return -1;
}

inline bool brute_hyper_2colorable(const Hypergraph3& h) {
  const int n = h.size();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool ok = true;
    for (const auto& e : h.edges()) {
      const auto a = mask >> e[0] & 1U, b = mask >> e[1] & 1U, c = mask >> e[2] & 1U;
      if (a == b && b == c) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace tourney::testing
