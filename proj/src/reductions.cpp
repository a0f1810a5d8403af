#include "tourney/reductions.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "tourney/oracle.hpp"
#include "tourney/rng.hpp"

namespace tourney {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

VertexSet range(int n, int begin, int end) {
  VertexSet s(n);
  for (int v = begin; v < end; ++v) s.insert(v);
  return s;
}

void check_h_coloring(const Hypergraph3& h, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != h.size()) throw Error("hypergraph coloring has wrong length");
  for (int c : colors)
    if (c != 0 && c != 1) throw Error("hypergraph coloring must use ids 0 and 1");
  if (!is_proper(h, colors)) throw Error("hypergraph coloring has a monochromatic edge");
}

// One directed triangle per hyperedge at offset, forward between edges.
void embed_edge_triangles(TournamentBuilder& b, const Hypergraph3& h, int offset) {
  const int m = h.edge_count();
  for (int i = 0; i < m; ++i) {
    const int base = offset + 3 * i;
    b.add_arc(base, base + 1);
    b.add_arc(base + 1, base + 2);
    b.add_arc(base + 2, base);
    for (int j = i + 1; j < m; ++j)
      for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) b.add_arc(base + x, offset + 3 * j + y);
  }
}

int edge_vertex(const Hypergraph3& h, int edge, int pos) { return h.edges()[at(edge)][at(pos)]; }

void check_valid(const Tournament& t, const Coloring& c) {
  if (c.size() != t.size()) throw Error("coloring has wrong length");
  if (auto bad = verify_coloring(t, c))
    throw Error("coloring is invalid: color " + std::to_string(bad->color) + " contains a directed triangle");
}

}  // namespace

ReductionArtifact hyper_to_tournament_basic(const Hypergraph3& h) {
  const int n = h.size(), m = h.edge_count();
  const int tri = 3 * m, copies = tri + 3, total = copies + n;
  TournamentBuilder b(total);
  std::vector<BlockTag> tags(at(total));

  embed_edge_triangles(b, h, 0);
  for (int i = 0; i < m; ++i)
    for (int x = 0; x < 3; ++x) tags[at(3 * i + x)] = {"T1", edge_vertex(h, i, x), i};
  b.add_arc(tri, tri + 1);
  b.add_arc(tri + 1, tri + 2);
  b.add_arc(tri + 2, tri);
  for (int x = 0; x < 3; ++x) tags[at(tri + x)] = {"T2", x, -1};
  b.embed(Tournament::transitive(n), copies);
  for (int a = 0; a < n; ++a) tags[at(copies + a)] = {"T3", a, -1};

  b.add_all(range(total, 0, tri), range(total, tri, copies));
  b.add_all(range(total, tri, copies), range(total, copies, total));
  for (int i = 0; i < m; ++i)
    for (int x = 0; x < 3; ++x)
      for (int a = 0; a < n; ++a) {
        const int v = 3 * i + x;
        if (edge_vertex(h, i, x) == a)
          b.add_arc(copies + a, v);
        else
          b.add_arc(v, copies + a);
      }
  return {std::move(b).build(), std::move(tags)};
}

ReductionArtifact hyper_to_tournament_gap(const Hypergraph3& h) {
  const int m = h.edge_count();
  const auto inner = hyper_to_tournament_basic(h);
  const int g = inner.tournament.size();
  const int first = 3 * m, second = first + g, total = second + 3 * m;
  TournamentBuilder b(total);
  std::vector<BlockTag> tags(at(total));

  embed_edge_triangles(b, h, 0);
  b.embed(inner.tournament, first);
  embed_edge_triangles(b, h, second);
  for (int i = 0; i < m; ++i)
    for (int x = 0; x < 3; ++x) {
      tags[at(3 * i + x)] = {"H", edge_vertex(h, i, x), i};
      tags[at(second + 3 * i + x)] = {"H'", edge_vertex(h, i, x), i};
    }
  for (int v = 0; v < g; ++v) {
    auto tag = inner.block_map[at(v)];
    tag.block = "G." + tag.block;
    tags[at(first + v)] = std::move(tag);
  }

  b.add_all(range(total, 0, first), range(total, first, second));
  b.add_all(range(total, first, second), range(total, second, total));
  for (int u = 0; u < first; ++u)
    for (int w = second; w < total; ++w) {
      if (tags[at(u)].source == tags[at(w)].source)
        b.add_arc(w, u);
      else
        b.add_arc(u, w);
    }
  return {std::move(b).build(), std::move(tags)};
}

Coloring basic_two_coloring(const Hypergraph3& h, const std::vector<int>& h_colors) {
  check_h_coloring(h, h_colors);
  const int m = h.edge_count();
  std::vector<int> c;
  c.reserve(at(3 * m + 3 + h.size()));
  for (int i = 0; i < m; ++i)
    for (int x = 0; x < 3; ++x) c.push_back(h_colors[at(edge_vertex(h, i, x))]);
  c.insert(c.end(), {0, 0, 1});
  for (int a = 0; a < h.size(); ++a) c.push_back(1 - h_colors[at(a)]);
  return Coloring(std::move(c));
}

Coloring gap_two_coloring(const Hypergraph3& h, const std::vector<int>& h_colors) {
  const auto inner = basic_two_coloring(h, h_colors);
  const int m = h.edge_count();
  std::vector<int> c;
  for (int i = 0; i < m; ++i)
    for (int x = 0; x < 3; ++x) c.push_back(h_colors[at(edge_vertex(h, i, x))]);
  c.insert(c.end(), inner.colors().begin(), inner.colors().end());
  for (int i = 0; i < m; ++i)
    for (int x = 0; x < 3; ++x) c.push_back(1 - h_colors[at(edge_vertex(h, i, x))]);
  return Coloring(std::move(c));
}

namespace {

// Reads H's coloring from the T3 copies of a basic construction embedded at
// `offset`, renaming the two ids present to 0 and 1.
std::vector<int> read_copies(const Hypergraph3& h, const Coloring& c, int offset) {
  const int copies = offset + 3 * h.edge_count() + 3;
  std::vector<int> ids;
  for (int v = offset; v < copies + h.size(); ++v) ids.push_back(c[v]);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.size() > 2) throw Error("embedded construction uses more than two colors");
  std::vector<int> out(at(h.size()));
  for (int a = 0; a < h.size(); ++a) out[at(a)] = c[copies + a] == ids.front() ? 0 : 1;
  if (!is_proper(h, out)) throw std::logic_error("decoded coloring of H is not proper");
  return out;
}

}  // namespace

std::vector<int> decode_basic(const Hypergraph3& h, const Coloring& c) {
  const int total = 3 * h.edge_count() + 3 + h.size();
  if (c.size() != total) throw Error("coloring has wrong length");
  if (c.palette_size() > 2) throw Error("decoding needs a 2-coloring");
  check_valid(hyper_to_tournament_basic(h).tournament, c);
  return read_copies(h, c, 0);
}

GapDecoding decode_gap(const Hypergraph3& h, const Coloring& c) {
  const auto art = hyper_to_tournament_gap(h);
  const int m = h.edge_count(), first = 3 * m;
  if (c.palette_size() > 3) throw Error("decoding needs a coloring with at most 3 colors");
  check_valid(art.tournament, c);

  std::vector<int> inner_ids;
  const int g = 3 * m + 3 + h.size();
  for (int v = first; v < first + g; ++v) inner_ids.push_back(c[v]);
  std::sort(inner_ids.begin(), inner_ids.end());
  inner_ids.erase(std::unique(inner_ids.begin(), inner_ids.end()), inner_ids.end());
  if (inner_ids.size() <= 2) return {read_copies(h, c, first), true};

  std::vector<int> ids;
  for (int v = 0; v < c.size(); ++v) ids.push_back(c[v]);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto rank = [&](int color) {
    return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), color) - ids.begin());
  };

  const int second = first + g;
  std::vector<int> out(at(h.size()), 0);
  for (int a = 0; a < h.size(); ++a) {
    std::optional<int> s_color, q_color;
    bool s_mono = true, q_mono = true;
    for (int i = 0; i < m; ++i)
      for (int x = 0; x < 3; ++x) {
        if (edge_vertex(h, i, x) != a) continue;
        const int cs = c[3 * i + x], cq = c[second + 3 * i + x];
        if (s_color && *s_color != cs) s_mono = false;
        if (q_color && *q_color != cq) q_mono = false;
        s_color = cs;
        q_color = cq;
      }
    if (!s_color) continue;
    if (s_mono)
      out[at(a)] = rank(*s_color);
    else if (q_mono)
      out[at(a)] = rank(*q_color) + 3;
    else
      throw Error("malformed coloring: neither copy set of vertex " + std::to_string(a) + " is monochromatic");
  }
  if (!is_proper(h, out)) throw std::logic_error("decoded coloring of H is not proper");
  return {std::move(out), false};
}

Tournament s_chain(int i) {
  if (i < 1) throw Error("s_chain needs i >= 1");
  auto t = Tournament::single_vertex();
  for (int j = 1; j < i; ++j) t = delta_compose(Tournament::single_vertex(), t, t);
  return t;
}

Coloring s_chain_coloring(int i) {
  if (i < 1) throw Error("s_chain needs i >= 1");
  std::vector<int> c{0};
  for (int j = 1; j < i; ++j) {
    std::vector<int> next{j};
    next.insert(next.end(), c.begin(), c.end());
    next.insert(next.end(), c.begin(), c.end());
    c = std::move(next);
  }
  return Coloring(std::move(c));
}

namespace {

void check_gadget(int a, int b, int c, int d) {
  if (a < 1 || b < 1 || c < 1 || d < 1) throw Error("gadget parameters must be positive");
  if (a + b >= c + d) throw Error("gadget needs a + b < c + d");
}

}  // namespace

Tournament gadget_amplify(const Tournament& r1, const Tournament& r2, int a, int b, int c, int d) {
  check_gadget(a, b, c, d);
  auto r = s_chain(a + b);
  for (int j = a + b; j <= c + d; ++j) r = delta_compose(r1, r2, r);
  return r;
}

Coloring gadget_coloring(const Coloring& r1, const Coloring& r2, int a, int b, int c, int d) {
  check_gadget(a, b, c, d);
  for (int x : r1.colors())
    if (x >= a) throw Error("first coloring must use ids below a");
  for (int x : r2.colors())
    if (x >= b) throw Error("second coloring must use ids below b");
  std::vector<int> col = s_chain_coloring(a + b).colors();
  for (int j = a + b; j <= c + d; ++j) {
    std::vector<int> next(r1.colors());
    for (int x : r2.colors()) next.push_back(x + a);
    next.insert(next.end(), col.begin(), col.end());
    col = std::move(next);
  }
  return Coloring(std::move(col));
}

Tower hardness_tower(const Hypergraph3& h, int k, std::uint64_t budget) {
  if (k < 2) throw Error("hardness tower needs k >= 2");
  std::optional<std::vector<int>> h2;
  if (auto r = hypergraph_2colorable(h, budget); r.found()) h2 = *r.value;

  std::map<int, Tower> levels;
  Tower base{hyper_to_tournament_gap(h).tournament, std::nullopt};
  if (h2) base.coloring = gap_two_coloring(h, *h2);
  levels[2] = base;
  for (int level = 3; level <= k; ++level) {
    Tower next;
    if (level == 3) {
      const auto& t2 = levels[2];
      next.tournament = delta_compose(t2.tournament, t2.tournament, t2.tournament);
      if (t2.coloring) {
        std::vector<int> c;
        for (int copy = 0; copy < 3; ++copy)
          for (int x : t2.coloring->colors()) c.push_back((x + copy) % 3);
        next.coloring = Coloring(std::move(c));
      }
    } else {
      const int a = level / 2, b = level - a;
      const auto& ta = levels[a];
      const auto& tb = levels[b];
      next.tournament = gadget_amplify(ta.tournament, tb.tournament, a, b, 2 * a, 2 * b);
      if (ta.coloring && tb.coloring) next.coloring = gadget_coloring(*ta.coloring, *tb.coloring, a, b, 2 * a, 2 * b);
    }
    levels[level] = std::move(next);
  }
  return levels[k];
}

Tournament backedge_step(const Graph& g, const Tournament& t) {
  const int n = g.size(), s = t.size();
  if (n < 1) throw Error("backedge step needs a nonempty graph");
  const int stride = s + 1, total = (n - 1) * s + n;
  TournamentBuilder b(total);
  // Everything points forward in the layout order first.
  for (int u = 0; u < total; ++u)
    for (int v = u + 1; v < total; ++v) b.add_arc(u, v);
  for (int copy = 0; copy + 1 < n; ++copy) b.embed(t, copy * stride + 1);
  for (auto [u, v] : g.edges()) b.add_arc(v * stride, u * stride);
  return std::move(b).build();
}

Coloring backedge_coloring(const Graph& g, const GraphColoring& g_colors, const Tournament& t,
                           const Coloring& t_colors) {
  if (static_cast<int>(g_colors.size()) != g.size() || t_colors.size() != t.size())
    throw Error("coloring sizes do not match");
  std::vector<int> c;
  for (int v = 0; v < g.size(); ++v) {
    c.push_back(g_colors[at(v)]);
    if (v + 1 < g.size()) c.insert(c.end(), t_colors.colors().begin(), t_colors.colors().end());
  }
  return Coloring(std::move(c));
}

long long graph_tower_size(const Graph& g, int k, int l) {
  if (k < 3 || l <= k) throw Error("graph tower needs 3 <= k < l");
  if (k > 60) return std::numeric_limits<long long>::max();
  constexpr long long limit = std::numeric_limits<long long>::max() / 4;
  long long size = (1LL << k) - 1;
  const long long n = g.size();
  for (int c = k; c < l; ++c) {
    if (n > 1 && size > (limit - n) / (n - 1)) return std::numeric_limits<long long>::max();
    size = (n - 1) * size + n;
  }
  return size;
}

Tournament graph_tower(const Graph& g, int k, int l, long long cap) {
  const long long predicted = graph_tower_size(g, k, l);
  if (predicted > cap)
    throw Error("graph tower would have " + std::to_string(predicted) + " vertices, above the cap of " +
                std::to_string(cap));
  auto t = s_chain(k);
  for (int c = k; c < l; ++c) t = backedge_step(g, t);
  return t;
}

Tournament ramsey_pair(const BipartiteGraph& bg) {
  if (bg.left != bg.right) throw Error("ramsey pair needs |X| = |Y|");
  const int n = bg.left;
  TournamentBuilder b(2 * n);
  b.embed(Tournament::transitive(n), 0);
  b.embed(Tournament::transitive(n), n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (bg.edge(x, y))
        b.add_arc(x, n + y);
      else
        b.add_arc(n + y, x);
    }
  return std::move(b).build();
}

BipartiteSource random_bipartite_source(std::uint64_t seed) {
  return [seed](int size, int i, int j) {
    // Stream 6 is reserved for bipartite couplings.
    Rng rng(keyed(seed, 6, static_cast<std::uint64_t>(i) << 32 | static_cast<std::uint32_t>(j)), 0);
    BipartiteGraph bg(size, size);
    for (int x = 0; x < size; ++x)
      for (int y = 0; y < size; ++y) bg.set(x, y, rng.coin());
    return bg;
  };
}

Tournament ramsey_blowup(const Graph& g, int block_size, const BipartiteSource& source) {
  if (block_size < 1) throw Error("block size must be positive");
  const int n = g.size(), total = n * block_size;
  TournamentBuilder b(total);
  for (int i = 0; i < n; ++i) b.embed(Tournament::transitive(block_size), i * block_size);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int xi = i * block_size, yj = j * block_size;
      if (!g.has_edge(i, j)) {
        b.add_all(range(total, xi, xi + block_size), range(total, yj, yj + block_size));
        continue;
      }
      const auto bg = source(block_size, i, j);
      if (bg.left != block_size || bg.right != block_size) throw Error("bipartite source returned the wrong size");
      for (int x = 0; x < block_size; ++x)
        for (int y = 0; y < block_size; ++y) {
          if (bg.edge(x, y))
            b.add_arc(xi + x, yj + y);
          else
            b.add_arc(yj + y, xi + x);
        }
    }
  return std::move(b).build();
}

Coloring blowup_coloring(const GraphColoring& g_colors, int block_size) {
  std::vector<int> c;
  for (int x : g_colors) c.insert(c.end(), at(block_size), x);
  return Coloring(std::move(c));
}

}  // namespace tourney
