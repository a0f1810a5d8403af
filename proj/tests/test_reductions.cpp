#include <doctest.h>

#include <map>

#include "support.hpp"
#include "tourney/generators.hpp"
#include "tourney/oracle.hpp"
#include "tourney/reductions.hpp"
#include "tourney/rng.hpp"

using namespace tourney;
using namespace tourney::testing;

namespace {

const Hypergraph3 kEdge(3, {{0, 1, 2}});

Hypergraph3 random_h3(int n, int m, std::uint64_t seed) {
  Rng rng(seed, 41);
  std::vector<Hypergraph3::Edge> all;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) all.push_back({a, b, c});
  rng.shuffle(all);
  all.resize(std::min<std::size_t>(all.size(), static_cast<std::size_t>(m)));
  for (auto& e : all) rng.shuffle(e);
  return Hypergraph3(n, all);
}

std::map<std::string, int> block_sizes(const ReductionArtifact& a) {
  std::map<std::string, int> sizes;
  for (const auto& tag : a.block_map) ++sizes[tag.block];
  return sizes;
}

int chi(const Tournament& t) {
  const auto r = exact_chromatic(t);
  REQUIRE(r.found());
  return r.value->chi;
}

}  // namespace

TEST_SUITE("reductions") {
  TEST_CASE("basic construction sizes, blocks and 2-colorability") {
    const auto a = hyper_to_tournament_basic(kEdge);
    CHECK(a.tournament.size() == 9);
    CHECK(exact_k_colorable(a.tournament, 2).found());
    const auto k5 = hyper_to_tournament_basic(Hypergraph3::complete(5));
    CHECK(k5.tournament.size() == 38);
    CHECK(exact_k_colorable(k5.tournament, 2).none());

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const int n = 3 + static_cast<int>(seed % 5), m = 1 + static_cast<int>(seed % 6);
      const auto h = random_h3(n, m, seed);
      const auto r = hyper_to_tournament_basic(h);
      const int em = h.edge_count();
      CHECK(r.tournament.size() == 3 * em + 3 + n);
      REQUIRE(static_cast<int>(r.block_map.size()) == r.tournament.size());
      const auto sizes = block_sizes(r);
      CHECK(sizes.at("T1") == 3 * em);
      CHECK(sizes.at("T2") == 3);
      CHECK(sizes.at("T3") == n);
      // Copy b points back exactly to the per-edge vertices of b.
      for (int v = 0; v < r.tournament.size(); ++v)
        for (int w = 0; w < r.tournament.size(); ++w) {
          const auto &tv = r.block_map[static_cast<std::size_t>(v)], &tw = r.block_map[static_cast<std::size_t>(w)];
          if (tv.block == "T1" && tw.block == "T3") CHECK(r.tournament.arc(w, v) == (tv.source == tw.source));
          if (tv.block == "T1" && tw.block == "T2") CHECK(r.tournament.arc(v, w));
          if (tv.block == "T2" && tw.block == "T3") CHECK(r.tournament.arc(v, w));
        }
    }
  }

  TEST_CASE("basic construction is 2-colorable exactly when H is") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const auto h = random_h3(4 + static_cast<int>(seed % 2), 1 + static_cast<int>(seed % 4), seed);
      const bool h2 = hypergraph_2colorable(h).found();
      CHECK(h2 == brute_hyper_2colorable(h));
      const auto t = hyper_to_tournament_basic(h).tournament;
      const auto r = exact_k_colorable(t, 2);
      REQUIRE_FALSE(r.exceeded());
      CHECK(r.found() == h2);
      if (r.found()) CHECK(is_proper(h, decode_basic(h, *r.value)));
      if (h2) {
        const auto explicit_col = basic_two_coloring(h, *hypergraph_2colorable(h).value);
        CHECK_FALSE(verify_coloring(t, explicit_col));
        CHECK(explicit_col.palette_size() == 2);
      }
    }
  }

  TEST_CASE("gap construction") {
    const auto a = hyper_to_tournament_gap(kEdge);
    CHECK(a.tournament.size() == 15);
    CHECK(exact_k_colorable(a.tournament, 2).found());
    const auto sizes = block_sizes(a);
    CHECK(sizes.at("H") == 3);
    CHECK(sizes.at("H'") == 3);
    CHECK(sizes.at("G.T1") == 3);
    CHECK(sizes.at("G.T2") == 3);
    CHECK(sizes.at("G.T3") == 3);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto h = random_h3(5, 1 + static_cast<int>(seed % 5), seed);
      const auto g = hyper_to_tournament_gap(h);
      CHECK(g.tournament.size() == 9 * h.edge_count() + 3 + h.size());
      if (auto c = hypergraph_2colorable(h); c.found()) {
        const auto col = gap_two_coloring(h, *c.value);
        CHECK_FALSE(verify_coloring(g.tournament, col));
      }
      const auto& t = g.tournament;
      for (int v = 0; v < t.size(); ++v)
        for (int w = 0; w < t.size(); ++w) {
          const auto &tv = g.block_map[static_cast<std::size_t>(v)], &tw = g.block_map[static_cast<std::size_t>(w)];
          if (tv.block == "H" && tw.block == "H'") CHECK(t.arc(w, v) == (tv.source == tw.source));
          if (tv.block == "H" && tw.block.starts_with("G.")) CHECK(t.arc(v, w));
          if (tv.block.starts_with("G.") && tw.block == "H'") CHECK(t.arc(v, w));
        }
    }
  }

  TEST_CASE("gap decoder turns 3-colorings into proper colorings of H") {
    int decoded = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto h = seed == 0 ? kEdge : random_h3(4 + static_cast<int>(seed % 3), 1 + static_cast<int>(seed % 4), seed);
      const auto t = hyper_to_tournament_gap(h).tournament;
      const auto r = exact_k_colorable(t, 3);
      REQUIRE(r.found());
      const auto d = decode_gap(h, *r.value);
      CHECK(is_proper(h, d.colors));
      for (int c : d.colors) CHECK((c >= 0 && c < 6));
      ++decoded;
    }
    CHECK(decoded == 30);
  }

  TEST_CASE("gap decoder handles both branches and rejects bad input") {
    const auto t = hyper_to_tournament_gap(kEdge).tournament;
    const auto two = gap_two_coloring(kEdge, {0, 0, 1});
    const auto d2 = decode_gap(kEdge, two);
    CHECK(d2.two_color_branch);
    CHECK(is_proper(kEdge, d2.colors));

    // Three colors inside the embedded construction: recolor one copy vertex.
    std::vector<int> c = two.colors();
    const int copy = 3 + 3 * 1 + 3;  // first T3 vertex inside G
    c[static_cast<std::size_t>(copy)] = 2;
    if (!verify_coloring(t, Coloring(c))) {
      const auto d3 = decode_gap(kEdge, Coloring(c));
      CHECK_FALSE(d3.two_color_branch);
      CHECK(is_proper(kEdge, d3.colors));
    }
    CHECK_THROWS_AS(decode_gap(kEdge, Coloring(std::vector<int>(15, 0))), Error);
    CHECK_THROWS_AS(decode_gap(kEdge, Coloring(std::vector<int>(14, 0))), Error);
    std::vector<int> four = two.colors();
    four[0] = 3;
    four[1] = 2;
    CHECK_THROWS_AS(decode_gap(kEdge, Coloring(four)), Error);
  }

  TEST_CASE("s-chains") {
    CHECK(s_chain(1) == Tournament::single_vertex());
    CHECK(s_chain(2) == c3());
    for (int i = 1; i <= 6; ++i) {
      CHECK(s_chain(i).size() == (1 << i) - 1);
      const auto c = s_chain_coloring(i);
      CHECK_FALSE(verify_coloring(s_chain(i), c));
      CHECK(c.palette_size() == i);
    }
    CHECK(chi(s_chain(3)) == 3);
    CHECK(chi(s_chain(4)) == 4);
    CHECK_THROWS_AS(s_chain(0), Error);
  }

  TEST_CASE("delta gadgets") {
    const auto one = Tournament::single_vertex();
    const auto g = gadget_amplify(one, one, 1, 1, 2, 2);
    CHECK(g.size() == 9);
    CHECK(chi(g) == 2);
    CHECK_FALSE(verify_coloring(g, gadget_coloring(Coloring({0}), Coloring({0}), 1, 1, 2, 2)));

    const auto r = gadget_amplify(c3(), c3(), 2, 2, 3, 3);
    CHECK(r.size() == 33);
    const auto col = gadget_coloring(Coloring({0, 0, 1}), Coloring({0, 0, 1}), 2, 2, 3, 3);
    CHECK_FALSE(verify_coloring(r, col));
    CHECK(col.palette_size() == 4);
    CHECK(exact_k_colorable(r, 3).none());

    CHECK_THROWS_AS(gadget_amplify(one, one, 2, 2, 1, 3), Error);
    CHECK_THROWS_AS(gadget_amplify(one, one, 0, 2, 3, 3), Error);
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b)
        for (int c = 1; c <= 3; ++c)
          for (int d = 1; d <= 3; ++d) {
            if (a + b >= c + d) continue;
            for (const auto& r1 : {one, c3()})
              for (const auto& r2 : {one, c3(), Tournament::transitive(2)}) {
                const auto t = gadget_amplify(r1, r2, a, b, c, d);
                CHECK(t.size() == (c + d - a - b + 1) * (r1.size() + r2.size()) + (1 << (a + b)) - 1);
                CHECK(t.size() <= (c + d) * (r1.size() + r2.size()) + (1 << (a + b)) - 1);
              }
          }
  }

  TEST_CASE("delta of chromatic parts") {
    // chi(Δ(R1,R2,R3)) = a+b whenever chi(R3) = a+b.
    const std::vector<Tournament> small{Tournament::single_vertex(), Tournament::transitive(2), c3(), s_chain(3)};
    for (const auto& r1 : small)
      for (const auto& r2 : small)
        for (const auto& r3 : {Tournament::single_vertex(), c3(), s_chain(3), s_chain(4)}) {
          if (r1.size() + r2.size() + r3.size() > 20) continue;
          const int a = chi(r1), b = chi(r2), c = chi(r3);
          const int d = chi(delta_compose(r1, r2, r3));
          if (c == a + b) CHECK(d == a + b);
          if (c < a + b) CHECK(d >= c + 1);
          CHECK(d >= std::max({a, b, c}));
        }
  }

  TEST_CASE("hardness tower") {
    const auto t2 = hardness_tower(kEdge, 2);
    CHECK(t2.tournament == hyper_to_tournament_gap(kEdge).tournament);
    REQUIRE(t2.coloring);
    CHECK(t2.coloring->palette_size() == 2);
    CHECK(exact_k_colorable(t2.tournament, 2).found());

    const auto t3 = hardness_tower(kEdge, 3);
    CHECK(t3.tournament.size() == 3 * t2.tournament.size());
    REQUIRE(t3.coloring);
    CHECK_FALSE(verify_coloring(t3.tournament, *t3.coloring));
    CHECK(t3.coloring->palette_size() == 3);

    for (int k = 4; k <= 6; ++k) {
      const auto tk = hardness_tower(kEdge, k);
      REQUIRE(tk.coloring);
      CHECK_FALSE(verify_coloring(tk.tournament, *tk.coloring));
      CHECK(tk.coloring->palette_size() == k);
    }
    CHECK_FALSE(hardness_tower(Hypergraph3::fano(), 3).coloring);
    CHECK_THROWS_AS(hardness_tower(kEdge, 1), Error);
  }

  TEST_CASE("backedge steps") {
    const auto k3 = backedge_step(Graph::complete(3), s_chain(3));
    CHECK(k3.size() == 17);
    CHECK(chi(k3) == 3);
    const auto k4 = backedge_step(Graph::complete(4), s_chain(3));
    CHECK(k4.size() == 25);
    const auto r = exact_k_colorable(k4, 3);
    CHECK(r.none());

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Rng rng(seed, 42);
      const int n = 2 + static_cast<int>(rng.below(6));
      std::vector<std::pair<int, int>> e;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (rng.coin()) e.emplace_back(i, j);
      const Graph g(n, e);
      const auto t = random_tournament(1 + static_cast<int>(seed % 5), seed);
      const auto u = backedge_step(g, t);
      CHECK(u.size() == (n - 1) * t.size() + n);
      // The only backward arcs in layout order are the graph edges.
      const int stride = t.size() + 1;
      for (int x = 0; x < u.size(); ++x)
        for (int y = x + 1; y < u.size(); ++y) {
          const bool xv = x % stride == 0, yv = y % stride == 0;
          if (xv && yv) CHECK(u.arc(y, x) == g.has_edge(x / stride, y / stride));
          else if (x / stride != y / stride || xv) CHECK(u.arc(x, y));
        }
      const auto gcol = *exact_graph_chromatic(g).value;
      const auto tc = exact_chromatic(t).value->witness;
      CHECK_FALSE(verify_coloring(u, backedge_coloring(g, gcol, t, tc)));
    }
    CHECK_THROWS_AS(backedge_step(Graph(0, {}), c3()), Error);
  }

  TEST_CASE("graph towers") {
    CHECK(graph_tower(Graph::complete(3), 3, 4) == backedge_step(Graph::complete(3), s_chain(3)));
    const auto c5 = graph_tower(Graph::cycle(5), 3, 4);
    CHECK(c5.size() == 33);
    CHECK(chi(c5) == 3);
    CHECK(graph_tower_size(Graph::cycle(5), 3, 5) == 4 * 33 + 5);
    CHECK_THROWS_WITH_AS(graph_tower(Graph::cycle(5), 3, 12), doctest::Contains("cap"), Error);
    CHECK_THROWS_AS(graph_tower(Graph::cycle(5), 3, 3), Error);
    CHECK_THROWS_AS(graph_tower(Graph::cycle(5), 2, 4), Error);
    CHECK_NOTHROW(graph_tower(Graph::cycle(5), 3, 5, 1000));
    CHECK_THROWS_AS(graph_tower(Graph::cycle(5), 3, 5, 100), Error);
  }

  TEST_CASE("ramsey pairs") {
    BipartiteGraph full(3, 3), empty(3, 3), single(2, 2);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) full.set(x, y);
    single.set(0, 0);
    const auto tf = ramsey_pair(full), te = ramsey_pair(empty), ts = ramsey_pair(single);
    for (int x = 0; x < 3; ++x)
      for (int y = 3; y < 6; ++y) {
        CHECK(tf.arc(x, y));
        CHECK(te.arc(y, x));
      }
    int forward = 0;
    for (int x = 0; x < 2; ++x)
      for (int y = 2; y < 4; ++y) forward += ts.arc(x, y);
    CHECK(forward == 1);
    CHECK(ts.arc(0, 2));
    CHECK(is_transitive(tf, VertexSet::of(6, std::vector<Vertex>{0, 1, 2})));
    CHECK_THROWS_AS(ramsey_pair(BipartiteGraph(2, 3)), Error);
  }

  TEST_CASE("ramsey blowups") {
    const Graph edge(2, {{0, 1}});
    const auto source = random_bipartite_source(9);
    const auto t = ramsey_blowup(edge, 3, source);
    CHECK(t.size() == 6);
    const auto bg = source(3, 0, 1);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) CHECK(t.arc(x, 3 + y) == bg.edge(x, y));

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Rng rng(seed, 43);
      const int n = 3 + static_cast<int>(rng.below(5)), s = 1 + static_cast<int>(rng.below(4));
      std::vector<std::pair<int, int>> e;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (rng.coin()) e.emplace_back(i, j);
      const Graph g(n, e);
      const auto b = ramsey_blowup(g, s, random_bipartite_source(seed));
      CHECK(b.size() == n * s);
      for (int i = 0; i < n; ++i) {
        CHECK(is_transitive(b, [&] {
          VertexSet blk(b.size());
          for (int x = 0; x < s; ++x) blk.insert(i * s + x);
          return blk;
        }()));
        for (int j = i + 1; j < n; ++j)
          if (!g.has_edge(i, j))
            for (int x = 0; x < s; ++x)
              for (int y = 0; y < s; ++y) CHECK(b.arc(i * s + x, j * s + y));
      }
      const auto gcol = *exact_graph_chromatic(g).value;
      const auto col = blowup_coloring(gcol, s);
      CHECK_FALSE(verify_coloring(b, col));
      CHECK(col.palette_size() == palette_size(gcol));
    }
    CHECK_THROWS_AS(ramsey_blowup(edge, 0, source), Error);
  }

  TEST_CASE("random couplings put a triangle on large subset pairs") {
    const int n = 64, k = 16;
    BipartiteGraph b = random_bipartite_source(5)(n, 0, 1);
    const auto t = ramsey_pair(b);
    Rng rng(5, 44);
    std::vector<int> xs(static_cast<std::size_t>(n)), ys(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = i, ys[static_cast<std::size_t>(i)] = n + i;
    int hits = 0;
    const int samples = 200;
    for (int s = 0; s < samples; ++s) {
      rng.shuffle(xs);
      rng.shuffle(ys);
      std::vector<Vertex> sub(xs.begin(), xs.begin() + k);
      sub.insert(sub.end(), ys.begin(), ys.begin() + k);
      hits += has_triangle(t, sub);
    }
    CHECK(hits == samples);
  }

  TEST_CASE("constructions are deterministic") {
    const auto h = random_h3(5, 4, 3);
    CHECK(hyper_to_tournament_gap(h).tournament == hyper_to_tournament_gap(h).tournament);
    const Graph g = Graph::cycle(6);
    CHECK(ramsey_blowup(g, 4, random_bipartite_source(1)) == ramsey_blowup(g, 4, random_bipartite_source(1)));
  }
}
