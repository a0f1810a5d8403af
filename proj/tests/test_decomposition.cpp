#include <doctest.h>

#include "support.hpp"
#include "tourney/decomposition.hpp"
#include "tourney/generators.hpp"
#include "tourney/rng.hpp"

using namespace tourney;
using namespace tourney::testing;

namespace {

// Zones straight from the definition, with plain loops over the matrix.
std::vector<std::vector<Vertex>> reference_zones(const Tournament& t, const std::vector<Vertex>& path) {
  const int n = t.size(), k = static_cast<int>(path.size()) - 1;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<std::vector<Vertex>> zones;
  auto take = [&](auto&& member) {
    std::vector<Vertex> zone;
    for (Vertex x = 0; x < n; ++x)
      if (!used[static_cast<std::size_t>(x)] && member(x)) {
        used[static_cast<std::size_t>(x)] = true;
        zone.push_back(x);
      }
    zones.push_back(zone);
  };
  take([&](Vertex x) { return x != path[0] && t.arc(path[0], x); });
  for (int i = 1; i <= k; ++i) {
    const Vertex a = path[static_cast<std::size_t>(i - 1)], b = path[static_cast<std::size_t>(i)];
    take([&](Vertex x) { return x != a && x != b && t.arc(x, a) && t.arc(b, x); });
  }
  take([&](Vertex x) { return x != path.back() && t.arc(x, path.back()); });
  return zones;
}

Tournament strong_random(int n, std::uint64_t seed) {
  for (std::uint64_t s = seed;; s += 1000003) {
    auto t = random_tournament(n, s);
    if (scc_decomposition(t).size() == 1) return t;
  }
}

// Accepts exactly the subsets that first-fit colors within the budget.
SubColorer greedy_colorer(int budget) {
  return {budget, [budget](const Tournament& t, const VertexSet& s) -> std::optional<Coloring> {
            auto c = greedy_coloring(t, s);
            if (c.palette_size() > budget) return std::nullopt;
            return c;
          }};
}

}  // namespace

TEST_SUITE("decomposition") {
  TEST_CASE("vertex chains") {
    const auto chain = build_vertex_chain(c3(), 0, 2);
    REQUIRE(chain);
    CHECK(chain->vertices == std::vector<Vertex>{0, 1, 2});
    CHECK(chain->arcs() == std::vector<Arc>{{0, 1}, {1, 2}});
    CHECK(build_vertex_chain(Tournament::transitive(4), 0, 1)->length() == 1);
    CHECK_FALSE(build_vertex_chain(Tournament::transitive(4), 3, 0));
  }

  TEST_CASE("chains are shortest and have no shortcut") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const int n = 4 + static_cast<int>(seed % 30);
      const auto t = strong_random(n, seed);
      Rng rng(seed, 21);
      const Vertex u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
      Vertex w = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n - 1)));
      if (w >= u) ++w;
      const auto chain = build_vertex_chain(t, u, w);
      REQUIRE(chain);
      CHECK(chain->length() == brute_distance(t, u, w));
      const auto& p = chain->vertices;
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) CHECK(t.arc(p[i], p[j]) == (j == i + 1));
    }
  }

  TEST_CASE("path decomposition of small cases") {
    const auto d = build_path_decomposition(c3(), *build_vertex_chain(c3(), 0, 2));
    REQUIRE(d.zones.size() == 4);
    CHECK(d.zones[0].members() == std::vector<Vertex>{1});
    CHECK(d.zones[1].members() == std::vector<Vertex>{2});
    CHECK(d.zones[2].members() == std::vector<Vertex>{0});
    CHECK(d.zones[3].empty());

    const auto t4 = Tournament::transitive(4);
    const auto d4 = build_path_decomposition(t4, *build_vertex_chain(t4, 0, 1));
    REQUIRE(d4.zones.size() == 3);
    CHECK(d4.zones[0].members() == std::vector<Vertex>{1, 2, 3});
    CHECK(d4.zones[1].empty());
    CHECK(d4.zones[2].members() == std::vector<Vertex>{0});
  }

  TEST_CASE("zones match the definition, partition V and forbid long forward arcs") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const int n = 4 + static_cast<int>(seed % 40);
      const auto t = strong_random(n, seed * 7 + 1);
      Rng rng(seed, 22);
      const Vertex u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
      Vertex w = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n - 1)));
      if (w >= u) ++w;
      const auto chain = *build_vertex_chain(t, u, w);
      const auto d = build_path_decomposition(t, chain);
      const auto ref = reference_zones(t, chain.vertices);
      REQUIRE(d.zones.size() == ref.size());
      std::vector<int> zone_of(static_cast<std::size_t>(n), -1);
      for (std::size_t i = 0; i < ref.size(); ++i) {
        CHECK(d.zones[i].members() == ref[i]);
        for (Vertex x : ref[i]) zone_of[static_cast<std::size_t>(x)] = static_cast<int>(i);
      }
      for (int x = 0; x < n; ++x) CHECK(zone_of[static_cast<std::size_t>(x)] >= 0);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (x != y && zone_of[static_cast<std::size_t>(y)] >= zone_of[static_cast<std::size_t>(x)] + 5)
            CHECK(t.arc(y, x));
    }
  }

  TEST_CASE("scoped decomposition stays inside the scope") {
    const auto t = random_tournament(30, 5);
    VertexSet scope(30);
    for (int v = 0; v < 30; v += 2) scope.insert(v);
    for (const auto& comp : scc_decomposition(t, scope)) {
      if (comp.count() < 2) continue;
      const Vertex u = comp.first(), w = comp.next(u);
      const auto chain = build_vertex_chain(t, u, w, comp);
      REQUIRE(chain);
      for (Vertex v : chain->vertices) CHECK(comp.contains(v));
      VertexSet all(30);
      for (const auto& z : build_path_decomposition(t, *chain, comp).zones) {
        CHECK(z.is_subset_of(comp));
        CHECK_FALSE(all.intersects(z));
        all |= z;
      }
      CHECK(all == comp);
    }
  }

  TEST_CASE("color via chain on C3") {
    const auto chain = *build_vertex_chain(c3(), 0, 2);
    const auto r = color_via_chain(c3(), chain, transitive_colorer(), transitive_colorer());
    REQUIRE(std::holds_alternative<Coloring>(r));
    const auto& c = std::get<Coloring>(r);
    CHECK_FALSE(verify_coloring(c3(), c));
    CHECK(c.palette_size() <= 4);
    CHECK_THROWS_AS(color_via_chain(c3(), chain, transitive_colorer(), greedy_colorer(2)), Error);
  }

  TEST_CASE("color via chain respects its bound and reports failing zones") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const int n = 6 + static_cast<int>(seed % 50);
      const auto t = strong_random(n, seed * 13 + 3);
      Rng rng(seed, 23);
      const Vertex u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
      Vertex w = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n - 1)));
      if (w >= u) ++w;
      const auto chain = *build_vertex_chain(t, u, w);
      const int c = 2 + static_cast<int>(seed % 3), d = 1 + static_cast<int>(seed % 2);
      const auto r = color_via_chain(t, chain, greedy_colorer(c), greedy_colorer(d));
      if (const auto* col = std::get_if<Coloring>(&r)) {
        CHECK_FALSE(verify_coloring(t, *col));
        CHECK(col->palette_size() <= chain_color_bound(chain.length(), c, d));
      } else {
        const int zone = std::get<ZoneFailure>(r).zone;
        CHECK(zone >= 0);
        CHECK(zone <= chain.length() + 1);
      }
    }
  }

  TEST_CASE("long chains use the five-palette scheme") {
    // i -> i+1 and every other arc backward: the path 0..n-1 is the only
    // shortest path and every zone is a single vertex.
    for (int n = 5; n <= 40; ++n) {
      std::vector<std::pair<int, int>> arcs;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) arcs.emplace_back(j == i + 1 ? i : j, j == i + 1 ? j : i);
      const auto t = from_arcs(n, arcs);
      const auto chain = *build_vertex_chain(t, 0, n - 1);
      CHECK(chain.length() == n - 1);
      for (int c = 1; c <= 3; ++c) {
        const auto r = color_via_chain(t, chain, greedy_colorer(c), transitive_colorer());
        REQUIRE(std::holds_alternative<Coloring>(r));
        CHECK_FALSE(verify_coloring(t, std::get<Coloring>(r)));
        CHECK(std::get<Coloring>(r).palette_size() <= c + 4);
      }
    }
  }

  TEST_CASE("a colorer that never succeeds fails at the endpoint zone") {
    const auto t = paley(7);
    const auto chain = *build_vertex_chain(t, 0, 3);
    const SubColorer never{1, [](const Tournament&, const VertexSet&) -> std::optional<Coloring> { return std::nullopt; }};
    const auto r = color_via_chain(t, chain, never, transitive_colorer());
    REQUIRE(std::holds_alternative<ZoneFailure>(r));
    CHECK(std::get<ZoneFailure>(r).zone == 0);
  }

  TEST_CASE("colorer contract is enforced") {
    const SubColorer liar{1, [](const Tournament&, const VertexSet& s) -> std::optional<Coloring> {
                            return Coloring(std::vector<int>(static_cast<std::size_t>(s.count()), 0));
                          }};
    CHECK_THROWS_AS(run_colorer(liar, c3(), c3().all()), std::logic_error);
    const SubColorer greedy = greedy_colorer(3);
    const SubColorer wasteful{1, greedy.fn};
    CHECK_THROWS_AS(run_colorer(wasteful, c3(), c3().all()), std::logic_error);
    CHECK(run_colorer(liar, c3(), VertexSet(3))->size() == 0);
  }

  TEST_CASE("endpoint pairs") {
    const auto t = Tournament::transitive(6);
    const auto p = find_endpoint_pair(t, transitive_colorer());
    REQUIRE(p);
    CHECK(p->u == 0);
    CHECK(p->w == 1);

    for (Vertex u = 0; u < 3; ++u)
      for (Vertex w = 0; w < 3; ++w)
        if (u != w) CHECK(is_transitive(c3(), c3().out(u) | c3().in(w)));
    const auto q = find_endpoint_pair(c3(), transitive_colorer());
    REQUIRE(q);
    CHECK(q->u == 0);
    CHECK(q->w == 1);
    CHECK(q->domain == (c3().out(0) | c3().in(1)));

    CHECK_FALSE(find_endpoint_pair(paley(11), transitive_colorer()));
  }

  TEST_CASE("endpoint pair is the lexicographically first success") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto t = random_tournament(9, seed);
      std::optional<std::pair<Vertex, Vertex>> first;
      for (Vertex u = 0; u < 9 && !first; ++u)
        for (Vertex w = 0; w < 9 && !first; ++w) {
          if (u == w) continue;
          std::vector<Vertex> dom;
          for (Vertex x = 0; x < 9; ++x)
            if ((x != u && t.arc(u, x)) || (x != w && t.arc(x, w))) dom.push_back(x);
          if (!has_triangle(t, dom)) first = std::pair{u, w};
        }
      const auto p = find_endpoint_pair(t, transitive_colorer());
      CHECK(p.has_value() == first.has_value());
      if (p && first) {
        CHECK(p->u == first->first);
        CHECK(p->w == first->second);
      }
    }
  }

  TEST_CASE("chain coloring is deterministic") {
    const auto t = strong_random(40, 77);
    const auto chain = *build_vertex_chain(t, 0, 1);
    const auto a = color_via_chain(t, chain, greedy_colorer(4), greedy_colorer(4));
    const auto b = color_via_chain(t, chain, greedy_colorer(4), greedy_colorer(4));
    CHECK(a == b);
  }
}
