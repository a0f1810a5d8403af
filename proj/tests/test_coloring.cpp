#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "tourney/coloring.hpp"
#include "tourney/generators.hpp"
#include "tourney/oracle.hpp"
#include "tourney/rng.hpp"

using namespace tourney;
using namespace tourney::testing;

namespace {

Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  for (auto& [a, b] : e)
    if (a > b) std::swap(a, b);
  return Graph(10, e);
}

Graph random_graph(int n, int percent, std::uint64_t seed) {
  Rng rng(seed, 31);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.below(100) < static_cast<std::uint64_t>(percent)) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph hard_graph(const Tournament& t, const GraphReduction& r) {
  std::vector<std::pair<int, int>> e;
  for (const auto& a : r.hard_arcs) e.emplace_back(std::min(a.tail, a.head), std::max(a.tail, a.head));
  return Graph(t.size(), e);
}

// Some tournament in which every ordered pair is blocked.
NonTwoColorCertificate blocked_certificate() {
  for (std::uint64_t seed = 0;; ++seed) {
    const auto t = random_tournament(9, seed);
    AllPairsBlocked b;
    bool ok = true;
    for (Vertex u = 0; u < 9 && ok; ++u)
      for (Vertex v = 0; v < 9 && ok; ++v) {
        if (u == v) continue;
        auto tri = transitivity_check(t, t.out(u) | t.in(v));
        if (!tri) ok = false;
        else b.entries.emplace(std::pair{u, v}, *tri);
      }
    if (ok) return {b, t.all()};
  }
}

Tournament blocked_tournament() {
  for (std::uint64_t seed = 0;; ++seed) {
    const auto t = random_tournament(9, seed);
    bool ok = true;
    for (Vertex u = 0; u < 9 && ok; ++u)
      for (Vertex v = 0; v < 9 && ok; ++v)
        if (u != v && is_transitive(t, t.out(u) | t.in(v))) ok = false;
    if (ok) return t;
  }
}

}  // namespace

TEST_SUITE("coloring") {
  TEST_CASE("graph colorers") {
    CHECK(palette_size(default_graph_colorer(Graph::cycle(8), 2)) == 2);
    CHECK(palette_size(default_graph_colorer(Graph::cycle(9), 3)) == 3);
    const auto p = default_graph_colorer(petersen(), 3);
    CHECK(is_proper(petersen(), p));
    CHECK(palette_size(p) <= 4);
    CHECK(palette_size(exact_graph_colorer()(petersen(), 3)) == 3);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const auto g = random_graph(10 + static_cast<int>(seed), 10 + static_cast<int>(seed % 50), seed);
      for (int k = 1; k <= 5; ++k) CHECK(is_proper(g, default_graph_colorer(g, k)));
      CHECK(is_proper(g, greedy_graph_coloring(g)));
    }
  }

  TEST_CASE("default graph colorer on planted 3-colorable graphs") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const int n = 60;
      Rng rng(seed, 32);
      std::vector<int> cls(static_cast<std::size_t>(n));
      for (auto& c : cls) c = static_cast<int>(rng.below(3));
      std::vector<std::pair<int, int>> e;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (cls[static_cast<std::size_t>(i)] != cls[static_cast<std::size_t>(j)] && rng.below(2)) e.emplace_back(i, j);
      const Graph g(n, e);
      const auto c = default_graph_colorer(g, 3);
      CHECK(is_proper(g, c));
      CHECK(palette_size(c) <= 3 * static_cast<int>(std::ceil(std::sqrt(n))) + 1);
    }
  }

  TEST_CASE("ten colors on planted 2-colorable tournaments") {
    for (int n : {20, 50, 100}) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto t = planted_k_colorable(n, 2, seed).tournament;
        const auto r = color_2col_10(t);
        REQUIRE(std::holds_alternative<Coloring>(r));
        CHECK_FALSE(verify_coloring(t, std::get<Coloring>(r)));
        CHECK(std::get<Coloring>(r).palette_size() <= 10);
      }
    }
    const auto tr = color_2col_10(Tournament::transitive(15));
    CHECK(std::get<Coloring>(tr).palette_size() <= 2);
  }

  TEST_CASE("ten colors never give up on 2-colorable inputs") {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
      const auto t = random_tournament(6 + static_cast<int>(seed % 7), seed);
      const auto r = color_2col_10(t);
      if (const auto* cert = std::get_if<NonTwoColorCertificate>(&r)) {
        CHECK(check_certificate(t, *cert).valid);
        CHECK(exact_k_colorable(t, 2).none());
      } else {
        CHECK_FALSE(verify_coloring(t, std::get<Coloring>(r)));
        CHECK(std::get<Coloring>(r).palette_size() <= 10);
      }
      if (exact_k_colorable(t, 2).found()) {
        ++checked;
        CHECK(std::holds_alternative<Coloring>(r));
      }
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto t = planted_k_colorable(30, 2, seed).tournament;
      CHECK(std::holds_alternative<Coloring>(color_2col_10(t)));
    }
    CHECK(checked > 100);
  }

  TEST_CASE("P11 gets a coloring or a certificate") {
    const auto t = paley(11);
    const auto r = color_2col_10(t);
    if (const auto* cert = std::get_if<NonTwoColorCertificate>(&r)) {
      CHECK(check_certificate(t, *cert).valid);
      CHECK(exact_chromatic(t).value->chi == 4);
    } else {
      CHECK_FALSE(verify_coloring(t, std::get<Coloring>(r)));
      CHECK(std::get<Coloring>(r).palette_size() <= 10);
    }
  }

  TEST_CASE("certificate checks reject forged certificates") {
    const NonTwoColorCertificate light_cycle{OddHeavyCycle{{{0, 1}, {1, 2}, {2, 0}}}, c3().all()};
    CHECK(check_certificate(c3(), light_cycle).reason == "arc not heavy");
    const NonTwoColorCertificate even{OddHeavyCycle{{{0, 1}, {1, 2}, {2, 0}, {0, 1}}}, c3().all()};
    CHECK(check_certificate(c3(), even).reason == "cycle length is even");
    const NonTwoColorCertificate wrong{OddHeavyCycle{{{1, 0}, {1, 2}, {2, 0}}}, c3().all()};
    CHECK(check_certificate(c3(), wrong).reason == "not an arc");

    auto cert = blocked_certificate();
    const auto t = blocked_tournament();
    CHECK(check_certificate(t, cert).valid);
    auto& entries = std::get<AllPairsBlocked>(cert.proof).entries;
    entries.erase(entries.begin());
    const auto check = check_certificate(t, cert);
    CHECK_FALSE(check.valid);
    CHECK(check.reason == "pair uncovered");
  }

  TEST_CASE("sqrt coloring") {
    for (int n : {60, 100}) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto t = planted_k_colorable(n, 3, seed).tournament;
        const auto r = color_3col_sqrt(t);
        REQUIRE(std::holds_alternative<Coloring>(r));
        const auto& c = std::get<Coloring>(r);
        CHECK_FALSE(verify_coloring(t, c));
        CHECK(c.palette_size() <= sqrt_palette_bound(n));
      }
    }
    CHECK(std::get<Coloring>(color_3col_sqrt(Tournament::transitive(30))).palette_size() == 1);
    const auto two = planted_k_colorable(80, 2, 3).tournament;
    CHECK_FALSE(verify_coloring(two, std::get<Coloring>(color_3col_sqrt(two))));
  }

  TEST_CASE("sqrt coloring failures carry valid evidence") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto t = random_tournament(40, seed);
      const auto r = color_3col_sqrt(t);
      if (const auto* c = std::get_if<Coloring>(&r)) {
        CHECK_FALSE(verify_coloring(t, *c));
        continue;
      }
      const auto& f = std::get<SqrtFailure>(r);
      CHECK_FALSE(f.residual.empty());
      CHECK(static_cast<int>(f.evidence.size()) == f.residual.count());
      for (const auto& [v, cert] : f.evidence) {
        CHECK(f.residual.contains(v));
        CHECK(check_certificate(t, cert).valid);
      }
    }
  }

  TEST_CASE("graph reduction on 2-colorable inputs has no hard arcs") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto t = planted_k_colorable(40, 2, seed).tournament;
      const auto r = color_3col_via_graph(t, default_graph_colorer);
      REQUIRE(std::holds_alternative<GraphReduction>(r));
      const auto& g = std::get<GraphReduction>(r);
      CHECK(g.hard_arcs.empty());
      CHECK(g.graph_palette == 1);
      CHECK(g.coloring.palette_size() <= 50);
      CHECK_FALSE(verify_coloring(t, g.coloring));
    }
    const auto r = color_3col_via_graph(c3(), default_graph_colorer);
    CHECK_FALSE(verify_coloring(c3(), std::get<GraphReduction>(r).coloring));
  }

  TEST_CASE("graph reduction on 3-colorable inputs") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto t = planted_k_colorable(50, 3, seed).tournament;
      const auto r = color_3col_via_graph(t, default_graph_colorer);
      REQUIRE(std::holds_alternative<GraphReduction>(r));
      const auto& g = std::get<GraphReduction>(r);
      CHECK_FALSE(verify_coloring(t, g.coloring));
      CHECK(g.coloring.palette_size() <= 50 * g.graph_palette);
      const auto same = color_kcol_recursive(t, 3, default_graph_colorer);
      CHECK(std::get<GraphReduction>(same).coloring == g.coloring);
    }
  }

  TEST_CASE("hard-arc graph is 3-colorable on 3-colorable inputs") {
    int tested = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const int n = 10 + static_cast<int>(seed % 16);
      const auto t = seed % 2 ? planted_k_colorable(n, 3, seed).tournament : random_tournament(n, seed);
      const auto chi = exact_chromatic(t);
      REQUIRE(chi.found());
      if (chi.value->chi > 3) continue;
      ++tested;
      const auto r = color_3col_via_graph(t, exact_graph_colorer());
      REQUIRE(std::holds_alternative<GraphReduction>(r));
      const auto& g = std::get<GraphReduction>(r);
      CHECK(exact_graph_k_colorable(hard_graph(t, g), 3).found());
      CHECK(g.graph_palette <= 3);
      CHECK_FALSE(verify_coloring(t, g.coloring));
    }
    CHECK(tested >= 20);
  }

  TEST_CASE("recursive levels") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto t = planted_k_colorable(30, 2, seed).tournament;
      const auto r2 = color_kcol_recursive(t, 2, default_graph_colorer);
      CHECK(std::get<GraphReduction>(r2).coloring == std::get<Coloring>(color_2col_10(t)));
    }
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto t = planted_k_colorable(30, 4, seed).tournament;
      const auto r = color_kcol_recursive(t, 4, default_graph_colorer);
      REQUIRE(std::holds_alternative<GraphReduction>(r));
      const auto& g = std::get<GraphReduction>(r);
      CHECK_FALSE(verify_coloring(t, g.coloring));
      CHECK(g.coloring.palette_size() <= 5 * g.level_budget * g.graph_palette);
    }
    CHECK_THROWS_AS(color_kcol_recursive(c3(), 1, default_graph_colorer), Error);
    const auto fail = color_kcol_recursive(paley(11), 2, default_graph_colorer);
    if (const auto* cf = std::get_if<ClassFailure>(&fail)) CHECK(cf->members == paley(11).all());
    else CHECK_FALSE(verify_coloring(paley(11), std::get<GraphReduction>(fail).coloring));
  }

  TEST_CASE("non-3-colorable inputs end in a coloring or a class failure") {
    const auto t = paley(11);
    const auto r = color_3col_via_graph(t, default_graph_colorer);
    if (const auto* g = std::get_if<GraphReduction>(&r)) CHECK_FALSE(verify_coloring(t, g->coloring));
    else CHECK_FALSE(std::get<ClassFailure>(r).members.empty());
  }
}
