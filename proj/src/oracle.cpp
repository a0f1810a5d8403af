#include "tourney/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace tourney {

namespace {

struct BudgetExhausted {};

// Backtracking over vertices with forward checking: forbidden[c] holds the
// unassigned vertices that would close a triangle with two vertices already
// colored c. The next vertex is the one with the fewest remaining options
// (a forced vertex is therefore taken immediately), ties broken by triangle
// count and then id. New colors open in order, so each partition is
// enumerated once.
class TournamentColorSearch {
 public:
  TournamentColorSearch(const Tournament& t, int k, std::uint64_t budget)
      : t_(t),
        n_(t.size()),
        k_(k),
        budget_(budget),
        color_(static_cast<std::size_t>(n_), -1),
        classes_(static_cast<std::size_t>(k), VertexSet(n_)),
        forbidden_(static_cast<std::size_t>(k), VertexSet(n_)),
        unassigned_(t.all()),
        triangles_(static_cast<std::size_t>(n_), 0) {
    for (Vertex v = 0; v < n_; ++v) {
      long long c = 0;
      t.out(v).for_each([&](Vertex w) { c += t.out(w).count_common(t.in(v)); });
      triangles_[static_cast<std::size_t>(v)] = c;
    }
  }

  Search<Coloring> run() {
    Search<Coloring> r;
    try {
      if (solve()) {
        r.status = SearchStatus::found;
        r.value = Coloring(color_);
      } else {
        r.status = SearchStatus::none;
      }
    } catch (const BudgetExhausted&) {
      r.status = SearchStatus::budget_exceeded;
    }
    r.nodes = nodes_;
    return r;
  }

 private:
  int options(Vertex v) const {
    int opts = used_ < k_ ? 1 : 0;
    for (int c = 0; c < used_; ++c)
      if (!forbidden_[static_cast<std::size_t>(c)].contains(v)) ++opts;
    return opts;
  }

  bool solve() {
    if (unassigned_.empty()) return true;
    Vertex best = -1;
    int best_opts = k_ + 1;
    bool dead = false;
    unassigned_.for_each([&](Vertex v) {
      if (dead) return;
      const int o = options(v);
      if (o == 0) {
        dead = true;
        return;
      }
      if (o < best_opts ||
          (o == best_opts && triangles_[static_cast<std::size_t>(v)] > triangles_[static_cast<std::size_t>(best)])) {
        best = v;
        best_opts = o;
      }
    });
    if (dead) return false;

    const Vertex v = best;
    const int limit = std::min(used_ + 1, k_);
    for (int c = 0; c < limit; ++c) {
      auto& forb = forbidden_[static_cast<std::size_t>(c)];
      if (c < used_ && forb.contains(v)) continue;
      if (++nodes_ > budget_) throw BudgetExhausted{};

      auto& cls = classes_[static_cast<std::size_t>(c)];
      VertexSet reach_out(n_), reach_in(n_);
      t_.out(v).for_each_common(cls, [&](Vertex x) { reach_out |= t_.out(x); });
      t_.in(v).for_each_common(cls, [&](Vertex x) { reach_in |= t_.in(x); });
      VertexSet newly = (reach_out & t_.in(v)) | (reach_in & t_.out(v));
      newly &= unassigned_;
      newly -= forb;

      const bool fresh = c == used_;
      if (fresh) ++used_;
      color_[static_cast<std::size_t>(v)] = c;
      unassigned_.erase(v);
      cls.insert(v);
      forb |= newly;

      if (solve()) return true;

      forb -= newly;
      cls.erase(v);
      unassigned_.insert(v);
      color_[static_cast<std::size_t>(v)] = -1;
      if (fresh) --used_;
    }
    return false;
  }

  const Tournament& t_;
  int n_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  int used_ = 0;
  std::vector<int> color_;
  std::vector<VertexSet> classes_;
  std::vector<VertexSet> forbidden_;
  VertexSet unassigned_;
  std::vector<long long> triangles_;
};

// Minimum feedback vertex set by branching on a triangle: one of its three
// vertices must go. Vertices kept by earlier branches are pinned.
class AcyclicSearch {
 public:
  AcyclicSearch(const Tournament& t, std::uint64_t budget) : t_(t), budget_(budget) {}

  Search<VertexSet> run() {
    const int n = t_.size();
    // Seed the incumbent with the largest first-fit class.
    const Coloring g = greedy_coloring(t_, t_.all());
    VertexSet seed(n);
    for (const auto& cls : g.classes())
      if (cls.count() > seed.count()) seed = cls;
    best_ = seed;
    Search<VertexSet> r;
    try {
      VertexSet pinned(n);
      branch(t_.all(), pinned);
      r.status = SearchStatus::found;
      r.value = best_;
    } catch (const BudgetExhausted&) {
      r.status = SearchStatus::budget_exceeded;
    }
    r.nodes = nodes_;
    return r;
  }

 private:
  int packing_bound(VertexSet s) const {
    int disjoint = 0;
    while (auto tri = transitivity_check(t_, s)) {
      for (Vertex x : *tri) s.erase(x);
      ++disjoint;
    }
    return disjoint;
  }

  void branch(const VertexSet& kept, VertexSet pinned) {
    const int size = kept.count();
    if (size - packing_bound(kept) <= best_.count()) return;
    const auto tri = transitivity_check(t_, kept);
    if (!tri) {
      best_ = kept;
      return;
    }
    for (Vertex x : *tri) {
      if (pinned.contains(x)) continue;
      if (++nodes_ > budget_) throw BudgetExhausted{};
      VertexSet next = kept;
      next.erase(x);
      branch(next, pinned);
      pinned.insert(x);
    }
  }

  const Tournament& t_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  VertexSet best_;
};

class HypergraphSearch {
 public:
  HypergraphSearch(const Hypergraph3& h, std::uint64_t budget)
      : h_(h), budget_(budget), color_(static_cast<std::size_t>(h.size()), -1),
        incident_(static_cast<std::size_t>(h.size())) {
    for (std::size_t e = 0; e < h.edges().size(); ++e)
      for (int v : h.edges()[e]) incident_[static_cast<std::size_t>(v)].push_back(e);
    order_.resize(static_cast<std::size_t>(h.size()));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return incident_[static_cast<std::size_t>(a)].size() > incident_[static_cast<std::size_t>(b)].size();
    });
  }

  Search<std::vector<int>> run() {
    Search<std::vector<int>> r;
    try {
      if (solve(0)) {
        r.status = SearchStatus::found;
        r.value = color_;
      } else {
        r.status = SearchStatus::none;
      }
    } catch (const BudgetExhausted&) {
      r.status = SearchStatus::budget_exceeded;
    }
    r.nodes = nodes_;
    return r;
  }

 private:
  // Assigns v=c and propagates forced colors; returns false on a
  // monochromatic edge. Every assignment lands on the trail.
  bool assign(int v, int c) {
    std::vector<std::pair<int, int>> queue{{v, c}};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      auto [x, cx] = queue[qi];
      const int cur = color_[static_cast<std::size_t>(x)];
      if (cur == cx) continue;
      if (cur != -1) return false;
      color_[static_cast<std::size_t>(x)] = cx;
      trail_.push_back(x);
      for (std::size_t e : incident_[static_cast<std::size_t>(x)]) {
        const auto& edge = h_.edges()[e];
        int same = 0, free_vertex = -1;
        for (int y : edge) {
          const int cy = color_[static_cast<std::size_t>(y)];
          if (cy == cx) ++same;
          else if (cy == -1) free_vertex = y;
        }
        if (same == 3) return false;
        if (same == 2 && free_vertex >= 0) queue.emplace_back(free_vertex, 1 - cx);
      }
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      color_[static_cast<std::size_t>(trail_.back())] = -1;
      trail_.pop_back();
    }
  }

  bool solve(std::size_t pos) {
    while (pos < order_.size() && color_[static_cast<std::size_t>(order_[pos])] != -1) ++pos;
    if (pos == order_.size()) return true;
    const int v = order_[pos];
    const int choices = trail_.empty() ? 1 : 2;
    for (int c = 0; c < choices; ++c) {
      if (++nodes_ > budget_) throw BudgetExhausted{};
      const std::size_t mark = trail_.size();
      if (assign(v, c) && solve(pos + 1)) return true;
      undo_to(mark);
    }
    return false;
  }

  const Hypergraph3& h_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> color_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<int> order_;
  std::vector<int> trail_;
};

// DSATUR-ordered backtracking for graphs.
class GraphColorSearch {
 public:
  GraphColorSearch(const Graph& g, int k, std::uint64_t budget)
      : g_(g), k_(k), budget_(budget), color_(static_cast<std::size_t>(g.size()), -1) {}

  Search<GraphColoring> run() {
    Search<GraphColoring> r;
    try {
      if (solve(0)) {
        r.status = SearchStatus::found;
        r.value = color_;
      } else {
        r.status = SearchStatus::none;
      }
    } catch (const BudgetExhausted&) {
      r.status = SearchStatus::budget_exceeded;
    }
    r.nodes = nodes_;
    return r;
  }

 private:
  std::vector<bool> blocked(int v) const {
    std::vector<bool> b(static_cast<std::size_t>(k_), false);
    for (int w : g_.neighbors(v)) {
      const int c = color_[static_cast<std::size_t>(w)];
      if (c >= 0) b[static_cast<std::size_t>(c)] = true;
    }
    return b;
  }

  bool solve(int colored) {
    if (colored == g_.size()) return true;
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < g_.size(); ++v) {
      if (color_[static_cast<std::size_t>(v)] >= 0) continue;
      const auto b = blocked(v);
      const int sat = static_cast<int>(std::count(b.begin(), b.end(), true));
      const int deg = static_cast<int>(g_.neighbors(v).size());
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    const auto b = blocked(best);
    const int limit = std::min(used_ + 1, k_);
    for (int c = 0; c < limit; ++c) {
      if (b[static_cast<std::size_t>(c)]) continue;
      if (++nodes_ > budget_) throw BudgetExhausted{};
      const bool fresh = c == used_;
      if (fresh) ++used_;
      color_[static_cast<std::size_t>(best)] = c;
      if (solve(colored + 1)) return true;
      color_[static_cast<std::size_t>(best)] = -1;
      if (fresh) --used_;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  int used_ = 0;
  std::vector<int> color_;
};

}  // namespace

Search<Coloring> exact_k_colorable(const Tournament& t, int k, std::uint64_t budget) {
  if (k < 1) throw Error("exact_k_colorable requires k >= 1");
  return TournamentColorSearch(t, k, budget).run();
}

Search<ChromaticResult> exact_chromatic(const Tournament& t, std::uint64_t budget) {
  Search<ChromaticResult> r;
  if (t.size() == 0) {
    r.status = SearchStatus::found;
    r.value = ChromaticResult{0, Coloring{}};
    return r;
  }
  for (int k = 1; k <= t.size(); ++k) {
    auto attempt = exact_k_colorable(t, k, budget - r.nodes);
    r.nodes += attempt.nodes;
    if (attempt.exceeded()) {
      r.status = SearchStatus::budget_exceeded;
      return r;
    }
    if (attempt.found()) {
      r.status = SearchStatus::found;
      r.value = ChromaticResult{k, std::move(*attempt.value)};
      return r;
    }
  }
  throw std::logic_error("exact_chromatic: no coloring with n colors");
}

Search<VertexSet> max_acyclic_subset(const Tournament& t, std::uint64_t budget) {
  return AcyclicSearch(t, budget).run();
}

Search<std::vector<int>> hypergraph_2colorable(const Hypergraph3& h, std::uint64_t budget) {
  return HypergraphSearch(h, budget).run();
}

Search<GraphColoring> exact_graph_k_colorable(const Graph& g, int k, std::uint64_t budget) {
  if (k < 1) throw Error("exact_graph_k_colorable requires k >= 1");
  return GraphColorSearch(g, k, budget).run();
}

Search<GraphColoring> exact_graph_chromatic(const Graph& g, std::uint64_t budget) {
  Search<GraphColoring> r;
  if (g.size() == 0) {
    r.status = SearchStatus::found;
    r.value = GraphColoring{};
    return r;
  }
  for (int k = 1; k <= g.size(); ++k) {
    auto attempt = exact_graph_k_colorable(g, k, budget - r.nodes);
    r.nodes += attempt.nodes;
    if (!attempt.none()) {
      r.status = attempt.status;
      r.value = std::move(attempt.value);
      return r;
    }
  }
  throw std::logic_error("exact_graph_chromatic: no coloring with n colors");
}

}  // namespace tourney
