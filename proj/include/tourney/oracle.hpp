#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tourney/core.hpp"
#include "tourney/graph.hpp"

// Exact exponential-time solvers used as ground truth at small scale.
// Every search counts branching nodes and gives up with budget_exceeded once
// the budget is spent; that outcome never means "no solution".

namespace tourney {

inline constexpr std::uint64_t kDefaultBudget = 50'000'000;

enum class SearchStatus { found, none, budget_exceeded };

template <class T>
struct Search {
  SearchStatus status = SearchStatus::none;
  std::optional<T> value;
  std::uint64_t nodes = 0;

  bool found() const { return status == SearchStatus::found; }
  bool none() const { return status == SearchStatus::none; }
  bool exceeded() const { return status == SearchStatus::budget_exceeded; }
};

/// A valid coloring with at most k colors, or none.
Search<Coloring> exact_k_colorable(const Tournament& t, int k, std::uint64_t budget = kDefaultBudget);

struct ChromaticResult {
  int chi = 0;
  Coloring witness;
};

/// Smallest k with a valid k-coloring. The budget is shared by all k tried.
Search<ChromaticResult> exact_chromatic(const Tournament& t, std::uint64_t budget = kDefaultBudget);

/// A maximum-cardinality vertex set inducing an acyclic subtournament.
Search<VertexSet> max_acyclic_subset(const Tournament& t, std::uint64_t budget = kDefaultBudget);

/// Not-all-equal 2-coloring of a 3-uniform hypergraph.
Search<std::vector<int>> hypergraph_2colorable(const Hypergraph3& h, std::uint64_t budget = kDefaultBudget);

/// Proper graph coloring with at most k colors.
Search<GraphColoring> exact_graph_k_colorable(const Graph& g, int k, std::uint64_t budget = kDefaultBudget);
/// Optimal proper graph coloring.
Search<GraphColoring> exact_graph_chromatic(const Graph& g, std::uint64_t budget = kDefaultBudget);

}  // namespace tourney
