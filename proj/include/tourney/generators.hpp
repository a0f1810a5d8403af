#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tourney/core.hpp"

namespace tourney {

/// Each pair i < j is oriented by its own keyed coin.
Tournament random_tournament(int n, std::uint64_t seed);

struct Planted {
  Tournament tournament;
  Coloring coloring;
};

/// Random partition into k nonempty classes, a random order inside each
/// class, fair coins across classes. The planted coloring is returned.
Planted planted_k_colorable(int n, int k, std::uint64_t seed);

/// Nonzero squares mod q, ascending.
std::vector<int> quadratic_residues(int q);
/// Arc i->j iff j-i is a nonzero square mod q. Requires q prime, q ≡ 3 mod 4.
Tournament paley(int q);
/// Arc i->j iff (j-i) mod n is in `residues`. Requires n odd and exactly
/// one of r, n-r in the set for every r.
Tournament circulant(int n, const std::vector<int>& residues);

/// Cycles through three candidate kinds and returns the first light one:
/// a random circulant (odd n only), a random circulant of odd order <= 9
/// with every vertex replaced by a transitive block and randomly relabeled,
/// and the first n vertices of the larger light part of a planted
/// 2-colorable tournament on 2n vertices.
std::optional<Tournament> light_sampler(int n, std::uint64_t seed, int attempts);

enum class GeneratorKind { random, kcol, paley, circulant, light, transitive };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::random;
  int n = 1;
  int k = 2;
  std::uint64_t seed = 0;
  std::vector<int> residues;
  int attempts = 1000;
};

std::optional<GeneratorKind> parse_generator_kind(const std::string& name);
std::string generator_kind_name(GeneratorKind kind);

/// Dispatches on kind. Throws Error for invalid parameters and when the
/// light sampler runs out of attempts.
Tournament generate(const GeneratorSpec& spec);

}  // namespace tourney
