#include "tourney/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <variant>

#include "tourney/light.hpp"
#include "tourney/rng.hpp"

namespace tourney {

namespace {

// Stream ids keep the draws of different generators independent.
enum Stream : std::uint64_t {
  kPairCoin = 0,
  kPermutation = 1,
  kClassChoice = 2,
  kCrossCoin = 3,
  kCirculantChoice = 4,
  kSamplerSeed = 5,
  kBlowUp = 7,
};

bool coin(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return (keyed(seed, stream, index) >> 63) != 0;
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

std::uint64_t pair_index(int n, Vertex i, Vertex j) {
  return static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(j);
}

}  // namespace

Tournament random_tournament(int n, std::uint64_t seed) {
  if (n < 1) throw Error("random tournament needs n >= 1");
  TournamentBuilder b(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      if (coin(seed, kPairCoin, pair_index(n, i, j))) b.add_arc(i, j);
      else b.add_arc(j, i);
    }
  return std::move(b).build();
}

Planted planted_k_colorable(int n, int k, std::uint64_t seed) {
  if (k < 1 || k > n) throw Error("planted coloring needs 1 <= k <= n, got k=" + std::to_string(k));
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Rng(seed, kPermutation).shuffle(perm);
  std::vector<int> position(static_cast<std::size_t>(n)), color(static_cast<std::size_t>(n));
  Rng classes(seed, kClassChoice);
  for (int p = 0; p < n; ++p) {
    const auto v = static_cast<std::size_t>(perm[static_cast<std::size_t>(p)]);
    position[v] = p;
    color[v] = p < k ? p : static_cast<int>(classes.below(static_cast<std::uint64_t>(k)));
  }
  TournamentBuilder b(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      const auto si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
      const bool forward = color[si] == color[sj] ? position[si] < position[sj]
                                                  : coin(seed, kCrossCoin, pair_index(n, i, j));
      if (forward) b.add_arc(i, j);
      else b.add_arc(j, i);
    }
  return {std::move(b).build(), Coloring(std::move(color))};
}

std::vector<int> quadratic_residues(int q) {
  std::set<int> r;
  for (long long x = 1; x < q; ++x) r.insert(static_cast<int>(x * x % q));
  return {r.begin(), r.end()};
}

Tournament paley(int q) {
  if (!is_prime(q) || q % 4 != 3) throw Error("paley needs a prime q with q = 3 mod 4, got " + std::to_string(q));
  return circulant(q, quadratic_residues(q));
}

Tournament circulant(int n, const std::vector<int>& residues) {
  if (n < 1 || n % 2 == 0) throw Error("circulant needs an odd vertex count, got " + std::to_string(n));
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (int r : residues) {
    if (r < 1 || r >= n) throw Error("residue out of range: " + std::to_string(r));
    if (in[static_cast<std::size_t>(r)]) throw Error("repeated residue " + std::to_string(r));
    in[static_cast<std::size_t>(r)] = true;
  }
  for (int r = 1; r < n; ++r)
    if (in[static_cast<std::size_t>(r)] == in[static_cast<std::size_t>(n - r)])
      throw Error("residue set must contain exactly one of " + std::to_string(r) + " and " + std::to_string(n - r));
  TournamentBuilder b(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      if (i != j && in[static_cast<std::size_t>(((j - i) % n + n) % n)]) b.add_arc(i, j);
  return std::move(b).build();
}

namespace {

std::vector<int> random_residues(int n, std::uint64_t seed, std::uint64_t attempt) {
  std::vector<int> residues;
  for (int r = 1; r <= (n - 1) / 2; ++r)
    residues.push_back(
        coin(seed, kCirculantChoice, attempt * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(r)) ? r
                                                                                                            : n - r);
  return residues;
}

// Replaces each vertex of a small random circulant by a transitive block and
// relabels at random. Blocks keep a light base light.
std::optional<Tournament> blown_up_circulant(int n, std::uint64_t seed, std::uint64_t attempt) {
  if (n < 3) return std::nullopt;
  Rng rng(keyed(seed, kBlowUp, attempt), 0);
  const int top = std::min(n, 9);
  const int m = 3 + 2 * static_cast<int>(rng.below(static_cast<std::uint64_t>((top - 3) / 2 + 1)));
  const Tournament base = circulant(m, random_residues(m, keyed(seed, kBlowUp, attempt), 0));
  if (!is_light(base)) return std::nullopt;

  std::vector<int> cuts(static_cast<std::size_t>(n - 1));
  std::iota(cuts.begin(), cuts.end(), 1);
  rng.shuffle(cuts);
  cuts.resize(static_cast<std::size_t>(m - 1));
  std::sort(cuts.begin(), cuts.end());
  std::vector<int> block(static_cast<std::size_t>(n));
  for (int p = 0, b = 0; p < n; ++p) {
    while (b < m - 1 && p >= cuts[static_cast<std::size_t>(b)]) ++b;
    block[static_cast<std::size_t>(p)] = b;
  }
  std::vector<Vertex> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  rng.shuffle(label);

  TournamentBuilder b(n);
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      const int bp = block[static_cast<std::size_t>(p)], bq = block[static_cast<std::size_t>(q)];
      const Vertex x = label[static_cast<std::size_t>(p)], y = label[static_cast<std::size_t>(q)];
      if (bp == bq || base.arc(bp, bq))
        b.add_arc(x, y);
      else
        b.add_arc(y, x);
    }
  return std::move(b).build();
}

}  // namespace

std::optional<Tournament> light_sampler(int n, std::uint64_t seed, int attempts) {
  if (attempts < 1) throw Error("light sampler needs at least one attempt");
  if (n < 1) throw Error("light sampler needs n >= 1");
  for (int a = 0; a < attempts; ++a) {
    const auto attempt = static_cast<std::uint64_t>(a);
    std::optional<Tournament> candidate;
    if (a % 3 == 0) {
      if (n % 2 == 1) candidate = circulant(n, random_residues(n, seed, attempt));
    } else if (a % 3 == 1) {
      candidate = blown_up_circulant(n, seed, attempt);
    } else {
      const Planted p = planted_k_colorable(2 * n, 2, keyed(seed, kSamplerSeed, attempt));
      const auto split = light_partition(p.tournament);
      if (const auto* parts = std::get_if<LightPartition>(&split)) {
        const VertexSet& big = parts->first.count() >= parts->second.count() ? parts->first : parts->second;
        auto members = big.members();
        members.resize(static_cast<std::size_t>(n));
        candidate = induced(p.tournament, VertexSet::of(2 * n, members)).tournament;
      }
    }
    if (candidate && is_light(*candidate)) return candidate;
  }
  return std::nullopt;
}

std::optional<GeneratorKind> parse_generator_kind(const std::string& name) {
  if (name == "random") return GeneratorKind::random;
  if (name == "kcol") return GeneratorKind::kcol;
  if (name == "paley") return GeneratorKind::paley;
  if (name == "circulant") return GeneratorKind::circulant;
  if (name == "light") return GeneratorKind::light;
  if (name == "transitive") return GeneratorKind::transitive;
  return std::nullopt;
}

std::string generator_kind_name(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::random: return "random";
    case GeneratorKind::kcol: return "kcol";
    case GeneratorKind::paley: return "paley";
    case GeneratorKind::circulant: return "circulant";
    case GeneratorKind::light: return "light";
    case GeneratorKind::transitive: return "transitive";
  }
  return "unknown";
}

Tournament generate(const GeneratorSpec& spec) {
  if (spec.n < 1) throw Error("generator needs n >= 1");
  switch (spec.kind) {
    case GeneratorKind::random: return random_tournament(spec.n, spec.seed);
    case GeneratorKind::kcol: return planted_k_colorable(spec.n, spec.k, spec.seed).tournament;
    case GeneratorKind::paley: return paley(spec.n);
    case GeneratorKind::circulant: return circulant(spec.n, spec.residues);
    case GeneratorKind::transitive: return Tournament::transitive(spec.n);
    case GeneratorKind::light: {
      auto t = light_sampler(spec.n, spec.seed, spec.attempts);
      if (!t) throw Error("light sampler exhausted after " + std::to_string(spec.attempts) + " attempts");
      return *t;
    }
  }
  throw Error("unknown generator kind");
}

}  // namespace tourney
