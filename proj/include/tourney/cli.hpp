#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "tourney/core.hpp"
#include "tourney/light.hpp"

namespace tourney {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,
  kExitCertificate = 2,
  kExitBudget = 3,
  kExitUsage = 4,
};

/// Coloring algorithms by CLI name.
const std::vector<std::string>& algorithm_names();

/// Failure without a checkable certificate (class failure, bad input).
struct AlgorithmFailure {
  std::string reason;
};

using AlgorithmOutcome = std::variant<Coloring, NonTwoColorCertificate, AlgorithmFailure>;

/// Runs one named algorithm; k is used by "reck" only. "auto" tries
/// transitive, light8 (light inputs), two10, sqrt3 and then first-fit.
/// Errors raised by the algorithm become AlgorithmFailure.
AlgorithmOutcome run_algorithm(const Tournament& t, const std::string& algorithm, int k = 4);

/// Benchmark suites: instance generator plus algorithm.
const std::vector<std::string>& bench_suite_names();

struct BenchOptions {
  std::string suite;
  std::vector<int> sizes;
  int count = 1;
  std::uint64_t seed = 0;
  bool timing = true;
  int threads = 1;
};

/// CSV with header "instance,n,algorithm,colors,valid,micros", rows ordered
/// by (size, index), then a summary row
/// "summary,<rows>,<algorithm>,<max colors>,<failures>,<total micros>".
std::string bench_csv(const BenchOptions& options);

/// Entry point of the command-line tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tourney
