#include "tourney/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "tourney/coloring.hpp"
#include "tourney/generators.hpp"
#include "tourney/io.hpp"
#include "tourney/oracle.hpp"
#include "tourney/reductions.hpp"

namespace tourney {

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{"auto", "two10", "light8", "light2col5", "sqrt3", "reduce3", "reck"};
  return names;
}

const std::vector<std::string>& bench_suite_names() {
  static const std::vector<std::string> names{"two-col", "light", "three-col", "reduce3", "random"};
  return names;
}

namespace {

AlgorithmOutcome from_reduction(ReductionResult r) {
  if (auto* g = std::get_if<GraphReduction>(&r)) return std::move(g->coloring);
  const auto& f = std::get<ClassFailure>(r);
  return AlgorithmFailure{"graph class " + std::to_string(f.graph_class) + ": " + f.reason};
}

template <class V>
AlgorithmOutcome from_two(V r) {
  if (auto* c = std::get_if<Coloring>(&r)) return std::move(*c);
  return std::get<NonTwoColorCertificate>(std::move(r));
}

AlgorithmOutcome auto_color(const Tournament& t) {
  if (is_transitive(t)) return Coloring(std::vector<int>(static_cast<std::size_t>(t.size()), 0));
  if (is_light(t)) return color_light_8(t);
  auto two = color_2col_10(t);
  if (auto* c = std::get_if<Coloring>(&two)) return std::move(*c);
  auto sq = color_3col_sqrt(t);
  if (auto* c = std::get_if<Coloring>(&sq)) return std::move(*c);
  return greedy_coloring(t, t.all());
}

}  // namespace

AlgorithmOutcome run_algorithm(const Tournament& t, const std::string& algorithm, int k) {
  try {
    if (algorithm == "auto") return auto_color(t);
    if (algorithm == "two10") return from_two(color_2col_10(t));
    if (algorithm == "light8") return color_light_8(t);
    if (algorithm == "light2col5") return from_two(color_light_2col_5(t));
    if (algorithm == "sqrt3") {
      auto r = color_3col_sqrt(t);
      if (auto* c = std::get_if<Coloring>(&r)) return std::move(*c);
      auto& f = std::get<SqrtFailure>(r);
      if (f.evidence.empty()) return AlgorithmFailure{"no out-neighborhood was 2-colorable"};
      return std::move(f.evidence.front().second);
    }
    if (algorithm == "reduce3") return from_reduction(color_3col_via_graph(t, default_graph_colorer));
    if (algorithm == "reck") return from_reduction(color_kcol_recursive(t, k, default_graph_colorer));
  } catch (const Error& e) {
    return AlgorithmFailure{e.what()};
  }
  throw Error("unknown algorithm '" + algorithm + "'");
}

namespace {

struct BenchRow {
  int n = 0;
  int colors = 0;
  bool valid = false;
  long long micros = 0;
};

std::string suite_algorithm(const std::string& suite) {
  if (suite == "two-col") return "two10";
  if (suite == "light") return "light8";
  if (suite == "three-col") return "sqrt3";
  if (suite == "reduce3") return "reduce3";
  return "auto";
}

std::optional<Tournament> suite_instance(const std::string& suite, int n, std::uint64_t seed) {
  if (suite == "two-col") return planted_k_colorable(n, 2, seed).tournament;
  if (suite == "three-col" || suite == "reduce3") return planted_k_colorable(n, 3, seed).tournament;
  if (suite == "light") return light_sampler(n, seed, 1000);
  return random_tournament(n, seed);
}

BenchRow bench_one(const std::string& suite, int n, std::uint64_t seed, bool timing) {
  BenchRow row;
  row.n = n;
  const auto t = suite_instance(suite, n, seed);
  if (!t) return row;
  const auto start = std::chrono::steady_clock::now();
  const auto outcome = run_algorithm(*t, suite_algorithm(suite));
  const auto stop = std::chrono::steady_clock::now();
  if (timing) row.micros = std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
  if (const auto* c = std::get_if<Coloring>(&outcome)) {
    row.colors = c->palette_size();
    row.valid = c->size() == t->size() && !verify_coloring(*t, *c);
  }
  return row;
}

}  // namespace

std::string bench_csv(const BenchOptions& o) {
  if (std::find(bench_suite_names().begin(), bench_suite_names().end(), o.suite) == bench_suite_names().end())
    throw Error("unknown suite '" + o.suite + "'");
  if (o.count < 1) throw Error("count must be positive");
  struct Job {
    int n;
    int index;
  };
  std::vector<Job> jobs;
  for (int n : o.sizes) {
    if (n < 1) throw Error("sizes must be positive");
    for (int i = 0; i < o.count; ++i) jobs.push_back({n, i});
  }
  std::vector<BenchRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j; (j = next++) < jobs.size();)
      rows[j] = bench_one(o.suite, jobs[j].n, o.seed + static_cast<std::uint64_t>(jobs[j].index), o.timing);
  };
  const int threads = std::clamp(o.threads, 1, 64);
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  const std::string alg = suite_algorithm(o.suite);
  std::ostringstream csv;
  csv << "instance,n,algorithm,colors,valid,micros\n";
  int max_colors = 0, failures = 0;
  long long total = 0;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const auto& r = rows[j];
    csv << o.suite << '-' << jobs[j].n << '-' << jobs[j].index << ',' << r.n << ',' << alg << ',' << r.colors << ','
        << (r.valid ? "true" : "false") << ',' << r.micros << '\n';
    max_colors = std::max(max_colors, r.colors);
    failures += !r.valid;
    total += r.micros;
  }
  csv << "summary," << jobs.size() << ',' << alg << ',' << max_colors << ',' << failures << ',' << total << '\n';
  return csv.str();
}

namespace {

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw Error("cannot write '" + path + "'");
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("expected a comma-separated integer list, got '" + s + "'");
    }
  }
  return out;
}

struct Options {
  // generate
  std::string kind = "random";
  int n = 10;
  int k = 2;
  int color_k = 4;
  int tower_k = 3;
  std::uint64_t seed = 0;
  std::string residues;
  int attempts = 1000;
  // shared
  std::string out;
  std::string input;
  std::string second;
  // color
  std::string alg = "auto";
  // chi
  std::uint64_t budget = kDefaultBudget;
  // reduce
  std::string reduce_kind;
  std::string tournament_in;
  std::vector<std::string> parts;
  int index = 3;
  int l = 4;
  long long cap = kDefaultTowerCap;
  int block_size = 2;
  std::string coloring_out;
  std::string blocks_out;
  // bench
  std::string suite = "two-col";
  std::string sizes = "20";
  int count = 10;
  bool no_timing = false;
  int threads = 0;
};

std::string blocks_text(const std::vector<BlockTag>& map) {
  std::string s;
  for (std::size_t v = 0; v < map.size(); ++v)
    s += std::to_string(v) + " " + map[v].block + " " + std::to_string(map[v].source) + " " +
         std::to_string(map[v].edge) + "\n";
  return s;
}

int cmd_generate(const Options& o, std::ostream& out) {
  GeneratorSpec spec;
  spec.kind = *parse_generator_kind(o.kind);
  spec.n = o.n;
  spec.k = o.k;
  spec.seed = o.seed;
  spec.attempts = o.attempts;
  if (!o.residues.empty()) spec.residues = parse_int_list(o.residues);
  write_text(o.out, serialize(generate(spec)), out);
  return kExitOk;
}

int cmd_color(const Options& o, std::ostream& out, std::ostream& err) {
  const auto t = parse_tournament(read_text(o.input));
  auto outcome = run_algorithm(t, o.alg, o.color_k);
  if (auto* c = std::get_if<Coloring>(&outcome)) {
    const Coloring compact = c->compacted();
    write_text(o.out, serialize(compact), out);
    err << "colors: " << compact.palette_size() << "\n";
    return kExitOk;
  }
  if (auto* cert = std::get_if<NonTwoColorCertificate>(&outcome)) {
    write_text(o.out, serialize(*cert), out);
    err << "not 2-colorable: certificate written\n";
    return kExitCertificate;
  }
  err << "error: " << std::get<AlgorithmFailure>(outcome).reason << "\n";
  return kExitInvalid;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto t = parse_tournament(read_text(o.input));
  const auto second = parse_instance(read_text(o.second));
  if (const auto* cert = std::get_if<NonTwoColorCertificate>(&second)) {
    if (cert->scope.universe() != t.size()) throw Error("certificate size does not match the tournament");
    const auto check = check_certificate(t, *cert);
    if (check.valid) {
      out << "certificate valid\n";
      return kExitOk;
    }
    out << "certificate invalid: " << check.reason << "\n";
    return kExitInvalid;
  }
  const auto* file = std::get_if<ColoringFile>(&second);
  if (!file) throw Error("expected a coloring or cert file, found " + instance_kind(second));
  if (file->coloring.size() != t.size()) throw Error("coloring size does not match the tournament");
  if (const auto bad = verify_coloring(t, file->coloring)) {
    out << "monochromatic triangle " << bad->triangle[0] << " " << bad->triangle[1] << " " << bad->triangle[2]
        << " (color " << bad->color << ")\n";
    return kExitInvalid;
  }
  out << "valid, " << file->coloring.palette_size() << " colors\n";
  return kExitOk;
}

int cmd_chi(const Options& o, std::ostream& out, std::ostream& err) {
  const auto t = parse_tournament(read_text(o.input));
  const auto r = exact_chromatic(t, o.budget);
  if (!r.found()) {
    err << "budget exceeded\n";
    return kExitBudget;
  }
  out << r.value->chi << "\n";
  if (!o.out.empty()) write_text(o.out, serialize(r.value->witness), out);
  return kExitOk;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const auto t = parse_tournament(read_text(o.input));
  const long long n = t.size();
  out << "n: " << n << "\n";
  out << "arcs: " << n * (n - 1) / 2 << "\n";
  out << "scc: " << scc_decomposition(t).size() << "\n";
  const auto heavy = heavy_arcs(t);
  out << "light: " << (heavy.heavy_arcs.empty() ? "yes" : "no") << "\n";
  out << "heavy_arcs: " << heavy.heavy_arcs.size() << "\n";
  out << "transitive: " << (is_transitive(t) ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_reduce(const Options& o, std::ostream& out, std::ostream& err) {
  Tournament result;
  const std::string& kind = o.reduce_kind;
  auto need = [&](const std::string& path, const char* flag) -> const std::string& {
    if (path.empty()) throw CLI::RequiredError(std::string(flag) + " is required for --kind " + kind);
    return path;
  };
  if (kind == "h3-basic" || kind == "h3-gap") {
    const auto h = parse_h3(read_text(need(o.input, "--in")));
    const auto a = kind == "h3-basic" ? hyper_to_tournament_basic(h) : hyper_to_tournament_gap(h);
    result = a.tournament;
    if (!o.blocks_out.empty()) write_text(o.blocks_out, blocks_text(a.block_map), out);
  } else if (kind == "s-chain") {
    result = s_chain(o.index);
    if (!o.coloring_out.empty()) write_text(o.coloring_out, serialize(s_chain_coloring(o.index)), out);
  } else if (kind == "delta") {
    if (o.parts.size() != 3) throw CLI::ValidationError("--parts takes exactly three tournament files");
    result = delta_compose(parse_tournament(read_text(o.parts[0])), parse_tournament(read_text(o.parts[1])),
                           parse_tournament(read_text(o.parts[2])));
  } else if (kind == "tower") {
    const auto tower = hardness_tower(parse_h3(read_text(need(o.input, "--in"))), o.tower_k);
    result = tower.tournament;
    if (!o.coloring_out.empty()) {
      if (!tower.coloring) err << "no coloring: H has no 2-coloring within the budget\n";
      else write_text(o.coloring_out, serialize(*tower.coloring), out);
    }
  } else if (kind == "backedge") {
    result = backedge_step(parse_graph(read_text(need(o.input, "--in"))),
                           parse_tournament(read_text(need(o.tournament_in, "--tournament"))));
  } else if (kind == "graph-tower") {
    result = graph_tower(parse_graph(read_text(need(o.input, "--in"))), o.tower_k, o.l, o.cap);
  } else {
    result = ramsey_blowup(parse_graph(read_text(need(o.input, "--in"))), o.block_size,
                           random_bipartite_source(o.seed));
  }
  write_text(o.out, serialize(result), out);
  return kExitOk;
}

int cmd_bench(const Options& o, std::ostream& out) {
  BenchOptions b;
  b.suite = o.suite;
  b.sizes = parse_int_list(o.sizes);
  b.count = o.count;
  b.seed = o.seed;
  b.timing = !o.no_timing;
  b.threads = o.threads;
  if (b.threads <= 0) {
    const char* env = std::getenv("THREADS");
    b.threads = env ? std::max(1, std::atoi(env)) : 1;
  }
  write_text(o.out, bench_csv(b), out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tournament coloring toolkit", "tourney"};
  app.require_subcommand(1);
  Options o;

  std::vector<std::string> generator_kinds;
  for (auto k : {GeneratorKind::random, GeneratorKind::kcol, GeneratorKind::paley, GeneratorKind::circulant,
                 GeneratorKind::light, GeneratorKind::transitive})
    generator_kinds.push_back(generator_kind_name(k));

  auto* gen = app.add_subcommand("generate", "Write a generated tournament");
  gen->add_option("--kind", o.kind, "Instance family")->check(CLI::IsMember(generator_kinds));
  gen->add_option("--n", o.n, "Vertex count (prime q for paley)");
  gen->add_option("--k", o.k, "Planted class count for kcol");
  gen->add_option("--seed", o.seed, "Seed");
  gen->add_option("--residues", o.residues, "Comma-separated residues for circulant");
  gen->add_option("--attempts", o.attempts, "Attempt cap for the light sampler");
  gen->add_option("--out", o.out, "Output path (default stdout)");

  auto* color = app.add_subcommand("color", "Color a tournament file");
  color->add_option("file", o.input, "Tournament file ('-' for stdin)")->required();
  color->add_option("--alg", o.alg, "Algorithm")->check(CLI::IsMember(algorithm_names()));
  color->add_option("--k", o.color_k, "Target k for reck");
  color->add_option("--out", o.out, "Output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check a coloring or certificate against a tournament");
  verify->add_option("tournament", o.input, "Tournament file")->required();
  verify->add_option("coloring", o.second, "Coloring or cert file")->required();

  auto* chi = app.add_subcommand("chi", "Exact dichromatic number");
  chi->add_option("file", o.input, "Tournament file")->required();
  chi->add_option("--budget", o.budget, "Search node budget");
  chi->add_option("--out", o.out, "Write an optimal coloring here");

  auto* analyze = app.add_subcommand("analyze", "Structural summary");
  analyze->add_option("file", o.input, "Tournament file")->required();

  auto* reduce = app.add_subcommand("reduce", "Build a hardness construction");
  reduce->add_option("--kind", o.reduce_kind, "Construction")
      ->required()
      ->check(CLI::IsMember({"h3-basic", "h3-gap", "s-chain", "delta", "tower", "backedge", "graph-tower", "ramsey"}));
  reduce->add_option("--in", o.input, "Hypergraph (h3-*, tower) or graph (backedge, graph-tower, ramsey) file");
  reduce->add_option("--tournament", o.tournament_in, "Tournament file for backedge");
  reduce->add_option("--parts", o.parts, "Three tournament files for delta");
  reduce->add_option("--i", o.index, "Chain index for s-chain");
  reduce->add_option("--k", o.tower_k, "Target k for tower and graph-tower");
  reduce->add_option("--l", o.l, "Tower height for graph-tower");
  reduce->add_option("--cap", o.cap, "Vertex cap for graph-tower");
  reduce->add_option("--block-size", o.block_size, "Block size for ramsey");
  reduce->add_option("--seed", o.seed, "Seed of the random bipartite couplings for ramsey");
  reduce->add_option("--coloring-out", o.coloring_out, "Constructed coloring (s-chain, tower)");
  reduce->add_option("--blocks-out", o.blocks_out, "Block map (h3-*)");
  reduce->add_option("--out", o.out, "Output path (default stdout)");

  auto* bench = app.add_subcommand("bench", "Benchmark suite as CSV");
  bench->add_option("--suite", o.suite, "Suite")->check(CLI::IsMember(bench_suite_names()));
  bench->add_option("--n", o.sizes, "Comma-separated sizes");
  bench->add_option("--count", o.count, "Instances per size");
  bench->add_option("--seed", o.seed, "First seed; instance i uses seed + i");
  bench->add_flag("--no-timing", o.no_timing, "Report 0 microseconds");
  bench->add_option("--threads", o.threads, "Worker threads (default THREADS or 1)");
  bench->add_option("--out", o.out, "Output path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_generate(o, out);
    if (*color) return cmd_color(o, out, err);
    if (*verify) return cmd_verify(o, out);
    if (*chi) return cmd_chi(o, out, err);
    if (*analyze) return cmd_analyze(o, out);
    if (*reduce) return cmd_reduce(o, out, err);
    if (*bench) return cmd_bench(o, out);
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitUsage;
}

}  // namespace tourney
