#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "tourney/core.hpp"
#include "tourney/graph.hpp"
#include "tourney/light.hpp"

namespace tourney {

/// Line and column are 1-based; column 0 means the whole line.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A coloring file keeps its declared palette bound k.
struct ColoringFile {
  Coloring coloring;
  int k = 0;
};

using Instance = std::variant<Tournament, ColoringFile, Hypergraph3, Graph, NonTwoColorCertificate>;

/// Formats, all ids 0-based, '#' starts a comment line:
///   p tournament n      then n rows of n characters in {0,1}
///   p coloring n k      then n integers in [0,k)
///   p h3 n m            then m lines "a b c"
///   p graph n m         then m lines "a b"
///   p cert n odd-cycle m    then "scope" line, then m lines "u v"
///   p cert n all-pairs m    then "scope" line, then m lines "u v x y z"
/// The scope line is "s <count> <ids...>".
Instance parse_instance(std::string_view text);

Tournament parse_tournament(std::string_view text);
ColoringFile parse_coloring(std::string_view text);
Hypergraph3 parse_h3(std::string_view text);
Graph parse_graph(std::string_view text);
NonTwoColorCertificate parse_certificate(std::string_view text);

std::string serialize(const Tournament& t);
/// k defaults to the largest id plus one.
std::string serialize(const Coloring& c, int k = -1);
std::string serialize(const Hypergraph3& h);
std::string serialize(const Graph& g);
std::string serialize(const NonTwoColorCertificate& cert);
std::string serialize(const Instance& instance);

std::string instance_kind(const Instance& instance);

}  // namespace tourney
