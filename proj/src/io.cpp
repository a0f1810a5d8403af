#include "tourney/io.hpp"

#include <charconv>
#include <sstream>

namespace tourney {

ParseError::ParseError(int line, int column, const std::string& message)
    : Error("line " + std::to_string(line) + (column > 0 ? ", column " + std::to_string(column) : "") + ": " +
            message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  int column = 0;
};

struct Line {
  int number = 0;
  std::string_view text;
  std::vector<Token> tokens;
};

std::vector<Token> split(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) out.push_back({s.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

// Non-blank, non-comment lines with their 1-based numbers.
class Reader {
 public:
  explicit Reader(std::string_view text) {
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t end = std::min(text.find('\n', pos), text.size());
      ++number;
      const auto raw = text.substr(pos, end - pos);
      auto tokens = split(raw);
      if (!tokens.empty() && tokens[0].text[0] != '#') lines_.push_back({number, raw, std::move(tokens)});
      if (end == text.size()) break;
      pos = end + 1;
    }
    last_line_ = number;
  }

  bool done() const { return next_ == lines_.size(); }
  const Line& take(const char* what) {
    if (done()) throw ParseError(last_line_, 0, std::string("unexpected end of input, expected ") + what);
    return lines_[next_++];
  }
  void expect_end() const {
    if (!done()) throw ParseError(lines_[next_].number, 1, "unexpected content after the declared body");
  }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
  int last_line_ = 0;
};

long long number(const Line& line, const Token& tok, long long lo, long long hi, const char* what) {
  long long v = 0;
  const auto* b = tok.text.data();
  const auto [p, ec] = std::from_chars(b, b + tok.text.size(), v);
  if (ec != std::errc() || p != b + tok.text.size())
    throw ParseError(line.number, tok.column, std::string("expected an integer ") + what);
  if (v < lo || v > hi)
    throw ParseError(line.number, tok.column,
                     std::string(what) + " " + std::to_string(v) + " out of range [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
  return v;
}

void expect_count(const Line& line, std::size_t count, const char* what) {
  if (line.tokens.size() != count)
    throw ParseError(line.number, 0,
                     std::string("expected ") + std::to_string(count) + " fields in " + what + ", found " +
                         std::to_string(line.tokens.size()));
}

struct Header {
  const Line* line;
  std::string kind;
};

Header header(Reader& r) {
  const Line& line = r.take("a header");
  if (line.tokens[0].text != "p") throw ParseError(line.number, line.tokens[0].column, "header must start with 'p'");
  if (line.tokens.size() < 2) throw ParseError(line.number, 0, "header is missing the kind");
  return {&line, std::string(line.tokens[1].text)};
}

constexpr long long kMaxVertices = 1 << 20;

Tournament read_tournament(Reader& r, const Line& h) {
  expect_count(h, 3, "a tournament header");
  const int n = static_cast<int>(number(h, h.tokens[2], 1, kMaxVertices, "vertex count"));
  std::vector<std::vector<bool>> m(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  std::vector<int> row_line(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Line& line = r.take("a tournament row");
    row_line[static_cast<std::size_t>(i)] = line.number;
    if (line.tokens.size() != 1 || static_cast<int>(line.tokens[0].text.size()) != n)
      throw ParseError(line.number, 0, "row " + std::to_string(i) + " must be " + std::to_string(n) + " characters of 0/1");
    const auto& tok = line.tokens[0];
    for (int j = 0; j < n; ++j) {
      const char c = tok.text[static_cast<std::size_t>(j)];
      if (c != '0' && c != '1') throw ParseError(line.number, tok.column + j, "expected 0 or 1");
      if (c == '1' && i == j) throw ParseError(line.number, tok.column + j, "self-loop at vertex " + std::to_string(i));
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c == '1';
    }
  }
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      const bool f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const bool b = m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (f == b)
        throw ParseError(row_line[static_cast<std::size_t>(j)], i + 1,
                         std::string(f ? "digon" : "missing arc") + " between " + std::to_string(i) + " and " +
                             std::to_string(j));
    }
  return Tournament::from_matrix(m);
}

ColoringFile read_coloring(Reader& r, const Line& h) {
  expect_count(h, 4, "a coloring header");
  const int n = static_cast<int>(number(h, h.tokens[2], 0, kMaxVertices, "vertex count"));
  const int k = static_cast<int>(number(h, h.tokens[3], n > 0 ? 1 : 0, kMaxVertices, "palette bound"));
  std::vector<int> colors;
  while (static_cast<int>(colors.size()) < n) {
    const Line& line = r.take("color ids");
    for (const auto& tok : line.tokens) {
      if (static_cast<int>(colors.size()) == n) throw ParseError(line.number, tok.column, "more than n color ids");
      colors.push_back(static_cast<int>(number(line, tok, 0, k - 1, "color id")));
    }
  }
  return {Coloring(std::move(colors)), k};
}

Hypergraph3 read_h3(Reader& r, const Line& h) {
  expect_count(h, 4, "an h3 header");
  const int n = static_cast<int>(number(h, h.tokens[2], 0, kMaxVertices, "vertex count"));
  const long long m = number(h, h.tokens[3], 0, kMaxVertices, "edge count");
  std::vector<Hypergraph3::Edge> edges;
  for (long long e = 0; e < m; ++e) {
    const Line& line = r.take("a hyperedge");
    expect_count(line, 3, "a hyperedge");
    Hypergraph3::Edge edge{};
    for (std::size_t i = 0; i < 3; ++i) edge[i] = static_cast<int>(number(line, line.tokens[i], 0, n - 1, "vertex id"));
    if (edge[0] == edge[1] || edge[1] == edge[2] || edge[0] == edge[2])
      throw ParseError(line.number, 0, "hyperedge repeats a vertex");
    edges.push_back(edge);
  }
  try {
    return Hypergraph3(n, std::move(edges));
  } catch (const Error& e) {
    throw ParseError(h.number, 0, e.what());
  }
}

Graph read_graph(Reader& r, const Line& h) {
  expect_count(h, 4, "a graph header");
  const int n = static_cast<int>(number(h, h.tokens[2], 0, kMaxVertices, "vertex count"));
  const long long m = number(h, h.tokens[3], 0, kMaxVertices, "edge count");
  std::vector<std::pair<int, int>> edges;
  for (long long e = 0; e < m; ++e) {
    const Line& line = r.take("an edge");
    expect_count(line, 2, "an edge");
    const int a = static_cast<int>(number(line, line.tokens[0], 0, n - 1, "vertex id"));
    const int b = static_cast<int>(number(line, line.tokens[1], 0, n - 1, "vertex id"));
    if (a == b) throw ParseError(line.number, line.tokens[1].column, "self-loop");
    edges.emplace_back(a, b);
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const Error& e) {
    throw ParseError(h.number, 0, e.what());
  }
}

NonTwoColorCertificate read_certificate(Reader& r, const Line& h) {
  expect_count(h, 5, "a certificate header");
  const int n = static_cast<int>(number(h, h.tokens[2], 1, kMaxVertices, "vertex count"));
  const std::string variant(h.tokens[3].text);
  const long long m = number(h, h.tokens[4], 0, kMaxVertices, "entry count");
  const Line& sl = r.take("a scope line");
  if (sl.tokens[0].text != "s" || sl.tokens.size() < 2)
    throw ParseError(sl.number, sl.tokens[0].column, "expected the scope line 's <count> <ids...>'");
  const long long count = number(sl, sl.tokens[1], 0, n, "scope size");
  expect_count(sl, static_cast<std::size_t>(count) + 2, "the scope line");
  NonTwoColorCertificate cert;
  cert.scope = VertexSet(n);
  for (std::size_t i = 2; i < sl.tokens.size(); ++i)
    cert.scope.insert(static_cast<Vertex>(number(sl, sl.tokens[i], 0, n - 1, "vertex id")));
  auto id = [&](const Line& line, std::size_t i) {
    return static_cast<Vertex>(number(line, line.tokens[i], 0, n - 1, "vertex id"));
  };
  if (variant == "odd-cycle") {
    OddHeavyCycle cycle;
    for (long long e = 0; e < m; ++e) {
      const Line& line = r.take("a cycle arc");
      expect_count(line, 2, "a cycle arc");
      cycle.arcs.push_back({id(line, 0), id(line, 1)});
    }
    cert.proof = std::move(cycle);
  } else if (variant == "all-pairs") {
    AllPairsBlocked blocked;
    for (long long e = 0; e < m; ++e) {
      const Line& line = r.take("a blocked pair");
      expect_count(line, 5, "a blocked pair");
      const auto key = std::pair{id(line, 0), id(line, 1)};
      if (!blocked.entries.emplace(key, Triangle{id(line, 2), id(line, 3), id(line, 4)}).second)
        throw ParseError(line.number, 0, "pair listed twice");
    }
    cert.proof = std::move(blocked);
  } else {
    throw ParseError(h.number, h.tokens[3].column, "unknown certificate variant '" + variant + "'");
  }
  return cert;
}

template <class T>
T expect_kind(const Instance& i, const char* kind) {
  if (const auto* v = std::get_if<T>(&i)) return *v;
  throw ParseError(1, 0, std::string("expected a ") + kind + " file, found " + instance_kind(i));
}

std::string scope_line(const VertexSet& s) {
  std::ostringstream out;
  out << "s " << s.count();
  s.for_each([&](Vertex v) { out << ' ' << v; });
  out << '\n';
  return out.str();
}

}  // namespace

Instance parse_instance(std::string_view text) {
  Reader r(text);
  const auto [line, kind] = header(r);
  Instance out;
  if (kind == "tournament") out = read_tournament(r, *line);
  else if (kind == "coloring") out = read_coloring(r, *line);
  else if (kind == "h3") out = read_h3(r, *line);
  else if (kind == "graph") out = read_graph(r, *line);
  else if (kind == "cert") out = read_certificate(r, *line);
  else throw ParseError(line->number, line->tokens[1].column, "unknown kind '" + kind + "'");
  r.expect_end();
  return out;
}

Tournament parse_tournament(std::string_view text) { return expect_kind<Tournament>(parse_instance(text), "tournament"); }
ColoringFile parse_coloring(std::string_view text) { return expect_kind<ColoringFile>(parse_instance(text), "coloring"); }
Hypergraph3 parse_h3(std::string_view text) { return expect_kind<Hypergraph3>(parse_instance(text), "h3"); }
Graph parse_graph(std::string_view text) { return expect_kind<Graph>(parse_instance(text), "graph"); }
NonTwoColorCertificate parse_certificate(std::string_view text) {
  return expect_kind<NonTwoColorCertificate>(parse_instance(text), "cert");
}

std::string serialize(const Tournament& t) {
  const int n = t.size();
  std::string out = "p tournament " + std::to_string(n) + "\n";
  out.reserve(out.size() + static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out += t.arc(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string serialize(const Coloring& c, int k) {
  if (k < 0) {
    k = 0;
    for (int x : c.colors()) k = std::max(k, x + 1);
  }
  std::string out = "p coloring " + std::to_string(c.size()) + " " + std::to_string(k) + "\n";
  for (int v = 0; v < c.size(); ++v) out += (v ? " " : "") + std::to_string(c[v]);
  if (c.size() > 0) out += '\n';
  return out;
}

std::string serialize(const Hypergraph3& h) {
  std::string out = "p h3 " + std::to_string(h.size()) + " " + std::to_string(h.edge_count()) + "\n";
  for (const auto& e : h.edges())
    out += std::to_string(e[0]) + " " + std::to_string(e[1]) + " " + std::to_string(e[2]) + "\n";
  return out;
}

std::string serialize(const Graph& g) {
  std::string out = "p graph " + std::to_string(g.size()) + " " + std::to_string(g.edges().size()) + "\n";
  for (const auto& [a, b] : g.edges()) out += std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

std::string serialize(const NonTwoColorCertificate& cert) {
  const std::string n = std::to_string(cert.scope.universe());
  if (const auto* cycle = std::get_if<OddHeavyCycle>(&cert.proof)) {
    std::string out = "p cert " + n + " odd-cycle " + std::to_string(cycle->arcs.size()) + "\n" + scope_line(cert.scope);
    for (const auto& a : cycle->arcs) out += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
    return out;
  }
  const auto& blocked = std::get<AllPairsBlocked>(cert.proof);
  std::string out = "p cert " + n + " all-pairs " + std::to_string(blocked.entries.size()) + "\n" + scope_line(cert.scope);
  for (const auto& [pair, tri] : blocked.entries)
    out += std::to_string(pair.first) + " " + std::to_string(pair.second) + " " + std::to_string(tri[0]) + " " +
           std::to_string(tri[1]) + " " + std::to_string(tri[2]) + "\n";
  return out;
}

std::string serialize(const Instance& instance) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ColoringFile>) return serialize(x.coloring, x.k);
        else return serialize(x);
      },
      instance);
}

std::string instance_kind(const Instance& instance) {
  static const char* names[] = {"tournament", "coloring", "h3", "graph", "cert"};
  return names[instance.index()];
}

}  // namespace tourney
