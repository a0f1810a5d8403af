#include "tourney/core.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>

namespace tourney {

namespace {

std::string pair_name(Vertex i, Vertex j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

Tournament Tournament::from_matrix(const std::vector<std::vector<bool>>& arcs) {
  const int n = static_cast<int>(arcs.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(arcs[static_cast<std::size_t>(i)].size()) != n)
      throw Error("adjacency matrix is not square at row " + std::to_string(i));
  }
  auto at = [&](int i, int j) { return arcs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  TournamentBuilder b(n);
  for (int i = 0; i < n; ++i) {
    if (at(i, i)) throw Error("self-loop at vertex " + std::to_string(i));
    for (int j = i + 1; j < n; ++j) {
      const bool fwd = at(i, j);
      const bool back = at(j, i);
      if (fwd && back) throw Error("digon between " + pair_name(i, j));
      if (!fwd && !back) throw Error("missing arc between " + pair_name(i, j));
      fwd ? b.add_arc(i, j) : b.add_arc(j, i);
    }
  }
  return std::move(b).build();
}

Tournament Tournament::transitive(int n) {
  TournamentBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.add_arc(i, j);
  return std::move(b).build();
}

TournamentBuilder::TournamentBuilder(int n) {
  if (n < 0) throw Error("negative vertex count");
  out_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

void TournamentBuilder::add_arc(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= size() || v >= size())
    throw Error("arc endpoint out of range: " + pair_name(u, v));
  if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
  out_[static_cast<std::size_t>(u)].insert(v);
  out_[static_cast<std::size_t>(v)].erase(u);
}

void TournamentBuilder::add_all(const VertexSet& from, const VertexSet& to) {
  from.for_each([&](Vertex u) {
    out_[static_cast<std::size_t>(u)] |= to;
    out_[static_cast<std::size_t>(u)].erase(u);
  });
  to.for_each([&](Vertex v) {
    if (!from.contains(v)) out_[static_cast<std::size_t>(v)] -= from;
  });
}

void TournamentBuilder::embed(const Tournament& t, Vertex offset) {
  for (Vertex u = 0; u < t.size(); ++u)
    t.out(u).for_each([&](Vertex v) { add_arc(u + offset, v + offset); });
}

Tournament TournamentBuilder::build() && {
  const int n = size();
  Tournament t;
  t.out_ = std::move(out_);
  t.in_.assign(static_cast<std::size_t>(n), VertexSet(n));
  for (Vertex u = 0; u < n; ++u) {
    if (t.out_[static_cast<std::size_t>(u)].contains(u))
      throw Error("self-loop at vertex " + std::to_string(u));
    t.out_[static_cast<std::size_t>(u)].for_each(
        [&](Vertex v) { t.in_[static_cast<std::size_t>(v)].insert(u); });
  }
  for (Vertex u = 0; u < n; ++u) {
    const auto& o = t.out_[static_cast<std::size_t>(u)];
    const auto& i = t.in_[static_cast<std::size_t>(u)];
    if (o.intersects(i)) throw Error("digon between " + pair_name(u, o.first_common(i)));
    if (o.count() + i.count() != n - 1) {
      VertexSet missing = (o | i).complement();
      missing.erase(u);
      throw Error("missing arc between " + pair_name(u, missing.first()));
    }
  }
  return t;
}

Coloring::Coloring(std::vector<int> colors) : colors_(std::move(colors)) {
  std::vector<int> sorted = colors_;
  for (int c : sorted)
    if (c < 0) throw Error("negative color id " + std::to_string(c));
  std::sort(sorted.begin(), sorted.end());
  palette_size_ = static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

std::vector<VertexSet> Coloring::classes() const {
  int top = 0;
  for (int c : colors_) top = std::max(top, c + 1);
  std::vector<VertexSet> out(static_cast<std::size_t>(top), VertexSet(size()));
  for (Vertex v = 0; v < size(); ++v) out[static_cast<std::size_t>(colors_[static_cast<std::size_t>(v)])].insert(v);
  return out;
}

Coloring Coloring::compacted() const {
  std::unordered_map<int, int> renumber;
  std::vector<int> out;
  out.reserve(colors_.size());
  for (int c : colors_) {
    auto [it, inserted] = renumber.try_emplace(c, static_cast<int>(renumber.size()));
    out.push_back(it->second);
  }
  return Coloring(std::move(out));
}

void check_subset(const Tournament& t, const VertexSet& s) {
  if (s.universe() != t.size())
    throw Error("vertex subset universe " + std::to_string(s.universe()) +
                " does not match tournament size " + std::to_string(t.size()));
}

Induced induced(const Tournament& t, const VertexSet& s) {
  check_subset(t, s);
  Induced r;
  r.to_parent = s.members();
  const int m = static_cast<int>(r.to_parent.size());
  std::vector<Vertex> local(static_cast<std::size_t>(t.size()), -1);
  for (int i = 0; i < m; ++i) local[static_cast<std::size_t>(r.to_parent[static_cast<std::size_t>(i)])] = i;
  TournamentBuilder b(m);
  for (int i = 0; i < m; ++i) {
    const Vertex p = r.to_parent[static_cast<std::size_t>(i)];
    t.out(p).for_each_common(s, [&](Vertex q) { b.add_arc(i, local[static_cast<std::size_t>(q)]); });
  }
  r.tournament = std::move(b).build();
  return r;
}

VertexSet arc_neighborhood(const Tournament& t, Vertex u, Vertex v) {
  if (!t.valid_vertex(u) || !t.valid_vertex(v)) throw Error("vertex out of range: " + pair_name(u, v));
  if (!t.arc(u, v)) throw Error("not an arc: " + pair_name(u, v));
  return t.in(u) & t.out(v);
}

VertexSet mixed_neighborhood(const Tournament& t, const VertexSet& s) {
  check_subset(t, s);
  VertexSet out_of_s(t.size()), into_s(t.size());
  s.for_each([&](Vertex v) {
    out_of_s |= t.out(v);
    into_s |= t.in(v);
  });
  return (out_of_s & into_s) - s;
}

std::optional<Triangle> transitivity_check(const Tournament& t, const VertexSet& s) {
  check_subset(t, s);
  if (is_transitive(t, s)) return std::nullopt;
  std::optional<Triangle> found;
  for (Vertex v = s.first(); v >= 0 && !found; v = s.next(v)) {
    t.out(v).for_each_common(s, [&](Vertex w) {
      if (found) return;
      const Vertex x = t.out(w).first_common(t.in(v), s);
      if (x >= 0) found = Triangle{v, w, x};
    });
  }
  return found;
}

bool is_transitive(const Tournament& t, const VertexSet& s) {
  // A tournament is acyclic iff its scores are exactly 0..m-1.
  const int m = s.count();
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (!ok) return;
    const int d = t.out(v).count_common(s);
    if (seen[static_cast<std::size_t>(d)]) ok = false;
    seen[static_cast<std::size_t>(d)] = 1;
  });
  return ok;
}

bool is_transitive(const Tournament& t) { return is_transitive(t, t.all()); }

std::optional<MonochromaticTriangle> verify_coloring(const Tournament& t, const Coloring& c) {
  if (c.size() != t.size())
    throw Error("coloring has " + std::to_string(c.size()) + " entries for a tournament on " +
                std::to_string(t.size()) + " vertices");
  const auto classes = c.classes();
  for (std::size_t color = 0; color < classes.size(); ++color) {
    if (auto tri = transitivity_check(t, classes[color]))
      return MonochromaticTriangle{*tri, static_cast<int>(color)};
  }
  return std::nullopt;
}

std::vector<VertexSet> scc_decomposition(const Tournament& t) { return scc_decomposition(t, t.all()); }

std::vector<VertexSet> scc_decomposition(const Tournament& t, const VertexSet& scope) {
  // Sort by score inside the scope; a prefix of size s dominates the rest
  // exactly when its score sum equals C(s,2) + s(m-s).
  check_subset(t, scope);
  std::vector<Vertex> order = scope.members();
  const long long m = static_cast<long long>(order.size());
  std::vector<int> score(static_cast<std::size_t>(t.size()), 0);
  for (Vertex v : order) score[static_cast<std::size_t>(v)] = t.out(v).count_common(scope);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return score[static_cast<std::size_t>(a)] > score[static_cast<std::size_t>(b)];
  });
  std::vector<VertexSet> comps;
  VertexSet current(t.size());
  long long sum = 0;
  for (long long s = 1; s <= m; ++s) {
    const Vertex v = order[static_cast<std::size_t>(s - 1)];
    sum += score[static_cast<std::size_t>(v)];
    current.insert(v);
    if (sum == s * (s - 1) / 2 + s * (m - s)) {
      comps.push_back(current);
      current = VertexSet(t.size());
    }
  }
  return comps;
}

std::vector<int> distances_from(const Tournament& t, Vertex u) { return distances_from(t, u, t.all()); }

std::vector<int> distances_from(const Tournament& t, Vertex u, const VertexSet& scope) {
  std::vector<int> dist(static_cast<std::size_t>(t.size()), -1);
  std::deque<Vertex> queue{u};
  dist[static_cast<std::size_t>(u)] = 0;
  VertexSet unseen = scope;
  unseen.erase(u);
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    const VertexSet next = t.out(x) & unseen;
    next.for_each([&](Vertex y) {
      dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
      queue.push_back(y);
    });
    unseen -= next;
  }
  return dist;
}

std::optional<std::vector<Vertex>> shortest_path(const Tournament& t, Vertex u, Vertex v) {
  return shortest_path(t, u, v, t.all());
}

std::optional<std::vector<Vertex>> shortest_path(const Tournament& t, Vertex u, Vertex v, const VertexSet& scope) {
  if (!t.valid_vertex(u) || !t.valid_vertex(v)) throw Error("vertex out of range: " + pair_name(u, v));
  if (u == v) throw Error("shortest_path requires distinct endpoints");
  if (!scope.contains(u) || !scope.contains(v)) throw Error("path endpoints outside scope: " + pair_name(u, v));
  std::vector<Vertex> parent(static_cast<std::size_t>(t.size()), -1);
  std::deque<Vertex> queue{u};
  VertexSet unseen = scope;
  unseen.erase(u);
  while (!queue.empty() && unseen.contains(v)) {
    const Vertex x = queue.front();
    queue.pop_front();
    const VertexSet next = t.out(x) & unseen;
    next.for_each([&](Vertex y) {
      parent[static_cast<std::size_t>(y)] = x;
      queue.push_back(y);
    });
    unseen -= next;
  }
  if (unseen.contains(v)) return std::nullopt;
  std::vector<Vertex> path{v};
  while (path.back() != u) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

Tournament delta_compose(const Tournament& t1, const Tournament& t2, const Tournament& t3) {
  const int a = t1.size(), b = t2.size(), c = t3.size();
  const int n = a + b + c;
  TournamentBuilder builder(n);
  builder.embed(t1, 0);
  builder.embed(t2, a);
  builder.embed(t3, a + b);
  VertexSet s1(n), s2(n), s3(n);
  for (int i = 0; i < a; ++i) s1.insert(i);
  for (int i = 0; i < b; ++i) s2.insert(a + i);
  for (int i = 0; i < c; ++i) s3.insert(a + b + i);
  builder.add_all(s1, s2);
  builder.add_all(s2, s3);
  builder.add_all(s3, s1);
  return std::move(builder).build();
}

Coloring greedy_coloring(const Tournament& t, const VertexSet& s) {
  check_subset(t, s);
  std::vector<VertexSet> classes;
  std::vector<int> colors;
  s.for_each([&](Vertex v) {
    std::size_t c = 0;
    for (; c < classes.size(); ++c) {
      bool conflict = false;
      const VertexSet& cls = classes[c];
      t.out(v).for_each_common(cls, [&](Vertex x) {
        if (!conflict && t.out(x).first_common(t.in(v), cls) >= 0) conflict = true;
      });
      if (!conflict) break;
    }
    if (c == classes.size()) classes.emplace_back(t.size());
    classes[c].insert(v);
    colors.push_back(static_cast<int>(c));
  });
  return Coloring(std::move(colors));
}

Coloring assemble(int n, const std::vector<VertexSet>& subsets, const std::vector<Coloring>& parts,
                  const std::vector<int>& offsets) {
  std::vector<int> colors(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    int k = 0;
    subsets[i].for_each([&](Vertex v) {
      colors[static_cast<std::size_t>(v)] = parts[i][k++] + offsets[i];
    });
  }
  for (Vertex v = 0; v < n; ++v)
    if (colors[static_cast<std::size_t>(v)] < 0)
      throw std::logic_error("assemble: vertex " + std::to_string(v) + " left uncolored");
  return Coloring(std::move(colors));
}

}  // namespace tourney
