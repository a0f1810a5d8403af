#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace tourney {

using Vertex = int;

/// Fixed-universe set of vertex ids backed by 64-bit words.
///
/// All binary operations require both operands to share the same universe.
/// Iteration always visits members in increasing id order.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_(static_cast<std::size_t>((universe + 63) / 64), 0) {}

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static VertexSet of(int universe, std::span<const Vertex> members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
  }

  int universe() const { return universe_; }

  bool contains(Vertex v) const {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
  }
  void insert(Vertex v) { words_[static_cast<std::size_t>(v) >> 6] |= bit(v); }
  void erase(Vertex v) { words_[static_cast<std::size_t>(v) >> 6] &= ~bit(v); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Smallest member, or -1.
  Vertex first() const { return next_from(0); }
  /// Smallest member strictly greater than v, or -1.
  Vertex next(Vertex v) const { return next_from(v + 1); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

  /// Visits this ∩ o in increasing order.
  template <class F>
  void for_each_common(const VertexSet& o, F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i] & o.words_[i];
      while (w) {
        f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  int count_common(const VertexSet& o) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }
  /// |this ∩ a ∩ b|
  int count_common(const VertexSet& a, const VertexSet& b) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & a.words_[i] & b.words_[i]);
    return c;
  }
  /// Smallest member of this ∩ o, or -1.
  Vertex first_common(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (auto w = words_[i] & o.words_[i]) return static_cast<Vertex>(i * 64 + std::countr_zero(w));
    return -1;
  }
  /// Smallest member of this ∩ a ∩ b, or -1.
  Vertex first_common(const VertexSet& a, const VertexSet& b) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (auto w = words_[i] & a.words_[i] & b.words_[i])
        return static_cast<Vertex>(i * 64 + std::countr_zero(w));
    return -1;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet s(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    s.trim();
    return s;
  }

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v & 63); }

  Vertex next_from(Vertex start) const {
    if (start >= universe_) return -1;
    std::size_t i = static_cast<std::size_t>(start) >> 6;
    std::uint64_t w = words_[i] & (~std::uint64_t{0} << (start & 63));
    while (true) {
      if (w) return static_cast<Vertex>(i * 64 + std::countr_zero(w));
      if (++i == words_.size()) return -1;
      w = words_[i];
    }
  }

  void trim() {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace tourney
