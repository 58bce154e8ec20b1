#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace skewlines {

/// Dense bitset over vertices 0..n-1.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kBits = 64;

  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), words_(word_count(n), 0) {}

  static int word_count(int n) { return (n + kBits - 1) / kBits; }
  static VertexSet full(int n) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v) s.insert(v);
    return s;
  }
  static VertexSet of(int n, std::span<const int> vs) {
    VertexSet s(n);
    for (int v : vs) s.insert(v);
    return s;
  }

  int universe() const { return n_; }
  void insert(int v) { words_[v / kBits] |= Word{1} << (v % kBits); }
  void erase(int v) { words_[v / kBits] &= ~(Word{1} << (v % kBits)); }
  bool contains(int v) const { return (words_[v / kBits] >> (v % kBits)) & 1U; }

  int count() const {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (Word w : words_)
      if (w) return false;
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
  /// this \ o
  VertexSet& subtract(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  template <class F>
  void for_each(F&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w) {
        const int b = std::countr_zero(w);
        fn(static_cast<int>(i) * kBits + b);
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.words_ <=> b.words_;
  }

 private:
  int n_ = 0;
  std::vector<Word> words_;
};

}  // namespace skewlines
