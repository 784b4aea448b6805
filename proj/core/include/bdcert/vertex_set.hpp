#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace bdcert {

// Fixed-capacity bitset over the row-major vertex indices of one grid.
class VertexSet {
 public:
  static constexpr int kWords = 4;
  static constexpr int kCapacity = kWords * 64;

  constexpr VertexSet() = default;

  void insert(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  [[nodiscard]] bool contains(int i) const {
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }

  [[nodiscard]] int size() const {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }
  [[nodiscard]] bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  void clear() { words_ = {}; }

  // Smallest member, or -1 when empty.
  [[nodiscard]] int first() const {
    for (int k = 0; k < kWords; ++k)
      if (words_[k] != 0) return k * 64 + std::countr_zero(words_[k]);
    return -1;
  }

  [[nodiscard]] bool is_subset_of(const VertexSet& other) const {
    for (int k = 0; k < kWords; ++k)
      if ((words_[k] & ~other.words_[k]) != 0) return false;
    return true;
  }
  [[nodiscard]] bool intersects(const VertexSet& other) const {
    for (int k = 0; k < kWords; ++k)
      if ((words_[k] & other.words_[k]) != 0) return true;
    return false;
  }
  [[nodiscard]] int intersection_size(const VertexSet& other) const {
    int n = 0;
    for (int k = 0; k < kWords; ++k) n += std::popcount(words_[k] & other.words_[k]);
    return n;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (int k = 0; k < kWords; ++k) words_[k] |= o.words_[k];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (int k = 0; k < kWords; ++k) words_[k] &= o.words_[k];
    return *this;
  }
  // Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (int k = 0; k < kWords; ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  template <typename F>
  void for_each(F&& fn) const {
    for (int k = 0; k < kWords; ++k) {
      std::uint64_t w = words_[k];
      while (w != 0) {
        fn(k * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  [[nodiscard]] std::size_t hash() const {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (auto w : words_) {
      h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  [[nodiscard]] const std::array<std::uint64_t, kWords>& words() const { return words_; }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace bdcert
