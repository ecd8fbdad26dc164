#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace hypersquare {

/// Fixed-universe bitset over vertices 0..universe-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<int> members);
  VertexSet(int universe, std::span<const int> members);

  static VertexSet all(int universe);
  static VertexSet from_words(int universe, std::span<const std::uint64_t> words);

  int universe() const noexcept { return universe_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  bool contains(int v) const noexcept {
    return v >= 0 && v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u);
  }
  void insert(int v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int count() const noexcept;
  bool empty() const noexcept;
  /// Smallest member, or -1.
  int first() const noexcept;
  /// Smallest member greater than v, or -1.
  int next(int v) const noexcept;

  std::vector<int> to_vector() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        f(static_cast<int>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  VertexSet& operator&=(const VertexSet& o) noexcept;
  VertexSet& operator|=(const VertexSet& o) noexcept;
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) noexcept;
  /// In-place intersection with raw words of the same universe.
  VertexSet& intersect_words(std::span<const std::uint64_t> o) noexcept;

  friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) noexcept { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  VertexSet complement() const;
  bool intersects(const VertexSet& o) const noexcept;
  bool is_subset_of(const VertexSet& o) const noexcept;

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

inline constexpr int words_for(int universe) { return (universe + 63) / 64; }

}  // namespace hypersquare
