#include "hypersquare/vertex_set.hpp"

#include <algorithm>

namespace hypersquare {

VertexSet::VertexSet(int universe)
    : universe_(universe), words_(static_cast<std::size_t>(words_for(universe)), 0) {}

VertexSet::VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
  for (int v : members) insert(v);
}

VertexSet::VertexSet(int universe, std::span<const int> members) : VertexSet(universe) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::all(int universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  if (universe % 64 != 0 && !s.words_.empty())
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

VertexSet VertexSet::from_words(int universe, std::span<const std::uint64_t> words) {
  VertexSet s(universe);
  std::copy(words.begin(), words.end(), s.words_.begin());
  return s;
}

int VertexSet::count() const noexcept {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

int VertexSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
  return -1;
}

int VertexSet::next(int v) const noexcept {
  int start = v + 1;
  if (start >= universe_) return -1;
  std::size_t w = static_cast<std::size_t>(start >> 6);
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (bits) return static_cast<int>(w * 64 + std::countr_zero(bits));
    if (++w >= words_.size()) return -1;
    bits = words_[w];
  }
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

VertexSet& VertexSet::intersect_words(std::span<const std::uint64_t> o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o[i];
  return *this;
}

VertexSet VertexSet::complement() const { return all(universe_) - *this; }

bool VertexSet::intersects(const VertexSet& o) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

}  // namespace hypersquare
