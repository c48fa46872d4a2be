#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tightcycle {

using Vertex = std::uint32_t;

// Largest uniformity the fixed-capacity set types support.
inline constexpr int kMaxUniformity = 12;

// splitmix64 finalizer; also used as the oracle's avalanche step.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

// A set of at most kMaxUniformity distinct vertices, stored sorted so that
// equality and ordering are set equality and lexicographic order.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vertices)
      : VertexSet(std::span<const Vertex>(vertices.begin(), vertices.size())) {}
  // Sorts the input. Throws std::invalid_argument on duplicates or overflow.
  explicit VertexSet(std::span<const Vertex> vertices);

  // Caller guarantees strictly increasing input of size <= kMaxUniformity.
  static VertexSet from_sorted(std::span<const Vertex> vertices);

  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  Vertex operator[](int i) const { return items_[i]; }
  const Vertex* begin() const { return items_.data(); }
  const Vertex* end() const { return items_.data() + size_; }
  std::span<const Vertex> view() const { return {items_.data(), static_cast<std::size_t>(size_)}; }

  bool contains(Vertex v) const;
  // True iff every vertex of `other` is in this set.
  bool includes(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  int intersection_size(const VertexSet& other) const;

  VertexSet unite(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;

  std::uint64_t hash() const;
  std::string to_string() const;

  friend bool operator==(const VertexSet& x, const VertexSet& y) {
    return x.size_ == y.size_ && std::equal(x.begin(), x.end(), y.begin());
  }
  friend std::strong_ordering operator<=>(const VertexSet& x, const VertexSet& y) {
    return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
  }

 private:
  std::array<Vertex, kMaxUniformity> items_{};
  std::uint8_t size_ = 0;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return static_cast<std::size_t>(s.hash()); }
};

using JSet = VertexSet;
using KSet = VertexSet;

// Calls f(subset) for every size-`size` subset of `set`, in lexicographic order.
template <class F>
void for_each_subset(const VertexSet& set, int size, F&& f) {
  const int m = set.size();
  if (size < 0 || size > m) return;
  std::array<int, kMaxUniformity> idx{};
  for (int i = 0; i < size; ++i) idx[i] = i;
  std::array<Vertex, kMaxUniformity> buf{};
  while (true) {
    for (int i = 0; i < size; ++i) buf[i] = set[idx[i]];
    f(VertexSet::from_sorted({buf.data(), static_cast<std::size_t>(size)}));
    int i = size - 1;
    while (i >= 0 && idx[i] == m - size + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int q = i + 1; q < size; ++q) idx[q] = idx[q - 1] + 1;
  }
}

}  // namespace tightcycle
