#include "tightcycle/vertex_set.hpp"

#include <stdexcept>

namespace tightcycle {

VertexSet::VertexSet(std::span<const Vertex> vertices) {
  if (vertices.size() > kMaxUniformity) throw std::invalid_argument("vertex set too large");
  size_ = static_cast<std::uint8_t>(vertices.size());
  std::copy(vertices.begin(), vertices.end(), items_.begin());
  std::sort(items_.begin(), items_.begin() + size_);
  if (std::adjacent_find(items_.begin(), items_.begin() + size_) != items_.begin() + size_)
    throw std::invalid_argument("vertex set has a repeated vertex");
}

VertexSet VertexSet::from_sorted(std::span<const Vertex> vertices) {
  VertexSet s;
  s.size_ = static_cast<std::uint8_t>(vertices.size());
  std::copy(vertices.begin(), vertices.end(), s.items_.begin());
  return s;
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(begin(), end(), v); }

bool VertexSet::includes(const VertexSet& other) const {
  return std::includes(begin(), end(), other.begin(), other.end());
}

bool VertexSet::intersects(const VertexSet& other) const { return intersection_size(other) > 0; }

int VertexSet::intersection_size(const VertexSet& other) const {
  int x = 0, y = 0, count = 0;
  while (x < size_ && y < other.size_) {
    if (items_[x] < other.items_[y]) {
      ++x;
    } else if (other.items_[y] < items_[x]) {
      ++y;
    } else {
      ++count;
      ++x;
      ++y;
    }
  }
  return count;
}

VertexSet VertexSet::unite(const VertexSet& other) const {
  std::array<Vertex, 2 * kMaxUniformity> buf{};
  auto last = std::set_union(begin(), end(), other.begin(), other.end(), buf.begin());
  auto m = static_cast<std::size_t>(last - buf.begin());
  if (m > kMaxUniformity) throw std::invalid_argument("vertex set too large");
  return from_sorted({buf.data(), m});
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  std::array<Vertex, kMaxUniformity> buf{};
  auto last = std::set_difference(begin(), end(), other.begin(), other.end(), buf.begin());
  return from_sorted({buf.data(), static_cast<std::size_t>(last - buf.begin())});
}

std::uint64_t VertexSet::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL * (size_ + 1);
  for (Vertex v : *this) h = mix64(h ^ (v + 0x632be59bd9b4e019ULL));
  return h;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  for (int i = 0; i < size_; ++i) {
    if (i) out += ',';
    out += std::to_string(items_[i]);
  }
  return out + "}";
}

}  // namespace tightcycle
