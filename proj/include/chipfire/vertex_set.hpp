#pragma once

#include <initializer_list>
#include <vector>

#include "chipfire/error.hpp"

namespace chipfire {

/// Subset of the vertices of a fixed graph, addressed by vertex index.
/// The universe size is fixed at construction; set operations require
/// matching universes.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : bits_(universe, false) {}

  static VertexSet all(int universe) {
    VertexSet s(universe);
    s.bits_.assign(universe, true);
    return s;
  }

  static VertexSet of(int universe, std::initializer_list<int> members) {
    VertexSet s(universe);
    for (int v : members) s.add(v);
    return s;
  }

  int universe() const { return static_cast<int>(bits_.size()); }

  bool contains(int v) const {
    check_index(v);
    return bits_[v];
  }

  void add(int v) {
    check_index(v);
    bits_[v] = true;
  }

  void remove(int v) {
    check_index(v);
    bits_[v] = false;
  }

  bool empty() const {
    for (bool b : bits_)
      if (b) return false;
    return true;
  }

  int count() const {
    int c = 0;
    for (bool b : bits_) c += b ? 1 : 0;
    return c;
  }

  /// Member indices in ascending order.
  std::vector<int> members() const {
    std::vector<int> m;
    for (int v = 0; v < universe(); ++v)
      if (bits_[v]) m.push_back(v);
    return m;
  }

  VertexSet complement() const {
    VertexSet s(universe());
    for (int v = 0; v < universe(); ++v) s.bits_[v] = !bits_[v];
    return s;
  }

  VertexSet union_with(const VertexSet& other) const {
    check_universe(other);
    VertexSet s(universe());
    for (int v = 0; v < universe(); ++v) s.bits_[v] = bits_[v] || other.bits_[v];
    return s;
  }

  VertexSet intersect(const VertexSet& other) const {
    check_universe(other);
    VertexSet s(universe());
    for (int v = 0; v < universe(); ++v) s.bits_[v] = bits_[v] && other.bits_[v];
    return s;
  }

  bool is_subset_of(const VertexSet& other) const {
    check_universe(other);
    for (int v = 0; v < universe(); ++v)
      if (bits_[v] && !other.bits_[v]) return false;
    return true;
  }

  bool intersects(const VertexSet& other) const {
    check_universe(other);
    for (int v = 0; v < universe(); ++v)
      if (bits_[v] && other.bits_[v]) return true;
    return false;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.bits_ == b.bits_;
  }

 private:
  void check_index(int v) const {
    if (v < 0 || v >= universe())
      fail(Errc::internal_error, "vertex index out of range");
  }
  void check_universe(const VertexSet& other) const {
    if (other.universe() != universe())
      fail(Errc::internal_error, "vertex set universe mismatch");
  }

  std::vector<bool> bits_;
};

}  // namespace chipfire
