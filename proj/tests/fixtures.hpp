#pragma once

#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/graph.hpp"

namespace fixtures {

// Triangle on v1, v2, v3 with every edge doubled, all weights zero. Genus 4,
// canonical divisor (2, 2, 2).
inline chipfire::Graph doubled_triangle() {
  chipfire::RawGraph raw;
  raw.vertices = {{"v1", 0}, {"v2", 0}, {"v3", 0}};
  raw.edges = {{"v1", "v2"}, {"v1", "v2"}, {"v1", "v3"},
               {"v1", "v3"}, {"v2", "v3"}, {"v2", "v3"}};
  return chipfire::Graph(raw);
}

// Path v1 - v2 - v3 with both edges doubled, all weights zero. Genus 2,
// canonical divisor (0, 2, 0).
inline chipfire::Graph doubled_path() {
  chipfire::RawGraph raw;
  raw.vertices = {{"v1", 0}, {"v2", 0}, {"v3", 0}};
  raw.edges = {{"v1", "v2"}, {"v1", "v2"}, {"v2", "v3"}, {"v2", "v3"}};
  return chipfire::Graph(raw);
}

// Two vertices joined by a double edge, weights zero.
inline chipfire::Graph double_edge_pair() {
  chipfire::RawGraph raw;
  raw.vertices = {{"v1", 0}, {"v2", 0}};
  raw.edges = {{"v1", "v2"}, {"v1", "v2"}};
  return chipfire::Graph(raw);
}

inline chipfire::Divisor div_of(std::vector<long long> values) {
  chipfire::Divisor d;
  for (long long v : values) d.values.emplace_back(v);
  return d;
}

inline std::vector<chipfire::Int> ints(std::vector<long long> values) {
  std::vector<chipfire::Int> out;
  for (long long v : values) out.emplace_back(v);
  return out;
}

inline std::vector<chipfire::Rat> rats(std::vector<chipfire::Rat> values) {
  return values;
}

}  // namespace fixtures
