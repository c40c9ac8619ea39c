#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/graph.hpp"

namespace chipfire::corpus {

/// One test graph with the divisors exercised on it: canonical, zero, then
/// seeded values.
struct Instance {
  Graph graph;
  std::vector<Divisor> divisors;
};

/// Generation is deterministic: the exhaustive part enumerates edge
/// multiplicity vectors in a fixed order, and every random draw comes from
/// one mt19937 stream consumed in generation order. Changing any knob
/// changes the stream, so the defaults are part of the corpus definition.
struct Options {
  /// Graph sizes 1..exhaustive_max_vertices enumerate every connected
  /// multigraph up to the per-size edge cap.
  int exhaustive_max_vertices = 4;
  /// Edge caps indexed by vertex count.
  std::array<int, 5> edge_cap = {0, 7, 7, 7, 7};
  /// Seeded five-vertex connected samples, up to this many edges each.
  int five_vertex_samples = 24;
  int five_vertex_max_edges = 7;
  /// Every shape appears with all-zero weights and with one seeded 0/1
  /// weight assignment.
  bool weighted_variants = true;
  /// Seeded divisors per instance with values in [-max_abs, max_abs],
  /// indexed by vertex count.
  int seeded_divisors = 2;
  std::array<long long, 6> max_abs = {0, 3, 3, 3, 2, 2};
  std::uint32_t seed = 77003917;
};

std::vector<Instance> build_corpus(const Options& options = Options());

}  // namespace chipfire::corpus
