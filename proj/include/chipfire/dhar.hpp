#pragma once

#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/vertex_set.hpp"

namespace chipfire {

/// Outcome of the staged decomposition. The chain is strictly increasing:
/// the stabilized repeat is not stored.
struct DharResult {
  /// V_0 up to V_n, where V_n is the first set whose complement firing
  /// creates no new negative vertex.
  std::vector<VertexSet> chain;
  /// Complement of the last chain entry. Firing it keeps the input divisor
  /// effective away from the starting set; it is the largest set with that
  /// property.
  VertexSet w_dhar;
};

/// Decomposition with respect to d and the starting set V. Each round fires
/// the complement of the current set on a scratch copy of the original d and
/// absorbs the vertices driven negative, until nothing new appears.
/// Requires V non-empty (Error: empty_vertex_set) and d effective away from
/// V (Error: not_effective_away_from, naming the offending vertices).
DharResult dhar_decomposition(const Graph& g, const Divisor& d,
                              const VertexSet& v_start);

/// d is V-reduced when it is effective away from V and firing any non-empty
/// set disjoint from V drives the divisor negative somewhere inside that
/// set; equivalently w_dhar is empty. Returns false instead of raising when
/// d is not effective away from V.
bool is_V_reduced(const Graph& g, const Divisor& d, const VertexSet& v_set);

/// Entry k is the sum of d over vertices at distance exactly k from the set.
/// Strictly increases lexicographically along Dhar firings with a fixed set,
/// which is what bounds the reduction loops.
std::vector<Int> distance_layer_sums(const Graph& g, const Divisor& d,
                                     const VertexSet& v_set);

/// Lexicographic comparison of equal-length layer-sum vectors.
bool lex_less(const std::vector<Int>& a, const std::vector<Int>& b);

}  // namespace chipfire
