#pragma once

#include <vector>

#include "chipfire/graph.hpp"
#include "chipfire/rational.hpp"
#include "chipfire/vertex_set.hpp"

namespace chipfire {

/// Integer chip assignment, indexed like the graph's vertices.
struct Divisor {
  std::vector<Int> values;

  friend bool operator==(const Divisor& a, const Divisor& b) {
    return a.values == b.values;
  }
};

/// Chip assignment with exact rational values; target divisors of the
/// potential machinery live here.
struct RatDivisor {
  std::vector<Rat> values;

  friend bool operator==(const RatDivisor& a, const RatDivisor& b) {
    return a.values == b.values;
  }
};

Int degree(const Divisor& d);
Rat degree(const RatDivisor& d);

RatDivisor to_rational(const Divisor& d);

/// Vertices carrying a nonzero value.
VertexSet support(const RatDivisor& d);

/// Value 2 * weight(v) - 2 + valence(v) at every vertex.
Divisor canonical_divisor(const Graph& g);

/// Canonical divisor minus d.
Divisor residual(const Graph& g, const Divisor& d);

bool is_effective(const Divisor& d);

/// Every vertex outside the set carries a non-negative value.
bool is_effective_away_from(const Divisor& d, const VertexSet& s);

/// Vertices where the divisor is negative.
VertexSet negative_support(const Divisor& d);

/// Divergence of an integer-valued function: at v, the sum over edges vu of
/// f(u) - f(v), counted with multiplicity. Loops contribute nothing. The
/// result always has degree zero.
Divisor divergence(const Graph& g, const std::vector<Int>& f);
std::vector<Rat> divergence(const Graph& g, const std::vector<Rat>& f);

/// d plus the divergence of f. Divisors reachable this way are exactly the
/// divisors linearly equivalent to d.
Divisor apply_script(const Graph& g, const Divisor& d, const std::vector<Int>& f);

/// Fires every vertex of w once: each edge from w to its complement moves one
/// chip out of w.
Divisor fire_set(const Graph& g, const Divisor& d, const VertexSet& w);

/// 1 on members, 0 elsewhere.
std::vector<Int> indicator(const VertexSet& w);

/// Shifts by a constant so the minimum value is zero. Divergence is
/// unchanged by the shift.
std::vector<Int> normalize_min0(std::vector<Int> f);
std::vector<Rat> normalize_min0(std::vector<Rat> f);

bool is_min0(const std::vector<Int>& f);
bool is_min0(const std::vector<Rat>& f);

/// Threshold sets F_1 over ... over F_k of a min-0 function, k = max f,
/// F_i = {v : f(v) >= i}. Firing them in succession realizes d + divergence(f)
/// one chip layer at a time. Throws Error(not_normalized) unless min f = 0.
std::vector<VertexSet> level_sets(const std::vector<Int>& f);

struct EquivalenceWitness {
  bool equivalent = false;
  /// Min-0 normalized integer function with from + divergence = to. Empty
  /// when not equivalent.
  std::vector<Int> script;
};

/// Decides linear equivalence exactly and produces the witness script. Two
/// divisors are equivalent iff one rational solution of the pinned Laplacian
/// system is integral.
EquivalenceWitness linearly_equivalent(const Graph& g, const Divisor& from,
                                       const Divisor& to);

}  // namespace chipfire
