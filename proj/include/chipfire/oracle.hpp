#pragma once

#include <cstdint>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/rational.hpp"
#include "chipfire/vertex_set.hpp"

// Deliberately naive reference implementations. They recompute everything
// from the definitions (subset enumeration, one Laplacian solve per
// candidate) so the streamlined library paths have something independent to
// agree with.
namespace chipfire::oracle {

struct SearchBudget {
  /// Max script entry after min-0 normalization.
  std::int64_t script_bound = 1;
  /// Cap on the enumeration space; exceeding it throws budget_exhausted.
  std::uint64_t max_scripts = 200'000'000;
};

/// Literal definition: effective away from the set, and firing any non-empty
/// subset of the complement drives some fired vertex negative.
bool brute_is_V_reduced(const Graph& g, const Divisor& d,
                        const VertexSet& v_set);

struct BruteEffective {
  bool found = false;
  /// input + divergence(script), effective; meaningful when found.
  Divisor representative;
  std::vector<Int> script;
};

/// First effective divisor reachable by a min-0 script within the budget,
/// by index order. Absence only means absence within the budget.
BruteEffective brute_effective_class(const Graph& g, const Divisor& d,
                                     const SearchBudget& budget, int jobs = 1);

struct BruteMinQ {
  Rat total = Rat(0);
  Divisor minimizer;
  std::vector<Int> script;
};

/// Minimum potential mass toward the target over all d + divergence(f)
/// effective away from the set, f a min-0 script within the budget; ties go
/// to the smallest script index. Requires deg target = deg d and d effective
/// away from the set (so the zero script always qualifies).
BruteMinQ brute_min_q_total(const Graph& g, const RatDivisor& target,
                            const Divisor& d, const VertexSet& v_set,
                            const SearchBudget& budget, int jobs = 1);

/// Classical fire-spreading computation of the single-vertex Dhar set: the
/// fire starts at v, an unburnt vertex burns as soon as its count of edges
/// to burnt vertices exceeds its chip count, and the unburnt remainder is
/// returned. Requires d effective away from {v}.
VertexSet burning_set(const Graph& g, const Divisor& d, int v);

/// On the doubled three-vertex path with chips (1,3,2) on it: sweeps every
/// integer target (a, 0, 6-a), a in [-10, 16], and checks that a strictly
/// better class member (script bound 4, effective away from the path ends)
/// exists each time, i.e. no integer target makes (1,3,2) the minimizer.
/// Throws Error(wrong_graph) unless the graph has that doubled-path shape.
bool doubled_path_integer_e_sweep(const Graph& g, int jobs = 1);

}  // namespace chipfire::oracle
