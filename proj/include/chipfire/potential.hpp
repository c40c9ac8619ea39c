#pragma once

#include <cstdint>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/rational.hpp"
#include "chipfire/vertex_set.hpp"

namespace chipfire {

/// Potential of one divisor toward another: the unique min-0 function q
/// with target = base + divergence(q).
struct QResult {
  std::vector<Rat> q;
  /// Vertices where q vanishes; never empty because of the normalization.
  VertexSet zero_set;
  /// Sum of q over all vertices.
  Rat total = Rat(0);
};

/// Solves the Laplacian system for the potential exactly. Requires equal
/// degrees (Error: degree_mismatch).
QResult q_function(const Graph& g, const RatDivisor& target,
                   const RatDivisor& base);
QResult q_function(const Graph& g, const RatDivisor& target, const Divisor& base);

/// Total potential mass of d toward the target; the quantity minimized by a
/// target-reduced divisor.
Rat q_total_of_class_member(const Graph& g, const RatDivisor& target,
                            const Divisor& d);

/// The unique function with value k on every vertex of the set, value 0 at
/// v, and zero divergence everywhere else. Linear in k. Requires the set
/// non-empty (Error: empty_vertex_set) and v outside it (Error:
/// vertex_in_set).
std::vector<Rat> interpolating_function(const Graph& g, int v,
                                        const VertexSet& v_set, const Rat& k);

/// Builds a rational divisor supported on the set, of the same degree as d,
/// whose potential toward d vanishes on the entire set. Starts from the full
/// degree on the set's first vertex and repeatedly tilts by an interpolating
/// function, advancing in closed form to the first scale at which the zero
/// set grows. Requires the set non-empty and d effective away from it.
RatDivisor construct_e_witness(const Graph& g, const Divisor& d,
                               const VertexSet& v_set);

/// Bounded surrogate for target-reducedness: true when no class member
/// d + divergence(f), f a script with entries in [0, bound], is effective
/// away from the set with strictly smaller potential mass. One Laplacian
/// solve total; each candidate is scored by transporting the potential along
/// its script. Requires the target supported inside the set (Error:
/// support_violation), equal degrees, and d effective away from the set.
bool is_E_reduced_bounded(const Graph& g, const RatDivisor& target,
                          const Divisor& d, const VertexSet& v_set,
                          std::int64_t bound, int jobs = 1);

/// Default enumeration bound |V(G)| * (1 + max |d_v|).
std::int64_t default_script_bound(const Graph& g, const Divisor& d);

}  // namespace chipfire
