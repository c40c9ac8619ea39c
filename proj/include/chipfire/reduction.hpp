#pragma once

#include <vector>

#include "chipfire/dhar.hpp"
#include "chipfire/divisor.hpp"
#include "chipfire/graph.hpp"

namespace chipfire {

struct ReducedResult {
  Divisor divisor;
  /// Min-0 script with divisor = input + divergence(script).
  std::vector<Int> script;
};

/// Fires the Dhar set until it comes back empty. The result is V-reduced and
/// equivalent to d; each firing strictly raises the distance-layer sums in
/// lexicographic order, which bounds the loop. Requires V non-empty and d
/// effective away from V.
ReducedResult make_V_reduced_from(const Graph& g, const Divisor& d,
                                  const VertexSet& v_set);

/// The unique {v}-reduced representative of the class of d. Phase 1 clears
/// debt outside v by repeatedly picking the farthest in-debt vertex (ties to
/// the smaller index) and firing the ball around v of radius one less than
/// its distance; vertices beyond it are untouched and it strictly gains, so
/// the per-distance debt profile drops lexicographically from the far end.
/// Phase 2 is the Dhar loop for {v}.
ReducedResult v_reduced(const Graph& g, const Divisor& d, int v);

enum class Verdict { effective, not_effective };

struct TraceStep {
  VertexSet fired;
  Divisor result;
};

/// Decision with certificate: either an effective class member, or a witness
/// that none exists. The witness is reduced with respect to its own negative
/// support, which is what proves non-effectiveness of the whole class.
struct EffectivenessCertificate {
  Verdict verdict = Verdict::not_effective;
  /// Equals input + divergence(script). Effective on the effective verdict;
  /// otherwise reduced w.r.t. its non-empty negative support.
  Divisor representative;
  std::vector<Int> script;
  /// One entry per Dhar firing performed.
  std::vector<TraceStep> trace;
};

/// Decides whether the class of d contains an effective divisor. Fires the
/// Dhar set of the current negative support until the divisor is effective
/// or the Dhar set is empty. When the negative support is everything, the
/// divisor is trivially reduced and the answer is immediate.
EffectivenessCertificate find_effective(const Graph& g, const Divisor& d);

/// Replays a find_effective trace and checks that every firing strictly
/// raised the distance-layer sums measured from the fired divisor's negative
/// support. Vacuously true on an empty trace.
bool trace_makes_lex_progress(const Graph& g, const Divisor& start,
                              const std::vector<TraceStep>& trace);

}  // namespace chipfire
