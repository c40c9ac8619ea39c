#include "chipfire/reduction.hpp"

#include "chipfire/error.hpp"

namespace chipfire {

ReducedResult make_V_reduced_from(const Graph& g, const Divisor& d,
                                  const VertexSet& v_set) {
  ReducedResult out;
  out.divisor = d;
  std::vector<Int> script(g.vertex_count(), 0);
  for (;;) {
    auto decomposition = dhar_decomposition(g, out.divisor, v_set);
    if (decomposition.w_dhar.empty()) break;
    out.divisor = fire_set(g, out.divisor, decomposition.w_dhar);
    for (int v : decomposition.w_dhar.members()) script[v] += 1;
  }
  out.script = normalize_min0(std::move(script));
  return out;
}

ReducedResult v_reduced(const Graph& g, const Divisor& d, int v) {
  if (v < 0 || v >= g.vertex_count())
    fail(Errc::unknown_vertex, "vertex index out of range");
  int n = g.vertex_count();
  auto dist = g.distances_from(v);

  Divisor current = d;
  std::vector<Int> script(n, 0);
  for (;;) {
    int worst = -1;
    for (int u = 0; u < n; ++u) {
      if (u == v || current.values[u] >= 0) continue;
      if (worst < 0 || dist[u] > dist[worst]) worst = u;
    }
    if (worst < 0) break;
    VertexSet ball(n);
    for (int u = 0; u < n; ++u)
      if (dist[u] < dist[worst]) ball.add(u);
    current = fire_set(g, current, ball);
    for (int u : ball.members()) script[u] += 1;
  }

  VertexSet just_v(n);
  just_v.add(v);
  auto finished = make_V_reduced_from(g, current, just_v);
  for (int u = 0; u < n; ++u) script[u] += finished.script[u];

  ReducedResult out;
  out.divisor = finished.divisor;
  out.script = normalize_min0(std::move(script));
  return out;
}

EffectivenessCertificate find_effective(const Graph& g, const Divisor& d) {
  int n = g.vertex_count();
  EffectivenessCertificate cert;
  cert.representative = d;
  cert.script.assign(n, Int(0));
  if (is_effective(d)) {
    cert.verdict = Verdict::effective;
    return cert;
  }

  Divisor current = d;
  std::vector<Int> script(n, 0);
  for (;;) {
    VertexSet negatives = negative_support(current);
    if (negatives == g.full_set()) break;
    auto decomposition = dhar_decomposition(g, current, negatives);
    if (decomposition.w_dhar.empty()) break;
    current = fire_set(g, current, decomposition.w_dhar);
    for (int v : decomposition.w_dhar.members()) script[v] += 1;
    cert.trace.push_back({decomposition.w_dhar, current});
    if (is_effective(current)) {
      cert.verdict = Verdict::effective;
      break;
    }
  }
  cert.representative = current;
  cert.script = normalize_min0(std::move(script));
  return cert;
}

bool trace_makes_lex_progress(const Graph& g, const Divisor& start,
                              const std::vector<TraceStep>& trace) {
  Divisor previous = start;
  for (const auto& step : trace) {
    VertexSet negatives = negative_support(previous);
    if (negatives.empty()) return false;
    auto before = distance_layer_sums(g, previous, negatives);
    auto after = distance_layer_sums(g, step.result, negatives);
    if (!lex_less(before, after)) return false;
    previous = step.result;
  }
  return true;
}

}  // namespace chipfire
