#include "chipfire/dhar.hpp"

#include <algorithm>

#include "chipfire/error.hpp"

namespace chipfire {

namespace {

void require_effective_away_from(const Graph& g, const Divisor& d,
                                 const VertexSet& v_set) {
  std::string offenders;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (d.values[v] < 0 && !v_set.contains(v)) {
      if (!offenders.empty()) offenders += ", ";
      offenders += g.id_of(v);
    }
  }
  if (!offenders.empty())
    fail(Errc::not_effective_away_from,
         "divisor is negative outside the set at: " + offenders);
}

}  // namespace

DharResult dhar_decomposition(const Graph& g, const Divisor& d,
                              const VertexSet& v_start) {
  if (v_start.empty())
    fail(Errc::empty_vertex_set, "decomposition needs a non-empty start set");
  require_effective_away_from(g, d, v_start);

  DharResult result;
  VertexSet current = v_start;
  result.chain.push_back(current);
  for (;;) {
    // Every round inspects a firing of the current complement from the
    // original d; the input divisor itself never moves.
    VertexSet w = current.complement();
    Divisor fired = fire_set(g, d, w);
    VertexSet next = current;
    for (int v : w.members())
      if (fired.values[v] < 0) next.add(v);
    if (next == current) break;
    current = next;
    result.chain.push_back(current);
  }
  result.w_dhar = current.complement();
  return result;
}

bool is_V_reduced(const Graph& g, const Divisor& d, const VertexSet& v_set) {
  if (v_set.empty())
    fail(Errc::empty_vertex_set, "reducedness needs a non-empty set");
  if (!is_effective_away_from(d, v_set)) return false;
  return dhar_decomposition(g, d, v_set).w_dhar.empty();
}

std::vector<Int> distance_layer_sums(const Graph& g, const Divisor& d,
                                     const VertexSet& v_set) {
  auto dist = g.distance_to_set(v_set);
  int top = *std::max_element(dist.begin(), dist.end());
  std::vector<Int> sums(top + 1, Int(0));
  for (int v = 0; v < g.vertex_count(); ++v) sums[dist[v]] += d.values[v];
  return sums;
}

bool lex_less(const std::vector<Int>& a, const std::vector<Int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace chipfire
