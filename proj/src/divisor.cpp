#include "chipfire/divisor.hpp"

#include <algorithm>

#include "chipfire/error.hpp"
#include "chipfire/linalg.hpp"

namespace chipfire {

namespace {

void check_size(const Graph& g, const Divisor& d) {
  if (static_cast<int>(d.values.size()) != g.vertex_count())
    fail(Errc::internal_error, "divisor does not match the graph");
}

}  // namespace

Int degree(const Divisor& d) {
  Int total = 0;
  for (const auto& v : d.values) total += v;
  return total;
}

Rat degree(const RatDivisor& d) {
  Rat total = 0;
  for (const auto& v : d.values) total += v;
  return total;
}

RatDivisor to_rational(const Divisor& d) {
  RatDivisor out;
  for (const auto& v : d.values) out.values.emplace_back(v);
  return out;
}

VertexSet support(const RatDivisor& d) {
  VertexSet s(static_cast<int>(d.values.size()));
  for (int v = 0; v < s.universe(); ++v)
    if (d.values[v] != 0) s.add(v);
  return s;
}

Divisor canonical_divisor(const Graph& g) {
  Divisor k;
  for (int v = 0; v < g.vertex_count(); ++v)
    k.values.push_back(g.canonical_at(v));
  return k;
}

Divisor residual(const Graph& g, const Divisor& d) {
  check_size(g, d);
  Divisor r = canonical_divisor(g);
  for (int v = 0; v < g.vertex_count(); ++v) r.values[v] -= d.values[v];
  return r;
}

bool is_effective(const Divisor& d) {
  for (const auto& v : d.values)
    if (v < 0) return false;
  return true;
}

bool is_effective_away_from(const Divisor& d, const VertexSet& s) {
  for (int v = 0; v < static_cast<int>(d.values.size()); ++v)
    if (d.values[v] < 0 && !s.contains(v)) return false;
  return true;
}

VertexSet negative_support(const Divisor& d) {
  VertexSet s(static_cast<int>(d.values.size()));
  for (int v = 0; v < s.universe(); ++v)
    if (d.values[v] < 0) s.add(v);
  return s;
}

Divisor divergence(const Graph& g, const std::vector<Int>& f) {
  if (static_cast<int>(f.size()) != g.vertex_count())
    fail(Errc::internal_error, "function does not match the graph");
  Divisor out;
  out.values.assign(g.vertex_count(), 0);
  for (const auto& [u, v] : g.edges()) {
    if (u == v) continue;
    out.values[u] += f[v] - f[u];
    out.values[v] += f[u] - f[v];
  }
  return out;
}

std::vector<Rat> divergence(const Graph& g, const std::vector<Rat>& f) {
  if (static_cast<int>(f.size()) != g.vertex_count())
    fail(Errc::internal_error, "function does not match the graph");
  std::vector<Rat> out(g.vertex_count(), Rat(0));
  for (const auto& [u, v] : g.edges()) {
    if (u == v) continue;
    out[u] += f[v] - f[u];
    out[v] += f[u] - f[v];
  }
  return out;
}

Divisor apply_script(const Graph& g, const Divisor& d,
                     const std::vector<Int>& f) {
  check_size(g, d);
  Divisor out = divergence(g, f);
  for (int v = 0; v < g.vertex_count(); ++v) out.values[v] += d.values[v];
  return out;
}

Divisor fire_set(const Graph& g, const Divisor& d, const VertexSet& w) {
  check_size(g, d);
  return apply_script(g, d, indicator(w));
}

std::vector<Int> indicator(const VertexSet& w) {
  std::vector<Int> f(w.universe(), 0);
  for (int v : w.members()) f[v] = 1;
  return f;
}

std::vector<Int> normalize_min0(std::vector<Int> f) {
  if (f.empty()) return f;
  Int low = *std::min_element(f.begin(), f.end());
  for (auto& v : f) v -= low;
  return f;
}

std::vector<Rat> normalize_min0(std::vector<Rat> f) {
  if (f.empty()) return f;
  Rat low = *std::min_element(f.begin(), f.end());
  for (auto& v : f) v -= low;
  return f;
}

bool is_min0(const std::vector<Int>& f) {
  if (f.empty()) return true;
  return *std::min_element(f.begin(), f.end()) == 0;
}

bool is_min0(const std::vector<Rat>& f) {
  if (f.empty()) return true;
  return *std::min_element(f.begin(), f.end()) == 0;
}

std::vector<VertexSet> level_sets(const std::vector<Int>& f) {
  if (!is_min0(f))
    fail(Errc::not_normalized, "level sets need a min-0 function");
  int n = static_cast<int>(f.size());
  Int top = 0;
  for (const auto& v : f) top = std::max(top, v);
  std::vector<VertexSet> sets;
  for (Int i = 1; i <= top; ++i) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
      if (f[v] >= i) s.add(v);
    sets.push_back(s);
  }
  return sets;
}

EquivalenceWitness linearly_equivalent(const Graph& g, const Divisor& from,
                                       const Divisor& to) {
  check_size(g, from);
  check_size(g, to);
  EquivalenceWitness result;
  if (degree(from) != degree(to)) return result;

  // laplacian * f = from - to makes from + divergence(f) = to. The rational
  // solution is unique up to constants, so integrality of the pinned
  // solution decides equivalence over the integers.
  std::vector<Rat> rhs(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    rhs[v] = Rat(from.values[v] - to.values[v]);
  auto f = solve_pinned_laplacian(g, rhs);
  for (const auto& value : f)
    if (denominator(value) != 1) return result;

  std::vector<Int> script;
  for (const auto& value : f) script.push_back(numerator(value));
  result.equivalent = true;
  result.script = normalize_min0(std::move(script));
  return result;
}

}  // namespace chipfire
