#include "chipfire/potential.hpp"

#include <algorithm>

#include "chipfire/error.hpp"
#include "chipfire/linalg.hpp"
#include "chipfire/scriptspace.hpp"

namespace chipfire {

namespace {

QResult pack_q(std::vector<Rat> q) {
  QResult out;
  out.q = normalize_min0(std::move(q));
  out.zero_set = VertexSet(static_cast<int>(out.q.size()));
  for (int v = 0; v < out.zero_set.universe(); ++v) {
    if (out.q[v] == 0) out.zero_set.add(v);
    out.total += out.q[v];
  }
  return out;
}

}  // namespace

QResult q_function(const Graph& g, const RatDivisor& target,
                   const RatDivisor& base) {
  int n = g.vertex_count();
  if (static_cast<int>(target.values.size()) != n ||
      static_cast<int>(base.values.size()) != n)
    fail(Errc::internal_error, "divisor does not match the graph");
  if (degree(target) != degree(base))
    fail(Errc::degree_mismatch, "target and base degrees differ");
  std::vector<Rat> rhs(n);
  for (int v = 0; v < n; ++v) rhs[v] = base.values[v] - target.values[v];
  return pack_q(solve_pinned_laplacian(g, rhs));
}

QResult q_function(const Graph& g, const RatDivisor& target,
                   const Divisor& base) {
  return q_function(g, target, to_rational(base));
}

Rat q_total_of_class_member(const Graph& g, const RatDivisor& target,
                            const Divisor& d) {
  return q_function(g, target, d).total;
}

std::vector<Rat> interpolating_function(const Graph& g, int v,
                                        const VertexSet& v_set, const Rat& k) {
  int n = g.vertex_count();
  if (v_set.empty())
    fail(Errc::empty_vertex_set, "interpolation needs a non-empty set");
  if (v_set.contains(v))
    fail(Errc::vertex_in_set, "'" + g.id_of(v) + "' is in the set");

  std::vector<Rat> f(n, Rat(0));
  for (int u : v_set.members()) f[u] = k;

  // Unknowns: vertices outside the set and different from v, constrained to
  // zero divergence. The reduced Laplacian block is nonsingular because every
  // component of the remainder touches the pinned vertices.
  std::vector<int> free_vertices;
  for (int u = 0; u < n; ++u)
    if (u != v && !v_set.contains(u)) free_vertices.push_back(u);
  int m = static_cast<int>(free_vertices.size());
  if (m == 0) return f;

  std::vector<std::vector<Rat>> matrix(m, std::vector<Rat>(m, Rat(0)));
  std::vector<Rat> rhs(m, Rat(0));
  for (int row = 0; row < m; ++row) {
    int u = free_vertices[row];
    matrix[row][row] = Rat(g.valence_without_loops(u));
    for (int col = 0; col < m; ++col) {
      int w = free_vertices[col];
      if (w != u) matrix[row][col] -= Rat(g.edge_multiplicity(u, w));
    }
    for (int w : v_set.members()) rhs[row] += Rat(g.edge_multiplicity(u, w)) * k;
    // Edges toward v contribute value 0.
  }
  auto solved = solve_linear_system(std::move(matrix), std::move(rhs));
  for (int row = 0; row < m; ++row) f[free_vertices[row]] = solved[row];
  return f;
}

RatDivisor construct_e_witness(const Graph& g, const Divisor& d,
                               const VertexSet& v_set) {
  int n = g.vertex_count();
  if (v_set.empty())
    fail(Errc::empty_vertex_set, "witness construction needs a non-empty set");
  if (!is_effective_away_from(d, v_set))
    fail(Errc::not_effective_away_from,
         "divisor is negative outside the set");

  // All of the degree on the set's first vertex, then tilt until the
  // potential vanishes on the whole set. Each round puts at least one more
  // set vertex into the zero set.
  RatDivisor target;
  target.values.assign(n, Rat(0));
  target.values[v_set.members().front()] = Rat(degree(d));

  for (int round = 0; round <= v_set.count(); ++round) {
    QResult q = q_function(g, target, d);
    int pending = -1;
    for (int u : v_set.members())
      if (!q.zero_set.contains(u)) {
        pending = u;
        break;
      }
    if (pending < 0) {
      for (int u = 0; u < n; ++u)
        if (target.values[u] != 0 && !v_set.contains(u))
          fail(Errc::internal_error, "witness support left the set");
      return target;
    }

    auto tilt = interpolating_function(g, pending, q.zero_set, Rat(1));
    // Scaling the tilt by k lowers q(u) by k * (1 - tilt(u)); the first zero
    // appears at the smallest ratio.
    Rat scale;
    bool have_scale = false;
    for (int u = 0; u < n; ++u) {
      if (tilt[u] >= 1) continue;
      Rat candidate = q.q[u] / (Rat(1) - tilt[u]);
      if (!have_scale || candidate < scale) {
        scale = candidate;
        have_scale = true;
      }
    }
    if (!have_scale)
      fail(Errc::internal_error, "no finite tilt scale");
    for (auto& value : tilt) value *= scale;
    auto shift = divergence(g, tilt);
    for (int u = 0; u < n; ++u) target.values[u] += shift[u];
  }
  fail(Errc::internal_error, "witness construction failed to converge");
}

namespace {

constexpr std::uint64_t enumeration_cap = 1'000'000'000;

}  // namespace

bool is_E_reduced_bounded(const Graph& g, const RatDivisor& target,
                          const Divisor& d, const VertexSet& v_set,
                          std::int64_t bound, int jobs) {
  int n = g.vertex_count();
  if (static_cast<int>(target.values.size()) != n)
    fail(Errc::internal_error, "target does not match the graph");
  if (!support(target).is_subset_of(v_set))
    fail(Errc::support_violation, "target is supported outside the set");
  if (degree(target) != Rat(degree(d)))
    fail(Errc::degree_mismatch, "target and divisor degrees differ");
  if (!is_effective_away_from(d, v_set))
    fail(Errc::not_effective_away_from,
         "divisor is negative outside the set");
  if (bound < 0) fail(Errc::internal_error, "negative script bound");

  QResult at_d = q_function(g, target, d);

  // Moving along a script transports the potential: the potential of
  // d + divergence(f) is the min-0 shift of q - f. Scaling by the common
  // denominator keeps the whole scan in integers.
  Int common = 1;
  for (const auto& value : at_d.q) common = lcm(common, denominator(value));
  std::vector<Int> scaled(n);
  for (int v = 0; v < n; ++v)
    scaled[v] = numerator(at_d.q[v]) * (common / denominator(at_d.q[v]));
  Int total_at_d = 0;
  for (const auto& value : scaled) total_at_d += value;

  ScriptSpace space(n, bound, enumeration_cap);
  const auto& edges = g.edges();

  auto improves = [&](const std::vector<std::int64_t>& f) {
    bool has_zero = false;
    for (auto value : f)
      if (value == 0) {
        has_zero = true;
        break;
      }
    if (!has_zero) return false;

    Divisor moved = d;
    for (const auto& [u, w] : edges) {
      if (u == w) continue;
      std::int64_t delta = f[w] - f[u];
      moved.values[u] += delta;
      moved.values[w] -= delta;
    }
    if (!is_effective_away_from(moved, v_set)) return false;

    Int sum = 0;
    Int low = scaled[0] - common * f[0];
    for (int v = 0; v < n; ++v) {
      Int c = scaled[v] - common * f[v];
      sum += c;
      if (c < low) low = c;
    }
    return sum - low * n < total_at_d;
  };

  return find_first(space, improves, jobs) == space.size();
}

std::int64_t default_script_bound(const Graph& g, const Divisor& d) {
  Int top = 0;
  for (const auto& value : d.values) {
    Int magnitude = abs(value);
    if (magnitude > top) top = magnitude;
  }
  Int bound = Int(g.vertex_count()) * (1 + top);
  if (bound > 1'000'000'000'000'000LL)
    fail(Errc::budget_exhausted, "default script bound is out of range");
  return static_cast<std::int64_t>(bound);
}

}  // namespace chipfire
