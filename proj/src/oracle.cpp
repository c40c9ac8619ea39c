#include "chipfire/oracle.hpp"

#include <cstdlib>

#include "chipfire/error.hpp"
#include "chipfire/linalg.hpp"
#include "chipfire/scriptspace.hpp"

namespace chipfire::oracle {

namespace {

bool has_zero_entry(const std::vector<std::int64_t>& f) {
  for (auto v : f)
    if (v == 0) return true;
  return false;
}

std::vector<Int> script_to_ints(const std::vector<std::int64_t>& f) {
  std::vector<Int> out;
  out.reserve(f.size());
  for (auto v : f) out.emplace_back(v);
  return out;
}

// Machine-width copy of the divisor for the hot enumeration loops; the tiny
// instances the oracle is meant for always fit.
bool fits_machine(const Graph& g, const Divisor& d, std::int64_t bound,
                  std::vector<std::int64_t>& out) {
  constexpr std::int64_t limit = 1'000'000'000'000;
  int top_valence = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    top_valence = std::max(top_valence, g.valence(v));
  if (bound > limit / (top_valence + 1)) return false;
  out.clear();
  for (const auto& value : d.values) {
    if (value > limit || value < -limit) return false;
    out.push_back(static_cast<std::int64_t>(value));
  }
  return true;
}

}  // namespace

bool brute_is_V_reduced(const Graph& g, const Divisor& d,
                        const VertexSet& v_set) {
  if (v_set.empty())
    fail(Errc::empty_vertex_set, "reducedness needs a non-empty set");
  if (!is_effective_away_from(d, v_set)) return false;

  auto outside = v_set.complement().members();
  int k = static_cast<int>(outside.size());
  if (k > 25) fail(Errc::budget_exhausted, "too many subsets to enumerate");
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << k); ++mask) {
    VertexSet w(g.vertex_count());
    for (int i = 0; i < k; ++i)
      if (mask & (std::uint64_t(1) << i)) w.add(outside[i]);
    Divisor fired = fire_set(g, d, w);
    bool went_negative = false;
    for (int v : w.members())
      if (fired.values[v] < 0) {
        went_negative = true;
        break;
      }
    if (!went_negative) return false;
  }
  return true;
}

BruteEffective brute_effective_class(const Graph& g, const Divisor& d,
                                     const SearchBudget& budget, int jobs) {
  int n = g.vertex_count();
  ScriptSpace space(n, budget.script_bound, budget.max_scripts);
  const auto& edges = g.edges();

  BruteEffective result;
  std::uint64_t hit;
  std::vector<std::int64_t> base;
  if (fits_machine(g, d, budget.script_bound, base)) {
    auto pred = [&](const std::vector<std::int64_t>& f) {
      if (!has_zero_entry(f)) return false;
      std::vector<std::int64_t> values = base;
      for (const auto& [u, v] : edges) {
        if (u == v) continue;
        std::int64_t delta = f[v] - f[u];
        values[u] += delta;
        values[v] -= delta;
      }
      for (auto value : values)
        if (value < 0) return false;
      return true;
    };
    hit = find_first(space, pred, jobs);
  } else {
    auto pred = [&](const std::vector<std::int64_t>& f) {
      if (!has_zero_entry(f)) return false;
      return is_effective(apply_script(g, d, script_to_ints(f)));
    };
    hit = find_first(space, pred, jobs);
  }

  if (hit == space.size()) return result;
  std::vector<std::int64_t> f;
  space.decode(hit, f);
  result.found = true;
  result.script = script_to_ints(f);
  result.representative = apply_script(g, d, result.script);
  return result;
}

BruteMinQ brute_min_q_total(const Graph& g, const RatDivisor& target,
                            const Divisor& d, const VertexSet& v_set,
                            const SearchBudget& budget, int jobs) {
  int n = g.vertex_count();
  if (static_cast<int>(target.values.size()) != n)
    fail(Errc::internal_error, "target does not match the graph");
  if (degree(target) != Rat(degree(d)))
    fail(Errc::degree_mismatch, "target and divisor degrees differ");
  if (!is_effective_away_from(d, v_set))
    fail(Errc::not_effective_away_from,
         "divisor is negative outside the set");

  ScriptSpace space(n, budget.script_bound, budget.max_scripts);
  // One full Laplacian solve per candidate, on purpose.
  auto eval = [&](const std::vector<std::int64_t>& f, Rat& key) {
    if (!has_zero_entry(f)) return false;
    Divisor moved = apply_script(g, d, script_to_ints(f));
    if (!is_effective_away_from(moved, v_set)) return false;
    std::vector<Rat> rhs(n);
    for (int v = 0; v < n; ++v)
      rhs[v] = Rat(moved.values[v]) - target.values[v];
    auto q = normalize_min0(solve_pinned_laplacian(g, rhs));
    key = Rat(0);
    for (const auto& value : q) key += value;
    return true;
  };

  Rat best_total;
  std::uint64_t best = min_reduce(space, eval, best_total, jobs);
  if (best == space.size())
    fail(Errc::internal_error, "no candidate qualified");

  BruteMinQ result;
  std::vector<std::int64_t> f;
  space.decode(best, f);
  result.total = best_total;
  result.script = script_to_ints(f);
  result.minimizer = apply_script(g, d, result.script);
  return result;
}

VertexSet burning_set(const Graph& g, const Divisor& d, int v) {
  VertexSet start(g.vertex_count());
  start.add(v);
  if (!is_effective_away_from(d, start))
    fail(Errc::not_effective_away_from,
         "divisor is negative away from the fire's origin");

  std::vector<bool> burnt(g.vertex_count(), false);
  burnt[v] = true;
  bool spread = true;
  while (spread) {
    spread = false;
    for (int u = 0; u < g.vertex_count(); ++u) {
      if (burnt[u]) continue;
      Int heat = 0;
      for (int w = 0; w < g.vertex_count(); ++w)
        if (w != u && burnt[w]) heat += g.edge_multiplicity(u, w);
      if (heat > d.values[u]) {
        burnt[u] = true;
        spread = true;
      }
    }
  }
  VertexSet survivors(g.vertex_count());
  for (int u = 0; u < g.vertex_count(); ++u)
    if (!burnt[u]) survivors.add(u);
  return survivors;
}

bool doubled_path_integer_e_sweep(const Graph& g, int jobs) {
  bool shape = g.vertex_count() == 3 && g.edge_count() == 4 &&
               g.edge_multiplicity(0, 1) == 2 && g.edge_multiplicity(1, 2) == 2 &&
               g.edge_multiplicity(0, 2) == 0 && g.loop_count(0) == 0 &&
               g.loop_count(1) == 0 && g.loop_count(2) == 0 &&
               g.weight(0) == 0 && g.weight(1) == 0 && g.weight(2) == 0;
  if (!shape)
    fail(Errc::wrong_graph, "the sweep is defined on the doubled path only");

  Divisor d;
  d.values = {Int(1), Int(3), Int(2)};
  VertexSet ends(3);
  ends.add(0);
  ends.add(2);
  SearchBudget budget;
  budget.script_bound = 4;

  for (int a = -10; a <= 16; ++a) {
    RatDivisor target;
    target.values = {Rat(a), Rat(0), Rat(6 - a)};

    std::vector<Rat> rhs(3);
    for (int v = 0; v < 3; ++v)
      rhs[v] = Rat(d.values[v]) - target.values[v];
    auto q = normalize_min0(solve_pinned_laplacian(g, rhs));
    Rat at_d = q[0] + q[1] + q[2];

    auto best = brute_min_q_total(g, target, d, ends, budget, jobs);
    if (!(best.total < at_d)) return false;
  }
  return true;
}

}  // namespace chipfire::oracle
