#include "chipfire/uniform.hpp"

#include "chipfire/dhar.hpp"
#include "chipfire/error.hpp"

namespace chipfire {

bool is_uniform(const Graph& g, const Divisor& d) {
  auto canonical = canonical_divisor(g);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (d.values[v] < 0 || d.values[v] > canonical.values[v]) return false;
  return true;
}

bool is_semistable(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.weight(v) == 0 && g.valence(v) == 1) return false;
  return true;
}

bool has_uniform_guarantee(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.weight(v) == 0 && g.loop_count(v) == 0) return false;
  return true;
}

SpecialnessReport specialness(const Graph& g, const Divisor& d) {
  SpecialnessReport report;
  report.divisor_certificate = find_effective(g, d);
  report.residual_certificate = find_effective(g, residual(g, d));
  report.is_special =
      report.divisor_certificate.verdict == Verdict::effective &&
      report.residual_certificate.verdict == Verdict::effective;
  return report;
}

Int quasi_uniform_cap(const Graph& g, int v) {
  Int loopless = g.valence_without_loops(v) - 1;
  Int canonical = 2 * Int(g.weight(v)) - 2 + g.valence(v);
  return loopless > canonical ? loopless : canonical;
}

namespace {

void check_caps(const Graph& g, const Divisor& d, const char* stage) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (d.values[v] > quasi_uniform_cap(g, v))
      fail(Errc::internal_error,
           std::string(stage) + " broke the cap at '" + g.id_of(v) + "'");
}

}  // namespace

Divisor quasi_uniform_representative(const Graph& g, const Divisor& d) {
  auto report = specialness(g, d);
  if (!report.is_special)
    fail(Errc::not_special_class,
         "the class or its residual class has no effective representative");

  // Canonical minus effective stays under the canonical values, hence under
  // the caps. Each Dhar firing of the negative support preserves the caps;
  // the loop ends at an effective divisor because the class is effective.
  auto canonical = canonical_divisor(g);
  Divisor e = report.residual_certificate.representative;
  for (int v = 0; v < g.vertex_count(); ++v)
    e.values[v] = canonical.values[v] - e.values[v];
  check_caps(g, e, "the starting representative");

  while (!is_effective(e)) {
    auto negatives = negative_support(e);
    auto decomposition = dhar_decomposition(g, e, negatives);
    if (decomposition.w_dhar.empty())
      fail(Errc::internal_error,
           "empty Dhar set while an effective representative exists");
    e = fire_set(g, e, decomposition.w_dhar);
    check_caps(g, e, "a Dhar firing");
  }
  return e;
}

Divisor near_uniform_representative(const Graph& g, const Divisor& d) {
  return residual(g, quasi_uniform_representative(g, residual(g, d)));
}

}  // namespace chipfire
