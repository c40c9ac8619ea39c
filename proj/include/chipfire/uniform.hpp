#pragma once

#include "chipfire/divisor.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/reduction.hpp"

namespace chipfire {

/// 0 <= d_v <= 2 * weight(v) - 2 + valence(v) at every vertex; equivalently
/// d and its residual are both effective.
bool is_uniform(const Graph& g, const Divisor& d);

/// No weight-0 vertex of valence 1.
bool is_semistable(const Graph& g);

/// Every weight-0 vertex has an adjacent loop. Classes that are special then
/// always contain a uniform representative.
bool has_uniform_guarantee(const Graph& g);

/// A class is special when it and its residual class are both effective.
/// Both effectiveness decisions are kept with their certificates.
struct SpecialnessReport {
  bool is_special = false;
  EffectivenessCertificate divisor_certificate;
  EffectivenessCertificate residual_certificate;
};

SpecialnessReport specialness(const Graph& g, const Divisor& d);

/// Upper bound max{valence_without_loops(v) - 1, 2 * weight(v) - 2 + val(v)}.
Int quasi_uniform_cap(const Graph& g, int v);

/// A representative of the class of d with 0 <= d'_v <= quasi_uniform_cap(v)
/// everywhere. Takes the canonical divisor minus an effective representative
/// of the residual class, then fires Dhar sets until effective; every firing
/// is re-checked against the cap and an internal error is raised on any
/// violation, so the returned bounds are runtime-verified. Requires a
/// special class (Error: not_special_class).
Divisor quasi_uniform_representative(const Graph& g, const Divisor& d);

/// A representative with -1 <= d'_v <= 2 * weight(v) - 2 + val(v), value -1
/// only possible at weight-0 vertices without a loop: the residual of the
/// quasi-uniform representative of the residual class. Requires a special
/// class (Error: not_special_class).
Divisor near_uniform_representative(const Graph& g, const Divisor& d);

}  // namespace chipfire
