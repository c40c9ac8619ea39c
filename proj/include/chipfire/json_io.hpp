#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "chipfire/dhar.hpp"
#include "chipfire/divisor.hpp"
#include "chipfire/error.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/potential.hpp"
#include "chipfire/reduction.hpp"
#include "chipfire/uniform.hpp"
#include "chipfire/vertex_set.hpp"

namespace chipfire {

/// Insertion-ordered JSON: vertices always serialize in graph construction
/// order, so identical inputs give byte-identical output.
using Json = nlohmann::ordered_json;

/// {"vertices":[{"id":"v1","weight":0},...],"edges":[["v1","v2"],...]}.
/// Loops are ["v1","v1"]. Edges serialize in the graph's normalized order.
Json graph_to_json(const Graph& g);
/// Strict parse: exactly the keys above, integer weights, string ids.
/// Throws Error(bad_input) on malformed documents; graph validation errors
/// pass through from the constructor.
Graph graph_from_json(const Json& document);

/// {"v1":2,"v2":0,...} with every vertex present. Values are JSON integers
/// when they fit 64 bits and decimal strings otherwise; parsing accepts both.
Json divisor_to_json(const Graph& g, const Divisor& d);
Divisor divisor_from_json(const Graph& g, const Json& document);

/// Same shape with rational values as canonical strings, "5/2". Parsing also
/// accepts JSON integers.
Json rat_divisor_to_json(const Graph& g, const RatDivisor& d);
RatDivisor rat_divisor_from_json(const Graph& g, const Json& document);

/// Scripts share the divisor serialization.
Json script_to_json(const Graph& g, const std::vector<Int>& script);
std::vector<Int> script_from_json(const Graph& g, const Json& document);

/// ["v1","v3"]: member ids in graph order.
Json vertex_set_to_json(const Graph& g, const VertexSet& s);
VertexSet vertex_set_from_json(const Graph& g, const Json& document);

/// {"chain":[["v1","v2"],...],"w_dhar":[...]}.
Json dhar_to_json(const Graph& g, const DharResult& result);

/// {"divisor":{...},"script":{...}}.
Json reduced_to_json(const Graph& g, const ReducedResult& result);

/// {"verdict":"effective"|"not_effective","representative":{...},
///  "script":{...}} plus "trace":[{"fired":[...],"result":{...}},...] when
/// requested.
Json certificate_to_json(const Graph& g, const EffectivenessCertificate& c,
                         bool include_trace);

/// {"q":{...rational strings...},"zero_set":[...],"total":"3/4"}.
Json q_result_to_json(const Graph& g, const QResult& result);

/// {"is_special":...,"divisor_certificate":{...},
///  "residual_certificate":{...}}.
Json specialness_to_json(const Graph& g, const SpecialnessReport& report,
                         bool include_trace);

/// {"error":{"code":"...","message":"..."}}.
Json error_to_json(const Error& error);

/// Parses a UTF-8 JSON file. Throws Error(bad_input) naming the path when
/// the file is missing or does not parse.
Json load_json_file(const std::string& path);

}  // namespace chipfire
