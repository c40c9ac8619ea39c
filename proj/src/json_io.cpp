#include "chipfire/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>

namespace chipfire {

namespace {

void require_object(const Json& document, const char* what) {
  if (!document.is_object())
    fail(Errc::bad_input, std::string(what) + " must be a JSON object");
}

void require_exact_keys(const Json& document,
                        std::initializer_list<const char*> keys,
                        const char* what) {
  for (const char* key : keys)
    if (!document.contains(key))
      fail(Errc::bad_input,
           std::string(what) + " is missing the \"" + key + "\" key");
  for (const auto& item : document.items()) {
    bool known = false;
    for (const char* key : keys)
      if (item.key() == key) known = true;
    if (!known)
      fail(Errc::bad_input,
           std::string(what) + " has an unexpected \"" + item.key() + "\" key");
  }
}

Int int_from_json(const Json& value, const char* what) {
  if (value.is_number_integer()) return Int(value.get<std::int64_t>());
  if (value.is_string()) return int_from_string(value.get<std::string>());
  fail(Errc::bad_input,
       std::string(what) + " must be a JSON integer or a decimal string");
}

Json int_to_json(const Int& value) {
  if (value >= Int(std::numeric_limits<std::int64_t>::min()) &&
      value <= Int(std::numeric_limits<std::int64_t>::max()))
    return Json(static_cast<std::int64_t>(value));
  return Json(int_to_string(value));
}

template <class Value, class FromJson>
std::vector<Value> values_by_vertex(const Graph& g, const Json& document,
                                    const char* what, FromJson&& from_json) {
  require_object(document, what);
  for (const auto& item : document.items())
    g.index_of(item.key());
  std::vector<Value> values;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const std::string& id = g.id_of(v);
    if (!document.contains(id))
      fail(Errc::bad_input,
           std::string(what) + " is missing vertex '" + id + "'");
    values.push_back(from_json(document.at(id)));
  }
  return values;
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json document;
  document["vertices"] = Json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    Json vertex;
    vertex["id"] = g.id_of(v);
    vertex["weight"] = g.weight(v);
    document["vertices"].push_back(std::move(vertex));
  }
  document["edges"] = Json::array();
  for (const auto& [a, b] : g.edges())
    document["edges"].push_back(Json::array({g.id_of(a), g.id_of(b)}));
  return document;
}

Graph graph_from_json(const Json& document) {
  require_object(document, "a graph");
  require_exact_keys(document, {"vertices", "edges"}, "a graph");
  if (!document.at("vertices").is_array())
    fail(Errc::bad_input, "\"vertices\" must be an array");
  if (!document.at("edges").is_array())
    fail(Errc::bad_input, "\"edges\" must be an array");

  RawGraph raw;
  for (const auto& vertex : document.at("vertices")) {
    require_object(vertex, "a vertex");
    require_exact_keys(vertex, {"id", "weight"}, "a vertex");
    if (!vertex.at("id").is_string())
      fail(Errc::bad_input, "vertex \"id\" must be a string");
    if (!vertex.at("weight").is_number_integer())
      fail(Errc::bad_input, "vertex \"weight\" must be a JSON integer");
    raw.vertices.emplace_back(vertex.at("id").get<std::string>(),
                              vertex.at("weight").get<long long>());
  }
  for (const auto& edge : document.at("edges")) {
    if (!edge.is_array() || edge.size() != 2 || !edge[0].is_string() ||
        !edge[1].is_string())
      fail(Errc::bad_input, "each edge must be a pair of vertex ids");
    raw.edges.emplace_back(edge[0].get<std::string>(),
                           edge[1].get<std::string>());
  }
  return Graph(raw);
}

Json divisor_to_json(const Graph& g, const Divisor& d) {
  Json document;
  for (int v = 0; v < g.vertex_count(); ++v)
    document[g.id_of(v)] = int_to_json(d.values[v]);
  return document;
}

Divisor divisor_from_json(const Graph& g, const Json& document) {
  Divisor d;
  d.values = values_by_vertex<Int>(g, document, "a divisor", [](const Json& v) {
    return int_from_json(v, "a divisor value");
  });
  return d;
}

Json rat_divisor_to_json(const Graph& g, const RatDivisor& d) {
  Json document;
  for (int v = 0; v < g.vertex_count(); ++v)
    document[g.id_of(v)] = rat_to_string(d.values[v]);
  return document;
}

RatDivisor rat_divisor_from_json(const Graph& g, const Json& document) {
  RatDivisor d;
  d.values = values_by_vertex<Rat>(
      g, document, "a rational divisor", [](const Json& value) {
        if (value.is_number_integer())
          return Rat(value.get<std::int64_t>());
        if (value.is_string()) return rat_from_string(value.get<std::string>());
        fail(Errc::bad_input,
             "a rational value must be a JSON integer or a string like "
             "\"5/2\"");
      });
  return d;
}

Json script_to_json(const Graph& g, const std::vector<Int>& script) {
  Json document;
  for (int v = 0; v < g.vertex_count(); ++v)
    document[g.id_of(v)] = int_to_json(script[v]);
  return document;
}

std::vector<Int> script_from_json(const Graph& g, const Json& document) {
  return values_by_vertex<Int>(g, document, "a script", [](const Json& v) {
    return int_from_json(v, "a script value");
  });
}

Json vertex_set_to_json(const Graph& g, const VertexSet& s) {
  Json document = Json::array();
  for (int v : s.members()) document.push_back(g.id_of(v));
  return document;
}

VertexSet vertex_set_from_json(const Graph& g, const Json& document) {
  if (!document.is_array())
    fail(Errc::bad_input, "a vertex set must be an array of vertex ids");
  VertexSet s(g.vertex_count());
  for (const auto& entry : document) {
    if (!entry.is_string())
      fail(Errc::bad_input, "a vertex set entry must be a vertex id string");
    int v = g.index_of(entry.get<std::string>());
    if (s.contains(v))
      fail(Errc::bad_input,
           "vertex '" + entry.get<std::string>() + "' is listed twice");
    s.add(v);
  }
  return s;
}

Json dhar_to_json(const Graph& g, const DharResult& result) {
  Json document;
  document["chain"] = Json::array();
  for (const auto& link : result.chain)
    document["chain"].push_back(vertex_set_to_json(g, link));
  document["w_dhar"] = vertex_set_to_json(g, result.w_dhar);
  return document;
}

Json reduced_to_json(const Graph& g, const ReducedResult& result) {
  Json document;
  document["divisor"] = divisor_to_json(g, result.divisor);
  document["script"] = script_to_json(g, result.script);
  return document;
}

Json certificate_to_json(const Graph& g, const EffectivenessCertificate& c,
                         bool include_trace) {
  Json document;
  document["verdict"] =
      c.verdict == Verdict::effective ? "effective" : "not_effective";
  document["representative"] = divisor_to_json(g, c.representative);
  document["script"] = script_to_json(g, c.script);
  if (include_trace) {
    document["trace"] = Json::array();
    for (const auto& step : c.trace) {
      Json entry;
      entry["fired"] = vertex_set_to_json(g, step.fired);
      entry["result"] = divisor_to_json(g, step.result);
      document["trace"].push_back(std::move(entry));
    }
  }
  return document;
}

Json q_result_to_json(const Graph& g, const QResult& result) {
  Json document;
  document["q"] = Json::object();
  for (int v = 0; v < g.vertex_count(); ++v)
    document["q"][g.id_of(v)] = rat_to_string(result.q[v]);
  document["zero_set"] = vertex_set_to_json(g, result.zero_set);
  document["total"] = rat_to_string(result.total);
  return document;
}

Json specialness_to_json(const Graph& g, const SpecialnessReport& report,
                         bool include_trace) {
  Json document;
  document["is_special"] = report.is_special;
  document["divisor_certificate"] =
      certificate_to_json(g, report.divisor_certificate, include_trace);
  document["residual_certificate"] =
      certificate_to_json(g, report.residual_certificate, include_trace);
  return document;
}

Json error_to_json(const Error& error) {
  Json document;
  document["error"]["code"] = errc_name(error.code());
  document["error"]["message"] = error.what();
  return document;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::bad_input, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::bad_input, "'" + path + "': " + e.what());
  }
}

}  // namespace chipfire
