#include "chipfire/cli.hpp"

#include <cstdint>
#include <exception>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chipfire/dhar.hpp"
#include "chipfire/divisor.hpp"
#include "chipfire/error.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/json_io.hpp"
#include "chipfire/potential.hpp"
#include "chipfire/reduction.hpp"
#include "chipfire/uniform.hpp"

namespace chipfire {
namespace {

VertexSet parse_vertex_csv(const Graph& g, const std::string& csv) {
  VertexSet set(g.vertex_count());
  std::istringstream stream(csv);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token.empty()) fail(Errc::bad_input, "empty vertex id in --set");
    int v = g.index_of(token);
    if (set.contains(v))
      fail(Errc::bad_input, "vertex '" + token + "' listed twice in --set");
    set.add(v);
  }
  if (set.count() == 0) fail(Errc::bad_input, "--set names no vertices");
  return set;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"divisor arithmetic on vertex-weighted multigraphs"};
  app.require_subcommand(1);

  std::string graph_path;
  std::string divisor_path;
  std::string target_path;
  std::string set_csv;
  std::string vertex_id;
  std::int64_t bound = -1;
  int jobs = 1;
  bool pretty = false;
  bool with_trace = false;

  auto make = [&](const std::string& name, const std::string& description,
                  bool needs_divisor) {
    CLI::App* cmd = app.add_subcommand(name, description);
    cmd->add_option("--graph", graph_path, "graph JSON file")->required();
    if (needs_divisor)
      cmd->add_option("--divisor", divisor_path, "divisor JSON file")
          ->required();
    cmd->add_flag("--pretty", pretty, "indent the JSON output");
    return cmd;
  };
  auto set_option = [&](CLI::App* cmd) {
    return cmd->add_option("--set", set_csv, "comma separated vertex ids");
  };

  CLI::App* validate =
      make("validate", "parse a graph and echo its normal form", false);
  CLI::App* canonical = make("canonical", "canonical divisor", false);
  CLI::App* residual_cmd =
      make("residual", "canonical divisor minus the given one", true);
  CLI::App* fire = make("fire", "fire every vertex of a set once", true);
  set_option(fire)->required();
  CLI::App* dhar =
      make("dhar", "staged decomposition toward a vertex set", true);
  set_option(dhar)->required();
  CLI::App* reduce = make("reduce", "reduced representative", true);
  CLI::Option* reduce_vertex =
      reduce->add_option("--vertex", vertex_id, "reduce toward one vertex");
  set_option(reduce)->excludes(reduce_vertex);
  CLI::App* effective =
      make("effective", "decide effectiveness of the class", true);
  effective->add_flag("--trace", with_trace, "include the firing trace");
  CLI::App* qfun =
      make("qfun", "potential of the divisor toward a target", true);
  qfun->add_option("--e", target_path, "target rational divisor JSON file")
      ->required();
  CLI::App* witness =
      make("witness-e", "target concentrated on a set that the divisor "
                        "minimizes potential toward",
           true);
  set_option(witness)->required();
  CLI::App* ereduced =
      make("ereduced", "bounded check that no firing lowers the potential "
                       "mass toward a target",
           true);
  ereduced->add_option("--e", target_path, "target rational divisor JSON file")
      ->required();
  set_option(ereduced)->required();
  ereduced->add_option("--bound", bound, "largest script entry tried")
      ->check(CLI::NonNegativeNumber);
  ereduced->add_option("--jobs", jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  CLI::App* uniform_cmd =
      make("uniform", "check the canonical coordinate bounds", true);
  CLI::App* special_cmd =
      make("special", "decide specialness with both certificates", true);
  special_cmd->add_flag("--trace", with_trace, "include the firing traces");
  CLI::App* quasi = make(
      "quasi-uniform", "capped representative of a special class", true);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("chipfire");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_storage.size());
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto dump = [&](const Json& document) {
    out << document.dump(pretty ? 2 : -1) << "\n";
  };

  try {
    Graph g = graph_from_json(load_json_file(graph_path));
    Divisor d;
    if (!divisor_path.empty())
      d = divisor_from_json(g, load_json_file(divisor_path));

    if (app.got_subcommand(validate)) {
      dump(graph_to_json(g));
    } else if (app.got_subcommand(canonical)) {
      dump(divisor_to_json(g, canonical_divisor(g)));
    } else if (app.got_subcommand(residual_cmd)) {
      dump(divisor_to_json(g, residual(g, d)));
    } else if (app.got_subcommand(fire)) {
      dump(divisor_to_json(g, fire_set(g, d, parse_vertex_csv(g, set_csv))));
    } else if (app.got_subcommand(dhar)) {
      dump(dhar_to_json(
          g, dhar_decomposition(g, d, parse_vertex_csv(g, set_csv))));
    } else if (app.got_subcommand(reduce)) {
      if (vertex_id.empty() && set_csv.empty()) {
        err << "reduce needs --vertex or --set\n";
        return 2;
      }
      ReducedResult r =
          vertex_id.empty()
              ? make_V_reduced_from(g, d, parse_vertex_csv(g, set_csv))
              : v_reduced(g, d, g.index_of(vertex_id));
      dump(reduced_to_json(g, r));
    } else if (app.got_subcommand(effective)) {
      dump(certificate_to_json(g, find_effective(g, d), with_trace));
    } else if (app.got_subcommand(qfun)) {
      RatDivisor target = rat_divisor_from_json(g, load_json_file(target_path));
      dump(q_result_to_json(g, q_function(g, target, d)));
    } else if (app.got_subcommand(witness)) {
      dump(rat_divisor_to_json(
          g, construct_e_witness(g, d, parse_vertex_csv(g, set_csv))));
    } else if (app.got_subcommand(ereduced)) {
      RatDivisor target = rat_divisor_from_json(g, load_json_file(target_path));
      VertexSet set = parse_vertex_csv(g, set_csv);
      if (bound < 0) bound = default_script_bound(g, d);
      Json verdict = Json::object();
      verdict["e_reduced"] = is_E_reduced_bounded(g, target, d, set, bound, jobs);
      verdict["bound"] = bound;
      dump(verdict);
    } else if (app.got_subcommand(uniform_cmd)) {
      Json verdict = Json::object();
      verdict["uniform"] = is_uniform(g, d);
      dump(verdict);
    } else if (app.got_subcommand(special_cmd)) {
      dump(specialness_to_json(g, specialness(g, d), with_trace));
    } else if (app.got_subcommand(quasi)) {
      dump(divisor_to_json(g, quasi_uniform_representative(g, d)));
    }
    return 0;
  } catch (const Error& e) {
    err << error_to_json(e).dump(pretty ? 2 : -1) << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << error_to_json(Error(Errc::internal_error, e.what()))
               .dump(pretty ? 2 : -1)
        << "\n";
    return 1;
  }
}

}  // namespace chipfire
