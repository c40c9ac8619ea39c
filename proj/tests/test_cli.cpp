#include "chipfire/cli.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "chipfire/json_io.hpp"
#include "chipfire/potential.hpp"
#include "chipfire/reduction.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace chipfire;
using fixtures::div_of;
using fixtures::doubled_path;
using fixtures::doubled_triangle;

namespace {

std::string data_path(const char* name) {
  return std::string(CHIPFIRE_TEST_DATA_DIR) + "/" + name;
}

struct CliRun {
  int status = 0;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.status = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

const std::string triangle = data_path("doubled_triangle.json");
const std::string path = data_path("doubled_path.json");
const std::string corner = data_path("corner_pile.json");
const std::string debt = data_path("debt_at_v3.json");
const std::string fig_canonical = data_path("canonical_fig1.json");
const std::string chips = data_path("path_chips.json");
const std::string half_target = data_path("half_integer_target.json");
const std::string end_piles = data_path("end_piles.json");

}  // namespace

TEST_CASE("validate echoes the normal form of a graph") {
  auto r = run({"validate", "--graph", path});
  CHECK(r.status == 0);
  CHECK(r.err.empty());
  CHECK(r.out == graph_to_json(doubled_path()).dump() + "\n");
}

TEST_CASE("canonical prints the canonical divisor") {
  auto r = run({"canonical", "--graph", triangle});
  CHECK(r.status == 0);
  CHECK(r.out == "{\"v1\":2,\"v2\":2,\"v3\":2}\n");
}

TEST_CASE("residual subtracts from the canonical divisor") {
  auto r = run({"residual", "--graph", triangle, "--divisor", corner});
  CHECK(r.status == 0);
  CHECK(r.out == "{\"v1\":2,\"v2\":2,\"v3\":-1}\n");
}

TEST_CASE("fire moves chips along a set") {
  auto r = run({"fire", "--graph", triangle, "--divisor", debt, "--set",
                "v1,v2"});
  CHECK(r.status == 0);
  CHECK(r.out == "{\"v1\":0,\"v2\":0,\"v3\":3}\n");
  // Emitted divisors are accepted back by the same parser the file loader
  // uses.
  auto g = doubled_triangle();
  CHECK(divisor_from_json(g, Json::parse(r.out)) == div_of({0, 0, 3}));
}

TEST_CASE("dhar reports the chain and the untouched set") {
  auto r = run({"dhar", "--graph", triangle, "--divisor", fig_canonical,
                "--set", "v1,v2"});
  CHECK(r.status == 0);
  CHECK(r.out ==
        "{\"chain\":[[\"v1\",\"v2\"],[\"v1\",\"v2\",\"v3\"]],"
        "\"w_dhar\":[]}\n");
}

TEST_CASE("reduce accepts a single vertex or a set") {
  auto g = doubled_triangle();
  auto vertex_run =
      run({"reduce", "--graph", triangle, "--divisor", debt, "--vertex", "v1"});
  CHECK(vertex_run.status == 0);
  CHECK(vertex_run.out ==
        reduced_to_json(g, v_reduced(g, div_of({2, 2, -1}), 0)).dump() + "\n");

  auto set_run =
      run({"reduce", "--graph", triangle, "--divisor", corner, "--set", "v3"});
  CHECK(set_run.status == 0);
  CHECK(set_run.out ==
        "{\"divisor\":{\"v1\":0,\"v2\":0,\"v3\":3},"
        "\"script\":{\"v1\":0,\"v2\":0,\"v3\":0}}\n");

  auto neither = run({"reduce", "--graph", triangle, "--divisor", debt});
  CHECK(neither.status == 2);
  CHECK(neither.out.empty());
  CHECK(!neither.err.empty());

  auto both = run({"reduce", "--graph", triangle, "--divisor", debt,
                   "--vertex", "v1", "--set", "v1"});
  CHECK(both.status == 2);
}

TEST_CASE("effective emits a certificate, with the trace only on request") {
  auto r = run({"effective", "--graph", triangle, "--divisor", debt});
  CHECK(r.status == 0);
  auto document = Json::parse(r.out);
  CHECK(document.at("verdict") == "effective");
  CHECK(document.at("representative") ==
        Json::parse("{\"v1\":0,\"v2\":0,\"v3\":3}"));
  CHECK(!document.contains("trace"));

  auto traced = run({"effective", "--graph", triangle, "--divisor", debt,
                     "--trace"});
  CHECK(traced.status == 0);
  CHECK(Json::parse(traced.out).contains("trace"));

  CHECK(run({"effective", "--graph", triangle, "--divisor", debt}).out ==
        r.out);
}

TEST_CASE("qfun reports the potential toward a target") {
  auto r = run({"qfun", "--graph", path, "--divisor", chips, "--e",
                half_target});
  CHECK(r.status == 0);
  CHECK(r.out ==
        "{\"q\":{\"v1\":\"0\",\"v2\":\"3/4\",\"v3\":\"0\"},"
        "\"zero_set\":[\"v1\",\"v3\"],\"total\":\"3/4\"}\n");
}

TEST_CASE("witness-e builds a target concentrated on the set") {
  auto r = run({"witness-e", "--graph", path, "--divisor", chips, "--set",
                "v1,v3"});
  CHECK(r.status == 0);
  CHECK(r.out == "{\"v1\":\"5/2\",\"v2\":\"0\",\"v3\":\"7/2\"}\n");
  auto g = doubled_path();
  CHECK(rat_divisor_from_json(g, Json::parse(r.out)) ==
        construct_e_witness(g, div_of({1, 3, 2}),
                            VertexSet::of(g.vertex_count(), {0, 2})));
}

TEST_CASE("ereduced answers within the bound") {
  auto yes = run({"ereduced", "--graph", path, "--divisor", chips, "--e",
                  half_target, "--set", "v1,v3", "--bound", "4"});
  CHECK(yes.status == 0);
  CHECK(yes.out == "{\"e_reduced\":true,\"bound\":4}\n");

  // Integer entries are fine in --e files.
  auto no = run({"ereduced", "--graph", path, "--divisor", chips, "--e",
                 end_piles, "--set", "v1,v3", "--bound", "4"});
  CHECK(no.status == 0);
  CHECK(no.out == "{\"e_reduced\":false,\"bound\":4}\n");

  // Without --bound the entry cap defaults to |V| * (1 + max |d_v|).
  auto defaulted = run({"ereduced", "--graph", path, "--divisor", chips,
                        "--e", half_target, "--set", "v1,v3"});
  CHECK(defaulted.status == 0);
  CHECK(defaulted.out == "{\"e_reduced\":true,\"bound\":12}\n");

  auto threaded = run({"ereduced", "--graph", path, "--divisor", chips, "--e",
                       half_target, "--set", "v1,v3", "--bound", "4",
                       "--jobs", "2"});
  CHECK(threaded.out == yes.out);
}

TEST_CASE("uniform checks the canonical coordinate bounds") {
  CHECK(run({"uniform", "--graph", triangle, "--divisor", fig_canonical}).out ==
        "{\"uniform\":true}\n");
  CHECK(run({"uniform", "--graph", triangle, "--divisor", corner}).out ==
        "{\"uniform\":false}\n");
}

TEST_CASE("special embeds both certificates") {
  auto r = run({"special", "--graph", triangle, "--divisor", corner});
  CHECK(r.status == 0);
  auto document = Json::parse(r.out);
  CHECK(document.at("is_special") == true);
  CHECK(document.at("divisor_certificate").at("verdict") == "effective");
  CHECK(document.at("residual_certificate").at("representative") ==
        Json::parse("{\"v1\":0,\"v2\":0,\"v3\":3}"));
  CHECK(!document.at("divisor_certificate").contains("trace"));
}

TEST_CASE("quasi-uniform prints the capped representative") {
  auto r = run({"quasi-uniform", "--graph", triangle, "--divisor", corner});
  CHECK(r.status == 0);
  CHECK(r.out == "{\"v1\":0,\"v2\":0,\"v3\":3}\n");
}

TEST_CASE("domain failures exit 1 with an error object on the error stream") {
  auto wrong_set = run({"dhar", "--graph", triangle, "--divisor", debt,
                        "--set", "v1"});
  CHECK(wrong_set.status == 1);
  CHECK(wrong_set.out.empty());
  CHECK(Json::parse(wrong_set.err).at("error").at("code") ==
        "not_effective_away_from");

  auto missing_file = run({"canonical", "--graph", data_path("absent.json")});
  CHECK(missing_file.status == 1);
  CHECK(Json::parse(missing_file.err).at("error").at("code") == "bad_input");

  auto not_special = run({"quasi-uniform", "--graph", path, "--divisor",
                          end_piles});
  CHECK(not_special.status == 1);
  CHECK(Json::parse(not_special.err).at("error").at("code") ==
        "not_special_class");

  auto unknown = run({"fire", "--graph", triangle, "--divisor", debt, "--set",
                      "v9"});
  CHECK(unknown.status == 1);
  CHECK(Json::parse(unknown.err).at("error").at("code") == "unknown_vertex");

  auto doubled = run({"fire", "--graph", triangle, "--divisor", debt, "--set",
                      "v1,v1"});
  CHECK(doubled.status == 1);
  CHECK(Json::parse(doubled.err).at("error").at("code") == "bad_input");

  auto empty = run({"fire", "--graph", triangle, "--divisor", debt, "--set",
                    ""});
  CHECK(empty.status == 1);
  CHECK(Json::parse(empty.err).at("error").at("code") == "bad_input");
}

TEST_CASE("usage failures exit 2") {
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"canonical"}).status == 2);
  CHECK(run({"canonical", "--graph", triangle, "--sideways"}).status == 2);
  CHECK(run({"ereduced", "--graph", path, "--divisor", chips, "--e",
             half_target, "--set", "v1,v3", "--bound", "-1"})
            .status == 2);

  auto help = run({"--help"});
  CHECK(help.status == 0);
  CHECK(help.err.empty());
  CHECK(!help.out.empty());
}

TEST_CASE("pretty printing changes layout, not content") {
  auto compact = run({"canonical", "--graph", triangle});
  auto pretty = run({"canonical", "--graph", triangle, "--pretty"});
  CHECK(pretty.status == 0);
  CHECK(pretty.out != compact.out);
  CHECK(pretty.out.find("\n  ") != std::string::npos);
  CHECK(Json::parse(pretty.out) == Json::parse(compact.out));
}
