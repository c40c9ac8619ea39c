#include "chipfire/dhar.hpp"

#include "chipfire/error.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace chipfire;

TEST_CASE("decomposition on the doubled triangle, start {v3}") {
  Graph g = fixtures::doubled_triangle();
  Divisor d = fixtures::div_of({2, 2, -1});
  auto r = dhar_decomposition(g, d, g.set_of({"v3"}));
  CHECK(r.w_dhar == g.set_of({"v1", "v2"}));
  REQUIRE(r.chain.size() == 1);
  CHECK(r.chain[0] == g.set_of({"v3"}));
}

TEST_CASE("decomposition absorbing a new vertex") {
  Graph g = fixtures::doubled_triangle();
  // Firing {v3} from (2,2,2) sends v3 to -2, so v3 joins the set.
  Divisor d = fixtures::div_of({2, 2, 2});
  auto r = dhar_decomposition(g, d, g.set_of({"v1", "v2"}));
  CHECK(r.w_dhar.empty());
  REQUIRE(r.chain.size() == 2);
  CHECK(r.chain[0] == g.set_of({"v1", "v2"}));
  CHECK(r.chain[1] == g.full_set());
}

TEST_CASE("start set equal to everything is immediately stable") {
  Graph g = fixtures::doubled_path();
  Divisor d = fixtures::div_of({-5, 7, 0});
  auto r = dhar_decomposition(g, d, g.full_set());
  CHECK(r.w_dhar.empty());
  REQUIRE(r.chain.size() == 1);
  CHECK(r.chain[0] == g.full_set());
}

TEST_CASE("decomposition preconditions") {
  Graph g = fixtures::doubled_triangle();
  Divisor d = fixtures::div_of({2, 2, -1});
  CHECK_THROWS_AS(dhar_decomposition(g, d, g.empty_set()), Error);
  try {
    dhar_decomposition(g, d, g.set_of({"v1"}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_effective_away_from);
    CHECK(std::string(e.what()).find("v3") != std::string::npos);
  }
}

TEST_CASE("firing the Dhar set stays effective away from the start") {
  Graph g = fixtures::doubled_triangle();
  Divisor d = fixtures::div_of({2, 2, -1});
  auto start = g.set_of({"v3"});
  auto r = dhar_decomposition(g, d, start);
  REQUIRE(!r.w_dhar.empty());
  CHECK(is_effective_away_from(fire_set(g, d, r.w_dhar), start));
}

TEST_CASE("reducedness on the doubled triangle") {
  Graph g = fixtures::doubled_triangle();
  Divisor k = fixtures::div_of({2, 2, 2});
  CHECK(is_V_reduced(g, k, g.set_of({"v1", "v2"})));
  CHECK(is_V_reduced(g, fixtures::div_of({-2, 2, 2}), g.set_of({"v1", "v2"})));
  CHECK(!is_V_reduced(g, fixtures::div_of({2, 2, -1}), g.set_of({"v3"})));
  // Not reduced at any single vertex: firing the other two survives.
  for (const char* v : {"v1", "v2", "v3"})
    CHECK(!is_V_reduced(g, k, g.set_of({v})));
}

TEST_CASE("not effective away from the set means not reduced, no error") {
  Graph g = fixtures::doubled_triangle();
  CHECK(!is_V_reduced(g, fixtures::div_of({-1, 2, 2}), g.set_of({"v3"})));
}

TEST_CASE("reducedness grows with the set") {
  Graph g = fixtures::doubled_path();
  Divisor d = fixtures::div_of({1, 3, 2});
  auto v1 = g.set_of({"v1"});
  auto both = g.set_of({"v1", "v3"});
  if (is_V_reduced(g, d, v1)) CHECK(is_V_reduced(g, d, both));
  CHECK(is_V_reduced(g, d, both));
}

TEST_CASE("distance layer sums") {
  Graph g = fixtures::doubled_triangle();
  CHECK(distance_layer_sums(g, fixtures::div_of({2, 2, -1}), g.set_of({"v3"})) ==
        fixtures::ints({-1, 4}));
  CHECK(distance_layer_sums(g, fixtures::div_of({0, 0, 3}), g.set_of({"v3"})) ==
        fixtures::ints({3, 0}));
  CHECK(distance_layer_sums(g, fixtures::div_of({5, -2, 7}), g.full_set()) ==
        fixtures::ints({10}));

  Graph p = fixtures::doubled_path();
  CHECK(distance_layer_sums(p, fixtures::div_of({1, 3, 2}), p.set_of({"v1"})) ==
        fixtures::ints({1, 3, 2}));
}

TEST_CASE("lexicographic comparison") {
  CHECK(lex_less(fixtures::ints({-1, 4}), fixtures::ints({3, 0})));
  CHECK(!lex_less(fixtures::ints({3, 0}), fixtures::ints({-1, 4})));
  CHECK(!lex_less(fixtures::ints({1, 2}), fixtures::ints({1, 2})));
  CHECK(lex_less(fixtures::ints({1, 2}), fixtures::ints({1, 3})));
}
