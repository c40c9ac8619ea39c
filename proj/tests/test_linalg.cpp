#include "chipfire/linalg.hpp"

#include "chipfire/divisor.hpp"
#include "chipfire/error.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace chipfire;

TEST_CASE("solves a dense rational system exactly") {
  // 2x + y = 7/2, x - 3y = -7/2  =>  x = 1, y = 3/2
  std::vector<std::vector<Rat>> m = {{Rat(2), Rat(1)}, {Rat(1), Rat(-3)}};
  std::vector<Rat> rhs = {Rat(7, 2), Rat(-7, 2)};
  auto x = solve_linear_system(m, rhs);
  CHECK(x == std::vector<Rat>{Rat(1), Rat(3, 2)});
}

TEST_CASE("pivots past a zero on the diagonal") {
  std::vector<std::vector<Rat>> m = {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
  std::vector<Rat> rhs = {Rat(5), Rat(-2)};
  auto x = solve_linear_system(m, rhs);
  CHECK(x == std::vector<Rat>{Rat(-2), Rat(5)});
}

TEST_CASE("rejects singular systems") {
  std::vector<std::vector<Rat>> m = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  std::vector<Rat> rhs = {Rat(1), Rat(2)};
  CHECK_THROWS_AS(solve_linear_system(m, rhs), Error);
}

TEST_CASE("three by three with fractions") {
  std::vector<std::vector<Rat>> m = {
      {Rat(1, 2), Rat(1, 3), Rat(0)},
      {Rat(0), Rat(1), Rat(-1)},
      {Rat(1), Rat(0), Rat(1)},
  };
  std::vector<Rat> rhs = {Rat(1), Rat(0), Rat(2)};
  auto x = solve_linear_system(m, rhs);
  // Verify by substitution.
  for (int i = 0; i < 3; ++i) {
    Rat s(0);
    for (int j = 0; j < 3; ++j) s += m[i][j] * x[j];
    CHECK(s == rhs[i]);
  }
}

TEST_CASE("pinned laplacian solution has the requested divergence") {
  Graph g = fixtures::doubled_triangle();
  // laplacian * f = b means divergence(f) = -b.
  std::vector<Rat> b = {Rat(2), Rat(-5), Rat(3)};
  auto f = solve_pinned_laplacian(g, b);
  CHECK(f[0] == 0);
  auto dv = divergence(g, f);
  for (int v = 0; v < 3; ++v) CHECK(dv[v] == -b[v]);
}

TEST_CASE("pinning works at any vertex") {
  Graph g = fixtures::doubled_path();
  std::vector<Rat> b = {Rat(1), Rat(0), Rat(-1)};
  for (int pin = 0; pin < 3; ++pin) {
    auto f = solve_pinned_laplacian(g, b, pin);
    CHECK(f[pin] == 0);
    auto dv = divergence(g, f);
    for (int v = 0; v < 3; ++v) CHECK(dv[v] == -b[v]);
  }
}

TEST_CASE("laplacian of a single vertex") {
  RawGraph raw;
  raw.vertices = {{"a", 3}};
  raw.edges = {{"a", "a"}};
  Graph g(raw);
  auto f = solve_pinned_laplacian(g, {Rat(0)});
  CHECK(f == std::vector<Rat>{Rat(0)});
}

TEST_CASE("nonzero total is rejected") {
  Graph g = fixtures::doubled_path();
  std::vector<Rat> b = {Rat(1), Rat(0), Rat(0)};
  CHECK_THROWS_AS(solve_pinned_laplacian(g, b), Error);
}
