#include "chipfire/scriptspace.hpp"

#include <random>

#include "chipfire/error.hpp"
#include "doctest.h"

using namespace chipfire;

TEST_CASE("sizes and decoding") {
  ScriptSpace space(3, 2, 1'000'000);
  CHECK(space.size() == 27);
  std::vector<std::int64_t> f;
  space.decode(0, f);
  CHECK(f == std::vector<std::int64_t>{0, 0, 0});
  space.decode(5, f);
  CHECK(f == std::vector<std::int64_t>{2, 1, 0});
  space.decode(26, f);
  CHECK(f == std::vector<std::int64_t>{2, 2, 2});
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    space.decode(i, f);
    CHECK(space.encode(f) == i);
  }
}

TEST_CASE("zero-length space has exactly the empty script") {
  ScriptSpace space(0, 5, 100);
  CHECK(space.size() == 1);
}

TEST_CASE("cap violations are reported") {
  CHECK_THROWS_AS(ScriptSpace(10, 9, 1'000'000), Error);
  try {
    ScriptSpace space(20, 1'000'000, 1'000'000'000);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::budget_exhausted);
  }
}

TEST_CASE("pointwise-smaller scripts have smaller indices") {
  ScriptSpace space(4, 3, 1'000'000);
  std::vector<std::int64_t> f = {2, 1, 3, 1};
  std::vector<std::int64_t> lowered = {1, 0, 2, 0};
  CHECK(space.encode(lowered) < space.encode(f));
}

TEST_CASE("find_first agrees between serial and parallel") {
  ScriptSpace space(5, 3, 10'000'000);
  auto make_pred = [](std::uint64_t target) {
    return [target](const std::vector<std::int64_t>& f) {
      // Arbitrary deterministic predicate: weighted sum hits a residue.
      std::int64_t acc = 0;
      for (std::size_t i = 0; i < f.size(); ++i)
        acc += (static_cast<std::int64_t>(i) + 2) * f[i];
      return static_cast<std::uint64_t>(acc * 37 % 1009) == target;
    };
  };
  for (std::uint64_t target : {0ull, 3ull, 500ull, 999'999ull}) {
    auto pred = make_pred(target);
    auto serial = find_first_serial(space, pred);
    for (int jobs : {2, 3, 8})
      CHECK(find_first_parallel(space, pred, jobs) == serial);
  }
}

TEST_CASE("find_first returns size when nothing matches") {
  ScriptSpace space(3, 1, 1000);
  auto never = [](const std::vector<std::int64_t>&) { return false; };
  CHECK(find_first_serial(space, never) == space.size());
  CHECK(find_first_parallel(space, never, 4) == space.size());
}

TEST_CASE("min_reduce agrees between serial and parallel, ties to low index") {
  ScriptSpace space(4, 4, 1'000'000);
  // Key with deliberate collisions so tie-breaking is exercised.
  auto eval = [](const std::vector<std::int64_t>& f, long long& key) {
    long long acc = 0;
    for (auto v : f) acc += v * v;
    if (acc % 3 == 1) return false;
    key = acc % 7;
    return true;
  };
  long long serial_key = -1, parallel_key = -1;
  auto serial = min_reduce_serial(space, eval, serial_key);
  for (int jobs : {2, 5}) {
    long long key = -1;
    auto parallel = min_reduce_parallel(space, eval, key, jobs);
    CHECK(parallel == serial);
    CHECK(key == serial_key);
  }
  (void)parallel_key;
}

TEST_CASE("min_reduce with no participants") {
  ScriptSpace space(2, 2, 100);
  auto eval = [](const std::vector<std::int64_t>&, int&) { return false; };
  int key = 0;
  CHECK(min_reduce_serial(space, eval, key) == space.size());
  CHECK(min_reduce_parallel(space, eval, key, 3) == space.size());
}

TEST_CASE("randomized agreement sweep") {
  std::mt19937 rng(20240817);
  for (int round = 0; round < 20; ++round) {
    int length = 1 + static_cast<int>(rng() % 5);
    std::int64_t bound = 1 + static_cast<std::int64_t>(rng() % 4);
    ScriptSpace space(length, bound, 10'000'000);
    std::uint64_t modulus = 1 + rng() % 150;
    auto pred = [modulus](const std::vector<std::int64_t>& f) {
      std::uint64_t acc = 1469598103934665603ull;
      for (auto v : f) acc = (acc ^ static_cast<std::uint64_t>(v)) * 1099511628211ull;
      return acc % modulus == 0;
    };
    auto serial = find_first_serial(space, pred);
    CHECK(find_first_parallel(space, pred, 4) == serial);
  }
}
