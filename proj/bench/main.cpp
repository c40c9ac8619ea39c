// Wall-time comparison of the serial reference paths against the OpenMP
// ones on the script enumeration workloads. Every row re-checks that both
// paths produce identical results; the parallel kernels are deterministic
// by construction.

#include <omp.h>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/oracle.hpp"
#include "chipfire/potential.hpp"
#include "chipfire/scriptspace.hpp"

using namespace chipfire;
using Clock = std::chrono::steady_clock;

namespace {

Graph doubled_cycle(int n) {
  RawGraph raw;
  for (int v = 1; v <= n; ++v)
    raw.vertices.emplace_back("v" + std::to_string(v), 0);
  for (int v = 0; v < n; ++v) {
    std::string a = "v" + std::to_string(v + 1);
    std::string b = "v" + std::to_string((v + 1) % n + 1);
    raw.edges.emplace_back(a, b);
    raw.edges.emplace_back(a, b);
  }
  return Graph(raw);
}

Divisor constant_divisor(int n, long long value) {
  Divisor d;
  d.values.assign(n, Int(value));
  return d;
}

template <class Run>
void row(const char* label, std::uint64_t space, const std::vector<int>& jobs,
         Run&& run) {
  std::printf("%-38s %10llu", label,
              static_cast<unsigned long long>(space));
  bool agree = true;
  bool have_reference = false;
  std::string reference;
  for (int j : jobs) {
    auto start = Clock::now();
    std::string result = run(j);
    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("  %7.3fs", seconds);
    if (!have_reference) {
      reference = result;
      have_reference = true;
    } else if (result != reference) {
      agree = false;
    }
  }
  std::printf("  %s\n", agree ? "identical" : "MISMATCH");
}

std::string describe(const oracle::BruteEffective& r) {
  if (!r.found) return "none";
  std::string s;
  for (const auto& v : r.representative.values) s += v.str() + ",";
  return s;
}

std::string describe(const oracle::BruteMinQ& r) {
  std::string s = r.total.str() + ":";
  for (const auto& v : r.minimizer.values) s += v.str() + ",";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> jobs = {1, 2, 4};
  if (argc > 1) {
    jobs = {1};
    for (int i = 1; i < argc; ++i) jobs.push_back(std::stoi(argv[i]));
  }

  std::printf("hardware threads: %d\n", omp_get_max_threads());
  std::printf("%-38s %10s", "workload", "space");
  for (int j : jobs) std::printf("   jobs=%-2d", j);
  std::printf("  results\n");

  {
    // Full miss: the class has negative degree, so the whole space is
    // enumerated and nothing is found.
    auto g = doubled_cycle(6);
    auto d = constant_divisor(6, -1);
    oracle::SearchBudget budget;
    budget.script_bound = 21;
    row("effective class scan, full miss", 22ull * 22 * 22 * 22 * 22 * 22,
        jobs, [&](int j) {
          return describe(oracle::brute_effective_class(g, d, budget, j));
        });
  }

  {
    // Exact potential minimum; one rational solve per candidate makes this
    // the heaviest per-script workload.
    auto g = doubled_cycle(5);
    Divisor d;
    d.values = {Int(2), Int(1), Int(1), Int(1), Int(1)};
    RatDivisor target;
    target.values.assign(5, Rat(0));
    target.values[0] = Rat(6);
    auto set = VertexSet::of(5, {0});
    oracle::SearchBudget budget;
    budget.script_bound = 19;
    row("potential minimum, solve per script", 20ull * 20 * 20 * 20 * 20, jobs,
        [&](int j) {
          return describe(
              oracle::brute_min_q_total(g, target, d, set, budget, j));
        });
  }

  {
    // Bounded reducedness check: one solve total, integer scoring per
    // candidate.
    auto g = doubled_cycle(5);
    Divisor d;
    d.values = {Int(2), Int(1), Int(1), Int(1), Int(1)};
    auto set = VertexSet::of(5, {0});
    auto witness = construct_e_witness(g, d, set);
    row("bounded reducedness, integer scoring", 32ull * 32 * 32 * 32 * 32,
        jobs, [&](int j) {
          return std::string(
              is_E_reduced_bounded(g, witness, d, set, 31, j) ? "yes" : "no");
        });
  }

  {
    // Raw kernel overhead: find a single planted script near the end of the
    // space, then reduce a cheap key over the whole space.
    ScriptSpace space(8, 9, 1'000'000'000);
    std::vector<std::int64_t> planted = {9, 8, 9, 9, 9, 9, 9, 9};
    std::uint64_t target_index = space.encode(planted);
    row("planted search, trivial predicate", space.size(), jobs, [&](int j) {
      auto hit = find_first(
          space,
          [&](const std::vector<std::int64_t>& s) { return s == planted; },
          j);
      return std::to_string(hit == target_index ? hit : space.size() + 1);
    });
    row("key reduction, trivial key", space.size(), jobs, [&](int j) {
      std::int64_t best_key = 0;
      auto at = min_reduce(
          space,
          [](const std::vector<std::int64_t>& s, std::int64_t& key) {
            key = 0;
            for (std::int64_t v : s) key += (v - 5) * (v - 5);
            return true;
          },
          best_key, j);
      return std::to_string(at) + ":" + std::to_string(best_key);
    });
  }

  return 0;
}
