#include "chipfire/corpus.hpp"

#include <random>
#include <string>
#include <utility>

namespace chipfire::corpus {

namespace {

std::vector<std::string> vertex_ids(int n) {
  std::vector<std::string> ids;
  for (int v = 1; v <= n; ++v) ids.push_back("v" + std::to_string(v));
  return ids;
}

// Slots in (i, j) order with i <= j; i == j is a loop.
std::vector<std::pair<int, int>> slots_of(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) slots.emplace_back(i, j);
  return slots;
}

bool connects(int n, const std::vector<std::pair<int, int>>& slots,
              const std::vector<int>& multiplicity) {
  std::vector<int> root(n);
  for (int v = 0; v < n; ++v) root[v] = v;
  auto find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (multiplicity[s] == 0 || slots[s].first == slots[s].second) continue;
    root[find(slots[s].first)] = find(slots[s].second);
  }
  for (int v = 1; v < n; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

RawGraph assemble(int n, const std::vector<std::pair<int, int>>& slots,
                  const std::vector<int>& multiplicity,
                  const std::vector<long long>& weights) {
  auto ids = vertex_ids(n);
  RawGraph raw;
  for (int v = 0; v < n; ++v) raw.vertices.emplace_back(ids[v], weights[v]);
  for (std::size_t s = 0; s < slots.size(); ++s)
    for (int r = 0; r < multiplicity[s]; ++r)
      raw.edges.emplace_back(ids[slots[s].first], ids[slots[s].second]);
  return raw;
}

std::vector<long long> seeded_weights(std::mt19937& rng, int n) {
  std::vector<long long> weights(n);
  bool any = false;
  for (auto& w : weights) {
    w = static_cast<long long>(rng() % 2);
    if (w != 0) any = true;
  }
  if (!any) weights[rng() % n] = 1;
  return weights;
}

Divisor seeded_divisor(std::mt19937& rng, int n, long long cap) {
  Divisor d;
  std::uint32_t span = static_cast<std::uint32_t>(2 * cap + 1);
  for (int v = 0; v < n; ++v)
    d.values.emplace_back(static_cast<long long>(rng() % span) - cap);
  return d;
}

void push_instance(std::vector<Instance>& out, const Options& options,
                   std::mt19937& rng, RawGraph raw) {
  Instance instance{Graph(raw), {}};
  int n = instance.graph.vertex_count();
  instance.divisors.push_back(canonical_divisor(instance.graph));
  Divisor zero;
  zero.values.assign(n, Int(0));
  instance.divisors.push_back(zero);
  for (int k = 0; k < options.seeded_divisors; ++k)
    instance.divisors.push_back(seeded_divisor(rng, n, options.max_abs[n]));
  out.push_back(std::move(instance));
}

void push_shape(std::vector<Instance>& out, const Options& options,
                std::mt19937& rng, int n,
                const std::vector<std::pair<int, int>>& slots,
                const std::vector<int>& multiplicity) {
  push_instance(out, options, rng,
                assemble(n, slots, multiplicity, std::vector<long long>(n, 0)));
  if (options.weighted_variants)
    push_instance(out, options, rng,
                  assemble(n, slots, multiplicity, seeded_weights(rng, n)));
}

void enumerate_shapes(std::vector<Instance>& out, const Options& options,
                      std::mt19937& rng, int n) {
  auto slots = slots_of(n);
  std::vector<int> multiplicity(slots.size(), 0);
  int budget = options.edge_cap[n];

  // Odometer over multiplicity vectors with sum <= budget, in lexicographic
  // order from the all-zero vector.
  auto emit = [&] {
    if (!connects(n, slots, multiplicity)) return;
    push_shape(out, options, rng, n, slots, multiplicity);
  };
  emit();
  int used = 0;
  for (;;) {
    std::size_t s = 0;
    while (s < slots.size() && used == budget) {
      used -= multiplicity[s];
      multiplicity[s] = 0;
      ++s;
    }
    if (s == slots.size()) break;
    ++multiplicity[s];
    ++used;
    emit();
  }
}

void sample_five_vertex(std::vector<Instance>& out, const Options& options,
                        std::mt19937& rng) {
  const int n = 5;
  auto slots = slots_of(n);
  for (int sample = 0; sample < options.five_vertex_samples; ++sample) {
    int extra_cap = options.five_vertex_max_edges - (n - 1);
    int extra = static_cast<int>(rng() % (extra_cap + 1));
    std::vector<int> multiplicity(slots.size(), 0);
    auto slot_index = [&](int a, int b) {
      if (a > b) std::swap(a, b);
      return a * n - a * (a - 1) / 2 + (b - a);
    };
    // Random spanning tree: attach each vertex to an earlier one.
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    for (int v = n - 1; v > 0; --v)
      std::swap(order[v], order[rng() % (v + 1)]);
    for (int v = 1; v < n; ++v)
      ++multiplicity[slot_index(order[v], order[rng() % v])];
    for (int e = 0; e < extra; ++e)
      ++multiplicity[slot_index(static_cast<int>(rng() % n),
                                static_cast<int>(rng() % n))];
    push_shape(out, options, rng, n, slots, multiplicity);
  }
}

}  // namespace

std::vector<Instance> build_corpus(const Options& options) {
  std::vector<Instance> out;
  std::mt19937 rng(options.seed);
  for (int n = 1; n <= options.exhaustive_max_vertices; ++n)
    enumerate_shapes(out, options, rng, n);
  if (options.five_vertex_samples > 0) sample_five_vertex(out, options, rng);
  return out;
}

}  // namespace chipfire::corpus
