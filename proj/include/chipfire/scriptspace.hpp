#pragma once

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <vector>

#include "chipfire/error.hpp"

namespace chipfire {

/// Dense indexing of the integer scripts of a fixed length with entries in
/// [0, bound]: index = sum of script[i] * (bound+1)^i. Enumerating indices in
/// order visits scripts in little-endian counting order, so pointwise-smaller
/// scripts always come first. Search predicates that only depend on the
/// divergence may therefore restrict themselves to min-0 scripts: the
/// normalization of any hit sits at a strictly smaller index and hits too.
class ScriptSpace {
 public:
  /// Throws Error(budget_exhausted) when (bound+1)^length exceeds cap.
  ScriptSpace(int length, std::int64_t bound, std::uint64_t cap) {
    if (length < 0 || bound < 0)
      fail(Errc::internal_error, "malformed script space");
    length_ = length;
    bound_ = bound;
    size_ = 1;
    std::uint64_t base = static_cast<std::uint64_t>(bound) + 1;
    for (int i = 0; i < length; ++i) {
      if (size_ > cap / base)
        fail(Errc::budget_exhausted,
             "script enumeration space exceeds the configured cap");
      size_ *= base;
    }
  }

  int length() const { return length_; }
  std::int64_t bound() const { return bound_; }
  std::uint64_t size() const { return size_; }

  void decode(std::uint64_t index, std::vector<std::int64_t>& script) const {
    script.resize(length_);
    std::uint64_t base = static_cast<std::uint64_t>(bound_) + 1;
    for (int i = 0; i < length_; ++i) {
      script[i] = static_cast<std::int64_t>(index % base);
      index /= base;
    }
  }

  std::uint64_t encode(const std::vector<std::int64_t>& script) const {
    std::uint64_t base = static_cast<std::uint64_t>(bound_) + 1;
    std::uint64_t index = 0;
    for (int i = length_ - 1; i >= 0; --i) index = index * base + script[i];
    return index;
  }

 private:
  int length_;
  std::int64_t bound_;
  std::uint64_t size_;
};

/// Smallest index whose script satisfies pred, or size() when none does.
/// Serial reference implementation.
template <class Pred>
std::uint64_t find_first_serial(const ScriptSpace& space, Pred&& pred) {
  std::vector<std::int64_t> script;
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    space.decode(i, script);
    if (pred(script)) return i;
  }
  return space.size();
}

/// Same answer as find_first_serial. Threads claim fixed-size chunks in
/// ascending order and stop claiming once every unclaimed chunk starts past
/// the best hit, so the minimum hit is always reached and the result is
/// deterministic.
template <class Pred>
std::uint64_t find_first_parallel(const ScriptSpace& space, Pred&& pred,
                                  int jobs) {
  const std::uint64_t none = space.size();
  constexpr std::uint64_t chunk = 4096;
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{none};
#pragma omp parallel num_threads(jobs)
  {
    std::vector<std::int64_t> script;
    for (;;) {
      std::uint64_t start = next.fetch_add(chunk);
      if (start >= best.load() || start >= none) break;
      std::uint64_t stop = std::min(none, start + chunk);
      for (std::uint64_t i = start; i < stop; ++i) {
        if (i >= best.load()) break;
        space.decode(i, script);
        if (pred(script)) {
          std::uint64_t seen = best.load();
          while (i < seen && !best.compare_exchange_weak(seen, i)) {
          }
          break;
        }
      }
    }
  }
  return best.load();
}

template <class Pred>
std::uint64_t find_first(const ScriptSpace& space, Pred&& pred, int jobs) {
  if (jobs <= 1) return find_first_serial(space, pred);
  return find_first_parallel(space, pred, jobs);
}

/// Scans the whole space; eval(script, key) returns whether the script
/// participates and fills its key. Returns the index of the smallest key,
/// ties to the smaller index, or size() when nothing participates.
/// Serial reference implementation.
template <class Key, class Eval>
std::uint64_t min_reduce_serial(const ScriptSpace& space, Eval&& eval,
                                Key& best_key) {
  std::vector<std::int64_t> script;
  std::uint64_t best = space.size();
  Key key;
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    space.decode(i, script);
    if (!eval(script, key)) continue;
    if (best == space.size() || key < best_key) {
      best = i;
      best_key = key;
    }
  }
  return best;
}

/// Same answer as min_reduce_serial: per-thread minima over a static
/// partition, merged by (key, index) order after the scan.
template <class Key, class Eval>
std::uint64_t min_reduce_parallel(const ScriptSpace& space, Eval&& eval,
                                  Key& best_key, int jobs) {
  const std::uint64_t none = space.size();
  std::vector<std::uint64_t> local_best(jobs, none);
  std::vector<Key> local_key(jobs);
#pragma omp parallel num_threads(jobs)
  {
    std::vector<std::int64_t> script;
    int self = omp_get_thread_num();
    Key key;
#pragma omp for schedule(static)
    for (std::int64_t signed_i = 0; signed_i < static_cast<std::int64_t>(none);
         ++signed_i) {
      std::uint64_t i = static_cast<std::uint64_t>(signed_i);
      space.decode(i, script);
      if (!eval(script, key)) continue;
      if (local_best[self] == none || key < local_key[self] ||
          (key == local_key[self] && i < local_best[self])) {
        local_best[self] = i;
        local_key[self] = key;
      }
    }
  }
  std::uint64_t best = none;
  for (int t = 0; t < jobs; ++t) {
    if (local_best[t] == none) continue;
    if (best == none || local_key[t] < best_key ||
        (local_key[t] == best_key && local_best[t] < best)) {
      best = local_best[t];
      best_key = local_key[t];
    }
  }
  return best;
}

template <class Key, class Eval>
std::uint64_t min_reduce(const ScriptSpace& space, Eval&& eval, Key& best_key,
                         int jobs) {
  if (jobs <= 1) return min_reduce_serial(space, eval, best_key);
  return min_reduce_parallel(space, eval, best_key, jobs);
}

}  // namespace chipfire
