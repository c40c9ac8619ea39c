#pragma once

#include <stdexcept>
#include <string>

namespace chipfire {

enum class Errc {
  duplicate_vertex_id,
  unknown_endpoint,
  disconnected,
  negative_weight,
  unknown_vertex,
  empty_vertex_set,
  not_effective_away_from,
  degree_mismatch,
  vertex_in_set,
  support_violation,
  not_normalized,
  not_special_class,
  wrong_graph,
  budget_exhausted,
  bad_input,
  internal_error,
};

/// Stable snake_case name, used as the "code" field of error JSON.
const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace chipfire
