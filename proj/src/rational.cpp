#include "chipfire/rational.hpp"

#include "chipfire/error.hpp"

namespace chipfire {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::duplicate_vertex_id: return "duplicate_vertex_id";
    case Errc::unknown_endpoint: return "unknown_endpoint";
    case Errc::disconnected: return "disconnected";
    case Errc::negative_weight: return "negative_weight";
    case Errc::unknown_vertex: return "unknown_vertex";
    case Errc::empty_vertex_set: return "empty_vertex_set";
    case Errc::not_effective_away_from: return "not_effective_away_from";
    case Errc::degree_mismatch: return "degree_mismatch";
    case Errc::vertex_in_set: return "vertex_in_set";
    case Errc::support_violation: return "support_violation";
    case Errc::not_normalized: return "not_normalized";
    case Errc::not_special_class: return "not_special_class";
    case Errc::wrong_graph: return "wrong_graph";
    case Errc::budget_exhausted: return "budget_exhausted";
    case Errc::bad_input: return "bad_input";
    case Errc::internal_error: return "internal_error";
  }
  return "internal_error";
}

std::string int_to_string(const Int& n) { return n.str(); }

namespace {

bool is_decimal(const std::string& text) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') return false;
  return true;
}

}  // namespace

Int int_from_string(const std::string& text) {
  if (!is_decimal(text)) fail(Errc::bad_input, "not an integer: '" + text + "'");
  return Int(text);
}

std::string rat_to_string(const Rat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rat rat_from_string(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(int_from_string(text));
  Int num = int_from_string(text.substr(0, slash));
  std::string den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    fail(Errc::bad_input, "sign belongs on the numerator: '" + text + "'");
  Int den = int_from_string(den_text);
  if (den == 0) fail(Errc::bad_input, "zero denominator: '" + text + "'");
  return Rat(num, den);
}

}  // namespace chipfire
