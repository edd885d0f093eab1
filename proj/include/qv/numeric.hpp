// Exact scalar types used throughout the library.  Everything is computed
// over arbitrary-precision integers and rationals; no floating point.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace qv {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Error codes mirror the failure modes of the public operations.  A single
// exception type keeps call sites simple while tests can still assert on
// the precise condition.
enum class errc {
  parse,
  bad_argument,
  single_vertex,
  disconnected,
  loop_edge,
  invalid_valuation,
  symmetrizability,
  oriented_cycle,
  cycle_created,
  unknown_vertex,
  not_a_filter,
  hull_condition,
  empty_layer,
  base_mismatch,
  empty_sequence,
  not_admissible,
  not_tight,
  not_principal,
  not_a_sink,
  not_a_source,
  non_symmetric_valuation,
  shape_mismatch,
  kills_at_vertex,
  not_preprojective,
  internal,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

inline Rat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw error(errc::parse, "zero denominator in '" + text + "'");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rat(num, den);
  } catch (const std::runtime_error& e) {
    throw error(errc::parse, "bad rational '" + text + "'");
  }
}

inline std::string format_rational(const Rat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace qv
