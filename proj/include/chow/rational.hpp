#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace chow {

/// Exact rational scalar. All engine arithmetic is exact; no floating point.
using Rational = mpq_class;

inline Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  Rational q;
  if (slash == std::string::npos) {
    q = Rational(s);
  } else {
    q = Rational(s.substr(0, slash)) / Rational(s.substr(slash + 1));
  }
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long long to_ll(const Rational& q) {
  if (!is_integer(q)) throw std::runtime_error("rational is not an integer");
  if (!q.get_num().fits_slong_p())
    throw std::runtime_error("integer out of long range");
  return q.get_num().get_si();
}

}  // namespace chow
