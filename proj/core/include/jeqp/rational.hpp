// rational.hpp
//
// Minimal exact rational, enough for scale factors and the cross-edge
// counting identities. Always stored reduced with den > 0.

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace jeqp {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_integer() const { return den == 1; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator==(const Rational& r, std::int64_t v) {
    return r.den == 1 && r.num == v;
  }

  std::string str() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace jeqp
