#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "combinatorics.hpp"
#include "error.hpp"

namespace cyclotl {

// Largest r with r*r <= n.
inline std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) {
    --r;
  }
  while ((r + 1) * (r + 1) <= n) {
    ++r;
  }
  return r;
}

// An element a + b sqrt(d) of Q(sqrt(d)) for a fixed non-negative integer d,
// with exact sign and comparison.
class quadratic_surd {
 public:
  quadratic_surd() = default;
  quadratic_surd(rational a, rational b, std::uint64_t d) : _a(std::move(a)), _b(std::move(b)), _d(d) {
    std::uint64_t r = isqrt(d);
    if (r * r == d) {
      _a += _b * r;
      _b = 0;
    }
  }
  static quadratic_surd constant(rational a, std::uint64_t d) { return {std::move(a), 0, d}; }
  static quadratic_surd root(std::uint64_t d) { return {0, 1, d}; }

  rational const& a() const noexcept { return _a; }
  rational const& b() const noexcept { return _b; }
  std::uint64_t radicand() const noexcept { return _d; }

  int sign() const {
    int sa = _a.sign();
    int sb = _b.sign();
    if (sb == 0) {
      return sa;
    }
    if (sa == 0 || sa == sb) {
      return sa == 0 ? sb : sa;
    }
    // Opposite signs: compare a^2 with b^2 d.
    rational diff = _a * _a - _b * _b * _d;
    return diff.sign() == 0 ? 0 : (diff.sign() > 0 ? sa : sb);
  }

  friend quadratic_surd operator+(quadratic_surd const& x, quadratic_surd const& y) {
    check(x, y);
    return {x._a + y._a, x._b + y._b, common(x, y)};
  }
  friend quadratic_surd operator-(quadratic_surd const& x, quadratic_surd const& y) {
    check(x, y);
    return {x._a - y._a, x._b - y._b, common(x, y)};
  }
  friend quadratic_surd operator*(quadratic_surd const& x, quadratic_surd const& y) {
    check(x, y);
    std::uint64_t d = common(x, y);
    return {x._a * y._a + x._b * y._b * d, x._a * y._b + x._b * y._a, d};
  }
  friend quadratic_surd operator/(quadratic_surd const& x, quadratic_surd const& y) {
    check(x, y);
    std::uint64_t d = common(x, y);
    rational norm = y._a * y._a - y._b * y._b * d;
    if (norm == 0) {
      throw precondition_error("quadratic_surd: division by zero");
    }
    quadratic_surd conj{y._a / norm, -y._b / norm, d};
    return x * conj;
  }

  friend bool operator<(quadratic_surd const& x, quadratic_surd const& y) { return (x - y).sign() < 0; }
  friend bool operator<=(quadratic_surd const& x, quadratic_surd const& y) { return (x - y).sign() <= 0; }
  friend bool operator==(quadratic_surd const& x, quadratic_surd const& y) { return (x - y).sign() == 0; }

  double to_double() const {
    return _a.convert_to<double>() + _b.convert_to<double>() * std::sqrt(static_cast<double>(_d));
  }

  // "a" or "a + b*sqrt(d)" with rationals in lowest terms.
  std::string str() const {
    if (_b == 0) {
      return _a.str();
    }
    std::string root = "sqrt(" + std::to_string(_d) + ")";
    std::string out = _a == 0 ? "" : _a.str() + (_b > 0 ? " + " : " - ");
    rational b = (_a == 0) ? _b : abs(_b);
    return out + b.str() + "*" + root;
  }

 private:
  static void check(quadratic_surd const& x, quadratic_surd const& y) {
    if (x._b != 0 && y._b != 0 && x._d != y._d) {
      throw precondition_error("quadratic_surd: different radicands");
    }
  }
  static std::uint64_t common(quadratic_surd const& x, quadratic_surd const& y) {
    return x._b != 0 ? x._d : y._d;
  }

  rational _a = 0;
  rational _b = 0;
  std::uint64_t _d = 0;
};

}  // namespace cyclotl
