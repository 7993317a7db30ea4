#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "error.hpp"

namespace cyclotl {

// Arithmetic in F_p for a prime p < 2^63.
namespace detail {
__extension__ using uint128 = unsigned __int128;
}  // namespace detail

class prime_field {
 public:
  using value_type = std::uint64_t;

  explicit prime_field(std::uint64_t p) : _p(p) {
    if (!is_prime(p)) {
      throw precondition_error("prime_field: " + std::to_string(p) + " is not prime");
    }
  }

  std::uint64_t characteristic() const noexcept { return _p; }

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1 % _p; }
  bool is_zero(value_type x) const noexcept { return x == 0; }

  value_type from_int(std::int64_t x) const noexcept {
    auto r = x % static_cast<std::int64_t>(_p);
    return static_cast<value_type>(r < 0 ? r + static_cast<std::int64_t>(_p) : r);
  }

  value_type add(value_type a, value_type b) const noexcept {
    value_type s = a + b;
    return s >= _p ? s - _p : s;
  }
  value_type sub(value_type a, value_type b) const noexcept {
    return a >= b ? a - b : a + _p - b;
  }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : _p - a; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>(static_cast<detail::uint128>(a) * b % _p);
  }
  value_type pow(value_type a, std::uint64_t e) const noexcept {
    value_type r = one();
    while (e > 0) {
      if (e & 1) {
        r = mul(r, a);
      }
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  value_type inv(value_type a) const {
    if (a == 0) {
      throw precondition_error("prime_field: inverse of zero");
    }
    return pow(a, _p - 2);
  }

  // Multiplicative order of a nonzero element.
  std::uint64_t order(value_type a) const {
    if (a == 0) {
      throw precondition_error("prime_field: zero has no multiplicative order");
    }
    std::uint64_t n = _p - 1;
    std::uint64_t result = n;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
      if (n % q == 0) {
        while (n % q == 0) {
          n /= q;
        }
        while (result % q == 0 && pow(a, result / q) == 1) {
          result /= q;
        }
      }
    }
    if (n > 1 && pow(a, result / n) == 1) {
      result /= n;
    }
    return result;
  }

  static bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t q = 2; q * q <= n; ++q) {
      if (n % q == 0) {
        return false;
      }
    }
    return true;
  }

  friend bool operator==(prime_field const&, prime_field const&) = default;

 private:
  std::uint64_t _p;
};

// Arithmetic in Q with arbitrary precision.
class rational_field {
 public:
  using value_type = rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type const& x) const { return x == 0; }
  value_type from_int(std::int64_t x) const { return x; }
  value_type add(value_type const& a, value_type const& b) const { return a + b; }
  value_type sub(value_type const& a, value_type const& b) const { return a - b; }
  value_type neg(value_type const& a) const { return -a; }
  value_type mul(value_type const& a, value_type const& b) const { return a * b; }
  value_type pow(value_type a, std::uint64_t e) const {
    value_type r = 1;
    while (e > 0) {
      if (e & 1) {
        r *= a;
      }
      a *= a;
      e >>= 1;
    }
    return r;
  }
  value_type inv(value_type const& a) const {
    if (a == 0) {
      throw precondition_error("rational_field: inverse of zero");
    }
    return 1 / a;
  }
};

// A field together with a chosen delta. Kinds: rationals; F_p; F_p with a
// root of unity zeta of order exactly m; and generic, a stand-in for a
// transcendental delta realised as a random element of F_{2^31-1} with a
// second random element kept for a rank re-check.
struct field_spec {
  enum class kind_t { rational, prime, prime_with_root, generic };

  kind_t kind = kind_t::rational;
  std::uint64_t p = 0;
  std::uint32_t root_order = 0;
  std::uint64_t zeta = 0;
  rational delta_q = 0;
  std::uint64_t delta_p = 0;
  std::uint64_t delta_alt = 0;

  static constexpr std::uint64_t generic_prime = 2147483647u;

  static field_spec rational_delta(rational delta) {
    field_spec f;
    f.kind = kind_t::rational;
    f.delta_q = std::move(delta);
    return f;
  }

  static field_spec prime_delta(std::uint64_t p, std::int64_t delta) {
    prime_field field(p);
    field_spec f;
    f.kind = kind_t::prime;
    f.p = p;
    f.delta_p = field.from_int(delta);
    return f;
  }

  // F_p with zeta of order exactly m; delta defaults to zeta^t.
  static field_spec with_root(std::uint64_t p, std::uint32_t m, std::uint64_t zeta,
                              std::uint64_t t = 1) {
    prime_field field(p);
    if (m == 0 || (p - 1) % m != 0) {
      throw precondition_error("with_root: m must divide p-1");
    }
    if (zeta == 0 || zeta >= p || field.order(zeta) != m) {
      throw precondition_error("with_root: zeta must have multiplicative order m");
    }
    field_spec f;
    f.kind = kind_t::prime_with_root;
    f.p = p;
    f.root_order = m;
    f.zeta = zeta;
    f.delta_p = field.pow(zeta, t);
    return f;
  }

  static field_spec generic(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(2, generic_prime - 1);
    field_spec f;
    f.kind = kind_t::generic;
    f.p = generic_prime;
    f.delta_p = pick(rng);
    do {
      f.delta_alt = pick(rng);
    } while (f.delta_alt == f.delta_p);
    return f;
  }

  // Same field, different delta (prime kinds take delta mod p).
  field_spec with_delta_p(std::uint64_t delta) const {
    field_spec f = *this;
    f.delta_p = delta % (p == 0 ? 1 : p);
    return f;
  }

  bool is_rational() const noexcept { return kind == kind_t::rational; }
  bool is_generic() const noexcept { return kind == kind_t::generic; }

  // Characteristic; nullopt stands for characteristic zero. Generic delta
  // models a transcendental over Q and so reports zero.
  std::optional<std::uint64_t> characteristic() const noexcept {
    if (kind == kind_t::rational || kind == kind_t::generic) {
      return std::nullopt;
    }
    return p;
  }

  std::string describe() const {
    switch (kind) {
      case kind_t::rational:
        return "Q delta=" + delta_q.str();
      case kind_t::prime:
        return "F_" + std::to_string(p) + " delta=" + std::to_string(delta_p);
      case kind_t::prime_with_root:
        return "F_" + std::to_string(p) + " zeta=" + std::to_string(zeta) + " (order " +
               std::to_string(root_order) + ") delta=" + std::to_string(delta_p);
      case kind_t::generic:
        return "generic delta in F_" + std::to_string(p);
    }
    return {};
  }
};

// Smallest prime p > max(n, 3) with m | p-1.
inline std::uint64_t auto_prime(std::uint64_t n, std::uint64_t m) {
  if (m == 0) {
    throw precondition_error("auto_prime: m must be positive");
  }
  for (std::uint64_t p = std::max<std::uint64_t>(n, 3) + 1;; ++p) {
    if ((p - 1) % m == 0 && prime_field::is_prime(p)) {
      return p;
    }
  }
}

// Smallest element of F_p of multiplicative order exactly m.
inline std::uint64_t smallest_root_of_unity(std::uint64_t p, std::uint64_t m) {
  prime_field field(p);
  if (m == 0 || (p - 1) % m != 0) {
    throw precondition_error("smallest_root_of_unity: m must divide p-1");
  }
  for (std::uint64_t z = 1; z < p; ++z) {
    if (field.order(z) == m) {
      return z;
    }
  }
  throw precondition_error("smallest_root_of_unity: no element of order m");
}

template <typename Value>
using matrix = std::vector<std::vector<Value>>;

// Rank by Gaussian elimination over a field.
template <typename Field>
std::size_t rank(Field const& field, matrix<typename Field::value_type> a) {
  std::size_t const rows = a.size();
  std::size_t const cols = rows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && field.is_zero(a[pivot][c])) {
      ++pivot;
    }
    if (pivot == rows) {
      continue;
    }
    std::swap(a[pivot], a[r]);
    auto inv = field.inv(a[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (field.is_zero(a[i][c])) {
        continue;
      }
      auto factor = field.mul(a[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) {
        a[i][j] = field.sub(a[i][j], field.mul(factor, a[r][j]));
      }
    }
    ++r;
  }
  return r;
}

// Rank of an integer matrix by fraction-free (Bareiss) elimination.
inline std::size_t integer_rank(matrix<big_int> a) {
  std::size_t const rows = a.size();
  std::size_t const cols = rows == 0 ? 0 : a[0].size();
  big_int previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) {
      ++pivot;
    }
    if (pivot == rows) {
      continue;
    }
    std::swap(a[pivot], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / previous;
      }
      a[i][c] = 0;
    }
    previous = a[r][c];
    ++r;
  }
  return r;
}

// Rank of a rational matrix: rows are cleared of denominators first.
inline std::size_t rank(rational_field const&, matrix<rational> const& a) {
  matrix<big_int> b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    big_int scale = 1;
    for (auto const& x : a[i]) {
      big_int d = boost::multiprecision::denominator(x);
      scale = scale / boost::multiprecision::gcd(scale, d) * d;
    }
    b[i].reserve(a[i].size());
    for (auto const& x : a[i]) {
      b[i].push_back(boost::multiprecision::numerator(x) * (scale / boost::multiprecision::denominator(x)));
    }
  }
  return integer_rank(std::move(b));
}

}  // namespace cyclotl
