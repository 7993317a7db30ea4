#pragma once

#include <cstdint>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace cyclotl {

using big_int = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

// Exact binomial coefficient; zero outside 0 <= k <= n.
inline big_int binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  big_int result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

inline big_int catalan(std::int64_t n) {
  if (n < 0) {
    return 0;
  }
  return binomial(2 * n, n) / (n + 1);
}

// Motzkin numbers M_0 = 1, M_1 = 1, M_2 = 2, M_3 = 4, ...
inline big_int motzkin(std::int64_t n) {
  big_int prev = 1;
  big_int curr = 1;
  if (n <= 0) {
    return n == 0 ? 1 : 0;
  }
  for (std::int64_t i = 2; i <= n; ++i) {
    big_int next = ((2 * i + 1) * curr + (3 * i - 3) * prev) / (i + 2);
    prev = curr;
    curr = next;
  }
  return curr;
}

// Number of half diagrams from n top points to k through strands without
// caps, i.e. |B_k^n| = (k+1)/(n-c+1) * C(n, c) with c = (n-k)/2.
inline big_int half_diagram_count(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n || (n - k) % 2 != 0) {
    throw precondition_error("half_diagram_count: need 0 <= k <= n and k = n mod 2");
  }
  std::int64_t c = (n - k) / 2;
  return (k + 1) * binomial(n, c) / (n - c + 1);
}

template <typename T>
T narrow(big_int const& x) {
  if (x < 0 || x > big_int(std::numeric_limits<T>::max())) {
    throw precondition_error("integer does not fit the requested width");
  }
  return x.convert_to<T>();
}

}  // namespace cyclotl
