#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "diagram.hpp"
#include "error.hpp"
#include "monoid.hpp"

namespace cyclotl {

// mTL_n with its multiplication table; elements in enumeration order.
inline concrete_monoid<diagram> tl_monoid(std::size_t n, std::uint32_t m) {
  return make_monoid(enumerate_monoid(n, m),
                     [](diagram const& a, diagram const& b) { return compose(a, b); });
}

struct cell_sizes {
  std::uint64_t l_size;
  std::uint64_t r_size;
  std::uint64_t j_size;
  std::uint64_t h_size;
};

// Sizes of the cells of mTL_n with k through strands:
// |L| = |R| = m |B_k^n|, |J| = |L|^2 / m, |H| = m.
inline cell_sizes cell_sizes_structural(std::size_t n, std::uint32_t m, std::size_t k) {
  if (k > n || (n - k) % 2 != 0) {
    throw precondition_error("cell_sizes_structural: need 0 <= k <= n and k = n mod 2");
  }
  if (m == 0) {
    throw precondition_error("cell_sizes_structural: m must be positive");
  }
  big_int l = big_int(m) * half_diagram_count(static_cast<std::int64_t>(n),
                                              static_cast<std::int64_t>(k));
  return {narrow<std::uint64_t>(l), narrow<std::uint64_t>(l), narrow<std::uint64_t>(l * l / m),
          m};
}

// The idempotent (a, -Phi(a, a)) for a skeleton a with a a = a.
inline diagram idempotent_of_skeleton(skeleton const& a, std::uint32_t m) {
  if (m == 0) {
    throw precondition_error("idempotent_of_skeleton: m must be positive");
  }
  auto [product, loops] = compose_skeletons(a, a);
  if (!(product == a)) {
    throw precondition_error("idempotent_of_skeleton: skeleton is not idempotent");
  }
  return {a, (m - loops % m) % m, m};
}

// The generator (b, 1 - Phi(b, b)) of the H-cell of an idempotent e = (b, i).
inline diagram h_cell_generator(diagram const& e) {
  std::uint32_t const m = e.modulus();
  if (m == 0) {
    throw precondition_error("h_cell_generator: needs a cyclic modulus");
  }
  auto [product, loops] = compose_skeletons(e.shape(), e.shape());
  if (!(product == e.shape()) || !(compose(e, e) == e)) {
    throw precondition_error("h_cell_generator: not an idempotent");
  }
  return {e.shape(), (1 + m - loops % m) % m, m};
}

// mTL_n restricted to diagrams with k_min..l_max through strands.
struct truncation_spec {
  std::size_t n = 0;
  std::uint32_t m = 1;
  std::size_t k_min = 0;
  std::size_t l_max = 0;

  void validate() const {
    if (m == 0) {
      throw precondition_error("truncation: m must be positive");
    }
    if (k_min > l_max || l_max > n) {
      throw precondition_error("truncation: need k <= l <= n");
    }
    std::size_t lowest = n % 2;
    while (lowest < k_min) {
      lowest += 2;
    }
    if (lowest > l_max) {
      throw precondition_error("truncation: no through-strand count of the right parity in range");
    }
  }

  // Smallest and largest retained through-strand counts.
  std::size_t lowest() const {
    std::size_t j = n % 2;
    while (j < k_min) {
      j += 2;
    }
    return j;
  }
  std::size_t highest() const { return (l_max % 2 == n % 2) ? l_max : l_max - 1; }

  bool adjoins_identity() const { return highest() < n; }
  bool adjoins_zero() const { return lowest() > n % 2; }
};

// Element i < diagrams.size() is diagrams[i]; the adjoined identity and
// zero, when present, follow.
struct truncated_monoid {
  truncation_spec spec;
  std::vector<diagram> diagrams;
  finite_monoid table;
  std::optional<std::uint32_t> adjoined_identity;
  std::optional<std::uint32_t> adjoined_zero;

};

inline truncated_monoid truncate(truncation_spec const& spec) {
  spec.validate();
  truncated_monoid out;
  out.spec = spec;
  for (auto const& d : enumerate_monoid(spec.n, spec.m)) {
    std::size_t k = d.through();
    if (k >= spec.lowest() && k <= spec.highest()) {
      out.diagrams.push_back(d);
    }
  }
  auto count = static_cast<std::uint32_t>(out.diagrams.size());
  std::uint32_t size = count;
  if (spec.adjoins_identity()) {
    out.adjoined_identity = size++;
  }
  if (spec.adjoins_zero()) {
    out.adjoined_zero = size++;
  }
  if (size > brute_force_limit) {
    throw size_guard_error("truncate: too many elements");
  }
  std::unordered_map<diagram, std::uint32_t> index;
  for (std::uint32_t i = 0; i < count; ++i) {
    index.emplace(out.diagrams[i], i);
  }
  std::vector<std::uint32_t> table(std::size_t{size} * size);
  for (std::uint32_t a = 0; a < size; ++a) {
    for (std::uint32_t b = 0; b < size; ++b) {
      std::uint32_t c;
      if (out.adjoined_zero && (a == *out.adjoined_zero || b == *out.adjoined_zero)) {
        c = *out.adjoined_zero;
      } else if (out.adjoined_identity && a == *out.adjoined_identity) {
        c = b;
      } else if (out.adjoined_identity && b == *out.adjoined_identity) {
        c = a;
      } else {
        diagram d = compose(out.diagrams[a], out.diagrams[b]);
        if (d.through() < spec.lowest()) {
          c = *out.adjoined_zero;
        } else {
          c = index.at(d);
        }
      }
      table[std::size_t{a} * size + b] = c;
    }
  }
  std::uint32_t identity =
      out.adjoined_identity ? *out.adjoined_identity : index.at(cyclotl::identity(spec.n, spec.m));
  out.table = finite_monoid(size, std::move(table), identity, out.adjoined_zero);
  return out;
}

}  // namespace cyclotl
