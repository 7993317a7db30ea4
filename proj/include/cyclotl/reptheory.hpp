#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cells.hpp"
#include "combinatorics.hpp"
#include "diagram.hpp"
#include "error.hpp"
#include "field.hpp"
#include "surd.hpp"

namespace cyclotl {

// A non-negative integer or infinity (nullopt).
using extended = std::optional<std::uint64_t>;

inline std::string to_string(extended x) { return x ? std::to_string(*x) : "inf"; }

// U_k(delta) by U_0 = 1, U_1 = X, U_k = X U_{k-1} - U_{k-2}.
template <typename Field>
typename Field::value_type chebyshev(Field const& field, typename Field::value_type const& delta,
                                     std::size_t k) {
  auto prev = field.one();
  if (k == 0) {
    return prev;
  }
  auto curr = delta;
  for (std::size_t i = 2; i <= k; ++i) {
    auto next = field.sub(field.mul(delta, curr), prev);
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

// Standard: l = min{k >= 2 : U_{k-1}(delta) = 0}. Shifted: the minimal
// l >= 0 with U_{l+1}(delta) = 0, which is the standard value minus 2.
enum class convention { standard, shifted };

inline std::string to_string(convention c) { return c == convention::standard ? "standard" : "shifted"; }

struct quantum_characteristic_result {
  extended value;
  // True when the search stopped at the cutoff rather than proving infinity.
  bool cutoff_reached = false;
  convention used = convention::standard;
};

inline constexpr std::size_t default_quantum_cutoff = 4096;

inline quantum_characteristic_result quantum_characteristic(field_spec const& f, convention c,
                                                            std::size_t cutoff = default_quantum_cutoff) {
  quantum_characteristic_result out;
  out.used = c;
  if (f.is_generic()) {
    return out;
  }
  // Index k of the first vanishing U_k with k >= 1.
  std::optional<std::size_t> first;
  bool periodic = false;
  auto scan = [&](auto const& field, auto const& delta, std::size_t limit) {
    auto prev = field.one();
    auto curr = delta;
    for (std::size_t k = 1; k <= limit; ++k) {
      if (field.is_zero(curr)) {
        first = k;
        return;
      }
      auto next = field.sub(field.mul(delta, curr), prev);
      prev = std::move(curr);
      curr = std::move(next);
      // The recurrence is invertible, so a repeat of (U_0, U_1) means the
      // sequence cycles without ever vanishing.
      if (prev == field.one() && curr == delta) {
        periodic = true;
        return;
      }
    }
  };
  if (f.is_rational()) {
    rational_field field;
    // 2 cos(pi j / l) is rational only at 0, +-1 and +-2, so a rational
    // delta has U_1 = 0, U_2 = 0 or no vanishing U_k at all.
    scan(field, f.delta_q, std::min<std::size_t>(cutoff, 2));
  } else {
    prime_field field(f.p);
    scan(field, f.delta_p, cutoff);
  }
  if (!first) {
    bool proven = periodic || (f.is_rational() && cutoff >= 2);
    out.cutoff_reached = !proven;
    return out;
  }
  std::uint64_t standard = *first + 1;
  out.value = c == convention::standard ? standard : standard - 2;
  return out;
}

// Expansion x = x_0 + sum_{i >= 1} l p^(i-1) x_i with 0 <= x_0 < l and
// 0 <= x_i < p. digits[i] holds x_i.
struct lp_profile {
  extended l;
  extended p;
  std::vector<std::uint64_t> digits;

  std::uint64_t digit(std::size_t i) const { return i < digits.size() ? digits[i] : 0; }

  std::uint64_t reconstruct() const {
    if (!l) {
      return digit(0);
    }
    std::uint64_t x = digit(0);
    std::uint64_t scale = *l;
    for (std::size_t i = 1; i < digits.size(); ++i) {
      x += scale * digits[i];
      if (p) {
        scale *= *p;
      }
    }
    return x;
  }
};

inline void validate_lp(extended l, extended p) {
  if (l && *l < 1) {
    throw precondition_error("lp expansion: l must be at least 1");
  }
  if (p && !prime_field::is_prime(*p)) {
    throw precondition_error("lp expansion: p must be prime or infinite");
  }
}

inline lp_profile lp_expansion(std::uint64_t x, extended l, extended p) {
  validate_lp(l, p);
  lp_profile out{l, p, {}};
  if (!l) {
    out.digits.push_back(x);
    return out;
  }
  out.digits.push_back(x % *l);
  std::uint64_t q = x / *l;
  if (!p) {
    out.digits.push_back(q);
    return out;
  }
  while (q > 0) {
    out.digits.push_back(q % *p);
    q /= *p;
  }
  return out;
}

inline constexpr std::uint64_t infinite_valuation = ~std::uint64_t{0};

// Position of the lowest nonzero digit of the l,p-adic expansion:
// 0 when l does not divide x, otherwise 1 + nu_p(x / l). Zero has infinite
// valuation.
inline std::uint64_t nu_lp(std::uint64_t x, extended l, extended p) {
  validate_lp(l, p);
  if (x == 0) {
    return infinite_valuation;
  }
  if (!l || x % *l != 0) {
    return 0;
  }
  std::uint64_t q = x / *l;
  std::uint64_t v = 1;
  if (p) {
    while (q % *p == 0) {
      q /= *p;
      ++v;
    }
  }
  return v;
}

// Digit-wise x <= y.
inline bool digit_le(std::uint64_t x, std::uint64_t y, extended l, extended p) {
  lp_profile a = lp_expansion(x, l, p);
  lp_profile b = lp_expansion(y, l, p);
  std::size_t len = std::max(a.digits.size(), b.digits.size());
  for (std::size_t i = 0; i < len; ++i) {
    if (a.digit(i) > b.digit(i)) {
      return false;
    }
  }
  return true;
}

// Digit-wise x <= y with equal valuations and equal digits at that position.
inline bool digit_le_strict_match(std::uint64_t x, std::uint64_t y, extended l, extended p) {
  if (!digit_le(x, y, l, p)) {
    return false;
  }
  std::uint64_t vx = nu_lp(x, l, p);
  if (vx != nu_lp(y, l, p)) {
    return false;
  }
  if (vx == infinite_valuation) {
    return true;
  }
  return lp_expansion(x, l, p).digit(vx) == lp_expansion(y, l, p).digit(vx);
}

inline int e_coeff(std::uint64_t n, std::uint64_t k, extended l, extended p) {
  if ((n + k) % 2 != 0) {
    return 0;
  }
  std::uint64_t half = (n + k) / 2;
  std::uint64_t vk = nu_lp(k, l, p);
  std::uint64_t vh = nu_lp(half, l, p);
  if (vk == vh && digit_le_strict_match(k, half, l, p)) {
    return 1;
  }
  if (vk < vh && half >= 1 && digit_le(k, half - 1, l, p)) {
    return -1;
  }
  return 0;
}

inline void require_cell_index(std::size_t n, std::size_t k) {
  if (k > n || (n - k) % 2 != 0) {
    throw precondition_error("need 0 <= k <= n and k = n mod 2");
  }
}

// sum_{r=0}^{c(k)} e_{n-2r+1,k+1} |B_{n-2r}^n|. Returns nullopt when the
// expansion is undefined (quantum characteristic 0 under the shifted
// convention).
inline std::optional<big_int> dim_simple_formula(std::size_t n, std::size_t k, extended l,
                                                 extended p) {
  require_cell_index(n, k);
  if (l && *l == 0) {
    return std::nullopt;
  }
  big_int total = 0;
  std::size_t c = (n - k) / 2;
  for (std::size_t r = 0; r <= c; ++r) {
    int e = e_coeff(n - 2 * r + 1, k + 1, l, p);
    if (e != 0) {
      total += e * half_diagram_count(static_cast<std::int64_t>(n), static_cast<std::int64_t>(n - 2 * r));
    }
  }
  return total;
}

inline std::optional<big_int> dim_simple_formula(std::size_t n, std::size_t k, field_spec const& f,
                                                 convention c = convention::standard) {
  extended l = quantum_characteristic(f, c).value;
  return dim_simple_formula(n, k, l, f.characteristic());
}

// B_k^n: skeletons from k bottom points to n top points with no caps.
inline std::vector<skeleton> half_diagrams(std::size_t n, std::size_t k) {
  require_cell_index(n, k);
  std::vector<skeleton> out;
  for (auto& s : enumerate_skeletons(k, n)) {
    if (s.through() == k) {
      out.push_back(std::move(s));
    }
  }
  return out;
}

// Pairing data shared by the Gram matrices: for x, y in B_k^n, whether
// x* y = Id_k and the number of loops Phi(x*, y).
struct cell_pairing {
  std::vector<skeleton> basis;
  std::vector<std::vector<std::optional<std::uint64_t>>> loops;
};

inline cell_pairing pairing(std::size_t n, std::size_t k) {
  cell_pairing out;
  out.basis = half_diagrams(n, k);
  skeleton const id = skeleton::identity(k);
  std::size_t const size = out.basis.size();
  out.loops.assign(size, std::vector<std::optional<std::uint64_t>>(size));
  for (std::size_t i = 0; i < size; ++i) {
    skeleton xs = involute(out.basis[i]);
    for (std::size_t j = 0; j < size; ++j) {
      auto [product, loops] = compose_skeletons(xs, out.basis[j]);
      if (product == id) {
        out.loops[i][j] = loops;
      }
    }
  }
  return out;
}

// Entry delta^Phi(x*, y) when x* y = Id_k, else 0.
template <typename Field>
matrix<typename Field::value_type> gram_matrix(std::size_t n, std::size_t k, Field const& field,
                                               typename Field::value_type const& delta) {
  cell_pairing pr = pairing(n, k);
  std::size_t const size = pr.basis.size();
  matrix<typename Field::value_type> g(size, std::vector<typename Field::value_type>(size, field.zero()));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      if (pr.loops[i][j]) {
        g[i][j] = field.pow(delta, *pr.loops[i][j]);
      }
    }
  }
  return g;
}

// Rank of the Gram matrix in the field described by f. Generic delta is
// ranked at two random points and rejected if they disagree.
inline std::size_t gram_rank(std::size_t n, std::size_t k, field_spec const& f) {
  if (f.is_rational()) {
    rational_field field;
    return rank(field, gram_matrix(n, k, field, f.delta_q));
  }
  prime_field field(f.p);
  std::size_t r = rank(field, gram_matrix(n, k, field, f.delta_p));
  if (f.is_generic()) {
    std::size_t again = rank(field, gram_matrix(n, k, field, f.delta_alt));
    if (again != r) {
      throw std::runtime_error("gram_rank: generic rank differs between two random points");
    }
  }
  return r;
}

// The character-twisted sandwich form of mTL_n: entry zeta^(t i) where
// (x, 0)* (y, 0) = (Id_k, i) in mTL_n, else 0.
inline matrix<std::uint64_t> monoid_gram(std::size_t n, std::uint32_t m, std::size_t k, std::uint32_t t,
                                         field_spec const& f) {
  if (f.kind != field_spec::kind_t::prime_with_root || f.root_order != m) {
    throw precondition_error("monoid_gram: field must contain a root of unity of order m");
  }
  if (t >= m) {
    throw precondition_error("monoid_gram: character index must be below m");
  }
  prime_field field(f.p);
  std::vector<skeleton> basis = half_diagrams(n, k);
  diagram const id = identity(k, m);
  std::size_t const size = basis.size();
  matrix<std::uint64_t> g(size, std::vector<std::uint64_t>(size, 0));
  for (std::size_t i = 0; i < size; ++i) {
    diagram xs{involute(basis[i]), 0, m};
    for (std::size_t j = 0; j < size; ++j) {
      diagram product = compose(xs, diagram{basis[j], 0, m});
      if (product.shape() == id.shape()) {
        g[i][j] = field.pow(f.zeta, (std::uint64_t{t} * product.loops()) % m);
      }
    }
  }
  return g;
}

inline std::size_t monoid_simple_dim(std::size_t n, std::uint32_t m, std::size_t k, std::uint32_t t,
                                     field_spec const& f) {
  return rank(prime_field(f.p), monoid_gram(n, m, k, t, f));
}

// Semisimple dimension (|L| / |H|) dim K = |B_k^n| dim K.
inline big_int ssdim(std::size_t n, std::size_t k, std::uint64_t dim_k) {
  require_cell_index(n, k);
  return half_diagram_count(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)) * dim_k;
}

struct ss_range {
  big_int lower;
  big_int upper;
};

// |B_k^n| <= ssdim <= max(m-1, 1) |B_k^n|.
inline ss_range ss_bounds(std::size_t n, std::uint32_t m, std::size_t k) {
  big_int b = ssdim(n, k, 1);
  return {b, b * std::max<std::uint32_t>(m == 0 ? 1 : m - 1, 1)};
}

// Largest integer f with f <= n/2 - sqrt(n).
inline std::int64_t floor_half_minus_root(std::uint64_t n) {
  auto f = static_cast<std::int64_t>(n / 2);
  while (f >= -1) {
    auto gap = static_cast<std::int64_t>(n) - 2 * f;
    if (gap >= 0 && static_cast<std::uint64_t>(gap * gap) >= 4 * n) {
      return f;
    }
    --f;
  }
  return f;
}

// Smallest integer k with k >= sqrt(n+2) - 2, and at least 0.
inline std::uint64_t ceil_root_minus_two(std::uint64_t n) {
  std::uint64_t k = 0;
  while ((k + 2) * (k + 2) < n + 2) {
    ++k;
  }
  return k;
}

// Largest integer l with l <= 2 sqrt(n).
inline std::uint64_t floor_two_root(std::uint64_t n) { return isqrt(4 * n); }

struct gap_report {
  std::size_t n = 0;
  std::uint32_t m = 0;
  std::size_t k = 0;
  std::size_t l = 0;
  quadratic_surd gap_lower;
  quadratic_surd ssgap_lower;
  std::optional<rational> faith_lower;
  double gapr_lower = 0;
  double ssgapr_lower = 0;
  big_int monoid_size = 0;
  std::optional<big_int> min_simple_dim;
  big_int min_ssdim = 0;
  bool hypotheses_hold = false;
  bool characteristic_zero_regime = false;
  bool bound_respected = true;
  std::vector<std::string> warnings;
};

// |mTL_n^{k<=l}| including any adjoined identity and zero.
inline big_int truncation_size(truncation_spec const& spec) {
  big_int total = 0;
  for (std::size_t j = spec.lowest(); j <= spec.highest(); j += 2) {
    big_int b = half_diagram_count(static_cast<std::int64_t>(spec.n), static_cast<std::int64_t>(j));
    total += spec.m * b * b;
  }
  return total + (spec.adjoins_identity() ? 1 : 0) + (spec.adjoins_zero() ? 1 : 0);
}

// Minimal simple dimension over retained apexes j and characters t, using
// delta = zeta^t. One-dimensional simples with trivial character at the
// extreme cells of an untruncated end realise the trivial representations
// and are skipped.
inline std::optional<big_int> min_simple_dim(truncation_spec const& spec, field_spec const& f,
                                             convention c = convention::standard) {
  std::optional<big_int> best;
  for (std::size_t j = spec.lowest(); j <= spec.highest(); j += 2) {
    for (std::uint32_t t = 0; t < spec.m; ++t) {
      field_spec ft = f.with_delta_p(prime_field(f.p).pow(f.zeta, t));
      std::optional<big_int> d = dim_simple_formula(spec.n, j, ft, c);
      if (!d) {
        return std::nullopt;
      }
      bool bottom_end = j == spec.n && !spec.adjoins_identity();
      bool top_end = j == spec.n % 2 && !spec.adjoins_zero();
      if (t == 0 && *d == 1 && (bottom_end || top_end)) {
        continue;
      }
      if (*d == 0) {
        continue;
      }
      if (!best || *d < *best) {
        best = *d;
      }
    }
  }
  return best;
}

// Closed-form bounds on the gap measures of mTL_n^{k<=l}, with the minimal
// simple dimension for comparison when f carries a root of unity of order m.
inline gap_report gap_bounds(truncation_spec const& spec, std::optional<field_spec> const& f,
                             convention c = convention::standard) {
  spec.validate();
  gap_report out;
  out.n = spec.n;
  out.m = spec.m;
  out.k = spec.k_min;
  out.l = spec.l_max;
  std::uint64_t const n = spec.n;
  auto const root = quadratic_surd::root(n);
  auto constant = [&](rational x) { return quadratic_surd::constant(std::move(x), n); };

  big_int low = binomial(static_cast<std::int64_t>(n), floor_half_minus_root(n));
  out.gap_lower = constant(4 * rational(low)) /
                  ((constant(n + 2) + constant(2) * root) * (constant(n + 4) + constant(2) * root));

  bool const lower_hypothesis = (spec.k_min + 2) * (spec.k_min + 2) >= n + 2;
  bool const upper_hypothesis = spec.l_max * spec.l_max <= 4 * n;
  bool const char_zero = !f || !f->characteristic();
  out.characteristic_zero_regime = char_zero && spec.lowest() == n % 2;

  if (out.characteristic_zero_regime) {
    out.ssgap_lower = constant(rational(binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(n / 2)), n));
    out.faith_lower = rational(6 * binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(n / 2) - 1), n + 4);
    out.hypotheses_hold = upper_hypothesis;
  } else {
    out.ssgap_lower = (constant(4) * root - constant(2)) * constant(rational(low)) /
                      (constant(n + 1) + constant(2) * root);
    out.hypotheses_hold = lower_hypothesis && upper_hypothesis;
  }
  if (!upper_hypothesis) {
    out.warnings.push_back("l exceeds 2 sqrt(n)");
  }
  if (!lower_hypothesis && !out.characteristic_zero_regime) {
    out.warnings.push_back("k is below sqrt(n+2) - 2");
  }

  out.monoid_size = truncation_size(spec);
  double root_size = std::sqrt(out.monoid_size.convert_to<double>());
  out.gapr_lower = out.gap_lower.to_double() / root_size;
  out.ssgapr_lower = out.ssgap_lower.to_double() / root_size;

  out.min_ssdim = ssdim(n, spec.lowest(), 1);
  for (std::size_t j = spec.lowest(); j <= spec.highest(); j += 2) {
    big_int s = ssdim(n, j, 1);
    bool trivial = (j == n && !spec.adjoins_identity()) || (j == n % 2 && !spec.adjoins_zero());
    if (!(trivial && s == 1) && s < out.min_ssdim) {
      out.min_ssdim = s;
    }
  }

  if (f) {
    if (f->kind != field_spec::kind_t::prime_with_root || f->root_order != spec.m) {
      throw precondition_error("gap_bounds: field must contain a root of unity of order m");
    }
    if (spec.m % f->p == 0) {
      out.warnings.push_back("characteristic divides m");
    }
    out.min_simple_dim = min_simple_dim(spec, *f, c);
    if (out.hypotheses_hold && out.min_simple_dim) {
      out.bound_respected = out.gap_lower <= constant(rational(*out.min_simple_dim));
    }
  }
  if (out.hypotheses_hold) {
    out.bound_respected = out.bound_respected && out.ssgap_lower <= constant(rational(out.min_ssdim));
  }
  return out;
}

// One line of a dimension table.
struct dim_report {
  std::size_t n = 0;
  std::uint32_t m = 0;
  std::size_t k = 0;
  std::uint32_t t = 0;
  std::optional<big_int> formula_dim;
  std::optional<std::size_t> oracle_dim;
  big_int ssdim_value = 0;
  convention used = convention::standard;
  std::string notes;

  bool consistent() const {
    return formula_dim && oracle_dim && *formula_dim == big_int(*oracle_dim);
  }
};

// Formula and Gram-oracle dimensions of L(k, K_t) for every apex k and
// character t of mTL_n over F_p with zeta of order m.
inline std::vector<dim_report> dims_table(std::size_t n, field_spec const& f,
                                          convention c = convention::standard) {
  if (f.kind != field_spec::kind_t::prime_with_root) {
    throw precondition_error("dims_table: field must contain a root of unity");
  }
  std::uint32_t const m = f.root_order;
  prime_field field(f.p);
  std::vector<dim_report> out;
  for (std::size_t k = n % 2; k <= n; k += 2) {
    for (std::uint32_t t = 0; t < m; ++t) {
      dim_report row;
      row.n = n;
      row.m = m;
      row.k = k;
      row.t = t;
      row.used = c;
      field_spec ft = f.with_delta_p(field.pow(f.zeta, t));
      row.formula_dim = dim_simple_formula(n, k, ft, c);
      row.oracle_dim = monoid_simple_dim(n, m, k, t, f);
      row.ssdim_value = ssdim(n, k, 1);
      if (!row.formula_dim) {
        row.notes = "formula undefined for this quantum characteristic";
      } else if (!row.consistent()) {
        row.notes = "formula and oracle differ";
      }
      out.push_back(std::move(row));
    }
  }
  return out;
}

}  // namespace cyclotl
