#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cyclotl/reptheory.hpp"
#include "oracles.hpp"

using namespace cyclotl;

namespace {

// First k >= 1 with U_k(delta) = 0 in F_p, by the plain recurrence.
std::optional<std::uint64_t> first_zero_mod_p(std::uint64_t p, std::uint64_t delta) {
  std::uint64_t prev = 1;
  std::uint64_t curr = delta % p;
  for (std::uint64_t k = 1; k <= 4 * p + 4; ++k) {
    if (curr == 0) {
      return k;
    }
    std::uint64_t next = (delta * curr % p + p - prev) % p;
    prev = curr;
    curr = next;
  }
  return std::nullopt;
}

// Rank over Q by textbook elimination on rationals.
std::size_t rational_rank(matrix<rational> a) {
  std::size_t r = 0;
  std::size_t const cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.size() && a[pivot][c] == 0) {
      ++pivot;
    }
    if (pivot == a.size()) {
      continue;
    }
    std::swap(a[pivot], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i != r && a[i][c] != 0) {
        rational f = a[i][c] / a[r][c];
        for (std::size_t j = 0; j < cols; ++j) {
          a[i][j] -= f * a[r][j];
        }
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST(QuantumCharacteristic, MatchesRecurrenceModP) {
  for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
    for (std::uint64_t delta = 0; delta < p; ++delta) {
      auto f = field_spec::prime_delta(p, static_cast<std::int64_t>(delta));
      auto want = first_zero_mod_p(p, delta);
      auto standard = quantum_characteristic(f, convention::standard);
      auto shifted = quantum_characteristic(f, convention::shifted);
      EXPECT_FALSE(standard.cutoff_reached);
      if (want) {
        EXPECT_EQ(standard.value, *want + 1) << p << " " << delta;
        EXPECT_EQ(shifted.value, *want - 1);
      } else {
        EXPECT_FALSE(standard.value) << p << " " << delta;
        EXPECT_FALSE(shifted.value);
      }
    }
  }
}

TEST(QuantumCharacteristic, RationalAndGeneric) {
  auto qc = [](rational d) {
    return quantum_characteristic(field_spec::rational_delta(d), convention::standard);
  };
  EXPECT_EQ(qc(0).value, 2u);
  EXPECT_EQ(qc(1).value, 3u);
  EXPECT_EQ(qc(-1).value, 3u);
  EXPECT_FALSE(qc(2).value);
  EXPECT_FALSE(qc(2).cutoff_reached);
  EXPECT_FALSE(qc(rational(5, 2)).value);
  EXPECT_FALSE(qc(rational(1, 2)).value);
  EXPECT_FALSE(qc(rational(1, 2)).cutoff_reached);
  for (rational d : {rational(1, 2), rational(-2, 3), rational(3, 5), rational(7, 4)}) {
    rational prev = 1;
    rational curr = d;
    for (int k = 1; k < 60; ++k) {
      EXPECT_NE(curr, 0) << d << " " << k;
      rational next = d * curr - prev;
      prev = curr;
      curr = next;
    }
  }
  auto g = quantum_characteristic(field_spec::generic(3), convention::standard);
  EXPECT_FALSE(g.value);
  EXPECT_FALSE(g.cutoff_reached);
}

TEST(LpExpansion, ReconstructsAndBoundsDigits) {
  std::vector<extended> ls{1u, 2u, 3u, 5u, std::nullopt};
  std::vector<extended> ps{2u, 3u, 7u, std::nullopt};
  for (auto l : ls) {
    for (auto p : ps) {
      for (std::uint64_t x = 0; x < 400; ++x) {
        auto e = lp_expansion(x, l, p);
        EXPECT_EQ(e.reconstruct(), x);
        if (l) {
          EXPECT_LT(e.digit(0), *l);
          if (p) {
            for (std::size_t i = 1; i < e.digits.size(); ++i) {
              EXPECT_LT(e.digits[i], *p);
            }
          }
        }
      }
    }
  }
  EXPECT_THROW(lp_expansion(3, 0u, 2u), precondition_error);
  EXPECT_THROW(lp_expansion(3, 2u, 4u), precondition_error);
}

TEST(LpExpansion, Valuation) {
  EXPECT_EQ(nu_lp(0, 3u, 2u), infinite_valuation);
  EXPECT_EQ(nu_lp(5, 3u, 2u), 0u);
  EXPECT_EQ(nu_lp(3, 3u, 2u), 1u);
  EXPECT_EQ(nu_lp(12, 3u, 2u), 3u);
  EXPECT_EQ(nu_lp(12, 3u, std::nullopt), 1u);
  EXPECT_EQ(nu_lp(12, std::nullopt, std::nullopt), 0u);
}

TEST(ECoeff, RangeAndSemisimpleCase) {
  for (std::uint64_t n = 1; n < 40; ++n) {
    for (std::uint64_t k = 1; k <= n; ++k) {
      EXPECT_EQ(e_coeff(n, k, std::nullopt, std::nullopt), n == k ? 1 : 0);
      for (std::uint64_t l : {2u, 3u, 4u}) {
        for (extended p : {extended{2u}, extended{3u}, extended{}}) {
          int e = e_coeff(n, k, l, p);
          EXPECT_TRUE(e >= -1 && e <= 1);
          if (n == k) {
            EXPECT_EQ(e, 1);
          }
        }
      }
    }
  }
}

TEST(Pairing, MatchesStrandTracing) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t k = n % 2; k <= n; k += 2) {
      auto pr = pairing(n, k);
      EXPECT_EQ(big_int(pr.basis.size()), half_diagram_count(static_cast<std::int64_t>(n),
                                                             static_cast<std::int64_t>(k)));
      for (std::size_t i = 0; i < pr.basis.size(); ++i) {
        for (std::size_t j = 0; j < pr.basis.size(); ++j) {
          auto t = oracle::trace_compose(involute(pr.basis[i]), pr.basis[j]);
          bool is_id = t.result == skeleton::identity(k);
          EXPECT_EQ(pr.loops[i][j].has_value(), is_id);
          if (is_id) {
            EXPECT_EQ(*pr.loops[i][j], t.loops);
          }
        }
      }
    }
  }
}

TEST(Gram, RankMatchesIndependentElimination) {
  for (rational delta : {rational(0), rational(1), rational(2), rational(-3, 2)}) {
    for (std::size_t n = 1; n <= 7; ++n) {
      for (std::size_t k = n % 2; k <= n; k += 2) {
        rational_field field;
        auto g = gram_matrix(n, k, field, delta);
        EXPECT_EQ(gram_rank(n, k, field_spec::rational_delta(delta)), rational_rank(g));
      }
    }
  }
}

TEST(Gram, NondegenerateAwayFromRootsOfUnity) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t k = n % 2; k <= n; k += 2) {
      big_int b = half_diagram_count(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
      EXPECT_EQ(big_int(gram_rank(n, k, field_spec::rational_delta(2))), b);
      EXPECT_EQ(big_int(gram_rank(n, k, field_spec::generic(5))), b);
      EXPECT_EQ(dim_simple_formula(n, k, std::nullopt, std::nullopt), b);
    }
  }
}

TEST(Formula, AgreesWithGramAtDeltaOne) {
  // delta = 1 has l = 3 over Q.
  auto f = field_spec::rational_delta(1);
  for (std::size_t n = 1; n <= 9; ++n) {
    for (std::size_t k = n % 2; k <= n; k += 2) {
      EXPECT_EQ(dim_simple_formula(n, k, f), big_int(gram_rank(n, k, f))) << n << " " << k;
    }
  }
}

TEST(Formula, DimsTableMatchesOracle) {
  auto f = field_spec::with_root(7, 3, 2);
  for (auto const& row : dims_table(5, f)) {
    EXPECT_TRUE(row.consistent()) << row.k << " " << row.t;
  }
  EXPECT_THROW(dims_table(4, field_spec::prime_delta(7, 2)), precondition_error);
}

TEST(Roots, FieldHelpers) {
  EXPECT_EQ(auto_prime(8, 3), 13u);
  EXPECT_EQ(smallest_root_of_unity(13, 3), 3u);
  EXPECT_EQ(auto_prime(2, 2), 5u);
  EXPECT_THROW(field_spec::with_root(7, 4, 2), precondition_error);
  EXPECT_THROW(field_spec::with_root(7, 3, 3), precondition_error);
}

TEST(Gap, IntegerRootHelpers) {
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    long double r = std::sqrt(static_cast<long double>(n));
    EXPECT_EQ(floor_half_minus_root(n), static_cast<std::int64_t>(std::floor(n / 2.0L - r + 1e-12L)))
        << n;
    std::int64_t c = static_cast<std::int64_t>(std::ceil(std::sqrt(n + 2.0L) - 2 - 1e-12L));
    EXPECT_EQ(ceil_root_minus_two(n), static_cast<std::uint64_t>(std::max<std::int64_t>(c, 0))) << n;
    EXPECT_EQ(floor_two_root(n), static_cast<std::uint64_t>(std::floor(2 * r + 1e-12L))) << n;
  }
}

TEST(Gap, SixteenStrands) {
  auto r = gap_bounds({16, 5, 4, 8}, std::nullopt);
  // 4 C(16,4) / ((18 + 8)(20 + 8)) and (16 - 2) C(16,4) / (17 + 8).
  EXPECT_EQ(r.gap_lower, quadratic_surd::constant(10, 16));
  EXPECT_EQ(r.ssgap_lower, quadratic_surd::constant(rational(5096, 5), 16));
  EXPECT_TRUE(r.hypotheses_hold);
  EXPECT_TRUE(r.bound_respected);
  EXPECT_THROW(gap_bounds({6, 2, 5, 3}, std::nullopt), precondition_error);
}

TEST(Gap, BoundsAgainstDoubles) {
  for (std::size_t n = 4; n <= 30; ++n) {
    auto r = gap_bounds({n, 2, n % 2, n}, std::nullopt);
    long double s = std::sqrt(static_cast<long double>(n));
    std::int64_t f = floor_half_minus_root(n);
    long double low = binomial(static_cast<std::int64_t>(n), f).convert_to<long double>();
    long double want = 4 * low / ((n + 2 + 2 * s) * (n + 4 + 2 * s));
    EXPECT_NEAR(r.gap_lower.to_double(), static_cast<double>(want), 1e-9 * static_cast<double>(want));
  }
}

TEST(Surd, Arithmetic) {
  auto two = quadratic_surd::root(2);
  EXPECT_EQ(two * two, quadratic_surd::constant(2, 2));
  EXPECT_TRUE(quadratic_surd(rational(14, 10), 0, 2) < two);
  EXPECT_TRUE(two < quadratic_surd(rational(15, 10), 0, 2));
  EXPECT_EQ((quadratic_surd::constant(1, 2) / (quadratic_surd::constant(1, 2) + two)).str(),
            "-1 + 1*sqrt(2)");
  EXPECT_EQ(quadratic_surd::root(9), quadratic_surd::constant(3, 9));
}
