#include <gtest/gtest.h>

#include <algorithm>
#include <unordered_set>

#include "cyclotl/combinatorics.hpp"
#include "cyclotl/diagram.hpp"
#include "oracles.hpp"

using namespace cyclotl;

TEST(Combinatorics, CatalanMatchesRecurrence) {
  auto table = oracle::catalan_table(20);
  for (std::int64_t n = 0; n <= 20; ++n) {
    EXPECT_EQ(catalan(n), big_int(table[n])) << n;
  }
}

TEST(Combinatorics, MotzkinInitialTerms) {
  std::vector<int> known{1, 1, 2, 4, 9, 21, 51, 127, 323};
  for (std::size_t n = 0; n < known.size(); ++n) {
    EXPECT_EQ(motzkin(static_cast<std::int64_t>(n)), known[n]);
  }
}

TEST(Combinatorics, HalfDiagramCountsSumToCentralBinomial) {
  // Every half diagram on n points has some number of through strands.
  for (std::int64_t n = 1; n <= 14; ++n) {
    big_int total = 0;
    for (std::int64_t k = n % 2; k <= n; k += 2) {
      total += half_diagram_count(n, k);
    }
    EXPECT_EQ(total, binomial(n, n / 2));
  }
  EXPECT_THROW(half_diagram_count(4, 1), precondition_error);
}

TEST(Skeleton, EnumerationCountsAreCatalan) {
  auto table = oracle::catalan_table(8);
  for (std::size_t n = 0; n <= 7; ++n) {
    auto all = enumerate_skeletons(n, n);
    EXPECT_EQ(all.size(), table[n]) << n;
    EXPECT_EQ(all.size(), oracle::noncrossing_matchings(2 * n)) << n;
    for (auto const& s : all) {
      EXPECT_TRUE(s.is_planar());
    }
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  }
}

TEST(Skeleton, RejectsCrossingsAndBadPoints) {
  EXPECT_THROW(skeleton(2, 2, {{1, -2}, {2, -1}}), precondition_error);
  EXPECT_THROW(skeleton(2, 2, {{1, 1}, {2, -1}}), precondition_error);
  EXPECT_THROW(skeleton(2, 2, {{1, 3}, {-1, -2}}), precondition_error);
  EXPECT_THROW(skeleton(2, 2, {{1, -1}}), precondition_error);
  EXPECT_NO_THROW(skeleton(2, 2, {{1, 2}, {-1, -2}}));
}

TEST(Skeleton, CompositionMatchesStrandTracing) {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto all = enumerate_skeletons(n, n);
    for (auto const& a : all) {
      for (auto const& b : all) {
        auto [product, loops] = compose_skeletons(a, b);
        auto want = oracle::trace_compose(a, b);
        EXPECT_EQ(product, want.result);
        EXPECT_EQ(loops, want.loops);
        EXPECT_EQ(phi(a, b), want.loops);
      }
    }
  }
}

TEST(Skeleton, RectangularCompositionMatchesStrandTracing) {
  for (auto const& a : enumerate_skeletons(4, 2)) {
    for (auto const& b : enumerate_skeletons(2, 4)) {
      auto [product, loops] = compose_skeletons(a, b);
      auto want = oracle::trace_compose(a, b);
      EXPECT_EQ(product, want.result);
      EXPECT_EQ(loops, want.loops);
    }
  }
}

TEST(Diagram, MonoidAxioms) {
  auto all = enumerate_monoid(3, 2);
  ASSERT_EQ(all.size(), 10u);
  auto id = identity(3, 2);
  for (auto const& a : all) {
    EXPECT_EQ(compose(id, a), a);
    EXPECT_EQ(compose(a, id), a);
    EXPECT_EQ(involute(involute(a)), a);
    for (auto const& b : all) {
      EXPECT_EQ(involute(compose(a, b)), compose(involute(b), involute(a)));
      for (auto const& c : all) {
        EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
      }
    }
  }
}

TEST(Diagram, HookRelations) {
  for (std::uint32_t m : {1u, 2u, 3u}) {
    std::size_t const n = 5;
    auto o = generator_o(n, m);
    diagram power = identity(n, m);
    for (std::uint32_t i = 0; i < m; ++i) {
      power = compose(power, o);
    }
    EXPECT_EQ(power, identity(n, m));
    for (std::size_t i = 1; i < n; ++i) {
      auto u = generator_hook(n, m, i);
      EXPECT_EQ(compose(u, u), compose(o, u));
      EXPECT_EQ(compose(o, u), compose(u, o));
      for (std::size_t j = 1; j < n; ++j) {
        auto v = generator_hook(n, m, j);
        if (i + 1 == j || j + 1 == i) {
          EXPECT_EQ(compose(compose(u, v), u), u);
        } else if (i + 2 <= j || j + 2 <= i) {
          EXPECT_EQ(compose(u, v), compose(v, u));
        }
      }
    }
  }
}

TEST(Diagram, BlockIsProductOfDescendingHooks) {
  std::size_t const n = 6;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j <= i; ++j) {
      diagram want = identity(n, 3);
      for (std::size_t h = i; h >= j; --h) {
        want = compose(want, generator_hook(n, 3, h));
      }
      EXPECT_EQ(generator_block(n, 3, i, j), want);
    }
  }
  EXPECT_THROW(generator_block(n, 3, 2, 3), precondition_error);
}

TEST(Diagram, KauffmanModeKeepsLoops) {
  auto u = generator_hook(3, 0, 1);
  diagram x = u;
  for (int i = 0; i < 5; ++i) {
    x = compose(x, u);
  }
  EXPECT_EQ(x.loops(), 5u);
  EXPECT_EQ(x.shape(), u.shape());
}

TEST(Diagram, DifferentModuliDoNotCompare) {
  EXPECT_THROW((void)(identity(2, 2) == identity(2, 3)), precondition_error);
  EXPECT_THROW(compose(identity(2, 2), identity(2, 3)), precondition_error);
}

TEST(Diagram, FactoriseRecompose) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto const& d : enumerate_monoid(n, 3)) {
      auto f = factorise(d);
      EXPECT_EQ(f.through, d.through());
      EXPECT_EQ(f.top_half.bottom_count(), f.through);
      EXPECT_EQ(f.top_half.through(), f.through);
      EXPECT_EQ(f.bottom_half.top_count(), f.through);
      EXPECT_EQ(recompose(f, 3), d);
    }
  }
}

TEST(Diagram, TensorAddsStrands) {
  auto a = generator_hook(3, 2, 1);
  auto b = identity(2, 2);
  auto t = tensor(a, b);
  EXPECT_EQ(t.bottom_count(), 5u);
  EXPECT_EQ(t.through(), a.through() + b.through());
  EXPECT_EQ(t, generator_hook(5, 2, 1));
}

TEST(Diagram, HashDistinguishesMonoidElements) {
  auto all = enumerate_monoid(5, 2);
  std::unordered_set<diagram> set(all.begin(), all.end());
  EXPECT_EQ(set.size(), all.size());
}
