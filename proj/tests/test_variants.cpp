#include <gtest/gtest.h>

#include <set>

#include "cyclotl/variants.hpp"

using namespace cyclotl;

namespace {

// All set partitions of 2n points given as block lists of signed points.
std::vector<std::vector<std::vector<std::int64_t>>> all_set_partitions(std::size_t n) {
  std::vector<std::int64_t> points;
  for (std::size_t j = 1; j <= n; ++j) {
    points.push_back(static_cast<std::int64_t>(j));
    points.push_back(-static_cast<std::int64_t>(j));
  }
  std::vector<std::vector<std::vector<std::int64_t>>> out;
  std::vector<std::vector<std::int64_t>> blocks;
  auto go = [&](auto&& self, std::size_t x) -> void {
    if (x == points.size()) {
      out.push_back(blocks);
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(points[x]);
      self(self, x + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({points[x]});
    self(self, x + 1);
    blocks.pop_back();
  };
  go(go, 0);
  return out;
}

// Position on the boundary circle: bottom 1..n then top n..1.
std::size_t circle(std::size_t n, std::int64_t x) {
  return x > 0 ? static_cast<std::size_t>(x) - 1 : 2 * n - static_cast<std::size_t>(-x);
}

bool noncrossing(std::size_t n, std::vector<std::vector<std::int64_t>> const& blocks) {
  for (auto const& a : blocks) {
    for (auto const& b : blocks) {
      if (&a == &b) {
        continue;
      }
      for (auto x : a) {
        for (auto y : a) {
          for (auto u : b) {
            for (auto v : b) {
              std::size_t p = circle(n, x), q = circle(n, y), r = circle(n, u), s = circle(n, v);
              if (p < r && r < q && q < s) {
                return false;
              }
            }
          }
        }
      }
    }
  }
  return true;
}

bool fits(flavour kind, std::vector<std::vector<std::int64_t>> const& blocks) {
  for (auto const& b : blocks) {
    if (kind != flavour::planar_partition && b.size() > 2) {
      return false;
    }
    if (kind == flavour::planar_rook && b.size() == 2 && (b[0] > 0) == (b[1] > 0)) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST(Partition, EnumerationMatchesBruteForce) {
  for (auto kind : {flavour::planar_partition, flavour::motzkin, flavour::planar_rook}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      std::set<partition_diagram> want;
      for (auto const& blocks : all_set_partitions(n)) {
        if (noncrossing(n, blocks) && fits(kind, blocks)) {
          want.insert(partition_diagram::from_blocks(n, blocks, 0, 1, kind));
        } else {
          EXPECT_THROW(partition_diagram::from_blocks(n, blocks, 0, 1, kind), precondition_error);
        }
      }
      auto got = enumerate_partitions(n, 1, kind);
      EXPECT_EQ(std::set<partition_diagram>(got.begin(), got.end()), want) << to_string(kind) << n;
      EXPECT_EQ(big_int(got.size()), partition_monoid_size(n, 1, kind));
      EXPECT_EQ(enumerate_partitions(n, 3, kind).size(), 3 * got.size());
    }
  }
}

TEST(Partition, KnownSizes) {
  std::vector<std::size_t> ppa{2, 14, 132}, mo{2, 9, 51}, pro{2, 6, 20};
  for (std::size_t n = 1; n <= 3; ++n) {
    EXPECT_EQ(partition_monoid_size(n, 1, flavour::planar_partition), ppa[n - 1]);
    EXPECT_EQ(partition_monoid_size(n, 1, flavour::motzkin), mo[n - 1]);
    EXPECT_EQ(partition_monoid_size(n, 1, flavour::planar_rook), pro[n - 1]);
  }
}

TEST(Partition, CompositionIsAssociativeAndClosed) {
  for (auto kind : {flavour::planar_partition, flavour::motzkin, flavour::planar_rook}) {
    auto mon = partition_monoid(3, 2, kind);
    EXPECT_TRUE(mon.table.is_associative()) << to_string(kind);
    EXPECT_TRUE(mon.table.has_identity_laws());
    EXPECT_EQ(mon.table.identity(), mon.index_of(partition_diagram::identity(3, 2, kind)));
  }
}

TEST(Partition, LoopsFromMiddleComponents) {
  // Two facing singletons at the same point close one loop.
  auto stops = partition_diagram::from_blocks(1, {{1}, {-1}}, 0, 0, flavour::planar_rook);
  EXPECT_EQ(compose_partition(stops, stops).loops(), 1u);
  auto merged = partition_diagram::from_blocks(2, {{1, 2}, {-1, -2}}, 0, 0, flavour::planar_partition);
  auto split = partition_diagram::from_blocks(2, {{1}, {2}, {-1}, {-2}}, 0, 0,
                                              flavour::planar_partition);
  EXPECT_EQ(compose_partition(split, split).loops(), 2u);
  EXPECT_EQ(compose_partition(merged, merged).loops(), 1u);
  EXPECT_EQ(compose_partition(merged, split).loops(), 1u);
  EXPECT_THROW(compose_partition(stops, merged), precondition_error);
}

TEST(Partition, RejectsBadInput) {
  EXPECT_THROW(partition_diagram::from_blocks(2, {{1, -2}, {2, -1}}, 0, 1, flavour::planar_partition),
               precondition_error);
  EXPECT_THROW(partition_diagram::from_blocks(2, {{1, 2, -1}, {-2}}, 0, 1, flavour::motzkin),
               precondition_error);
  EXPECT_THROW(partition_diagram::from_blocks(2, {{1, 2}, {-1}, {-2}}, 0, 1, flavour::planar_rook),
               precondition_error);
  EXPECT_THROW(partition_diagram::from_blocks(2, {{1, 3}, {2, -1, -2}}, 0, 1,
                                              flavour::planar_partition),
               precondition_error);
  EXPECT_THROW(partition_diagram::from_blocks(2, {{1}, {2, -1}}, 0, 1, flavour::planar_partition),
               precondition_error);
  EXPECT_THROW(parse_flavour("brauer"), parse_error);
  EXPECT_EQ(parse_flavour("mo"), flavour::motzkin);
}

TEST(PlanarPartition, GeneratorsAndRelations) {
  auto gens = ppa_generators(3);
  std::vector<std::string> names;
  for (auto g : gens) {
    names.push_back(g.name());
    EXPECT_EQ(parse_ppa_generator(g.name(), 3).twice_index, g.twice_index);
  }
  EXPECT_EQ(names, (std::vector<std::string>{"c", "p1", "p1.5", "p2", "p2.5", "p3"}));
  EXPECT_THROW(parse_ppa_generator("p3.5", 3), parse_error);
  EXPECT_THROW(parse_ppa_generator("q1", 3), parse_error);
  EXPECT_THROW(parse_ppa_generator("p0", 3), parse_error);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint32_t m = 1; m <= 3; ++m) {
      for (auto const& r : ppa_relations(n, m)) {
        EXPECT_TRUE(r.holds) << r.relation << " n=" << n << " m=" << m;
      }
    }
  }
}

TEST(PlanarPartition, EmbedsInDoubledTemperleyLieb) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint32_t m = 1; m <= 2; ++m) {
      auto r = embed_ppa_in_tl(n, m, n <= 2);
      EXPECT_TRUE(r.generated);
      EXPECT_TRUE(r.well_defined);
      EXPECT_TRUE(r.homomorphism);
      EXPECT_TRUE(r.injective);
      EXPECT_TRUE(r.image_size_ok);
      EXPECT_TRUE(r.ok()) << n << " " << m;
    }
  }
}

TEST(PlanarRook, InverseMonoidChecks) {
  auto good = prook_checks(3, 2, 5);
  EXPECT_TRUE(good.size_matches);
  EXPECT_TRUE(good.is_regular);
  EXPECT_TRUE(good.is_inverse);
  EXPECT_TRUE(good.idempotents_commute);
  EXPECT_TRUE(good.stops_law);
  EXPECT_TRUE(good.semisimple_expected);
  EXPECT_TRUE(good.semisimple_census_ok);
  auto bad = prook_checks(3, 2, 2);
  EXPECT_TRUE(bad.is_inverse);
  EXPECT_FALSE(bad.semisimple_expected);
  EXPECT_FALSE(bad.semisimple_census_ok);
  EXPECT_THROW(prook_checks(2, 2, 4), precondition_error);
}

TEST(PlanarRook, CyclicSimples) {
  EXPECT_EQ(cyclic_simples(6, 0).count, 6u);
  EXPECT_EQ(cyclic_simples(6, 2).semisimple_dimension, 3u);
  // Z_7 under multiplication by 2: {0}, {1,2,4}, {3,6,5}.
  auto c = cyclic_simples(7, 2);
  EXPECT_EQ(c.count, 3u);
  EXPECT_EQ(c.semisimple_dimension, 7u);
}

TEST(PlanarRook, GapBound) {
  auto g = prook_gap_bound(10, 2, 7);
  EXPECT_EQ(g.bound, 45);
  EXPECT_EQ(g.range_k, 1u);
  EXPECT_EQ(g.range_l, 9u);
  EXPECT_EQ(g.range_bound, 10);
  EXPECT_THROW(prook_gap_bound(4, 3, 2), precondition_error);
}

TEST(Motzkin, InflatedCellStructure) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint32_t m : {1u, 2u, 3u}) {
      auto r = motzkin_structure(n, m);
      EXPECT_TRUE(r.ok()) << n << " " << m;
      EXPECT_EQ(r.apexes.size(), n + 1);
    }
  }
  auto two = motzkin_structure(2, 2);
  EXPECT_EQ(two.size, 18u);
  std::multiset<std::size_t> sizes;
  for (auto const& a : two.apexes) {
    sizes.insert(a.j_size);
  }
  // Through 2, 1 and 0: one, four and four diagrams, each times two.
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{2, 8, 8}));
}
