#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cyclotl/json_io.hpp"

using namespace cyclotl;

TEST(Json, DiagramRoundTrip) {
  for (auto const& d : enumerate_monoid(4, 3)) {
    EXPECT_EQ(diagram_from_json(json::parse(to_json(d).dump())), d);
  }
  auto rect = diagram{enumerate_skeletons(4, 2).back(), 5, 0};
  EXPECT_EQ(diagram_from_json(to_json(rect)), rect);
}

TEST(Json, PartitionRoundTrip) {
  for (auto kind : {flavour::planar_partition, flavour::motzkin, flavour::planar_rook}) {
    for (auto const& d : enumerate_partitions(3, 2, kind)) {
      EXPECT_EQ(partition_from_json(json::parse(to_json(d).dump())), d);
    }
  }
}

TEST(Json, MalformedInputIsAParseError) {
  EXPECT_THROW(diagram_from_json(json::parse(R"({"n_bottom": 2})")), parse_error);
  EXPECT_THROW(diagram_from_json(json::parse(
                   R"({"n_bottom": 1, "n_top": 1, "pairs": [[1]], "loops": 0, "modulus": 2})")),
               parse_error);
  EXPECT_THROW(partition_from_json(json::parse(
                   R"({"n": 1, "blocks": [[1, -1]], "loops": 0, "modulus": 1, "flavour": "x"})")),
               parse_error);
  EXPECT_THROW(diagram_from_json(json::parse(
                   R"({"n_bottom": 2, "n_top": 2, "pairs": [[1, -2], [2, -1]], "loops": 0, "modulus": 2})")),
               precondition_error);
}

TEST(Json, Renderers) {
  EXPECT_EQ(render_diagram(identity(2, 3)), "-2:2 -1:1|0");
  auto d = partition_diagram::from_blocks(2, {{1, -1}, {2}, {-2}}, 1, 2, flavour::planar_rook);
  EXPECT_EQ(render_partition(d), "{1,-1} {2} {-2}|1");
}

TEST(Json, CellTableMatchesGolden) {
  char const* dir = std::getenv("CYCLOTL_DATA");
  ASSERT_NE(dir, nullptr);
  std::ifstream in(std::string(dir) + "/cells_2tl4.json");
  ASSERT_TRUE(in);
  std::stringstream golden;
  golden << in.rdbuf();
  EXPECT_EQ(json::parse(golden.str()), tl_cells_json(4, 2));
}

TEST(Json, CellTableShape) {
  json t = tl_cells_json(4, 2);
  EXPECT_EQ(t["size"], 28);
  std::vector<std::size_t> sizes;
  for (auto const& cell : t["j_cells"]) {
    sizes.push_back(cell["size"]);
    std::size_t r = cell["r_cells"];
    std::size_t l = cell["l_cells"];
    EXPECT_EQ(cell["grid"].size(), r);
    for (auto const& row : cell["grid"]) {
      EXPECT_EQ(row.size(), l);
      for (auto const& h : row) {
        EXPECT_EQ(h["elements"].size(), 2u);
      }
    }
  }
  EXPECT_EQ(sizes, (std::vector<std::size_t>{2, 18, 8}));
  EXPECT_TRUE(t["j_total_order"].get<bool>());
}

TEST(Json, DimensionReports) {
  EXPECT_EQ(dim_csv_header(), "n,m,k,t,formula_dim,oracle_dim,ssdim,convention");
  auto rows = dims_table(3, field_spec::with_root(7, 2, 6));
  ASSERT_FALSE(rows.empty());
  std::string line = dim_csv_row(rows.front());
  EXPECT_EQ(std::count(line.begin(), line.end(), ','), 7);
  json j = to_json(rows.front());
  EXPECT_EQ(j["n"], 3);
  EXPECT_TRUE(j.contains("consistent"));
  EXPECT_EQ(to_json_number(big_int(1) << 70), json((big_int(1) << 70).str()));
  EXPECT_EQ(to_json_number(42), json(42));
}

TEST(Json, GapReport) {
  json g = to_json(gap_bounds({16, 5, 4, 8}, std::nullopt));
  EXPECT_EQ(g["gap_lower"]["exact"], "10");
  EXPECT_EQ(g["ssgap_lower"]["exact"], "5096/5");
  EXPECT_EQ(g["min_simple_dim"], nullptr);
}
