#include <gtest/gtest.h>

#include "pursuit/design.hpp"
#include "pursuit/error.hpp"

using namespace pursuit;

namespace {

Design fano() { return construct_sts(7); }

}  // namespace

TEST(Bibd, Fano) {
  EXPECT_TRUE(validate_bibd(fano()));
  Design broken = fano();
  broken.blocks.pop_back();
  const BibdReport r = validate_bibd(broken);
  EXPECT_FALSE(r);
  EXPECT_FALSE(r.violation.empty());
}

TEST(Bibd, PairDesign) {
  Design d{4, 2, 1, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  EXPECT_TRUE(validate_bibd(d));
  EXPECT_EQ(construct_pair_design(4).blocks.size(), 6u);
  EXPECT_EQ(construct_pair_design(3).blocks.size(), 3u);
  for (int v = 2; v <= 8; ++v) EXPECT_TRUE(validate_bibd(construct_pair_design(v)));
  EXPECT_THROW(construct_pair_design(1), DesignError);
}

TEST(Bibd, WrongBlockSizeIsReported) {
  Design d{4, 2, 1, {{0, 1, 2}, {0, 3}, {1, 3}, {2, 3}}};
  EXPECT_FALSE(validate_bibd(d));
}

TEST(Sts, BlockCounts) {
  EXPECT_EQ(construct_sts(7).blocks.size(), 7u);
  EXPECT_EQ(construct_sts(9).blocks.size(), 12u);
  const Design d15 = construct_sts(15);
  EXPECT_EQ(d15.blocks.size(), 35u);
  EXPECT_TRUE(validate_bibd(d15));
}

TEST(Sts, EveryFeasibleOrderUpTo45Validates) {
  for (int v = 7; v <= 45; ++v) {
    if (v % 6 != 1 && v % 6 != 3) {
      EXPECT_THROW(construct_sts(v), DesignError) << v;
      continue;
    }
    const Design d = construct_sts(v);
    EXPECT_TRUE(validate_bibd(d)) << v;
    EXPECT_EQ(d.blocks.size(), static_cast<std::size_t>(v * (v - 1) / 6)) << v;
  }
  EXPECT_THROW(construct_sts(3), DesignError);
}

TEST(BlockIntersection, Examples) {
  const Graph k7 = block_intersection_graph(fano());
  EXPECT_EQ(k7.order(), 7u);
  EXPECT_EQ(k7.size(), 21u);

  const Graph oct = block_intersection_graph(construct_pair_design(4));
  EXPECT_EQ(oct.order(), 6u);
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(oct.degree(v), 4);

  const Graph b9 = block_intersection_graph(construct_sts(9));
  EXPECT_EQ(b9.order(), 12u);
  for (Vertex v = 0; v < 12; ++v) EXPECT_EQ(b9.degree(v), 9);

  Design bad = fano();
  bad.blocks.pop_back();
  EXPECT_THROW(block_intersection_graph(bad), DesignError);
}

TEST(BlockIntersection, LabelsFollowBlockOrder) {
  Design d = construct_sts(9);
  canonicalize(d);
  const Graph g = block_intersection_graph(d);
  for (std::size_t i = 0; i < d.blocks.size(); ++i) EXPECT_EQ(g.at(VertexLabel::base(static_cast<int>(i))), static_cast<Vertex>(i));
  EXPECT_TRUE(std::is_sorted(d.blocks.begin(), d.blocks.end()));
}

TEST(BaseGraph, Sizes) {
  EXPECT_EQ(build_ZC(1).order(), 1u);
  EXPECT_EQ(build_ZC(2).order(), 6u);
  EXPECT_EQ(build_ZC(3).order(), 35u);
  EXPECT_THROW(build_ZC(0), DesignError);
}

TEST(BaseGraph, LargeKNeedsADesign) {
  try {
    build_ZC(4);
    FAIL() << "expected a design error";
  } catch (const DesignError& e) {
    EXPECT_NE(std::string(e.what()).find("design required"), std::string::npos);
  }
  // v must exceed k(k-1)^2 + 1 = 38 for k = 4.
  Design small{13, 4, 1, {}};
  EXPECT_THROW(build_ZC(4, small), DesignError);
}

TEST(BaseGraph, DiameterTwo) {
  EXPECT_EQ(build_ZC(2).diameter(), 2);
  EXPECT_EQ(build_ZC(3).diameter(), 2);
}

TEST(DesignJson, RoundTrip) {
  const Design d = construct_sts(13);
  EXPECT_EQ(design_from_json(design_to_json(d)), d);
  EXPECT_THROW(design_from_json("{\"v\":3}"), DesignError);
}
