#include "qwalk/iso.h"

#include <gtest/gtest.h>

#include <random>

#include "qwalk/graph_io.h"
#include "test_util.h"

namespace qwalk {
namespace {

TEST(Refine, PathSplitsEndsFromMiddle) {
  const Partition p = Refine(PathGraph(3), Partition::Unit(3));
  ASSERT_EQ(p.cells.size(), 2u);
  EXPECT_EQ(p.cells[0], (std::vector<int>{0, 2}));
  EXPECT_EQ(p.cells[1], (std::vector<int>{1}));
}

TEST(Refine, RegularGraphStaysUnit) {
  EXPECT_EQ(Refine(PetersenGraph(), Partition::Unit(10)), Partition::Unit(10));
  EXPECT_EQ(Refine(ShrikhandeGraph(), Partition::Unit(16)).cells.size(), 1u);
}

TEST(Refine, IndividualizedVertexSplitsByDistance) {
  Partition init;
  init.cells = {{0}, {1, 2, 3, 4, 5, 6, 7, 8, 9}};
  const Partition p = Refine(PetersenGraph(), init);
  ASSERT_TRUE(p.IsValidFor(10));
  ASSERT_EQ(p.cells.size(), 3u);
  EXPECT_EQ(p.cells[0], (std::vector<int>{0}));
  size_t sizes = p.cells[1].size() * 10 + p.cells[2].size();
  EXPECT_TRUE(sizes == 36 || sizes == 63);
}

TEST(Refine, RejectsNonPartition) {
  Partition bad;
  bad.cells = {{0, 1}, {1, 2}};
  EXPECT_THROW(Refine(PathGraph(3), bad), std::invalid_argument);
  bad.cells = {{0, 1}};
  EXPECT_THROW(Refine(PathGraph(3), bad), std::invalid_argument);
}

TEST(Refine, EquivariantUnderRelabeling) {
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 10; ++rep) {
    const Graph g = testing::RandomGraphMinDegree(rng, 12, 1);
    const std::vector<int> perm = testing::RandomPermutation(rng, 12);
    const Partition a = Refine(g, Partition::Unit(12));
    const Partition b = Refine(g.Relabeled(perm), Partition::Unit(12));
    ASSERT_EQ(a.cells.size(), b.cells.size());
    for (size_t c = 0; c < a.cells.size(); ++c) {
      std::vector<int> mapped;
      for (int v : a.cells[c]) mapped.push_back(perm[v]);
      std::sort(mapped.begin(), mapped.end());
      EXPECT_EQ(mapped, b.cells[c]);
    }
  }
}

TEST(IsIsomorphic, RelabelingFindsVerifiedWitness) {
  std::mt19937_64 rng(42);
  for (const Graph& g : {PetersenGraph(), ShrikhandeGraph(), RookGraph(4), ClebschGraph(),
                         testing::RandomRegularGraph(rng, 14, 4), testing::RandomGraphMinDegree(rng, 15, 1)}) {
    const Graph h = g.Relabeled(testing::RandomPermutation(rng, g.num_vertices()));
    const IsoResult r = IsIsomorphic(g, h);
    ASSERT_EQ(r.verdict, IsoVerdict::kIsomorphic);
    EXPECT_TRUE(VerifyWitness(g, h, r.witness));
    for (int u = 0; u < g.num_vertices(); ++u)
      for (int v = 0; v < g.num_vertices(); ++v)
        ASSERT_EQ(g.adjacent(u, v), h.adjacent(r.witness[u], r.witness[v]));
  }
}

TEST(IsIsomorphic, NonIsomorphicExamples) {
  EXPECT_EQ(IsIsomorphic(CompleteGraph(4), CycleGraph(4)).verdict, IsoVerdict::kNonIsomorphic);
  EXPECT_EQ(IsIsomorphic(CycleGraph(4), CycleGraph(5)).verdict, IsoVerdict::kNonIsomorphic);
  // Same degree sequence, not isomorphic.
  const Graph two_triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  EXPECT_EQ(IsIsomorphic(two_triangles, CycleGraph(6)).verdict, IsoVerdict::kNonIsomorphic);
  // Regular, cospectral, equitable partition trivial: refinement alone cannot tell.
  EXPECT_EQ(IsIsomorphic(ShrikhandeGraph(), RookGraph(4)).verdict, IsoVerdict::kNonIsomorphic);
}

TEST(IsIsomorphic, SrgFamilyMembersAreDistinct) {
  const GraphFamily fam = LoadFamilyFile(testing::DataPath("families/srg-26-10-3-4.g6"),
                                         GraphFormat::kGraph6);
  for (size_t a = 0; a < fam.members.size(); ++a) {
    for (size_t b = a + 1; b < fam.members.size(); ++b) {
      EXPECT_EQ(IsIsomorphic(fam.members[a], fam.members[b]).verdict, IsoVerdict::kNonIsomorphic)
          << a << " " << b;
    }
  }
}

TEST(IsIsomorphic, Symmetric) {
  std::mt19937_64 rng(43);
  for (int rep = 0; rep < 10; ++rep) {
    const Graph g = testing::RandomRegularGraph(rng, 10, 3);
    const Graph h = rep % 2 ? g.Relabeled(testing::RandomPermutation(rng, 10))
                            : testing::RandomRegularGraph(rng, 10, 3);
    EXPECT_EQ(IsIsomorphic(g, h).verdict, IsIsomorphic(h, g).verdict);
  }
}

TEST(IsIsomorphic, BudgetExhaustionIsInconclusive) {
  const Graph g = ShrikhandeGraph();
  const IsoResult r = IsIsomorphic(g, RookGraph(4), 1);
  EXPECT_EQ(r.verdict, IsoVerdict::kInconclusive);
  EXPECT_TRUE(r.witness.empty());
  EXPECT_STREQ(VerdictName(r.verdict), "inconclusive");
}

TEST(VerifyWitness, RejectsBadMaps) {
  const Graph g = PathGraph(3);
  EXPECT_TRUE(VerifyWitness(g, g, {2, 1, 0}));
  EXPECT_FALSE(VerifyWitness(g, g, {1, 0, 2}));
  EXPECT_FALSE(VerifyWitness(g, g, {0, 0, 2}));
  EXPECT_FALSE(VerifyWitness(g, g, {0, 1}));
}

}  // namespace
}  // namespace qwalk
