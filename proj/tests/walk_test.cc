#include "qwalk/walk.h"

#include <gtest/gtest.h>

#include <random>

#include "qwalk/arc_space.h"
#include "test_util.h"

namespace qwalk {
namespace {

using testing::DefinitionEntry;

mpq_class Q(long num, long den = 1) {
  mpq_class v(num, den);
  v.canonicalize();
  return v;
}

TEST(ArcSpace, SmallGraphs) {
  const ArcSpace k2(CompleteGraph(2));
  ASSERT_EQ(k2.size(), 2u);
  EXPECT_EQ(k2[0], (Arc{0, 1}));
  EXPECT_EQ(k2[1], (Arc{1, 0}));

  const ArcSpace k4(CompleteGraph(4));
  ASSERT_EQ(k4.size(), 12u);
  EXPECT_EQ(k4[0], (Arc{0, 1}));
  EXPECT_EQ(k4[11], (Arc{3, 2}));

  const ArcSpace path(PathGraph(3));
  const std::vector<Arc> want = {{0, 1}, {1, 0}, {1, 2}, {2, 1}};
  EXPECT_EQ(path.arcs(), want);
}

TEST(ArcSpace, IndexIsExactInverse) {
  const Graph g = PetersenGraph();
  const ArcSpace arcs(g);
  EXPECT_EQ(arcs.size(), 2u * g.num_edges());
  for (size_t a = 0; a < arcs.size(); ++a) {
    EXPECT_EQ(arcs.index(arcs[a].tail, arcs[a].head), a);
    const size_t r = arcs.reverse(a);
    EXPECT_EQ(arcs[r].tail, arcs[a].head);
    EXPECT_EQ(arcs[r].head, arcs[a].tail);
    if (a > 0) EXPECT_LT(arcs[a - 1], arcs[a]);
  }
  EXPECT_FALSE(arcs.find(0, 0).has_value());
  EXPECT_THROW(arcs.index(0, 2), std::out_of_range);
}

TEST(ArcSpace, RejectsEdgelessGraph) {
  EXPECT_THROW(ArcSpace(Graph(3, std::span<const Edge>{})), std::invalid_argument);
}

TEST(BuildU, CompleteGraphEntries) {
  const Graph g = CompleteGraph(4);
  const ArcSpace arcs(g);
  const RationalMatrix u = BuildU(g);
  EXPECT_EQ(u(arcs.index(0, 1), arcs.index(1, 2)), Q(2, 3));
  EXPECT_EQ(u(arcs.index(0, 1), arcs.index(1, 0)), Q(-1, 3));
  EXPECT_EQ(u(arcs.index(0, 1), arcs.index(2, 3)), 0);
}

TEST(BuildU, MatchesDefinitionEverywhere) {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 5; ++rep) {
    const Graph g = testing::RandomGraphMinDegree(rng, 9, 1);
    const ArcSpace arcs(g);
    const RationalMatrix u = BuildU(g);
    for (size_t a = 0; a < arcs.size(); ++a)
      for (size_t b = 0; b < arcs.size(); ++b)
        ASSERT_EQ(u(a, b), DefinitionEntry(g, arcs[a].tail, arcs[a].head, arcs[b].tail,
                                           arcs[b].head));
  }
}

TEST(BuildU, CycleGivesPermutationMatrix) {
  const RationalMatrix u = BuildU(CycleGraph(5));
  for (size_t r = 0; r < u.dim(); ++r) {
    int ones = 0;
    for (size_t c = 0; c < u.dim(); ++c) {
      ASSERT_TRUE(u(r, c) == 0 || u(r, c) == 1);
      ones += u(r, c) == 1;
    }
    EXPECT_EQ(ones, 1);
  }
}

TEST(BuildU, StarLeafRowHasSingleEntry) {
  const Graph g = StarGraph(3);  // hub 3
  const ArcSpace arcs(g);
  const RationalMatrix u = BuildU(g);
  const size_t row = arcs.index(3, 0);
  for (size_t c = 0; c < u.dim(); ++c) {
    EXPECT_EQ(u(row, c), c == arcs.index(0, 3) ? 1 : 0);
  }
}

TEST(BuildU, RejectsIsolatedVertex) {
  EXPECT_THROW(BuildU(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})), PreconditionError);
}

TEST(BuildT, Examples) {
  const RationalMatrix t = BuildT(CompleteGraph(4));
  for (size_t r = 0; r < 4; ++r)
    for (size_t c = 0; c < 4; ++c) EXPECT_EQ(t(r, c), r == c ? 0 : Q(1, 3));

  const RationalMatrix p = BuildT(PathGraph(3));
  EXPECT_EQ(p(0, 1), Q(1, 2));
  EXPECT_EQ(p(1, 0), 1);
  EXPECT_EQ(p(1, 2), 1);
  EXPECT_EQ(p(2, 1), Q(1, 2));
  EXPECT_EQ(p(0, 2), 0);
}

TEST(BuildT, IsolatedVertexGivesZeroRowAndColumn) {
  const RationalMatrix t = BuildT(Graph(3, {{0, 1}}));
  for (size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(t(2, i), 0);
    EXPECT_EQ(t(i, 2), 0);
  }
}

TEST(Walk, OrthogonalityAndColumnSumsOnRandomGraphs) {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 10; ++rep) {
    const Graph g = testing::RandomGraphMinDegree(rng, 4 + rep, 1);
    const RationalMatrix u = BuildU(g);
    EXPECT_EQ(u * u.Transposed(), RationalMatrix::Identity(u.dim()));
    const RationalMatrix t = BuildT(g);
    for (size_t c = 0; c < t.dim(); ++c) {
      mpq_class sum = 0;
      for (size_t r = 0; r < t.dim(); ++r) sum += t(r, c);
      EXPECT_EQ(sum, 1);
    }
  }
}

TEST(Walk, RowStructure) {
  std::mt19937_64 rng(13);
  const Graph g = testing::RandomGraphMinDegree(rng, 10, 1);
  const ArcSpace arcs(g);
  const RationalMatrix u = BuildU(g);
  for (size_t a = 0; a < arcs.size(); ++a) {
    const int d = g.degree(arcs[a].head);
    int nonzero = 0;
    for (size_t b = 0; b < arcs.size(); ++b) nonzero += u(a, b) != 0;
    EXPECT_EQ(nonzero, d == 2 ? 1 : d);
    const mpq_class rev = u(a, arcs.reverse(a));
    EXPECT_EQ(rev < 0, d >= 3);
    EXPECT_EQ(rev == 0, d == 2);
  }
}

TEST(Power, Examples) {
  const RationalMatrix u = BuildU(CompleteGraph(4));
  EXPECT_EQ(Power(u, 1), u);
  EXPECT_EQ(Power(u, 2), u * u);
  EXPECT_EQ(Power(u, 3), u * u * u);
  const RationalMatrix c5 = BuildU(CycleGraph(5));
  EXPECT_EQ(Power(c5, 5), RationalMatrix::Identity(c5.dim()));
  EXPECT_NE(Power(c5, 4), RationalMatrix::Identity(c5.dim()));
  EXPECT_THROW(Power(u, 0), std::invalid_argument);
}

TEST(Power, LargeEntriesFallBackToBigIntegers) {
  RationalMatrix m(2);
  m(0, 0) = mpq_class("3037000499/7");
  m(1, 1) = 1;
  const RationalMatrix p = Power(m, 3);
  mpq_class want = m(0, 0) * m(0, 0) * m(0, 0);
  EXPECT_EQ(p(0, 0), want);
}

TEST(Support, Examples) {
  RationalMatrix m(2);
  m(0, 0) = Q(1, 2);
  m(0, 1) = Q(-1, 3);
  m(1, 1) = 2;
  const BinaryMatrix s = Support(m);
  EXPECT_EQ(s(0, 0), 1);
  EXPECT_EQ(s(0, 1), 1);
  EXPECT_EQ(s(1, 0), 0);
  EXPECT_EQ(s(1, 1), 1);
  EXPECT_EQ(Support(RationalMatrix(3)).count_ones(), 0u);
}

TEST(PositiveSupport, Examples) {
  RationalMatrix m(2);
  m(0, 0) = Q(1, 2);
  m(0, 1) = Q(-1, 2);
  m(1, 1) = 1;
  const BinaryMatrix s = PositiveSupport(m);
  EXPECT_EQ(s(0, 0), 1);
  EXPECT_EQ(s(0, 1), 0);
  EXPECT_EQ(s(1, 1), 1);

  const Graph k4 = CompleteGraph(4);
  const ArcSpace arcs(k4);
  const BinaryMatrix sp = PositiveSupport(BuildU(k4));
  const size_t row = arcs.index(0, 1);
  for (size_t c = 0; c < sp.dim(); ++c) {
    const bool want = c == arcs.index(1, 2) || c == arcs.index(1, 3);
    EXPECT_EQ(sp(row, c), want ? 1 : 0);
  }
  EXPECT_EQ(sp.count_ones(), 24u);
  EXPECT_EQ(Support(BuildU(k4)).count_ones(), 36u);
}

TEST(SPlusPower, MatchesPositiveSupportOfExactPower) {
  std::mt19937_64 rng(14);
  for (int rep = 0; rep < 6; ++rep) {
    const Graph g = testing::RandomGraphMinDegree(rng, 7 + rep, 3);
    const RationalMatrix u = BuildU(g);
    for (int p = 1; p <= 3; ++p) EXPECT_EQ(SPlusPower(g, p), PositiveSupport(Power(u, p)));
  }
  EXPECT_EQ(SPlusPower(CompleteGraph(4), 1).count_ones(), 24u);
}

TEST(SPlusPower, RejectsLowDegree) {
  EXPECT_THROW(SPlusPower(CycleGraph(6), 1), PreconditionError);
  EXPECT_THROW(SPlusPower(CompleteGraph(4), 0), std::invalid_argument);
}

TEST(SPlusPower, PetersenCubeHasZeroDiagonal) {
  const BinaryMatrix s = SPlusPower(PetersenGraph(), 3);
  for (size_t i = 0; i < s.dim(); ++i) EXPECT_EQ(s(i, i), 0);
  // The exact entry is 8r/k^3 = 0, not merely small.
  const RationalMatrix u3 = Power(BuildU(PetersenGraph()), 3);
  for (size_t i = 0; i < u3.dim(); ++i) EXPECT_EQ(u3(i, i), 0);
}

TEST(AdjacencyPowerSupport, WorkedExampleMatrices) {
  const Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const BinaryMatrix sg = AdjacencyPowerSupport(g, 2);
  // C4 squared joins opposite corners and keeps the diagonal; vertex 4 stays zero.
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const bool want = i < 4 && j < 4 && (i % 2 == j % 2);
      EXPECT_EQ(sg(i, j), want ? 1 : 0) << i << "," << j;
    }
  }
  const BinaryMatrix sh = AdjacencyPowerSupport(StarGraph(4), 2);  // hub 4
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const bool want = (i == 4) == (j == 4);
      EXPECT_EQ(sh(i, j), want ? 1 : 0) << i << "," << j;
    }
  }
  EXPECT_EQ(AdjacencyPowerSupport(PetersenGraph(), 1), AdjacencyMatrix(PetersenGraph()));
}

TEST(LineDigraph, EqualsSupportOfUForMinDegreeThree) {
  std::mt19937_64 rng(15);
  for (int rep = 0; rep < 8; ++rep) {
    const Graph g = testing::RandomGraphMinDegree(rng, 6 + rep, 3);
    EXPECT_EQ(Support(BuildU(g)), LineDigraphMatrix(g));
  }
}

TEST(LineDigraph, DiffersWhenDegreeTwoPresent) {
  // Reversal entries vanish at degree-2 heads, so the support loses arcs.
  const Graph g = CycleGraph(5);
  EXPECT_NE(Support(BuildU(g)), LineDigraphMatrix(g));
}

}  // namespace
}  // namespace qwalk
