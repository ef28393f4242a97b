#include "fg/pseudoplane.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

using namespace fg::plane;

namespace {

PseudoplaneGraph path3() {
  PseudoplaneGraph g(2);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  return g;
}

PseudoplaneGraph triangle() {
  PseudoplaneGraph g(2);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  return g;
}

}  // namespace

TEST(Tree, StarExample) {
  const auto g = generate_tree(2, 1, 1, 0);
  EXPECT_EQ(g.size(), 3U);
  EXPECT_EQ(g.edge_count(), 2U);
  std::size_t roots = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    roots += g.degree(v) == 2 ? 1 : 0;
  }
  EXPECT_EQ(roots, 1U);
}

TEST(Tree, VertexCountFormula) {
  EXPECT_EQ(tree_vertex_count(3, 0), 1U);
  EXPECT_EQ(tree_vertex_count(3, 1), 4U);
  EXPECT_EQ(tree_vertex_count(3, 2), 10U);
  EXPECT_EQ(tree_vertex_count(3, 3), 22U);
  for (std::size_t b = 2; b <= 5; ++b) {
    for (std::size_t d = 1; d <= 5; ++d) {
      const auto g = generate_tree(b, d, 2, 7);
      EXPECT_EQ(g.size(), 2 * tree_vertex_count(b, d));
      EXPECT_EQ(g.edge_count(), 2 * (tree_vertex_count(b, d) - 1));
      const auto report = axiom_check(g);
      EXPECT_TRUE(report.passed());
    }
  }
}

TEST(Tree, InternalVerticesHaveFullDegree) {
  const auto g = generate_tree(4, 3, 1, 3);
  std::size_t leaves = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    EXPECT_TRUE(g.degree(v) == 4 || g.degree(v) == 1);
    leaves += g.degree(v) == 1 ? 1 : 0;
  }
  EXPECT_EQ(leaves, 4U * 3U * 3U);
  EXPECT_EQ(axiom_check(g).boundary.size(), leaves);
}

TEST(Tree, SeedPermutesLabels) {
  std::ostringstream a, b, c;
  generate_tree(3, 3, 1, 1).write_edge_list(a);
  generate_tree(3, 3, 1, 1).write_edge_list(b);
  generate_tree(3, 3, 1, 2).write_edge_list(c);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str(), c.str());
}

TEST(Tree, RefusesOversizedRequests) {
  EXPECT_THROW((void)generate_tree(3, 60, 1, 0), std::length_error);
}

TEST(Axioms, PathPassesWithBoundary) {
  const auto r = axiom_check(path3());
  EXPECT_TRUE(r.passed());
  std::vector<Vertex> boundary = r.boundary;
  std::sort(boundary.begin(), boundary.end());
  EXPECT_EQ(boundary, (std::vector<Vertex>{0, 2}));
}

TEST(Axioms, TriangleFailsWithWitness) {
  const auto r = axiom_check(triangle());
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.acyclic);
  ASSERT_FALSE(r.violations.empty());
  ASSERT_EQ(r.cycle_witness.size(), 4U);
  EXPECT_EQ(r.cycle_witness.front(), r.cycle_witness.back());
  std::vector<Vertex> cyc(r.cycle_witness.begin(), r.cycle_witness.end() - 1);
  std::sort(cyc.begin(), cyc.end());
  EXPECT_EQ(cyc, (std::vector<Vertex>{0, 1, 2}));
}

TEST(Axioms, AsymmetryAndLoopsAreReported) {
  PseudoplaneGraph g;
  g.add_arc(0, 1);
  EXPECT_FALSE(axiom_check(g).symmetric);
  PseudoplaneGraph h;
  h.add_edge(0, 0);
  EXPECT_FALSE(axiom_check(h).irreflexive);
}

TEST(Tree, CentersAreRoots) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = generate_tree(3, 4, 3, seed);
    const auto centers = tree_centers(g);
    ASSERT_EQ(centers.size(), 3U);
    for (Vertex c : centers) {
      EXPECT_EQ(g.degree(c), 3U);
      std::size_t far = 0;
      for (Vertex v = 0; v < g.size(); ++v) {
        const auto r = rank(g, c, v);
        far = r.is_finite() ? std::max(far, r.value()) : far;
      }
      EXPECT_EQ(far, 4U);
    }
  }
  EXPECT_EQ(tree_centers(path3()), (std::vector<Vertex>{1}));
  PseudoplaneGraph two;
  two.add_edge(3, 2);
  EXPECT_EQ(tree_centers(two), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_THROW((void)tree_centers(triangle()), std::invalid_argument);
}

TEST(Rank, Examples) {
  auto g = path3();
  g.add_vertex();
  EXPECT_EQ(rank(g, 1, 1), RankValue::finite(0));
  EXPECT_EQ(rank(g, 0, 1), RankValue::finite(1));
  EXPECT_EQ(rank(g, 0, 2), RankValue::finite(2));
  EXPECT_EQ(rank(g, 0, 3), RankValue::omega());
  EXPECT_EQ(rank(g, 0, 3).str(), "omega");
  EXPECT_THROW((void)rank(g, 0, 99), std::out_of_range);
}

TEST(Rank, MetricProperties) {
  const auto g = generate_tree(3, 3, 2, 5);
  const auto n = static_cast<Vertex>(g.size());
  for (Vertex a = 0; a < n; a += 3) {
    for (Vertex b = 0; b < n; b += 2) {
      const auto ab = rank(g, a, b);
      EXPECT_EQ(ab, rank(g, b, a));
      EXPECT_EQ(ab == RankValue::finite(0), a == b);
      if (!ab.is_finite()) {
        continue;
      }
      for (Vertex c = 0; c < n; c += 5) {
        const auto bc = rank(g, b, c);
        const auto ac = rank(g, a, c);
        if (bc.is_finite()) {
          ASSERT_TRUE(ac.is_finite());
          EXPECT_LE(ac.value(), ab.value() + bc.value());
        }
      }
    }
  }
}

TEST(Lazy, AgreesWithBreadthFirstSearch) {
  LazyRegularForest f(3, 6, 2);
  // Materialize a few branches.
  std::vector<Vertex> frontier{f.root(0), f.root(1)};
  for (int step = 0; step < 4; ++step) {
    std::vector<Vertex> next;
    for (Vertex v : frontier) {
      for (Vertex u : f.neighbors(v)) {
        if (f.depth(u) > f.depth(v)) {
          next.push_back(u);
        }
      }
    }
    frontier = next;
  }
  const auto snap = f.snapshot();
  EXPECT_TRUE(axiom_check(snap).passed());
  for (Vertex a = 0; a < snap.size(); a += 7) {
    for (Vertex b = 0; b < snap.size(); b += 3) {
      ASSERT_EQ(f.rank(a, b), rank(snap, a, b)) << a << " " << b;
    }
  }
  EXPECT_EQ(f.rank(f.root(0), f.root(1)), RankValue::omega());
}

TEST(Lazy, Degrees) {
  LazyRegularForest f(3, 2, 1);
  EXPECT_EQ(f.degree(f.root(0)), 3U);
  const auto kids = f.neighbors(f.root(0));
  ASSERT_EQ(kids.size(), 3U);
  EXPECT_EQ(f.degree(kids[0]), 3U);
  const auto grand = f.neighbors(kids[0]);
  ASSERT_EQ(grand.size(), 3U);
  EXPECT_EQ(f.degree(grand[1]), 1U);
}

TEST(EdgeList, RoundTrip) {
  auto g = generate_tree(3, 2, 1, 4);
  g.add_vertex();
  std::ostringstream os;
  g.write_edge_list(os);
  std::istringstream in("# header\n" + os.str());
  const auto back = PseudoplaneGraph::read_edge_list(in, 3);
  EXPECT_EQ(back.size(), g.size());
  EXPECT_EQ(back.edge_count(), g.edge_count());
  std::ostringstream again;
  back.write_edge_list(again);
  EXPECT_EQ(again.str(), os.str());
  std::istringstream bad("0 x\n");
  EXPECT_THROW((void)PseudoplaneGraph::read_edge_list(bad), std::invalid_argument);
}

TEST(Walk, Examples) {
  const auto g = generate_tree(3, 8, 1, 1);
  const Vertex a0 = tree_centers(g).front();
  const Vertex b0 = g.neighbors(a0)[0];
  const auto w0 = claim_walk(g, a0, b0, 0, 1);
  EXPECT_EQ(w0.distance, RankValue::finite(0));
  EXPECT_EQ(w0.sequence.size(), 2U);

  LazyRegularForest f(3, 60, 1);
  const Vertex r = f.root(0);
  const Vertex c = f.neighbors(r)[0];
  const auto w1 = claim_walk(f, r, c, 1, 3);
  EXPECT_EQ(w1.distance, RankValue::finite(2));
  const auto w25 = claim_walk(f, r, c, 25, 3);
  EXPECT_EQ(w25.distance, RankValue::finite(50));
  EXPECT_EQ(w25.sequence.size(), 52U);
  EXPECT_EQ(f.rank(w25.b(0), w25.b(25)), rank(f.snapshot(), w25.b(0), w25.b(25)));
}

TEST(Walk, StepsAreEdgesAndFresh) {
  LazyRegularForest f(3, 40, 1);
  const Vertex r = f.root(0);
  const Vertex c = f.neighbors(r)[1];
  const auto w = claim_walk(f, r, c, 15, 11);
  for (std::size_t i = 0; i + 1 < w.sequence.size(); ++i) {
    EXPECT_EQ(f.rank(w.sequence[i], w.sequence[i + 1]), RankValue::finite(1));
  }
  for (std::size_t i = 0; i + 2 < w.sequence.size(); ++i) {
    EXPECT_NE(w.sequence[i], w.sequence[i + 2]);
  }
}

TEST(Walk, FailsAtBoundary) {
  const auto g = path3();
  try {
    (void)claim_walk(g, 0, 1, 3, 0);
    FAIL() << "expected WalkError";
  } catch (const WalkError& e) {
    EXPECT_EQ(e.step(), 1U);
  }
  LazyRegularForest f(3, 3, 1);
  const Vertex r = f.root(0);
  EXPECT_THROW((void)claim_walk(f, r, f.neighbors(r)[0], 5, 0), WalkError);
  EXPECT_THROW((void)claim_walk(f, r, r, 1, 0), std::invalid_argument);
}
