#include <gtest/gtest.h>

#include <bit>
#include <queue>

#include "corpus.hpp"
#include "pursuit/error.hpp"
#include "pursuit/families.hpp"
#include "pursuit/graph_io.hpp"

using namespace pursuit;

namespace {

int bfs_distance(const Graph& g, Vertex a, Vertex b) {
  std::vector<int> d(g.order(), -1);
  std::queue<Vertex> q;
  d[a] = 0;
  q.push(a);
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u)) {
      if (d[w] < 0) {
        d[w] = d[u] + 1;
        q.push(w);
      }
    }
  }
  return d[b];
}

}  // namespace

TEST(Distances, CompleteGraphOnTwoVertices) { EXPECT_EQ(build_complete(2).distance(0, 1), 1); }

TEST(Distances, HypercubeAntipodes) { EXPECT_EQ(build_hypercube(3).distance(0b000, 0b111), 3); }

TEST(Distances, ArmZeroIsAnEdge) {
  const Graph a = build_arm(0);
  ASSERT_EQ(a.order(), 2u);
  EXPECT_EQ(a.distance(0, 1), 1);
}

TEST(Distances, DisconnectedGraphIsRejected) {
  GraphBuilder b;
  b.add_vertex(VertexLabel::anon(0));
  b.add_vertex(VertexLabel::anon(1));
  const Graph g = std::move(b).build();
  EXPECT_FALSE(g.connected());
  EXPECT_THROW(all_pairs_distances(g), DisconnectedGraph);
}

TEST(Gadget, Counts) {
  const Graph t = build_T(0);
  EXPECT_EQ(t.order(), 11u);
  EXPECT_EQ(t.size(), 30u);
  EXPECT_EQ(t.degree(t.at(VertexLabel::hub(0))), 5);
}

TEST(Gadget, EdgesMatchDefinition) {
  const Graph t = build_T(0);
  auto in = [&](int i) { return t.at(VertexLabel::arm_in(i, 0)); };
  auto out = [&](int i) { return t.at(VertexLabel::arm_out(i, 0)); };
  const Vertex hub = t.at(VertexLabel::hub(0));
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const bool ring = std::abs(i - j) == 1 || std::abs(i - j) == 4;
      EXPECT_EQ(t.adjacent(in(i), in(j)), ring);
      EXPECT_EQ(t.adjacent(out(i), out(j)), ring);
      EXPECT_EQ(t.adjacent(in(i), out(j)), ring || i == j);
    }
    EXPECT_TRUE(t.adjacent(in(i), hub));
    EXPECT_FALSE(t.adjacent(out(i), hub));
  }
}

TEST(Arm, SizesAndBridges) {
  const Graph a0 = build_arm(0);
  EXPECT_EQ(a0.size(), 1u);
  EXPECT_EQ(build_arm(3).order(), 35u);
  const Graph a2 = build_arm(2);
  EXPECT_TRUE(a2.adjacent(a2.at(VertexLabel::arm_out(2, 0)), a2.at(VertexLabel::arm_out(0, 1))));
  EXPECT_THROW(build_arm(-1), GraphError);
}

TEST(Arm, CountInvariantUpToTen) {
  for (int n = 0; n <= 10; ++n) {
    const Graph a = build_arm(n);
    EXPECT_EQ(a.order(), static_cast<std::size_t>(11 * n + 2));
    int bridges = 0;
    for (int x = -1; x <= n - 1; ++x) {
      bridges += a.adjacent(a.at(VertexLabel::arm_out(2, x)), a.at(VertexLabel::arm_out(0, x + 1)));
    }
    EXPECT_EQ(bridges, n + 1);
    EXPECT_EQ(a.size(), static_cast<std::size_t>(30 * n + n + 1));
  }
}

TEST(Families, PathHypercubeG5) {
  const Graph q4 = build_hypercube(4);
  EXPECT_EQ(q4.order(), 16u);
  EXPECT_EQ(q4.size(), 32u);
  EXPECT_EQ(build_G5().order(), 15u);
  const Graph p3 = build_path(3);
  EXPECT_EQ(p3.order(), 3u);
  EXPECT_EQ(p3.diameter(), 2);
  EXPECT_EQ(build_path(0).order(), 0u);
  EXPECT_THROW(build_hypercube(0), GraphError);
  EXPECT_THROW(build_path(-2), GraphError);
}

TEST(Families, HypercubeDegreeAndHamming) {
  for (int n = 1; n <= 6; ++n) {
    const Graph q = build_hypercube(n);
    for (Vertex u = 0; u < static_cast<Vertex>(q.order()); ++u) {
      EXPECT_EQ(q.degree(u), n);
      for (Vertex v = 0; v < static_cast<Vertex>(q.order()); ++v) {
        ASSERT_EQ(q.distance(u, v), std::popcount(static_cast<unsigned>(u ^ v)));
      }
    }
  }
}

TEST(Attach, SingleVertexPlusArmZeroIsP3) {
  const Graph g = attach(build_complete(1), build_arm(0), 0, 0);
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.diameter(), 2);
  EXPECT_TRUE(g.connected());
}

TEST(Attach, OrderAndDistancesMatchBfs) {
  for (std::uint32_t seed = 1; seed <= 10; ++seed) {
    const Graph a = fixtures::random_connected(6, 3, seed);
    const Graph b = fixtures::random_connected(5, 2, seed + 100);
    const Vertex u = static_cast<Vertex>(seed % 6), v = static_cast<Vertex>(seed % 5);
    const Graph g = attach(a, b, u, v);
    ASSERT_EQ(g.order(), a.order() + b.order());
    ASSERT_TRUE(g.connected());
    for (Vertex x = 0; x < static_cast<Vertex>(g.order()); ++x) {
      for (Vertex y = 0; y < static_cast<Vertex>(g.order()); ++y) ASSERT_EQ(g.distance(x, y), bfs_distance(g, x, y));
    }
    for (Vertex x = 0; x < 6; ++x) {
      for (Vertex y = 0; y < 6; ++y) EXPECT_EQ(g.distance(x, y), a.distance(x, y));
    }
  }
  EXPECT_THROW(attach(build_complete(2), build_complete(2), 5, 0), GraphError);
}

TEST(Attach, EmptyPathIsANoOp) {
  const Graph g = attach(build_complete(3), build_path(0), 0, 0);
  EXPECT_EQ(g.order(), 3u);
}

TEST(ModResidue, Examples) {
  EXPECT_EQ(mod_residue(7, 5), 2);
  EXPECT_EQ(mod_residue(10, 5), 0);
  EXPECT_EQ(mod_residue(-1, 5), 4);
  EXPECT_THROW(mod_residue(3, 0), GraphError);
}

TEST(Labels, UniqueAndParsable) {
  for (const auto& [name, g] : fixtures::medium_corpus()) {
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
      ASSERT_EQ(g.at(g.label(v)), v) << name;
      ASSERT_EQ(parse_label(to_string(g.label(v))), g.label(v)) << name;
    }
  }
  EXPECT_EQ(to_string(VertexLabel::arm_out(2, -1)), "out:2:-1");
  EXPECT_EQ(to_string(VertexLabel::cube(0b0101, 4)), "cube:0101");
}

TEST(Invariants, AdjacencySymmetricIrreflexive) {
  for (const auto& [name, g] : fixtures::medium_corpus()) {
    for (Vertex u = 0; u < static_cast<Vertex>(g.order()); ++u) {
      ASSERT_EQ(g.distance(u, u), 0) << name;
      for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
        const auto nb = g.neighbors(u);
        const bool listed = std::find(nb.begin(), nb.end(), v) != nb.end();
        ASSERT_EQ(listed, g.distance(u, v) == 1) << name;
        ASSERT_EQ(g.distance(u, v), g.distance(v, u)) << name;
      }
    }
  }
}

TEST(GraphJson, RoundTripKeepsLabelsAndEdges) {
  for (const auto& [name, g] : fixtures::medium_corpus()) {
    const Graph back = graph_from_json(graph_to_json(g));
    ASSERT_EQ(back.labels(), g.labels()) << name;
    ASSERT_EQ(back.edges(), g.edges()) << name;
    EXPECT_EQ(graph_hash(back), graph_hash(g));
  }
  EXPECT_THROW(graph_from_json("{\"vertices\":[{\"id\":0,\"label\":\"anon:0\"}],\"edges\":[[0,3]]}"), GraphError);
  EXPECT_THROW(graph_from_json("not json"), GraphError);
}
