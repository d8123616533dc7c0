#include <sstream>

#include <gtest/gtest.h>

#include "modcard/graph.hpp"

namespace modcard {
namespace {

TEST(VertexSetTest, BasicOperations) {
  VertexSet a(70, {1, 5, 65});
  VertexSet b(70, {5, 66});
  EXPECT_EQ(a.size(), 3);
  EXPECT_TRUE(a.contains(65));
  EXPECT_FALSE(a.contains(66));
  EXPECT_EQ((a & b).members(), std::vector<Vertex>({5}));
  EXPECT_EQ((a | b).size(), 4);
  EXPECT_EQ((a - b).members(), std::vector<Vertex>({1, 65}));
  EXPECT_EQ(a.complement().size(), 67);
  EXPECT_EQ(a.min(), 1);
  EXPECT_EQ(VertexSet(4).min(), -1);
  EXPECT_TRUE(VertexSet(70, {5}).is_subset_of(a));
  EXPECT_EQ(a.intersection_size(b), 1);
}

TEST(VertexSetTest, MismatchedUniversesAreRejected) {
  VertexSet a(3), b(4);
  EXPECT_THROW((void)(a | b), std::invalid_argument);
}

TEST(GraphTest, RejectsLoopsAndOutOfRange) {
  EXPECT_THROW(Graph(3, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
}

TEST(GraphTest, RejectsDuplicateEdges) {
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST(GraphTest, ComplementOfTriangleIsEdgeless) {
  Graph c = complement(complete_graph(3));
  EXPECT_EQ(c.n(), 3);
  EXPECT_EQ(c.m(), 0);
}

TEST(GraphTest, ComplementOfSingleVertex) {
  Graph c = complement(edgeless_graph(1));
  EXPECT_EQ(c.n(), 1);
  EXPECT_EQ(c.m(), 0);
}

TEST(GraphTest, ComplementOfP4IsP4) {
  // 0-1-2-3 complements to 1-3-0-2.
  Graph c = complement(path_graph(4));
  EXPECT_EQ(c.m(), 3);
  EXPECT_TRUE(c.adjacent(1, 3));
  EXPECT_TRUE(c.adjacent(3, 0));
  EXPECT_TRUE(c.adjacent(0, 2));
}

TEST(GraphTest, ComponentsOfTwoTriangles) {
  auto comps = connected_components(disjoint_union(complete_graph(3), complete_graph(3)));
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_EQ(comps[0].members(), std::vector<Vertex>({0, 1, 2}));
  EXPECT_EQ(comps[1].members(), std::vector<Vertex>({3, 4, 5}));
}

TEST(GraphTest, ComponentsOfEdgelessAndPath) {
  EXPECT_EQ(connected_components(edgeless_graph(4)).size(), 4U);
  auto p = connected_components(path_graph(4));
  ASSERT_EQ(p.size(), 1U);
  EXPECT_EQ(p[0].size(), 4);
}

TEST(GraphTest, InducedSubgraphs) {
  Graph p4 = path_graph(4);
  auto k2 = induced_subgraph(p4, VertexSet(4, {0, 1}));
  EXPECT_EQ(k2.graph.n(), 2);
  EXPECT_EQ(k2.graph.m(), 1);
  EXPECT_EQ(k2.to_host, std::vector<Vertex>({0, 1}));
  auto e2 = induced_subgraph(p4, VertexSet(4, {0, 2}));
  EXPECT_EQ(e2.graph.n(), 2);
  EXPECT_EQ(e2.graph.m(), 0);
  EXPECT_EQ(e2.from_host[2], 1);
  EXPECT_EQ(e2.from_host[1], -1);
  auto empty = induced_subgraph(p4, VertexSet(4));
  EXPECT_EQ(empty.graph.n(), 0);
}

TEST(GraphTest, DegreeMeasures) {
  Graph k3 = complete_graph(3);
  EXPECT_EQ(max_degree(k3), 2);
  EXPECT_EQ(min_degree_into(k3, VertexSet(3, {0})), 1);
  EXPECT_EQ(min_degree_into(path_graph(3), VertexSet(3, {1})), 1);
  EXPECT_EQ(min_degree_into(edgeless_graph(3), VertexSet(3, {0, 2})), 0);
}

TEST(GraphTest, EdgeListRoundTrip) {
  Graph g = cycle_graph(5);
  std::stringstream ss;
  write_edge_list(ss, g);
  EXPECT_EQ(read_edge_list(ss), g);
}

TEST(GraphTest, EdgeListIgnoresComments) {
  std::istringstream in("# a path\n3 2\n0 1\n# middle\n1 2\n");
  Graph g = read_edge_list(in);
  EXPECT_EQ(g, path_graph(3));
}

TEST(GraphTest, EdgeListRejectsMalformedInput) {
  std::istringstream short_input("3 2\n0 1\n");
  EXPECT_THROW(read_edge_list(short_input), std::invalid_argument);
  std::istringstream bad_vertex("2 1\n0 5\n");
  EXPECT_THROW(read_edge_list(bad_vertex), std::invalid_argument);
}

TEST(GraphTest, JoinAndUnionBuilders) {
  Graph j = join(complete_graph(2), edgeless_graph(2));
  EXPECT_EQ(j.n(), 4);
  EXPECT_EQ(j.m(), 1 + 4);
  Graph u = disjoint_union(star_graph(3), complete_graph(2));
  EXPECT_EQ(u.n(), 6);
  EXPECT_EQ(u.m(), 4);
}

}  // namespace
}  // namespace modcard
