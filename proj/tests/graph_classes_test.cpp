#include <gtest/gtest.h>

#include "modcard/graph_classes.hpp"
#include "test_support.hpp"

namespace modcard {
namespace {

const std::vector<ClassTag> kAllTags = {ClassTag::Edgeless, ClassTag::Clique,       ClassTag::Cluster,
                                        ClassTag::Stars,    ClassTag::Cograph,      ClassTag::LinearForest,
                                        ClassTag::BinaryForest, ClassTag::KI};

TEST(RecognizeTest, Examples) {
  EXPECT_FALSE(recognize(ClassTag::Cluster, path_graph(3)));
  Graph stars = disjoint_union(disjoint_union(star_graph(3), complete_graph(2)), Graph(1));
  EXPECT_TRUE(recognize(ClassTag::Stars, stars));
  EXPECT_FALSE(recognize(ClassTag::Cograph, path_graph(4)));
  EXPECT_TRUE(recognize(ClassTag::Cograph, cycle_graph(4)));
  EXPECT_FALSE(recognize(ClassTag::Stars, path_graph(4)));
  EXPECT_TRUE(recognize(ClassTag::LinearForest, path_graph(6)));
  EXPECT_FALSE(recognize(ClassTag::LinearForest, star_graph(3)));
  EXPECT_TRUE(recognize(ClassTag::BinaryForest, star_graph(3)));
  EXPECT_FALSE(recognize(ClassTag::BinaryForest, star_graph(4)));
  EXPECT_FALSE(recognize(ClassTag::BinaryForest, cycle_graph(3)));
  EXPECT_TRUE(recognize(GraphClass::bounded_deg_forest(4), star_graph(4)));
}

TEST(RecognizeTest, UnionClassAcceptsAnyMember) {
  GraphClass u = parse_graph_class("cluster+binary-forest");
  EXPECT_TRUE(u.is_union());
  EXPECT_TRUE(recognize(u, complete_graph(5)));
  EXPECT_TRUE(recognize(u, path_graph(5)));
  EXPECT_FALSE(recognize(u, cycle_graph(5)));
}

TEST(RecognizeTest, AgreesWithForbiddenPatternOracle) {
  testing::Rng rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    Graph g = testing::random_graph(1 + trial % 8, 1 + trial % 3, 5, rng);
    for (ClassTag tag : kAllTags)
      EXPECT_EQ(recognize(tag, g), testing::oracle_in_class(tag, g)) << "trial " << trial;
  }
}

TEST(RecognizeTest, GeneratedMembersAreRecognized) {
  testing::Rng rng(4);
  for (ClassTag tag : kAllTags)
    for (int n = 1; n <= 12; ++n) EXPECT_TRUE(recognize(tag, testing::random_member(tag, n, rng)));
}

TEST(ParseClassTest, NamesRoundTrip) {
  for (const char* name : {"edgeless", "clique", "cluster", "stars", "cograph", "linear-forest", "binary-forest", "ki",
                           "bounded-deg-forest:5"})
    EXPECT_EQ(parse_graph_class(name).name(), name);
  EXPECT_THROW(parse_graph_class("planar"), std::invalid_argument);
  EXPECT_THROW(parse_graph_class("bounded-deg-forest:x"), std::invalid_argument);
}

TEST(MergeTest, ClusterUnionIsOneBlock) {
  Graph g = disjoint_union(disjoint_union(complete_graph(2), complete_graph(3)), Graph(1));
  auto p = g_merge(GraphClass(ClassTag::Cluster), g);
  ASSERT_EQ(p.size(), 1);
  EXPECT_EQ(p.blocks[0].size(), 6);
}

TEST(MergeTest, ClusterJoinKeepsCoComponentsApart) {
  Graph g = join(disjoint_union(complete_graph(2), Graph(1)), complete_graph(2));
  auto p = g_merge(GraphClass(ClassTag::Cluster), g);
  ASSERT_EQ(p.size(), 2);
  EXPECT_EQ(p.blocks[0].members(), std::vector<Vertex>({0, 1, 2}));
  EXPECT_EQ(p.blocks[1].members(), std::vector<Vertex>({3, 4}));
}

TEST(MergeTest, EdgelessJoinUsesCoComponents) {
  Graph g = join(edgeless_graph(2), edgeless_graph(3));
  auto p = g_merge(GraphClass(ClassTag::Edgeless), g);
  ASSERT_EQ(p.size(), 2);
  EXPECT_EQ(p.blocks[0].size(), 2);
  EXPECT_EQ(p.blocks[1].size(), 3);
}

TEST(MergeTest, RejectsUnmergeableInput) {
  EXPECT_THROW(g_merge(GraphClass(ClassTag::Cluster), path_graph(4)), std::invalid_argument);
  EXPECT_THROW(g_merge(GraphClass(ClassTag::Stars), edgeless_graph(2)), std::invalid_argument);
}

}  // namespace
}  // namespace modcard
