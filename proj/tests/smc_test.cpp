#include <sstream>

#include <gtest/gtest.h>

#include "modcard/gadgets.hpp"

namespace modcard {
namespace {

TEST(SmcTest, PlantedPair) {
  auto s = smc_from_clique(2, 2, Rational(0), 1);
  EXPECT_EQ(s.k, 2);
  EXPECT_EQ(s.graph.n(), 4);
  EXPECT_TRUE(s.violation().empty());
  EXPECT_EQ(s.graph.m(), 2);  // the planted pair of symmetry edges
  EXPECT_TRUE(find_multicolored_clique(s));
}

TEST(SmcTest, FromGraph) {
  auto yes = smc_from_graph(complete_graph(3), 3);
  EXPECT_EQ(yes.graph.n(), 9);
  auto pick = find_multicolored_clique(yes);
  ASSERT_TRUE(pick);
  EXPECT_TRUE(is_multicolored_clique(yes, *pick));
  EXPECT_FALSE(find_multicolored_clique(smc_from_graph(path_graph(3), 3)));
}

TEST(SmcTest, RejectsInvalidParameters) {
  EXPECT_THROW(smc_from_clique(1, 3, Rational(1, 2), 1), std::invalid_argument);
  EXPECT_THROW(smc_from_clique(4, 3, Rational(1, 2), 1), std::invalid_argument);
  EXPECT_THROW(smc_from_clique(2, 3, Rational(3, 2), 1), std::invalid_argument);
  EXPECT_THROW(smc_from_graph(path_graph(3), 4), std::invalid_argument);
}

TEST(SmcTest, PlantedInstancesAreSymmetricYesInstances) {
  for (int k = 2; k <= 5; ++k)
    for (int n = k; n <= 6; ++n)
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto s = smc_from_clique(k, n, Rational(1, 3), seed);
        EXPECT_TRUE(s.violation().empty());
        EXPECT_TRUE(find_multicolored_clique(s));
      }
}

TEST(SmcTest, DeterministicForSeed) {
  EXPECT_EQ(smc_from_clique(3, 5, Rational(1, 2), 9).graph, smc_from_clique(3, 5, Rational(1, 2), 9).graph);
}

TEST(SmcTest, ViolationsAreReported) {
  SmcInstance s;
  s.k = 2;
  s.n = 2;
  s.graph = Graph(4, {{0, 1}});
  EXPECT_NE(s.violation().find("inside color class"), std::string::npos);
  s.graph = Graph(4, {{0, 3}});
  EXPECT_NE(s.violation().find("symmetry"), std::string::npos);
}

TEST(SmcTest, TextRoundTrip) {
  auto s = smc_from_clique(3, 4, Rational(1, 2), 3);
  std::stringstream ss;
  write_smc(ss, s);
  auto back = read_smc(ss);
  EXPECT_EQ(back.k, 3);
  EXPECT_EQ(back.n, 4);
  EXPECT_EQ(back.graph, s.graph);
}

TEST(SmcTest, ReaderRejectsUnevenColors) {
  std::istringstream in("3 0\nc 0 0\nc 1 0\nc 2 1\n");
  EXPECT_THROW(read_smc(in), std::invalid_argument);
}

}  // namespace
}  // namespace modcard
