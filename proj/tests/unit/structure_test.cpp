#include <gtest/gtest.h>

#include "specgraph/structure.hpp"

using namespace specgraph;

TEST(Structure, Connectivity) {
  EXPECT_TRUE(is_connected(Graph(1)));
  EXPECT_FALSE(is_connected(Graph(2)));
  EXPECT_TRUE(is_connected(families::path(7)));
  EXPECT_FALSE(is_connected(Graph::from_edges(4, {{0, 1}, {2, 3}})));
}

TEST(Structure, DetectMultipartite) {
  const auto p = detect_complete_multipartite(families::complete_multipartite(Partition({1, 2, 3})));
  ASSERT_TRUE(p);
  EXPECT_EQ(*p, Partition({1, 2, 3}));
  EXPECT_EQ(*detect_complete_multipartite(families::complete(4)), Partition({1, 1, 1, 1}));
  EXPECT_EQ(*detect_complete_multipartite(families::cycle(4)), Partition({2, 2}));
  EXPECT_EQ(*detect_complete_multipartite(families::star(5)), Partition({1, 4}));
  EXPECT_FALSE(detect_complete_multipartite(families::path(4)));
  EXPECT_FALSE(detect_complete_multipartite(families::cycle(5)));
  EXPECT_FALSE(detect_complete_multipartite(Graph(3)));
  // Relabelled copies are still recognised.
  const std::vector<std::size_t> perm = {4, 0, 5, 2, 1, 3};
  EXPECT_EQ(*detect_complete_multipartite(families::complete_multipartite(Partition({2, 4})).permuted(perm)),
            Partition({2, 4}));
}

TEST(Structure, Bipartite) {
  EXPECT_TRUE(is_bipartite(families::path(5)));
  EXPECT_TRUE(is_bipartite(families::cycle(6)));
  EXPECT_FALSE(is_bipartite(families::cycle(5)));
  const auto bp = bipartition(families::path(4));
  ASSERT_TRUE(bp);
  EXPECT_EQ(bp->first, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(bp->second, (std::vector<std::size_t>{1, 3}));
}

TEST(Structure, NamedShapes) {
  EXPECT_TRUE(is_complete(families::complete(5)));
  EXPECT_FALSE(is_complete(families::cycle(5)));
  EXPECT_TRUE(is_path_graph(families::path(5)));
  EXPECT_TRUE(is_path_graph(families::path(5).permuted(std::vector<std::size_t>{3, 1, 4, 0, 2})));
  EXPECT_FALSE(is_path_graph(families::cycle(5)));
  EXPECT_TRUE(is_star_graph(families::star(6)));
  EXPECT_FALSE(is_star_graph(families::path(4)));
}
