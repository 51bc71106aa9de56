#include <functional>

#include "doctest.h"
#include "support.hpp"
#include "tga/errors.hpp"
#include "tga/tree.hpp"

using namespace tga;

namespace {

std::vector<std::vector<std::size_t>> all_perfect_matchings(const OrientedTree& tree) {
  std::vector<std::vector<std::size_t>> found;
  const std::size_t m = tree.edge_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<int> cover(tree.vertex_count() + 1, 0);
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1U) {
        ++cover[tree.edge(i).source];
        ++cover[tree.edge(i).target];
        chosen.push_back(i);
      }
    }
    if (std::all_of(cover.begin() + 1, cover.end(), [](int c) { return c == 1; })) {
      found.push_back(chosen);
    }
  }
  return found;
}

}  // namespace

TEST_CASE("parse_tree") {
  const auto p3 = parse_tree("1 2\n2 3");
  CHECK(p3.vertex_count() == 3);
  CHECK(p3.edges() == std::vector<TreeEdge>{{1, 2}, {2, 3}});

  const auto p2 = parse_tree("1 2\n");
  CHECK(p2.vertex_count() == 2);
  CHECK(p2.edge_count() == 1);

  const auto s4 = parse_tree("# star\n\n1 2\n1 3\n1 4\n");
  CHECK(s4.vertex_count() == 4);
  CHECK(s4.neighbors(1).size() == 3);
  CHECK(s4.edges() == star_tree(4).edges());
}

TEST_CASE("parse_tree rejects non-trees") {
  CHECK_THROWS_AS(parse_tree("1 2\n2 3\n3 1"), NotATree);  // cycle
  CHECK_THROWS_AS(parse_tree("1 2\n3 4"), NotATree);       // disconnected
  CHECK_THROWS_AS(parse_tree("1 1"), NotATree);            // self-loop
  CHECK_THROWS_AS(parse_tree("1 2\n2 1"), NotATree);       // duplicate
  CHECK_THROWS_AS(parse_tree(""), NotATree);               // k < 2
  CHECK_THROWS_AS(OrientedTree(1, {}), NotATree);
  CHECK_THROWS_AS(OrientedTree(3, {{1, 5}, {1, 2}}), NotATree);
}

TEST_CASE("parse_tree rejects malformed lines") {
  CHECK_THROWS_AS(parse_tree("1 two"), MalformedInput);
  CHECK_THROWS_AS(parse_tree("1"), MalformedInput);
  CHECK_THROWS_AS(parse_tree("1 2 3"), MalformedInput);
  CHECK_THROWS_AS(parse_tree("0 1"), MalformedInput);
  CHECK_THROWS_AS(load_tree("/nonexistent/tree.txt"), MalformedInput);
}

TEST_CASE("format_tree round trip") {
  const auto spider = spider_tree({2, 2, 1});
  CHECK(parse_tree(format_tree(spider)).edges() == spider.edges());
}

TEST_CASE("builders") {
  CHECK(path_tree(4).edges() == std::vector<TreeEdge>{{1, 2}, {2, 3}, {3, 4}});
  CHECK(star_tree(3).edges() == std::vector<TreeEdge>{{1, 2}, {1, 3}});
  const auto spider = spider_tree({2, 2, 1});
  CHECK(spider.vertex_count() == 6);
  CHECK(spider.neighbors(1).size() == 3);
}

TEST_CASE("tree_diameter") {
  CHECK(tree_diameter(path_tree(3)) == 2);
  CHECK(tree_diameter(path_tree(4)) == 3);
  CHECK(tree_diameter(star_tree(5)) == 2);
  CHECK(tree_diameter(path_tree(2)) == 1);
  CHECK(tree_diameter(spider_tree({2, 2, 1})) == 4);
}

TEST_CASE("tree_wiener") {
  CHECK(tree_wiener(path_tree(3)) == 4);
  for (std::uint32_t k = 2; k <= 12; ++k) {
    CHECK(tree_wiener(path_tree(k)) == k * (k * k - 1) / 6);
    CHECK(tree_wiener(star_tree(k)) == (k - 1) * (k - 1));
  }
}

TEST_CASE("tree_szeged") {
  CHECK(tree_szeged(path_tree(3)) == 4);
  CHECK(tree_szeged(path_tree(2)) == 1);
  CHECK(tree_szeged(star_tree(4)) == 9);
}

TEST_CASE("split_counts") {
  CHECK(split_counts(path_tree(3), 0) == EdgeSplit{1, 2});
  CHECK(split_counts(path_tree(2), 0) == EdgeSplit{1, 1});
  CHECK(split_counts(star_tree(4), 0) == EdgeSplit{3, 1});
  CHECK_THROWS_AS(split_counts(path_tree(3), 2), InvalidEdge);
}

TEST_CASE("tree_perfect_matching") {
  CHECK(tree_perfect_matching(path_tree(4)) == std::vector<std::size_t>{0, 2});
  CHECK_FALSE(tree_perfect_matching(path_tree(3)).has_value());
  CHECK_FALSE(tree_perfect_matching(star_tree(4)).has_value());
  CHECK(tree_perfect_matching(path_tree(2)) == std::vector<std::size_t>{0});
}

TEST_CASE("with_reversed flips the selected edges only") {
  const auto p3 = path_tree(3);
  const auto flipped = p3.with_reversed({true, false});
  CHECK(flipped.edges() == std::vector<TreeEdge>{{2, 1}, {2, 3}});
  CHECK(tree_wiener(flipped) == tree_wiener(p3));
}

TEST_CASE("random trees: splits, Szeged = Wiener, unique perfect matching") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint32_t k = 2 + static_cast<std::uint32_t>(trial % 9);
    const auto tree = testing::random_tree(k, rng);
    for (std::size_t e = 0; e < tree.edge_count(); ++e) {
      const auto split = split_counts(tree, e);
      CHECK(split.source_side + split.target_side == k);
      CHECK(split.source_side >= 1);
      CHECK(split.target_side >= 1);
    }
    CHECK(tree_szeged(tree) == tree_wiener(tree));

    const auto matchings = all_perfect_matchings(tree);
    const auto greedy = tree_perfect_matching(tree);
    if (greedy) {
      REQUIRE(matchings.size() == 1);
      CHECK(*greedy == matchings.front());
      CHECK(greedy->size() == k / 2);
    } else {
      CHECK(matchings.empty());
    }

    const auto dist = tree.distances();
    std::uint32_t diameter = 0;
    for (Vertex u = 1; u <= k; ++u) {
      for (Vertex v = 1; v <= k; ++v) diameter = std::max(diameter, dist[u][v]);
    }
    CHECK(tree_diameter(tree) == diameter);
  }
}
