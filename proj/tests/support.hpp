#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "tga/tree.hpp"

namespace tga::testing {

// Uniform labeled tree on k vertices from a random Pruefer sequence, with
// random edge orientations.
inline OrientedTree random_tree(std::uint32_t k, std::mt19937_64& rng) {
  std::vector<TreeEdge> edges;
  if (k == 2) {
    edges.push_back({1, 2});
  } else {
    std::uniform_int_distribution<std::uint32_t> pick(1, k);
    std::vector<std::uint32_t> code(k - 2);
    for (auto& c : code) c = pick(rng);
    std::vector<std::uint32_t> degree(k + 1, 1);
    for (auto c : code) ++degree[c];
    std::set<std::uint32_t> leaves;
    for (std::uint32_t v = 1; v <= k; ++v) {
      if (degree[v] == 1) leaves.insert(v);
    }
    for (auto c : code) {
      const std::uint32_t leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      edges.push_back({leaf, c});
      if (--degree[c] == 1) leaves.insert(c);
    }
    const std::uint32_t a = *leaves.begin();
    const std::uint32_t b = *std::next(leaves.begin());
    edges.push_back({a, b});
  }
  std::bernoulli_distribution flip(0.5);
  for (auto& e : edges) {
    if (flip(rng)) std::swap(e.source, e.target);
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return OrientedTree(k, edges);
}

}  // namespace tga::testing
