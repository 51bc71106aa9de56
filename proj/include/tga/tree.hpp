#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tga {

// Tree vertices double as the automaton alphabet: 1-based, contiguous.
using Vertex = std::uint32_t;

struct TreeEdge {
  Vertex source;
  Vertex target;

  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

// Vertices strictly closer to each endpoint of a tree edge.
struct EdgeSplit {
  std::uint64_t source_side;  // n(s, t)
  std::uint64_t target_side;  // n(t, s)

  friend bool operator==(const EdgeSplit&, const EdgeSplit&) = default;
};

// A finite tree with a chosen orientation of every edge. The orientation of
// edge i is the generator label i of the associated automaton.
class OrientedTree {
 public:
  // Throws NotATree unless the edges form a tree on vertices 1..k, k >= 2.
  OrientedTree(std::uint32_t k, std::vector<TreeEdge> edges);

  std::uint32_t vertex_count() const { return k_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<TreeEdge>& edges() const { return edges_; }
  const TreeEdge& edge(std::size_t index) const;
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }

  // Same tree with edge i reversed for every set bit i.
  OrientedTree with_reversed(const std::vector<bool>& reverse) const;

  // One distance row per vertex, rows and columns indexed 1..k.
  std::vector<std::vector<std::uint32_t>> distances() const;

 private:
  std::uint32_t k_;
  std::vector<TreeEdge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;  // index 0 unused
};

// Lines "u v"; blank lines and lines starting with '#' are skipped.
OrientedTree parse_tree(std::string_view text);
OrientedTree load_tree(const std::string& path);
std::string format_tree(const OrientedTree& tree);

OrientedTree path_tree(std::uint32_t k);
OrientedTree star_tree(std::uint32_t k);
// Legs of the given lengths glued at vertex 1.
OrientedTree spider_tree(const std::vector<std::uint32_t>& legs);

std::uint32_t tree_diameter(const OrientedTree& tree);
std::uint64_t tree_wiener(const OrientedTree& tree);
std::uint64_t tree_szeged(const OrientedTree& tree);
EdgeSplit split_counts(const OrientedTree& tree, std::size_t edge_index);

// The unique perfect matching, as sorted edge indices, if one exists.
std::optional<std::vector<std::size_t>> tree_perfect_matching(const OrientedTree& tree);

}  // namespace tga
