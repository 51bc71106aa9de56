#include "tga/tree.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "tga/errors.hpp"

namespace tga {
namespace {

std::vector<std::uint32_t> bfs_from(const OrientedTree& tree, Vertex source) {
  std::vector<std::uint32_t> dist(tree.vertex_count() + 1, UINT32_MAX);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : tree.neighbors(v)) {
      if (dist[w] == UINT32_MAX) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool parse_label(std::string_view token, std::uint32_t& out) {
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end && out > 0;
}

}  // namespace

OrientedTree::OrientedTree(std::uint32_t k, std::vector<TreeEdge> edges)
    : k_(k), edges_(std::move(edges)), adjacency_(k + 1) {
  if (k_ < 2) throw NotATree("a tree needs at least 2 vertices");
  if (edges_.size() != k_ - 1) {
    throw NotATree("expected " + std::to_string(k_ - 1) + " edges for " +
                   std::to_string(k_) + " vertices, got " + std::to_string(edges_.size()));
  }
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto& [s, t] : edges_) {
    if (s < 1 || s > k_ || t < 1 || t > k_) throw NotATree("vertex label out of range");
    if (s == t) throw NotATree("self-loop at vertex " + std::to_string(s));
    if (!seen.insert({std::min(s, t), std::max(s, t)}).second) {
      throw NotATree("repeated edge {" + std::to_string(s) + "," + std::to_string(t) + "}");
    }
    adjacency_[s].push_back(t);
    adjacency_[t].push_back(s);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
  const auto dist = bfs_from(*this, 1);
  for (Vertex v = 1; v <= k_; ++v) {
    if (dist[v] == UINT32_MAX) {
      throw NotATree("vertex " + std::to_string(v) + " is not connected to vertex 1");
    }
  }
}

const TreeEdge& OrientedTree::edge(std::size_t index) const {
  if (index >= edges_.size()) throw InvalidEdge("no edge with index " + std::to_string(index));
  return edges_[index];
}

OrientedTree OrientedTree::with_reversed(const std::vector<bool>& reverse) const {
  std::vector<TreeEdge> flipped = edges_;
  for (std::size_t i = 0; i < flipped.size() && i < reverse.size(); ++i) {
    if (reverse[i]) std::swap(flipped[i].source, flipped[i].target);
  }
  return OrientedTree(k_, std::move(flipped));
}

std::vector<std::vector<std::uint32_t>> OrientedTree::distances() const {
  std::vector<std::vector<std::uint32_t>> rows(k_ + 1);
  for (Vertex v = 1; v <= k_; ++v) rows[v] = bfs_from(*this, v);
  return rows;
}

OrientedTree parse_tree(std::string_view text) {
  std::vector<TreeEdge> edges;
  std::uint32_t k = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string first, second, extra;
    if (!(fields >> first)) continue;
    if (first.front() == '#') continue;
    std::uint32_t u = 0, v = 0;
    if (!(fields >> second) || (fields >> extra) || !parse_label(first, u) ||
        !parse_label(second, v)) {
      throw MalformedInput("line " + std::to_string(line_no) +
                           ": expected two positive integers, got \"" + line + "\"");
    }
    edges.push_back({u, v});
    k = std::max({k, u, v});
  }
  return OrientedTree(k, std::move(edges));
}

OrientedTree load_tree(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw MalformedInput("cannot open tree file " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_tree(buffer.str());
}

std::string format_tree(const OrientedTree& tree) {
  std::ostringstream out;
  for (const auto& [s, t] : tree.edges()) out << s << ' ' << t << '\n';
  return out.str();
}

OrientedTree path_tree(std::uint32_t k) {
  std::vector<TreeEdge> edges;
  for (Vertex v = 1; v < k; ++v) edges.push_back({v, v + 1});
  return OrientedTree(k, std::move(edges));
}

OrientedTree star_tree(std::uint32_t k) {
  std::vector<TreeEdge> edges;
  for (Vertex v = 2; v <= k; ++v) edges.push_back({1, v});
  return OrientedTree(k, std::move(edges));
}

OrientedTree spider_tree(const std::vector<std::uint32_t>& legs) {
  std::vector<TreeEdge> edges;
  Vertex next = 2;
  for (std::uint32_t length : legs) {
    Vertex previous = 1;
    for (std::uint32_t step = 0; step < length; ++step) {
      edges.push_back({previous, next});
      previous = next++;
    }
  }
  return OrientedTree(next - 1, std::move(edges));
}

std::uint32_t tree_diameter(const OrientedTree& tree) {
  // Farthest vertex from any vertex is an end of a longest path.
  auto dist = bfs_from(tree, 1);
  const auto far = static_cast<Vertex>(
      std::max_element(dist.begin() + 1, dist.end()) - dist.begin());
  dist = bfs_from(tree, far);
  return *std::max_element(dist.begin() + 1, dist.end());
}

std::uint64_t tree_wiener(const OrientedTree& tree) {
  std::uint64_t total = 0;
  const auto rows = tree.distances();
  for (Vertex u = 1; u <= tree.vertex_count(); ++u) {
    for (Vertex v = u + 1; v <= tree.vertex_count(); ++v) total += rows[u][v];
  }
  return total;
}

std::uint64_t tree_szeged(const OrientedTree& tree) {
  std::uint64_t total = 0;
  for (std::size_t e = 0; e < tree.edge_count(); ++e) {
    const auto split = split_counts(tree, e);
    total += split.source_side * split.target_side;
  }
  return total;
}

EdgeSplit split_counts(const OrientedTree& tree, std::size_t edge_index) {
  const auto& [s, t] = tree.edge(edge_index);
  // Component of s once the edge {s, t} is removed.
  std::vector<bool> seen(tree.vertex_count() + 1, false);
  std::vector<Vertex> stack{s};
  seen[s] = true;
  std::uint64_t count = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    ++count;
    for (Vertex w : tree.neighbors(v)) {
      if (seen[w] || (v == s && w == t)) continue;
      seen[w] = true;
      stack.push_back(w);
    }
  }
  return {count, tree.vertex_count() - count};
}

std::optional<std::vector<std::size_t>> tree_perfect_matching(const OrientedTree& tree) {
  const std::uint32_t k = tree.vertex_count();
  if (k % 2 != 0) return std::nullopt;
  std::map<std::pair<Vertex, Vertex>, std::size_t> index_of;
  for (std::size_t e = 0; e < tree.edge_count(); ++e) {
    const auto& [s, t] = tree.edges()[e];
    index_of[{std::min(s, t), std::max(s, t)}] = e;
  }
  std::vector<std::size_t> degree(k + 1);
  std::vector<bool> removed(k + 1, false);
  std::deque<Vertex> leaves;
  for (Vertex v = 1; v <= k; ++v) {
    degree[v] = tree.neighbors(v).size();
    if (degree[v] == 1) leaves.push_back(v);
  }
  std::vector<std::size_t> matching;
  while (!leaves.empty()) {
    const Vertex leaf = leaves.front();
    leaves.pop_front();
    if (removed[leaf]) continue;
    Vertex partner = 0;
    for (Vertex w : tree.neighbors(leaf)) {
      if (!removed[w]) partner = w;
    }
    if (partner == 0) return std::nullopt;
    removed[leaf] = removed[partner] = true;
    matching.push_back(index_of.at({std::min(leaf, partner), std::max(leaf, partner)}));
    for (Vertex w : tree.neighbors(partner)) {
      if (removed[w]) continue;
      if (--degree[w] == 1) leaves.push_back(w);
      if (degree[w] == 0) return std::nullopt;
    }
  }
  for (Vertex v = 1; v <= k; ++v) {
    if (!removed[v]) return std::nullopt;
  }
  std::sort(matching.begin(), matching.end());
  return matching;
}

}  // namespace tga
