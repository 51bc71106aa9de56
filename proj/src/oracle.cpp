#include "tga/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <string>

#include "tga/errors.hpp"

namespace tga {
namespace {

void guard(bool ok, const std::string& what) {
  if (!ok) throw GraphTooLarge(what);
}

}  // namespace

std::vector<std::uint32_t> bfs_distances(const Multigraph& graph, VertexId source) {
  std::vector<std::uint32_t> dist(graph.vertex_count(), kUnreachable);
  std::vector<VertexId> queue;
  queue.reserve(graph.vertex_count());
  queue.push_back(source);
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    for (const auto& [w, e] : graph.incident(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Multigraph& graph) {
  const std::size_t n = graph.vertex_count();
  guard(n <= kAllPairsVertexCap, "all-pairs distances are capped at " +
                                     std::to_string(kAllPairsVertexCap) + " vertices");
  DistanceMatrix result(n);
  for (VertexId s = 0; s < n; ++s) {
    const auto dist = bfs_distances(graph, s);
    auto* row = result.row(s);
    for (VertexId v = 0; v < n; ++v) {
      if (dist[v] == kUnreachable) throw Error("graph is disconnected");
      row[v] = static_cast<std::uint16_t>(dist[v]);
    }
  }
  return result;
}

std::uint32_t diameter_oracle(const DistanceMatrix& distances) {
  std::uint32_t best = 0;
  for (VertexId u = 0; u < distances.size(); ++u) {
    const auto* row = distances.row(u);
    best = std::max<std::uint32_t>(best, *std::max_element(row, row + distances.size()));
  }
  return best;
}

std::uint32_t diameter_oracle(const Multigraph& graph) {
  return diameter_oracle(all_pairs_distances(graph));
}

BigInt wiener_oracle(const DistanceMatrix& distances) {
  std::uint64_t total = 0;
  for (VertexId u = 0; u < distances.size(); ++u) {
    const auto* row = distances.row(u);
    for (VertexId v = u + 1; v < distances.size(); ++v) total += row[v];
  }
  return BigInt(total);
}

BigInt wiener_oracle(const Multigraph& graph) {
  if (graph.vertex_count() <= 1) return 0;
  return wiener_oracle(all_pairs_distances(graph));
}

EdgeContribution edge_contribution_oracle(const Multigraph& graph, const DistanceMatrix& distances,
                                          EdgeId e) {
  const auto& edge = graph.edge(e);
  if (edge.is_loop()) throw LoopEdge("edge " + std::to_string(e) + " is a loop");
  const auto* du = distances.row(edge.u);
  const auto* dv = distances.row(edge.v);
  EdgeContribution c;
  for (std::size_t x = 0; x < distances.size(); ++x) {
    c.near_u += du[x] < dv[x];
    c.near_v += dv[x] < du[x];
  }
  return c;
}

std::vector<EdgeContribution> edge_contributions(const Multigraph& graph,
                                                 const DistanceMatrix& distances) {
  std::vector<EdgeContribution> result(graph.edge_count());
  // Parallel edges share their endpoints; compute each vertex pair once.
  std::map<std::pair<VertexId, VertexId>, EdgeContribution> cache;
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const auto& edge = graph.edge(e);
    if (edge.is_loop()) continue;
    const std::pair<VertexId, VertexId> key = std::minmax(edge.u, edge.v);
    auto it = cache.find(key);
    if (it == cache.end()) {
      EdgeContribution c = edge_contribution_oracle(graph, distances, e);
      if (edge.u != key.first) std::swap(c.near_u, c.near_v);
      it = cache.emplace(key, c).first;
    }
    result[e] = it->second;
    if (edge.u != key.first) std::swap(result[e].near_u, result[e].near_v);
  }
  return result;
}

BigInt szeged_oracle(const Multigraph& graph, const DistanceMatrix& distances) {
  BigInt total = 0;
  for (const auto& c : edge_contributions(graph, distances)) total += c.product();
  return total;
}

BigInt szeged_oracle(const Multigraph& graph) {
  if (graph.vertex_count() <= 1) return 0;
  return szeged_oracle(graph, all_pairs_distances(graph));
}

namespace {

// Perfect matchings of the uncovered part, grouped by per-label edge counts.
using LabelCounts = std::vector<std::uint32_t>;
using MatchingTally = std::map<LabelCounts, BigInt>;

class MatchingCounter {
 public:
  MatchingCounter(const Multigraph& graph, std::size_t label_count)
      : graph_(graph), label_count_(label_count) {}

  const MatchingTally& operator()(std::uint64_t covered) {
    if (auto it = memo_.find(covered); it != memo_.end()) return it->second;
    MatchingTally tally;
    const std::size_t n = graph_.vertex_count();
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    if (covered == full) {
      tally.emplace(LabelCounts(label_count_, 0), 1);
    } else if (auto v = most_constrained(covered)) {
      for (const auto& [w, e] : graph_.incident(*v)) {
        if (covered >> w & 1U) continue;
        const MatchingTally& rest = (*this)(covered | bit(*v) | bit(w));
        for (const auto& [counts, ways] : rest) {
          LabelCounts extended = counts;
          ++extended[graph_.edge(e).label];
          tally[extended] += ways;
        }
      }
    }
    return memo_.emplace(covered, std::move(tally)).first->second;
  }

 private:
  static std::uint64_t bit(VertexId v) { return std::uint64_t{1} << v; }

  // Uncovered vertex with the fewest uncovered neighbors; absent when some
  // uncovered vertex has none, which means no completion exists.
  std::optional<VertexId> most_constrained(std::uint64_t covered) const {
    std::optional<VertexId> best;
    std::size_t best_options = SIZE_MAX;
    for (VertexId v = 0; v < graph_.vertex_count(); ++v) {
      if (covered >> v & 1U) continue;
      std::size_t options = 0;
      for (const auto& [w, e] : graph_.incident(v)) options += (covered >> w & 1U) ? 0 : 1;
      if (options == 0) return std::nullopt;
      if (options < best_options) {
        best = v;
        best_options = options;
      }
    }
    return best;
  }

  const Multigraph& graph_;
  std::size_t label_count_;
  std::unordered_map<std::uint64_t, MatchingTally> memo_;
};

}  // namespace

MatchingCensus pm_oracle(const Multigraph& graph) {
  const std::size_t n = graph.vertex_count();
  guard(n <= kMatchingVertexCap, "perfect matching enumeration is capped at " +
                                     std::to_string(kMatchingVertexCap) + " vertices");
  MatchingCensus census;
  if (n == 0 || n % 2 != 0) return census;
  std::size_t label_count = 0;
  for (const auto& e : graph.edges()) label_count = std::max<std::size_t>(label_count, e.label + 1);
  MatchingCounter counter(graph, label_count);
  const MatchingTally& tally = counter(0);
  for (const auto& [counts, ways] : tally) census.count += ways;
  if (!tally.empty()) {
    const LabelCounts& counts = tally.begin()->first;
    for (std::uint32_t label = 0; label < counts.size(); ++label) {
      if (counts[label] > 0) census.label_histogram[label] = counts[label];
    }
    census.histogram_constant = tally.size() == 1;
  }
  return census;
}

namespace {

using EdgeList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

EdgeList canonical(EdgeList edges) {
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  std::map<std::uint32_t, std::uint32_t> rename;
  for (const auto& [a, b] : edges) {
    rename.emplace(a, static_cast<std::uint32_t>(rename.size()));
    rename.emplace(b, static_cast<std::uint32_t>(rename.size()));
  }
  for (auto& [a, b] : edges) {
    a = rename[a];
    b = rename[b];
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

bool connected_without(const EdgeList& edges, std::size_t skip, std::uint32_t from,
                       std::uint32_t to) {
  std::vector<std::uint32_t> stack{from};
  std::vector<std::uint32_t> seen{from};
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i == skip) continue;
      const auto [a, b] = edges[i];
      std::uint32_t w;
      if (a == v) {
        w = b;
      } else if (b == v) {
        w = a;
      } else {
        continue;
      }
      if (std::find(seen.begin(), seen.end(), w) == seen.end()) {
        seen.push_back(w);
        stack.push_back(w);
      }
    }
  }
  return false;
}

class DeletionContraction {
 public:
  BivariatePolynomial operator()(const EdgeList& raw) {
    if (raw.empty()) return BivariatePolynomial::constant(1);
    const EdgeList edges = canonical(raw);
    if (auto it = memo_.find(edges); it != memo_.end()) return it->second;

    const auto [u, v] = edges.front();
    EdgeList deleted(edges.begin() + 1, edges.end());
    BivariatePolynomial result;
    if (u == v) {
      result = BivariatePolynomial::y() * (*this)(deleted);
    } else if (!connected_without(edges, 0, u, v)) {
      result = BivariatePolynomial::x() * (*this)(deleted);
    } else {
      EdgeList contracted = deleted;
      for (auto& [a, b] : contracted) {
        if (a == v) a = u;
        if (b == v) b = u;
      }
      result = (*this)(deleted) + (*this)(contracted);
    }
    memo_.emplace(edges, result);
    return result;
  }

 private:
  std::map<EdgeList, BivariatePolynomial> memo_;
};

}  // namespace

BivariatePolynomial tutte_dc_oracle(const Multigraph& graph) {
  guard(graph.edge_count() <= kDeletionContractionEdgeCap,
        "deletion-contraction is capped at " + std::to_string(kDeletionContractionEdgeCap) +
            " edges");
  EdgeList edges;
  for (const auto& e : graph.edges()) edges.emplace_back(e.u, e.v);
  return DeletionContraction{}(edges);
}

std::vector<Block> biconnected_blocks(const Multigraph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<std::uint32_t> disc(n, 0), low(n, 0);
  std::uint32_t timer = 0;
  std::vector<EdgeId> edge_stack;
  std::vector<Block> blocks;

  struct Frame {
    VertexId v;
    EdgeId parent_edge;
    std::size_t next;
  };
  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != 0) continue;
    disc[root] = low[root] = ++timer;
    std::vector<Frame> stack{{root, SIZE_MAX, 0}};
    while (!stack.empty()) {
      Frame& frame = stack.back();
      const auto incident = graph.incident(frame.v);
      if (frame.next < incident.size()) {
        const auto [w, e] = incident[frame.next++];
        if (e == frame.parent_edge) continue;
        if (disc[w] == 0) {
          edge_stack.push_back(e);
          disc[w] = low[w] = ++timer;
          stack.push_back({w, e, 0});
        } else if (disc[w] < disc[frame.v]) {
          edge_stack.push_back(e);
          low[frame.v] = std::min(low[frame.v], disc[w]);
        }
        continue;
      }
      const VertexId child = frame.v;
      const EdgeId tree_edge = frame.parent_edge;
      stack.pop_back();
      if (stack.empty()) break;
      const VertexId parent = stack.back().v;
      low[parent] = std::min(low[parent], low[child]);
      if (low[child] >= disc[parent]) {
        Block block;
        EdgeId top;
        do {
          top = edge_stack.back();
          edge_stack.pop_back();
          block.edges.push_back(top);
        } while (top != tree_edge);
        for (EdgeId id : block.edges) {
          block.vertices.push_back(graph.edge(id).u);
          block.vertices.push_back(graph.edge(id).v);
        }
        std::sort(block.vertices.begin(), block.vertices.end());
        block.vertices.erase(std::unique(block.vertices.begin(), block.vertices.end()),
                             block.vertices.end());
        std::sort(block.edges.begin(), block.edges.end());
        blocks.push_back(std::move(block));
      }
    }
  }
  return blocks;
}

bool is_connected(const Multigraph& graph) {
  if (graph.vertex_count() == 0) return true;
  const auto dist = bfs_distances(graph, 0);
  return std::find(dist.begin(), dist.end(), kUnreachable) == dist.end();
}

bool is_bipartite(const Multigraph& graph) {
  std::vector<int> side(graph.vertex_count(), -1);
  for (VertexId root = 0; root < graph.vertex_count(); ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (const auto& [w, e] : graph.incident(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_cactus_of_cycles(const Multigraph& graph) {
  if (!is_connected(graph)) return false;
  for (const auto& block : biconnected_blocks(graph)) {
    // A biconnected block with as many edges as vertices is a cycle.
    if (block.edges.size() != block.vertices.size()) return false;
  }
  return true;
}

FactoredTutte tutte_block_oracle(const Multigraph& graph) {
  if (!is_connected(graph)) throw NotACactusOfCycles("graph is disconnected");
  FactoredTutte tutte;
  tutte.loop_exponent = graph.loop_count();
  for (const auto& block : biconnected_blocks(graph)) {
    if (block.edges.size() != block.vertices.size()) {
      throw NotACactusOfCycles("block with " + std::to_string(block.vertices.size()) +
                               " vertices and " + std::to_string(block.edges.size()) +
                               " edges is not a cycle");
    }
    tutte.add_cycles(block.edges.size(), 1);
  }
  return tutte;
}

BigInt spanning_trees_oracle(const Multigraph& graph) {
  const std::size_t n = graph.vertex_count();
  guard(n <= kMatrixTreeVertexCap, "matrix-tree count is capped at " +
                                       std::to_string(kMatrixTreeVertexCap) + " vertices");
  if (n <= 1) return 1;
  const std::size_t m = n - 1;  // drop the last row and column
  std::vector<BigInt> a(m * m, 0);
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * m + j]; };
  for (const auto& e : graph.edges()) {
    if (e.is_loop()) continue;
    if (e.u < m) at(e.u, e.u) += 1;
    if (e.v < m) at(e.v, e.v) += 1;
    if (e.u < m && e.v < m) {
      at(e.u, e.v) -= 1;
      at(e.v, e.u) -= 1;
    }
  }
  // Bareiss elimination: after step p every entry is a (p+1)x(p+1) minor.
  BigInt previous = 1;
  int sign = 1;
  for (std::size_t p = 0; p < m; ++p) {
    if (at(p, p) == 0) {
      std::size_t swap_row = p + 1;
      while (swap_row < m && at(swap_row, p) == 0) ++swap_row;
      if (swap_row == m) return 0;
      for (std::size_t j = 0; j < m; ++j) std::swap(at(p, j), at(swap_row, j));
      sign = -sign;
    }
    const BigInt pivot = at(p, p);
    for (std::size_t i = p + 1; i < m; ++i) {
      const BigInt factor = at(i, p);
      for (std::size_t j = p + 1; j < m; ++j) {
        BigInt& cell = at(i, j);
        if (factor == 0) {
          if (cell == 0) continue;
          cell *= pivot;
        } else {
          cell = cell * pivot - factor * at(p, j);
        }
        if (previous != 1) {
          mpz_divexact(cell.backend().data(), cell.backend().data(),
                       previous.backend().data());
        }
      }
      at(i, p) = 0;
    }
    previous = pivot;
  }
  BigInt det = at(m - 1, m - 1);
  return sign < 0 ? BigInt(-det) : det;
}

BigInt chromatic_oracle(const Multigraph& graph, std::uint32_t colors) {
  const std::size_t n = graph.vertex_count();
  guard(n <= kColoringVertexCap, "coloring enumeration is capped at " +
                                     std::to_string(kColoringVertexCap) + " vertices");
  guard(colors <= kColoringColorCap, "coloring enumeration is capped at " +
                                         std::to_string(kColoringColorCap) + " colors");
  if (n == 0) return 1;
  std::vector<std::vector<VertexId>> earlier(n);
  for (const auto& e : graph.edges()) {
    if (e.is_loop()) continue;
    earlier[std::max(e.u, e.v)].push_back(std::min(e.u, e.v));
  }
  std::vector<std::uint32_t> color(n, 0);
  std::uint64_t count = 0;
  std::function<void(std::size_t)> assign = [&](std::size_t v) {
    for (std::uint32_t c = 0; c < colors; ++c) {
      bool ok = true;
      for (VertexId w : earlier[v]) {
        if (color[w] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (v + 1 == n) {
        ++count;
      } else {
        color[v] = c;
        assign(v + 1);
      }
    }
  };
  assign(0);
  return BigInt(count);
}

}  // namespace tga
