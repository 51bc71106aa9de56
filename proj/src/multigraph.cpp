#include "tga/multigraph.hpp"

#include <string>

#include "tga/errors.hpp"

namespace tga {

Multigraph::Multigraph(std::size_t vertex_count, std::vector<MultiEdge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), loops_at_(vertex_count, 0) {
  std::vector<std::size_t> degree(vertex_count, 0);
  for (const auto& e : edges_) {
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw MalformedInput("edge endpoint outside 0.." + std::to_string(vertex_count));
    }
    if (e.is_loop()) {
      ++loops_at_[e.u];
    } else {
      ++degree[e.u];
      ++degree[e.v];
    }
  }
  offsets_.assign(vertex_count + 1, 0);
  for (std::size_t v = 0; v < vertex_count; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  incidence_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const auto& e = edges_[id];
    if (e.is_loop()) continue;
    incidence_[fill[e.u]++] = {e.v, id};
    incidence_[fill[e.v]++] = {e.u, id};
  }
}

std::size_t Multigraph::loop_count() const {
  std::size_t total = 0;
  for (auto c : loops_at_) total += c;
  return total;
}

std::size_t Multigraph::degree(VertexId v) const {
  return (offsets_[v + 1] - offsets_[v]) + 2 * loops_at_[v];
}

Multigraph Multigraph::without_loops() const {
  std::vector<MultiEdge> kept;
  kept.reserve(edges_.size());
  for (const auto& e : edges_) {
    if (!e.is_loop()) kept.push_back(e);
  }
  return Multigraph(vertex_count_, std::move(kept));
}

}  // namespace tga
