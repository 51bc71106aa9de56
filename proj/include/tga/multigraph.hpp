#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tga {

using VertexId = std::uint32_t;
using EdgeId = std::size_t;

struct MultiEdge {
  VertexId u;
  VertexId v;
  std::uint32_t label;

  bool is_loop() const { return u == v; }
  friend bool operator==(const MultiEdge&, const MultiEdge&) = default;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

// Undirected multigraph on vertices 0..n-1. Loops and parallel edges are kept
// as separate edge instances. Loops are not listed in the incidence lists.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(std::size_t vertex_count, std::vector<MultiEdge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<MultiEdge>& edges() const { return edges_; }
  const MultiEdge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Incidence> incident(VertexId v) const {
    return {incidence_.data() + offsets_[v], incidence_.data() + offsets_[v + 1]};
  }
  std::size_t loop_count() const;
  // Degree with a loop counted twice.
  std::size_t degree(VertexId v) const;

  Multigraph without_loops() const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<MultiEdge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> incidence_;
  std::vector<std::uint32_t> loops_at_;
};

}  // namespace tga
