#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tga/mealy.hpp"
#include "tga/multigraph.hpp"
#include "tga/tree.hpp"

namespace tga {

inline constexpr std::uint64_t kDefaultVertexCap = 1'000'000;
inline constexpr const char* kVertexCapEnv = "TGA_MAX_VERTICES";

// kDefaultVertexCap unless TGA_MAX_VERTICES holds a positive integer.
std::uint64_t default_vertex_cap();

// n-th Schreier multigraph: vertex j is the j-th word of length n in
// lexicographic order, and edge g * k^n + j joins word j to generator g
// applied to it.
class SchreierMultigraph {
 public:
  SchreierMultigraph(std::uint32_t k, std::uint32_t n, std::vector<TreeEdge> generators,
                     Multigraph graph);

  std::uint32_t alphabet_size() const { return k_; }
  std::uint32_t level() const { return n_; }
  std::size_t vertex_count() const { return graph_.vertex_count(); }
  const Multigraph& graph() const { return graph_; }
  // The oriented tree edge behind each generator label.
  const std::vector<TreeEdge>& generators() const { return generators_; }

  Word word(VertexId v) const;
  VertexId vertex(const Word& word) const;
  std::string vertex_name(VertexId v) const { return format_word(word(v), k_); }

  friend bool operator==(const SchreierMultigraph&, const SchreierMultigraph&);

 private:
  std::uint32_t k_;
  std::uint32_t n_;
  std::vector<TreeEdge> generators_;
  Multigraph graph_;
};

// Generators are automaton.generators(); the endpoints (s, t) of each are
// read back from its tables (s is the letter it restricts to itself on).
SchreierMultigraph build_schreier(const MealyAutomaton& automaton, std::uint32_t n,
                                  std::uint64_t max_vertices = default_vertex_cap());
SchreierMultigraph build_schreier(const OrientedTree& tree, std::uint32_t n,
                                  std::uint64_t max_vertices = default_vertex_cap());

// One generator orbit. vertices are in orbit order starting at s^i w, and
// edges[j] joins vertices[j] to vertices[j + 1] (cyclically).
struct ECycle {
  std::uint32_t label;
  std::uint32_t prefix_length;  // i; the cycle has 2^i vertices
  Word suffix;                  // common last n - i letters
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const { return vertices.size(); }
  bool is_loop() const { return prefix_length == 0; }
};

std::vector<ECycle> e_cycle_decomposition(const SchreierMultigraph& schreier);

using CycleCensus = std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t>;

// (label, i) -> number of e-cycles of length 2^i; every (label, i) pair for
// 0 <= i <= n is present, zeros included.
CycleCensus cycle_census(const SchreierMultigraph& schreier);
CycleCensus cycle_census(const SchreierMultigraph& schreier, const std::vector<ECycle>& cycles);

// (e_C, e_C'): e_C joins s^i w and t^i w, e_C' joins s^(i-1) t w and
// t^(i-1) s w. For i = 1 these are the two parallel edges.
std::pair<EdgeId, EdgeId> special_edges(const ECycle& cycle);

std::string export_dot(const SchreierMultigraph& schreier);
// {k, n, generators:[[s,t],...], vertices:[...], edges:[[u,v,label],...]}
std::string export_json(const SchreierMultigraph& schreier);
SchreierMultigraph import_json(const std::string& text);

}  // namespace tga
