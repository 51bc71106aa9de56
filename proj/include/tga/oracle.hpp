#pragma once

// Brute-force ground truth on explicit multigraphs. Nothing here uses the
// closed forms; every routine works on an arbitrary Multigraph.

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "tga/multigraph.hpp"
#include "tga/numeric.hpp"
#include "tga/polynomial.hpp"
#include "tga/tutte.hpp"

namespace tga {

inline constexpr std::uint32_t kUnreachable = UINT32_MAX;
inline constexpr std::size_t kAllPairsVertexCap = 8192;
inline constexpr std::size_t kMatchingVertexCap = 64;
inline constexpr std::size_t kDeletionContractionEdgeCap = 20;
inline constexpr std::size_t kMatrixTreeVertexCap = 512;
inline constexpr std::size_t kColoringVertexCap = 16;
inline constexpr std::uint32_t kColoringColorCap = 4;

// Unweighted distances; loops ignored, parallel edges count once.
std::vector<std::uint32_t> bfs_distances(const Multigraph& graph, VertexId source);

class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, UINT16_MAX) {}

  std::size_t size() const { return n_; }
  std::uint16_t operator()(VertexId u, VertexId v) const { return data_[u * n_ + v]; }
  const std::uint16_t* row(VertexId u) const { return data_.data() + u * n_; }
  std::uint16_t* row(VertexId u) { return data_.data() + u * n_; }

 private:
  std::size_t n_;
  std::vector<std::uint16_t> data_;
};

// All-sources BFS. GraphTooLarge above kAllPairsVertexCap vertices, and
// Error when the graph is disconnected.
DistanceMatrix all_pairs_distances(const Multigraph& graph);

std::uint32_t diameter_oracle(const DistanceMatrix& distances);
std::uint32_t diameter_oracle(const Multigraph& graph);
BigInt wiener_oracle(const DistanceMatrix& distances);
BigInt wiener_oracle(const Multigraph& graph);

// Vertices strictly closer to u than to v, and to v than to u; u and v count
// themselves.
struct EdgeContribution {
  std::uint64_t near_u = 0;
  std::uint64_t near_v = 0;

  std::uint64_t product() const { return near_u * near_v; }
};

// LoopEdge when e is a loop.
EdgeContribution edge_contribution_oracle(const Multigraph& graph, const DistanceMatrix& distances,
                                          EdgeId e);
// One entry per edge instance; loops get {0, 0}.
std::vector<EdgeContribution> edge_contributions(const Multigraph& graph,
                                                 const DistanceMatrix& distances);
// Sum over non-loop edge instances; parallel edges each contribute.
BigInt szeged_oracle(const Multigraph& graph, const DistanceMatrix& distances);
BigInt szeged_oracle(const Multigraph& graph);

struct MatchingCensus {
  BigInt count = 0;
  // Matched edges per label (an arbitrary perfect matching when not constant).
  std::map<std::uint32_t, std::uint64_t> label_histogram;
  // Whether every perfect matching has that same histogram.
  bool histogram_constant = true;
};

// Exhaustive count over non-loop edge instances, memoized on the covered
// vertex set. GraphTooLarge above kMatchingVertexCap vertices.
MatchingCensus pm_oracle(const Multigraph& graph);

// Deletion-contraction with the four-case recursion, memoized on a relabeled
// sorted edge list. GraphTooLarge above kDeletionContractionEdgeCap edges.
BivariatePolynomial tutte_dc_oracle(const Multigraph& graph);

struct Block {
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;
};

// Biconnected components of the loopless part (parallel edges kept).
std::vector<Block> biconnected_blocks(const Multigraph& graph);
bool is_connected(const Multigraph& graph);
bool is_bipartite(const Multigraph& graph);
bool is_cactus_of_cycles(const Multigraph& graph);

// Product of cycle factors over blocks, y per loop. NotACactusOfCycles when a
// block is not a cycle or the graph is disconnected.
FactoredTutte tutte_block_oracle(const Multigraph& graph);

// Laplacian cofactor by fraction-free elimination; loops ignored, parallel
// edges as multiplicities. GraphTooLarge above kMatrixTreeVertexCap vertices.
BigInt spanning_trees_oracle(const Multigraph& graph);

// Proper lambda-colorings of the loopless graph by exhaustive assignment.
// GraphTooLarge above kColoringVertexCap vertices or kColoringColorCap colors.
BigInt chromatic_oracle(const Multigraph& graph, std::uint32_t colors);

}  // namespace tga
