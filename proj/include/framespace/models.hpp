#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "framespace/frame.hpp"
#include "framespace/spectral.hpp"
#include "framespace/tunnel.hpp"

namespace framespace {

struct WeightedEdge {
  std::string u;
  std::string v;
  mpq_class weight;
};

// Undirected graph with rational edge weights.
class WeightedGraph {
 public:
  // No self-loops, no repeated edges, weights > 0 (>= 0 with allowZeroWeights).
  static WeightedGraph create(std::vector<std::string> vertices, std::vector<WeightedEdge> edges,
                              bool allowZeroWeights = false);

  const Carrier& vertices() const noexcept { return vertices_; }
  const std::vector<WeightedEdge>& edges() const noexcept { return edges_; }
  // Edge endpoints as vertex indices, with first < second.
  std::pair<size_t, size_t> endpoints(size_t edge) const { return ends_.at(edge); }
  bool isConnected() const;

 private:
  explicit WeightedGraph(Carrier vertices) : vertices_(std::move(vertices)) {}

  Carrier vertices_;
  std::vector<WeightedEdge> edges_;
  std::vector<std::pair<size_t, size_t>> ends_;
};

// One tunnel "u-v" per edge, Λ = weight; edges sharing a vertex interfere
// at the sum of their weights.
TunnelSystem graphModelEdges(const WeightedGraph& g);

// One tunnel per vertex (its star), Λ = weighted degree; stars of adjacent
// vertices interfere at the edge weight.
TunnelSystem graphModelStars(const WeightedGraph& g);

// Deg − Adj over the vertices in input order.
OperatorMatrix graphLaplacianOracle(const WeightedGraph& g);

// Exact all-pairs shortest path distances by Dijkstra from every vertex.
MetricTable shortestPathOracle(const WeightedGraph& g);

enum class IntervalVariant { Hull, Intersection };

// Tunnels are the grid intervals [i/n, j/n], 0 ≤ i ≤ j ≤ n, identified as
// "[i,j]/n" with zero-padded indices so identifier order is grid order.
TunnelSystem intervalModel(unsigned n, IntervalVariant variant);
std::string intervalId(unsigned i, unsigned j, unsigned n);

// Tunnels are the non-bottom regular elements of the frame, identified by
// their member list "{a,b}". Λ(a) = −log μ(a) with μ the weight measure
// normalised to μ(top) = 1.
TunnelSystem localeModel(const Frame& frame, const std::vector<mpq_class>& weights);

}  // namespace framespace
