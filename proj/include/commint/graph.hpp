#pragma once

#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "commint/group.hpp"

namespace commint {

/// Simple undirected graph, dense bit-matrix adjacency. Built either from a
/// group (vertices are the non-central elements, adjacent when they commute)
/// or from a raw 0/1 matrix for testing the spectral code on arbitrary graphs.
class CommutingGraph {
 public:
  /// Throws AbelianGroup when G has no non-central elements.
  static CommutingGraph build(const FiniteGroup& group);
  /// Throws NotSymmetric, NonzeroDiagonal or NotBinary.
  static CommutingGraph from_adjacency(const std::vector<std::vector<int>>& matrix,
                                       std::vector<std::string> labels = {});

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t max_degree() const noexcept;
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).count(); }
  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_.at(u).test(v); }

  /// Group element behind each vertex (ascending); identity map for raw graphs.
  const std::vector<Element>& vertices() const noexcept { return vertices_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<boost::dynamic_bitset<>>& adjacency() const noexcept { return adjacency_; }
  std::vector<std::vector<std::size_t>> neighbours() const;
  /// Edges (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

 private:
  CommutingGraph() = default;
  void count_edges();

  std::vector<Element> vertices_;
  std::vector<std::string> labels_;
  std::vector<boost::dynamic_bitset<>> adjacency_;
  std::size_t edge_count_ = 0;
};

struct CliqueDecomposition {
  std::vector<std::size_t> component_sizes;  // descending
  bool all_cliques = true;
};

/// Vertex sets of the connected components, each ascending, ordered by
/// smallest vertex.
std::vector<std::vector<std::size_t>> connected_components(const CommutingGraph& graph);
CliqueDecomposition clique_decomposition(const CommutingGraph& graph);

/// Deterministic Graphviz text; vertices labelled by element names.
std::string export_dot(const CommutingGraph& graph, const std::string& title = "commuting");

}  // namespace commint
