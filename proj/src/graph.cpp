#include "commint/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace commint {

CommutingGraph CommutingGraph::build(const FiniteGroup& group) {
  std::vector<bool> central(group.order(), false);
  for (Element z : center(group).members) central[z] = true;

  CommutingGraph graph;
  for (Element x = 0; x < group.order(); ++x) {
    if (!central[x]) graph.vertices_.push_back(x);
  }
  if (graph.vertices_.empty()) {
    throw Error(ErrorKind::AbelianGroup, "commuting graph has no vertices");
  }
  const std::size_t n = graph.vertices_.size();
  graph.adjacency_.assign(n, boost::dynamic_bitset<>(n));
  for (std::size_t u = 0; u < n; ++u) {
    graph.labels_.push_back(group.name(graph.vertices_[u]));
    for (std::size_t v = u + 1; v < n; ++v) {
      if (group.commute(graph.vertices_[u], graph.vertices_[v])) {
        graph.adjacency_[u].set(v);
        graph.adjacency_[v].set(u);
      }
    }
  }
  graph.count_edges();
  return graph;
}

CommutingGraph CommutingGraph::from_adjacency(const std::vector<std::vector<int>>& matrix,
                                              std::vector<std::string> labels) {
  const std::size_t n = matrix.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) throw Error(ErrorKind::NotSymmetric, "matrix is not square");
  }
  CommutingGraph graph;
  graph.adjacency_.assign(n, boost::dynamic_bitset<>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i][i] != 0) {
      throw Error(ErrorKind::NonzeroDiagonal, "diagonal entry " + std::to_string(i));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (matrix[i][j] != 0 && matrix[i][j] != 1) {
        throw Error(ErrorKind::NotBinary, "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if (matrix[i][j] != matrix[j][i]) {
        throw Error(ErrorKind::NotSymmetric, "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if (matrix[i][j] == 1) graph.adjacency_[i].set(j);
    }
    graph.vertices_.push_back(static_cast<Element>(i));
  }
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  } else if (labels.size() != n) {
    throw Error(ErrorKind::IndexOutOfRange, "label count does not match vertex count");
  }
  graph.labels_ = std::move(labels);
  graph.count_edges();
  return graph;
}

void CommutingGraph::count_edges() {
  std::size_t twice = 0;
  for (const auto& row : adjacency_) twice += row.count();
  edge_count_ = twice / 2;
}

std::size_t CommutingGraph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& row : adjacency_) best = std::max(best, row.count());
  return best;
}

std::vector<std::vector<std::size_t>> CommutingGraph::neighbours() const {
  std::vector<std::vector<std::size_t>> lists(vertex_count());
  for (std::size_t u = 0; u < vertex_count(); ++u) {
    const auto& row = adjacency_[u];
    for (auto v = row.find_first(); v != boost::dynamic_bitset<>::npos; v = row.find_next(v)) {
      lists[u].push_back(v);
    }
  }
  return lists;
}

std::vector<std::pair<std::size_t, std::size_t>> CommutingGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < vertex_count(); ++u) {
    const auto& row = adjacency_[u];
    for (auto v = row.find_next(u); v != boost::dynamic_bitset<>::npos; v = row.find_next(v)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> connected_components(const CommutingGraph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> components;
  const auto& adjacency = graph.adjacency();
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> component{start};
    seen[start] = true;
    for (std::size_t i = 0; i < component.size(); ++i) {
      const auto& row = adjacency[component[i]];
      for (auto v = row.find_first(); v != boost::dynamic_bitset<>::npos; v = row.find_next(v)) {
        if (!seen[v]) {
          seen[v] = true;
          component.push_back(v);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

CliqueDecomposition clique_decomposition(const CommutingGraph& graph) {
  CliqueDecomposition result;
  for (const auto& component : connected_components(graph)) {
    const std::size_t k = component.size();
    std::size_t twice_edges = 0;
    for (std::size_t v : component) twice_edges += graph.degree(v);
    if (twice_edges != k * (k - 1)) result.all_cliques = false;
    result.component_sizes.push_back(k);
  }
  std::sort(result.component_sizes.begin(), result.component_sizes.end(), std::greater<>());
  return result;
}

namespace {

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const CommutingGraph& graph, const std::string& title) {
  std::ostringstream out;
  out << "graph " << quoted(title) << " {\n";
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    out << "  v" << v << " [label=" << quoted(graph.labels()[v]) << "];\n";
  }
  for (const auto& [u, v] : graph.edges()) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace commint
