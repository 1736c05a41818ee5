#include <algorithm>

#include <gtest/gtest.h>

#include "commint/catalog.hpp"
#include "commint/graph.hpp"
#include "oracles.hpp"

using namespace commint;

namespace {

std::size_t count_lines_with(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++count;
  return count;
}

}  // namespace

TEST(BuildCommutingGraph, D6) {
  const auto g = build(FamilySpec::dihedral(3));
  const auto graph = CommutingGraph::build(g);
  EXPECT_EQ(graph.vertex_count(), 5u);
  ASSERT_EQ(graph.edge_count(), 1u);
  const auto [u, v] = graph.edges().front();
  EXPECT_EQ(graph.labels()[u], "a");
  EXPECT_EQ(graph.labels()[v], "a^2");
  EXPECT_EQ(connected_components(graph).size(), 4u);
}

TEST(BuildCommutingGraph, Q8) {
  const auto graph = CommutingGraph::build(build(FamilySpec::dicyclic(2)));
  EXPECT_EQ(graph.vertex_count(), 6u);
  const auto components = connected_components(graph);
  ASSERT_EQ(components.size(), 3u);
  for (const auto& c : components) EXPECT_EQ(c.size(), 2u);
}

TEST(BuildCommutingGraph, AbelianRejected) {
  try {
    CommutingGraph::build(cyclic_group(6));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AbelianGroup);
  }
}

TEST(BuildCommutingGraph, VerticesAndDegreesMatchCentralizers) {
  for (const auto& spec : {FamilySpec::dihedral(6), FamilySpec::dicyclic(5), FamilySpec::metacyclic(6, 2),
                           FamilySpec::u6n(3), FamilySpec::exp_p_squared(3)}) {
    const auto g = build(spec);
    const auto z = center(g).members.size();
    const auto graph = CommutingGraph::build(g);
    EXPECT_EQ(graph.vertex_count(), g.order() - z);
    EXPECT_TRUE(std::is_sorted(graph.vertices().begin(), graph.vertices().end()));
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
      EXPECT_FALSE(graph.adjacent(v, v));
      EXPECT_EQ(graph.degree(v), centralizer(g, graph.vertices()[v]).members.size() - z - 1);
    }
  }
}

TEST(ConnectedComponents, Examples) {
  const auto edgeless = CommutingGraph::from_adjacency(oracle::adjacency_of({}, 3));
  EXPECT_EQ(connected_components(edgeless), (std::vector<std::vector<std::size_t>>{{0}, {1}, {2}}));

  const auto heis3 = CommutingGraph::build(build(FamilySpec::heisenberg(3)));
  const auto components = connected_components(heis3);
  ASSERT_EQ(components.size(), 4u);
  for (const auto& c : components) EXPECT_EQ(c.size(), 6u);
}

TEST(CliqueDecomposition, Examples) {
  std::vector<std::pair<int, int>> k5;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) k5.emplace_back(u, v);
  const auto complete = clique_decomposition(CommutingGraph::from_adjacency(oracle::adjacency_of(k5, 5)));
  EXPECT_EQ(complete.component_sizes, std::vector<std::size_t>{5});
  EXPECT_TRUE(complete.all_cliques);

  const auto d12 = clique_decomposition(CommutingGraph::build(build(FamilySpec::dihedral(6))));
  EXPECT_EQ(d12.component_sizes, (std::vector<std::size_t>{4, 2, 2, 2}));
  EXPECT_TRUE(d12.all_cliques);

  const auto c4 = CommutingGraph::from_adjacency(oracle::adjacency_of({{0, 1}, {1, 2}, {2, 3}, {3, 0}}, 4));
  EXPECT_FALSE(clique_decomposition(c4).all_cliques);
}

TEST(CliqueDecomposition, SizesMatchDistinctCentralizers) {
  // All centralizers of non-central elements are abelian in these groups.
  for (const auto& spec : {FamilySpec::dihedral(9), FamilySpec::metacyclic(8, 3), FamilySpec::u6n(4)}) {
    const auto g = build(spec);
    const auto z = center(g).members.size();
    std::vector<std::vector<Element>> seen;
    std::vector<std::size_t> expected;
    for (Element x = 0; x < g.order(); ++x) {
      auto c = centralizer(g, x).members;
      if (c.size() == g.order() || std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
      expected.push_back(c.size() - z);
      seen.push_back(std::move(c));
    }
    std::sort(expected.rbegin(), expected.rend());
    const auto d = clique_decomposition(CommutingGraph::build(g));
    EXPECT_TRUE(d.all_cliques);
    EXPECT_EQ(d.component_sizes, expected) << spec.to_string();
  }
}

TEST(FromAdjacency, Validation) {
  const auto kind_of = [](const std::vector<std::vector<int>>& m) {
    try {
      CommutingGraph::from_adjacency(m);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  };
  EXPECT_EQ(kind_of({{0, 1}, {0, 0}}), ErrorKind::NotSymmetric);
  EXPECT_EQ(kind_of({{1, 0}, {0, 0}}), ErrorKind::NonzeroDiagonal);
  EXPECT_EQ(kind_of({{0, 2}, {2, 0}}), ErrorKind::NotBinary);
  EXPECT_EQ(kind_of({{0, 1}}), ErrorKind::NotSymmetric);
}

TEST(ExportDot, Examples) {
  const auto edgeless = export_dot(CommutingGraph::from_adjacency(oracle::adjacency_of({}, 2)), "empty");
  EXPECT_EQ(edgeless, "graph \"empty\" {\n  v0 [label=\"v0\"];\n  v1 [label=\"v1\"];\n}\n");

  const auto d6 = export_dot(CommutingGraph::build(build(FamilySpec::dihedral(3))));
  EXPECT_EQ(count_lines_with(d6, " -- "), 1u);
  EXPECT_NE(d6.find("v0 -- v1;"), std::string::npos);
  EXPECT_NE(d6.find("label=\"a^2\""), std::string::npos);

  const auto q8_graph = CommutingGraph::build(build(FamilySpec::dicyclic(2)));
  const auto q8 = export_dot(q8_graph);
  EXPECT_EQ(count_lines_with(q8, "[label="), 6u);
  EXPECT_EQ(count_lines_with(q8, " -- "), 3u);
  EXPECT_EQ(q8, export_dot(q8_graph));
}

TEST(ExportDot, EscapesQuotes) {
  const auto graph = CommutingGraph::from_adjacency({{0}}, {"say \"hi\""});
  EXPECT_NE(export_dot(graph).find("label=\"say \\\"hi\\\"\""), std::string::npos);
}
