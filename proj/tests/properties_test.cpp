// Randomised invariant checks over generated groups and graphs.

#include <algorithm>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "commint/theorems.hpp"
#include "oracles.hpp"

using namespace commint;

namespace {

constexpr int kGroupTrials = 60;
constexpr int kGraphTrials = 80;

FamilySpec random_family(std::mt19937& rng) {
  const auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  FamilySpec base;
  switch (pick(0, 7)) {
    case 0: base = FamilySpec::dihedral(pick(2, 12)); break;
    case 1: base = FamilySpec::dicyclic(pick(2, 8)); break;
    case 2: base = FamilySpec::metacyclic(pick(3, 7), pick(1, 3)); break;
    case 3: base = FamilySpec::u6n(pick(1, 5)); break;
    case 4: base = FamilySpec::heisenberg(pick(0, 1) ? 2 : 3); break;
    case 5: base = FamilySpec::exp_p_squared(pick(0, 1) ? 2 : 3); break;
    case 6: base = FamilySpec::cyclic(pick(1, 12)); break;
    default: base = FamilySpec::zpxzp(pick(0, 1) ? 2 : 3); break;
  }
  if (pick(0, 3) == 0) base = FamilySpec::product(base, pick(2, 3));
  return base;
}

std::vector<std::vector<int>> dense(const CommutingGraph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<std::vector<int>> a(n, std::vector<int>(n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) a[u][v] = graph.adjacent(u, v);
  return a;
}

// Multiplies the remainder back by (x - r)^k for each integer root.
std::vector<Integer> undeflate(const IntegerRoots& roots) {
  std::vector<Integer> p = roots.remainder.coefficients;
  for (const auto& e : roots.spectrum.pairs) {
    for (std::int64_t k = 0; k < e.multiplicity; ++k) {
      std::vector<Integer> next(p.size() + 1, 0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        next[i + 1] += p[i];
        next[i] -= p[i] * static_cast<long>(e.value);
      }
      p = std::move(next);
    }
  }
  return p;
}

}  // namespace

TEST(GroupProperties, CentralizerStructure) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < kGroupTrials; ++trial) {
    const auto spec = random_family(rng);
    const auto g = build(spec);
    SCOPED_TRACE(spec.to_string());
    const auto z = center(g).members;
    std::vector<bool> central(g.order(), false);
    for (Element c : z) central[c] = true;

    for (Element x = 0; x < g.order(); ++x) {
      const auto c = centralizer(g, x).members;
      EXPECT_EQ(g.order() % c.size(), 0u);
      EXPECT_TRUE(std::includes(c.begin(), c.end(), z.begin(), z.end()));
      EXPECT_TRUE(std::binary_search(c.begin(), c.end(), x));
      EXPECT_EQ(c.size() == g.order(), central[x]);
      EXPECT_EQ(generated_subgroup(g, c), c);  // closed under products
    }
    EXPECT_EQ(centralizer_count(g) == 1, g.is_abelian());
    EXPECT_EQ(centralizer_count(g), oracle::brute_force_centralizer_count(g));

    const auto q = quotient_by_center(g);
    EXPECT_EQ(q.group.order() * z.size(), g.order());
    for (Element a = 0; a < g.order(); ++a)
      for (Element b = 0; b < g.order(); ++b)
        ASSERT_EQ(q.coset_of[g.mul(a, b)], q.group.mul(q.coset_of[a], q.coset_of[b]));

    std::istringstream text(write_cayley_text(g));
    EXPECT_EQ(read_cayley_text(text).table(), g.table());

    if (g.is_abelian()) continue;
    const std::size_t r = max_noncommuting_set(g).size();
    if (r == 3) EXPECT_EQ(centralizer_count(g), 4u);
    if (r == 4) EXPECT_EQ(centralizer_count(g), 5u);
  }
}

TEST(GroupProperties, CommutingGraphSpectra) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> shift(-3, 3);
  for (int trial = 0; trial < kGroupTrials; ++trial) {
    const auto spec = random_family(rng);
    const auto g = build(spec);
    if (g.is_abelian()) continue;
    SCOPED_TRACE(spec.to_string());

    const auto graph = CommutingGraph::build(g);
    const auto zsize = center(g).members.size();
    EXPECT_EQ(graph.vertex_count(), g.order() - zsize);
    for (std::size_t v = 0; v < graph.vertex_count(); ++v)
      EXPECT_EQ(graph.degree(v), centralizer(g, graph.vertices()[v]).members.size() - zsize - 1);

    const auto poly = char_poly(graph);
    const std::size_t n = graph.vertex_count();
    ASSERT_EQ(poly.degree(), n);
    EXPECT_EQ(poly.coefficient(n), 1);
    EXPECT_EQ(poly.coefficient(n - 1), 0);
    if (n >= 2) EXPECT_EQ(poly.coefficient(n - 2), -static_cast<long>(graph.edge_count()));

    const long t = shift(rng);
    EXPECT_EQ(poly.evaluate(t), oracle::shifted_determinant(dense(graph), t)) << "t=" << t;

    const auto roots = integer_spectrum(poly, static_cast<std::int64_t>(graph.max_degree()));
    EXPECT_EQ(undeflate(roots), poly.coefficients);
    ASSERT_TRUE(roots.spectrum.complete);
    EXPECT_EQ(roots.spectrum.total_multiplicity(), static_cast<std::int64_t>(n));
    EXPECT_EQ(roots.spectrum.moment(1), 0);
    EXPECT_EQ(roots.spectrum.moment(2), 2 * static_cast<long>(graph.edge_count()));

    const auto decomposition = clique_decomposition(graph);
    if (decomposition.all_cliques) {
      EXPECT_TRUE(spectra_agree(clique_union_spectrum(decomposition.component_sizes), roots.spectrum));
    }
  }
}

TEST(GraphProperties, RandomGraphsAgainstOracles) {
  std::mt19937 rng(5);
  std::bernoulli_distribution coin(0.45);
  for (int trial = 0; trial < kGraphTrials; ++trial) {
    const int n = 1 + trial % 9;
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) a[u][v] = a[v][u] = coin(rng);
    const auto graph = CommutingGraph::from_adjacency(a);

    const auto poly = char_poly(graph);
    EXPECT_EQ(poly.coefficients, oracle::interpolated_char_poly(a));

    const auto roots = integer_spectrum(poly, static_cast<std::int64_t>(graph.max_degree()));
    EXPECT_EQ(undeflate(roots), poly.coefficients);
    for (const auto& e : roots.spectrum.pairs) EXPECT_EQ(poly.evaluate(e.value), 0);
    // No integer root is left in the cofactor.
    for (long r = -n; r <= n; ++r) EXPECT_NE(roots.remainder.evaluate(r), 0) << r;
    if (roots.spectrum.complete) {
      EXPECT_EQ(roots.spectrum.moment(2), 2 * static_cast<long>(graph.edge_count()));
    }
  }
}
