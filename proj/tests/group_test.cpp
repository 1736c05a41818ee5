#include <functional>
#include <sstream>

#include <gtest/gtest.h>

#include "commint/catalog.hpp"
#include "commint/group.hpp"
#include "oracles.hpp"

using namespace commint;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no commint::Error thrown";
  return ErrorKind::Internal;
}

std::size_t center_size(const FiniteGroup& g) { return center(g).members.size(); }

}  // namespace

TEST(FromCayleyTable, TrivialGroup) {
  const auto g = FiniteGroup::from_cayley_table({{0}});
  EXPECT_EQ(g.order(), 1u);
  EXPECT_TRUE(g.is_abelian());
}

TEST(FromCayleyTable, SymmetricGroupFromPermutations) {
  const auto s3 = oracle::symmetric_group_3();
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_FALSE(s3.is_abelian());
}

TEST(FromCayleyTable, AxiomViolations) {
  EXPECT_EQ(kind_of([] { FiniteGroup::from_cayley_table({{0, 1}, {1, 1}}); }), ErrorKind::AxiomViolation);
  // Identity is not element 0.
  EXPECT_EQ(kind_of([] { FiniteGroup::from_cayley_table({{1, 0}, {0, 1}}); }), ErrorKind::AxiomViolation);
  EXPECT_EQ(kind_of([] { FiniteGroup::from_cayley_table({{0, 2}, {1, 0}}); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind_of([] { FiniteGroup::from_cayley_table({{0, 1}, {1}}); }), ErrorKind::IndexOutOfRange);

  // A loop that is not associative: identity and inverses hold but
  // (1*1)*2 != 1*(1*2).
  const std::vector<std::vector<Element>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    FiniteGroup::from_cayley_table(loop);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AxiomViolation);
    EXPECT_NE(std::string(e.what()).find("associativity"), std::string::npos);
  }
}

TEST(Center, Examples) {
  EXPECT_EQ(center_size(cyclic_group(4)), 4u);
  const auto q8 = build(FamilySpec::dicyclic(2));
  const auto z = center(q8).members;
  ASSERT_EQ(z.size(), 2u);
  EXPECT_EQ(q8.name(z[0]), "1");
  EXPECT_EQ(q8.name(z[1]), "a^2");
  EXPECT_EQ(center_size(build(FamilySpec::u6n(1))), 1u);
}

TEST(Centralizer, Examples) {
  const auto d6 = build(FamilySpec::dihedral(3));
  EXPECT_EQ(centralizer(d6, 0).members.size(), 6u);
  // a has index 1 in the a^i b^j normal form.
  const auto ca = centralizer(d6, 1).members;
  std::vector<std::string> names;
  for (Element e : ca) names.push_back(d6.name(e));
  EXPECT_EQ(names, (std::vector<std::string>{"1", "a", "a^2"}));

  const auto q8 = build(FamilySpec::dicyclic(2));
  names.clear();
  for (Element e : centralizer(q8, 4).members) names.push_back(q8.name(e));  // b = index 4
  EXPECT_EQ(names, (std::vector<std::string>{"1", "a^2", "b", "a^2b"}));

  EXPECT_EQ(kind_of([&] { centralizer(q8, 8); }), ErrorKind::IndexOutOfRange);
}

TEST(CentralizerCount, Examples) {
  EXPECT_EQ(centralizer_count(cyclic_group(7)), 1u);
  EXPECT_EQ(centralizer_count(build(FamilySpec::dihedral(4))), 4u);
  EXPECT_EQ(centralizer_count(build(FamilySpec::dihedral(6))), 5u);
  for (std::size_t m = 3; m <= 8; ++m) {
    const auto g = build(FamilySpec::dihedral(m));
    EXPECT_EQ(centralizer_count(g), oracle::brute_force_centralizer_count(g)) << m;
  }
}

TEST(QuotientByCenter, Examples) {
  const auto trivial = quotient_by_center(cyclic_group(5));
  EXPECT_EQ(trivial.group.order(), 1u);

  const auto q8 = quotient_by_center(build(FamilySpec::dicyclic(2)));
  EXPECT_EQ(q8.group.order(), 4u);
  for (Element x = 1; x < 4; ++x) EXPECT_EQ(q8.group.element_order(x), 2u);
  EXPECT_EQ(q8.coset_of[0], 0u);

  const auto q12 = quotient_by_center(build(FamilySpec::dicyclic(3)));
  EXPECT_EQ(q12.group.order(), 6u);
  EXPECT_FALSE(q12.group.is_abelian());
}

TEST(RecognizeSmall, Examples) {
  using K = SmallGroupTag::Kind;
  EXPECT_EQ(recognize_small(build(FamilySpec::zpxzp(2))), (SmallGroupTag{K::ZpxZp, 2}));
  EXPECT_EQ(recognize_small(oracle::symmetric_group_3()), (SmallGroupTag{K::Dihedral, 3}));
  EXPECT_EQ(recognize_small(cyclic_group(9)).kind, K::Other);
  EXPECT_EQ(recognize_small(cyclic_group(4)).kind, K::Other);
  EXPECT_EQ(recognize_small(build(FamilySpec::zpxzp(3))), (SmallGroupTag{K::ZpxZp, 3}));
  // D4 = Z2 x Z2 reports the ZpxZp tag.
  EXPECT_EQ(recognize_small(build(FamilySpec::dihedral(2))), (SmallGroupTag{K::ZpxZp, 2}));
  EXPECT_EQ(recognize_small(build(FamilySpec::dihedral(7))), (SmallGroupTag{K::Dihedral, 7}));
  EXPECT_EQ(recognize_small(build(FamilySpec::dicyclic(3))).kind, K::Other);
}

TEST(RecognizeSmall, QuotientsOfFamilies) {
  using K = SmallGroupTag::Kind;
  const auto tag = [](FamilySpec s) { return recognize_small(quotient_by_center(build(s)).group); };
  EXPECT_EQ(tag(FamilySpec::dicyclic(2)), (SmallGroupTag{K::ZpxZp, 2}));
  EXPECT_EQ(tag(FamilySpec::dicyclic(3)), (SmallGroupTag{K::Dihedral, 3}));
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(tag(FamilySpec::u6n(n)), (SmallGroupTag{K::Dihedral, 3}));
}

TEST(MaxNoncommutingSet, Examples) {
  const auto d8 = build(FamilySpec::dihedral(4));
  const auto d12 = build(FamilySpec::dihedral(6));
  const auto s3 = oracle::symmetric_group_3();
  EXPECT_EQ(max_noncommuting_set(d8).size(), 3u);
  EXPECT_EQ(max_noncommuting_set(d12).size(), 4u);
  EXPECT_EQ(max_noncommuting_set(s3).size(), 4u);
  EXPECT_EQ(kind_of([] { max_noncommuting_set(cyclic_group(6)); }), ErrorKind::AbelianGroup);

  for (const auto& g : {d8, d12, s3, build(FamilySpec::heisenberg(3)), build(FamilySpec::metacyclic(5, 2))}) {
    const auto witness = max_noncommuting_set(g);
    EXPECT_EQ(witness.size(), oracle::brute_force_max_noncommuting(g));
    for (std::size_t i = 0; i < witness.size(); ++i)
      for (std::size_t j = i + 1; j < witness.size(); ++j) EXPECT_FALSE(g.commute(witness[i], witness[j]));
  }
}

TEST(CayleyText, ReadsNamesAndRoundTrips) {
  const auto q8 = build(FamilySpec::dicyclic(2));
  std::istringstream in(write_cayley_text(q8));
  const auto back = read_cayley_text(in);
  EXPECT_EQ(back.table(), q8.table());
  EXPECT_EQ(back.names(), q8.names());
}

TEST(CayleyText, RejectsMalformedInput) {
  const auto parse = [](const std::string& text) {
    return kind_of([&] {
      std::istringstream in(text);
      read_cayley_text(in);
    });
  };
  EXPECT_EQ(parse(""), ErrorKind::ParseError);
  EXPECT_EQ(parse("x\n"), ErrorKind::ParseError);
  EXPECT_EQ(parse("2\n0 1\n1\n"), ErrorKind::ParseError);
  EXPECT_EQ(parse("2\n0 1\n1 -0\n"), ErrorKind::ParseError);
  EXPECT_EQ(parse("2\n0 1\n1 5\n"), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(parse("2\n0 1\n1 0\nnames: e\n"), ErrorKind::ParseError);
  EXPECT_EQ(parse("2\n0 1\n1 0\nlabels e t\n"), ErrorKind::ParseError);
  EXPECT_EQ(parse("2\n0 1\n1 1\n"), ErrorKind::AxiomViolation);
}
