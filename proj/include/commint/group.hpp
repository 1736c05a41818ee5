#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "commint/error.hpp"

namespace commint {

using Element = std::uint32_t;

/// A finite group stored as its Cayley table. Element 0 is always the
/// identity; `mul(i, j)` is the index of g_i * g_j.
///
/// Instances are only produced by `from_cayley_table`, which checks all
/// group axioms exhaustively, so every FiniteGroup in circulation is valid.
class FiniteGroup {
 public:
  /// Validates the identity, inverse, and associativity laws and returns the
  /// group. `names`, when given, must hold one label per element; otherwise
  /// labels default to "g0", "g1", ...
  static FiniteGroup from_cayley_table(const std::vector<std::vector<Element>>& table,
                                       std::vector<std::string> names = {});

  std::size_t order() const noexcept { return order_; }
  Element mul(Element a, Element b) const noexcept { return table_[a * order_ + b]; }
  Element inverse(Element a) const noexcept { return inverses_[a]; }
  bool commute(Element a, Element b) const noexcept { return mul(a, b) == mul(b, a); }

  const std::string& name(Element a) const { return names_.at(a); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::vector<std::vector<Element>> table() const;
  bool is_abelian() const noexcept;
  /// Smallest k >= 1 with a^k = 1.
  std::size_t element_order(Element a) const;

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<std::string> names_;
};

struct Center {
  std::vector<Element> members;  // ascending
};

struct Centralizer {
  Element of = 0;
  std::vector<Element> members;  // ascending
};

struct QuotientGroup {
  FiniteGroup group;
  /// coset_of[g] is the index in `group` of the coset gZ(G).
  std::vector<Element> coset_of;
};

/// Shape of a small group as far as the quotient theorems care.
struct SmallGroupTag {
  enum class Kind { ZpxZp, Dihedral, Other };
  Kind kind = Kind::Other;
  /// p for ZpxZp, m for Dihedral (group of order 2m), 0 otherwise.
  std::size_t parameter = 0;

  std::string to_string() const;
  friend bool operator==(const SmallGroupTag&, const SmallGroupTag&) = default;
};

Center center(const FiniteGroup& group);
Centralizer centralizer(const FiniteGroup& group, Element x);
/// Number of distinct sets C_G(x) over all x in G.
std::size_t centralizer_count(const FiniteGroup& group);
QuotientGroup quotient_by_center(const FiniteGroup& group);
SmallGroupTag recognize_small(const FiniteGroup& group);
/// A maximum-size set of pairwise non-commuting elements (one witness).
std::vector<Element> max_noncommuting_set(const FiniteGroup& group);

/// Smallest subgroup containing `generators`.
std::vector<Element> generated_subgroup(const FiniteGroup& group, std::span<const Element> generators);

bool is_prime(std::uint64_t n);

/// Cayley-table text format: first line n, then n rows of n 0-based
/// indices, then optionally `names:` followed by n labels.
FiniteGroup read_cayley_text(std::istream& in);
FiniteGroup read_cayley_file(const std::string& path);
std::string write_cayley_text(const FiniteGroup& group);

}  // namespace commint
