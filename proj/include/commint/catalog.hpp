#pragma once

#include <memory>
#include <string>
#include <vector>

#include "commint/group.hpp"

namespace commint {

/// Parameters of one of the named group families.
///
/// Dihedral(m) is D_2m, the group of order 2m. Dicyclic(m) is Q_4m,
/// Metacyclic(m, n) is M_2mn, U6n(n) has order 6n. The two extraspecial
/// kinds take a prime p. DirectProduct(f, k) is f x Z_k.
struct FamilySpec {
  enum class Kind {
    Dihedral,
    Dicyclic,
    Metacyclic,
    U6n,
    ExtraspecialHeisenberg,
    ExtraspecialExpPSquared,
    DirectProduct,
    Cyclic,
    ZpxZp,
  };

  Kind kind = Kind::Cyclic;
  std::size_t m = 0;  // m, p or k depending on kind
  std::size_t n = 0;  // Metacyclic n; DirectProduct cyclic order
  std::shared_ptr<const FamilySpec> factor;  // DirectProduct only

  static FamilySpec dihedral(std::size_t m) { return {Kind::Dihedral, m, 0, nullptr}; }
  static FamilySpec dicyclic(std::size_t m) { return {Kind::Dicyclic, m, 0, nullptr}; }
  static FamilySpec metacyclic(std::size_t m, std::size_t n) { return {Kind::Metacyclic, m, n, nullptr}; }
  static FamilySpec u6n(std::size_t n) { return {Kind::U6n, n, 0, nullptr}; }
  static FamilySpec heisenberg(std::size_t p) { return {Kind::ExtraspecialHeisenberg, p, 0, nullptr}; }
  static FamilySpec exp_p_squared(std::size_t p) { return {Kind::ExtraspecialExpPSquared, p, 0, nullptr}; }
  static FamilySpec cyclic(std::size_t k) { return {Kind::Cyclic, k, 0, nullptr}; }
  static FamilySpec zpxzp(std::size_t p) { return {Kind::ZpxZp, p, 0, nullptr}; }
  static FamilySpec product(FamilySpec factor, std::size_t k) {
    return {Kind::DirectProduct, 0, k, std::make_shared<const FamilySpec>(std::move(factor))};
  }

  /// Canonical CLI spelling, e.g. "metacyclic:4,2" or "prod:dihedral:4,z3".
  std::string to_string() const;
  friend bool operator==(const FamilySpec& a, const FamilySpec& b);
};

/// Parses the CLI spelling: dihedral:m, dicyclic:m, metacyclic:m,n, u6n:n,
/// heis:p, expp2:p, zpxzp:p, z<k>, prod:<spec>,z<k>. Throws ParseError.
FamilySpec parse_family(const std::string& text);

FiniteGroup build(const FamilySpec& spec);

enum class ExtraspecialType { Heisenberg, ExpPSquared };
FiniteGroup extraspecial(std::size_t p, ExtraspecialType type);

FiniteGroup cyclic_group(std::size_t k);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

struct CatalogEntry {
  std::string name;
  FamilySpec spec;
  /// Grid selector used by `suite --only`: extraspecial, products,
  /// dicyclic, u6n, metacyclic, dihedral.
  std::string grid;
};

/// The fixed verification grid, in report order.
std::vector<CatalogEntry> list_catalog();

}  // namespace commint
