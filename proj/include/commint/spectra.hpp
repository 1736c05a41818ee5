#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "commint/graph.hpp"

namespace commint {

using Integer = mpz_class;
using IntMatrix = std::vector<std::vector<Integer>>;

/// Monic integer polynomial, coefficients stored constant term first.
struct CharPoly {
  std::vector<Integer> coefficients;

  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  const Integer& coefficient(std::size_t power) const { return coefficients.at(power); }
  Integer evaluate(const Integer& x) const;
  std::string to_string() const;

  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

struct Eigenvalue {
  std::int64_t value = 0;
  std::int64_t multiplicity = 0;

  friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
};

/// Multiset of integer eigenvalues. Canonical form: strictly descending
/// values, positive multiplicities.
struct Spectrum {
  std::vector<Eigenvalue> pairs;
  /// True iff the multiplicities account for every root of the polynomial.
  bool complete = true;

  std::int64_t total_multiplicity() const;
  /// Sum of k * lambda^power over all pairs.
  Integer moment(unsigned power) const;
  /// e.g. "{5^4, (-1)^20}"
  std::string to_string() const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// Merges duplicate values, drops zero multiplicities, sorts descending.
/// Negative multiplicities throw ParameterOutOfRange.
Spectrum canonical(std::vector<Eigenvalue> pairs, bool complete = true);

/// det(xI - A) for a symmetric 0/1 matrix with zero diagonal, by the
/// Faddeev-LeVerrier recurrence over the integers (every division by k is
/// exact). The result is checked against Bareiss determinants of tI - A at
/// t in {-1, 0, 1} before being returned.
CharPoly char_poly(const CommutingGraph& graph);
CharPoly char_poly(const std::vector<std::vector<int>>& adjacency);

/// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer bareiss_determinant(IntMatrix matrix);

struct IntegerRoots {
  Spectrum spectrum;
  CharPoly remainder;  // integer-root-free cofactor
};

/// Extracts every integer root r with |r| <= bound, with full multiplicity,
/// by exact synthetic division. Throws NotMonic.
IntegerRoots integer_spectrum(const CharPoly& poly, std::int64_t bound);

struct IntegralityResult {
  bool integral = false;
  Spectrum spectrum;
  CharPoly char_poly;
  CharPoly remainder;
};

IntegralityResult is_integral(const CommutingGraph& graph);

/// Spectrum of the disjoint union of complete graphs of the given sizes.
Spectrum clique_union_spectrum(const std::vector<std::size_t>& sizes);

/// Exact multiset equality. Throws IncompleteSpectrum if either side is partial.
bool spectra_agree(const Spectrum& a, const Spectrum& b);

}  // namespace commint
