#include "commint/spectra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace commint {

Integer CharPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string CharPoly::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coefficients.size(); k-- > 0;) {
    const Integer& c = coefficients[k];
    if (c == 0) continue;
    const Integer magnitude = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (magnitude != 1 || k == 0) out << magnitude;
    if (k >= 1) out << 'x';
    if (k >= 2) out << '^' << k;
    first = false;
  }
  if (first) out << '0';
  return out.str();
}

std::int64_t Spectrum::total_multiplicity() const {
  std::int64_t total = 0;
  for (const auto& e : pairs) total += e.multiplicity;
  return total;
}

Integer Spectrum::moment(unsigned power) const {
  Integer total = 0;
  for (const auto& e : pairs) {
    Integer term;
    mpz_pow_ui(term.get_mpz_t(), Integer(static_cast<long>(e.value)).get_mpz_t(), power);
    total += term * static_cast<long>(e.multiplicity);
  }
  return total;
}

std::string Spectrum::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out += ", ";
    const auto v = pairs[i].value;
    out += (v < 0 ? "(" + std::to_string(v) + ")" : std::to_string(v)) + "^" +
           std::to_string(pairs[i].multiplicity);
  }
  out += "}";
  if (!complete) out += " (partial)";
  return out;
}

Spectrum canonical(std::vector<Eigenvalue> pairs, bool complete) {
  std::map<std::int64_t, std::int64_t, std::greater<>> merged;
  for (const auto& e : pairs) {
    if (e.multiplicity < 0) {
      throw Error(ErrorKind::ParameterOutOfRange,
                  "negative multiplicity for eigenvalue " + std::to_string(e.value));
    }
    merged[e.value] += e.multiplicity;
  }
  Spectrum s;
  s.complete = complete;
  for (const auto& [value, multiplicity] : merged) {
    if (multiplicity > 0) s.pairs.push_back({value, multiplicity});
  }
  return s;
}

Integer bareiss_determinant(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

namespace {

IntMatrix shifted(const std::vector<std::vector<std::size_t>>& neighbours, long t) {
  const std::size_t n = neighbours.size();
  IntMatrix m(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = t;
    for (std::size_t j : neighbours[i]) m[i][j] = -1;
  }
  return m;
}

CharPoly faddeev_leverrier(const std::vector<std::vector<std::size_t>>& neighbours) {
  const std::size_t n = neighbours.size();
  CharPoly poly;
  poly.coefficients.assign(n + 1, 0);
  poly.coefficients[n] = 1;
  if (n == 0) return poly;

  // M_1 = I; A M_k = (A M_{k-1}) ... Only 0/1 rows of A are touched, so the
  // product is a sum of neighbour rows of M.
  IntMatrix m(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  IntMatrix am(n, std::vector<Integer>(n, 0));

  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Integer& sum = am[i][j];
        sum = 0;
        for (std::size_t l : neighbours[i]) sum += m[l][j];
      }
    }
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am[i][i];
    if (!mpz_divisible_ui_p(trace.get_mpz_t(), k)) {
      throw Error(ErrorKind::Internal, "trace not divisible by " + std::to_string(k));
    }
    Integer c;
    mpz_divexact_ui(c.get_mpz_t(), trace.get_mpz_t(), k);
    c = -c;
    poly.coefficients[n - k] = c;
    if (k < n) {
      std::swap(m, am);
      for (std::size_t i = 0; i < n; ++i) m[i][i] += c;
    }
  }
  return poly;
}

CharPoly checked_char_poly(const std::vector<std::vector<std::size_t>>& neighbours) {
  CharPoly poly = faddeev_leverrier(neighbours);
  for (long t : {-1L, 0L, 1L}) {
    if (poly.evaluate(t) != bareiss_determinant(shifted(neighbours, t))) {
      throw Error(ErrorKind::Internal,
                  "characteristic polynomial disagrees with det(tI - A) at t = " + std::to_string(t));
    }
  }
  return poly;
}

}  // namespace

CharPoly char_poly(const CommutingGraph& graph) { return checked_char_poly(graph.neighbours()); }

CharPoly char_poly(const std::vector<std::vector<int>>& adjacency) {
  return char_poly(CommutingGraph::from_adjacency(adjacency));
}

IntegerRoots integer_spectrum(const CharPoly& poly, std::int64_t bound) {
  if (poly.coefficients.empty() || poly.coefficients.back() != 1) {
    throw Error(ErrorKind::NotMonic, poly.to_string());
  }
  std::vector<Integer> coeffs = poly.coefficients;
  std::vector<Eigenvalue> found;

  // Root 0: strip trailing zero coefficients.
  std::size_t zeros = 0;
  while (zeros + 1 < coeffs.size() && coeffs[zeros] == 0) ++zeros;
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(zeros));
  if (zeros) found.push_back({0, static_cast<std::int64_t>(zeros)});

  for (std::int64_t r = bound; r >= -bound; --r) {
    if (r == 0) continue;
    const Integer root(static_cast<long>(r));
    std::int64_t multiplicity = 0;
    while (coeffs.size() > 1) {
      // Synthetic division by (x - r); the final carry is p(r).
      std::vector<Integer> quotient(coeffs.size() - 1);
      Integer carry = 0;
      for (std::size_t k = coeffs.size(); k-- > 0;) {
        carry = carry * root + coeffs[k];
        if (k > 0) quotient[k - 1] = carry;
      }
      if (carry != 0) break;
      coeffs = std::move(quotient);
      ++multiplicity;
    }
    if (multiplicity) found.push_back({r, multiplicity});
  }

  IntegerRoots result;
  result.remainder.coefficients = std::move(coeffs);
  result.spectrum = canonical(std::move(found), result.remainder.degree() == 0);
  return result;
}

IntegralityResult is_integral(const CommutingGraph& graph) {
  IntegralityResult result;
  result.char_poly = char_poly(graph);
  auto roots = integer_spectrum(result.char_poly, static_cast<std::int64_t>(graph.max_degree()));
  result.spectrum = std::move(roots.spectrum);
  result.remainder = std::move(roots.remainder);
  result.integral = result.spectrum.complete;
  return result;
}

Spectrum clique_union_spectrum(const std::vector<std::size_t>& sizes) {
  if (sizes.empty()) throw Error(ErrorKind::EmptyInput, "no clique sizes");
  std::vector<Eigenvalue> pairs;
  std::int64_t pooled = 0;
  for (std::size_t size : sizes) {
    if (size == 0) throw Error(ErrorKind::ParameterOutOfRange, "clique of size 0");
    const auto m = static_cast<std::int64_t>(size);
    pairs.push_back({m - 1, 1});
    pooled += m - 1;
  }
  pairs.push_back({-1, pooled});
  return canonical(std::move(pairs));
}

bool spectra_agree(const Spectrum& a, const Spectrum& b) {
  if (!a.complete || !b.complete) {
    throw Error(ErrorKind::IncompleteSpectrum, "cannot compare partial spectra");
  }
  return canonical(a.pairs) == canonical(b.pairs);
}

}  // namespace commint
