#include "commint/group.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include <boost/dynamic_bitset.hpp>

namespace commint {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::AbelianGroup: return "AbelianGroup";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorKind::NotBinary: return "NotBinary";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::IncompleteSpectrum: return "IncompleteSpectrum";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<Element>>& table,
                                           std::vector<std::string> names) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::IndexOutOfRange, "empty Cayley table");
  FiniteGroup g;
  g.order_ = n;
  g.table_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "row " + std::to_string(i) + " has " + std::to_string(table[i].size()) +
                      " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) {
        throw Error(ErrorKind::IndexOutOfRange, "entry (" + std::to_string(i) + "," +
                                                    std::to_string(j) + ") = " +
                                                    std::to_string(table[i][j]));
      }
      g.table_.push_back(table[i][j]);
    }
  }

  for (Element j = 0; j < n; ++j) {
    if (g.mul(0, j) != j || g.mul(j, 0) != j) {
      throw Error(ErrorKind::AxiomViolation,
                  "identity law fails at (0," + std::to_string(j) + ")");
    }
  }

  g.inverses_.assign(n, 0);
  for (Element i = 0; i < n; ++i) {
    std::size_t hits = 0;
    for (Element j = 0; j < n; ++j) {
      if (g.mul(i, j) == 0) {
        ++hits;
        g.inverses_[i] = j;
      }
    }
    if (hits != 1) {
      throw Error(ErrorKind::AxiomViolation,
                  "inverse law fails for element " + std::to_string(i) + " (" +
                      std::to_string(hits) + " right inverses)");
    }
    if (g.mul(g.inverses_[i], i) != 0) {
      throw Error(ErrorKind::AxiomViolation,
                  "inverse law fails for element " + std::to_string(i) + " (not two-sided)");
    }
  }

  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab = g.mul(a, b);
      for (Element c = 0; c < n; ++c) {
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) {
          throw Error(ErrorKind::AxiomViolation,
                      "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                          "," + std::to_string(c) + ")");
        }
      }
    }
  }

  if (names.empty()) {
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  } else if (names.size() != n) {
    throw Error(ErrorKind::IndexOutOfRange, "expected " + std::to_string(n) + " names, got " +
                                                std::to_string(names.size()));
  }
  g.names_ = std::move(names);
  return g;
}

std::vector<std::vector<Element>> FiniteGroup::table() const {
  std::vector<std::vector<Element>> rows(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    rows[i].assign(table_.begin() + static_cast<std::ptrdiff_t>(i * order_),
                   table_.begin() + static_cast<std::ptrdiff_t>((i + 1) * order_));
  }
  return rows;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (Element a = 0; a < order_; ++a) {
    for (Element b = a + 1; b < order_; ++b) {
      if (!commute(a, b)) return false;
    }
  }
  return true;
}

std::size_t FiniteGroup::element_order(Element a) const {
  if (a >= order_) throw Error(ErrorKind::IndexOutOfRange, "element " + std::to_string(a));
  std::size_t k = 1;
  for (Element power = a; power != 0; power = mul(power, a)) ++k;
  return k;
}

std::string SmallGroupTag::to_string() const {
  switch (kind) {
    case Kind::ZpxZp: return "ZpxZp(" + std::to_string(parameter) + ")";
    case Kind::Dihedral: return "Dihedral(" + std::to_string(parameter) + ")";
    case Kind::Other: return "Other";
  }
  return "Other";
}

Center center(const FiniteGroup& group) {
  Center z;
  const auto n = static_cast<Element>(group.order());
  for (Element x = 0; x < n; ++x) {
    bool central = true;
    for (Element g = 0; g < n && central; ++g) central = group.commute(x, g);
    if (central) z.members.push_back(x);
  }
  return z;
}

Centralizer centralizer(const FiniteGroup& group, Element x) {
  if (x >= group.order()) throw Error(ErrorKind::IndexOutOfRange, "element " + std::to_string(x));
  Centralizer c{x, {}};
  const auto n = static_cast<Element>(group.order());
  for (Element y = 0; y < n; ++y) {
    if (group.commute(x, y)) c.members.push_back(y);
  }
  return c;
}

namespace {

// One representative per distinct centralizer, in ascending element order.
std::map<std::vector<Element>, Element> distinct_centralizers(const FiniteGroup& group) {
  std::map<std::vector<Element>, Element> seen;
  const auto n = static_cast<Element>(group.order());
  for (Element x = 0; x < n; ++x) seen.try_emplace(centralizer(group, x).members, x);
  return seen;
}

}  // namespace

std::size_t centralizer_count(const FiniteGroup& group) {
  return distinct_centralizers(group).size();
}

QuotientGroup quotient_by_center(const FiniteGroup& group) {
  const auto n = static_cast<Element>(group.order());
  const auto z = center(group).members;

  constexpr auto kUnassigned = static_cast<Element>(-1);
  std::vector<Element> coset_of(n, kUnassigned);
  std::vector<Element> representatives;
  for (Element g = 0; g < n; ++g) {
    if (coset_of[g] != kUnassigned) continue;
    const auto index = static_cast<Element>(representatives.size());
    representatives.push_back(g);
    for (Element c : z) coset_of[group.mul(g, c)] = index;
  }

  const std::size_t q = representatives.size();
  std::vector<std::vector<Element>> table(q, std::vector<Element>(q));
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      table[i][j] = coset_of[group.mul(representatives[i], representatives[j])];
    }
  }
  for (Element g = 0; g < n; ++g) {
    for (Element h = 0; h < n; ++h) {
      if (table[coset_of[g]][coset_of[h]] != coset_of[group.mul(g, h)]) {
        throw Error(ErrorKind::Internal, "coset product not well defined");
      }
    }
  }

  std::vector<std::string> names;
  names.reserve(q);
  for (Element r : representatives) names.push_back(group.name(r) + "Z");
  return QuotientGroup{FiniteGroup::from_cayley_table(table, std::move(names)),
                       std::move(coset_of)};
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<Element> generated_subgroup(const FiniteGroup& group,
                                        std::span<const Element> generators) {
  std::vector<bool> in(group.order(), false);
  std::vector<Element> members{0};
  in[0] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element s : generators) {
      const Element next = group.mul(members[i], s);
      if (!in[next]) {
        in[next] = true;
        members.push_back(next);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

SmallGroupTag recognize_small(const FiniteGroup& group) {
  const std::size_t n = group.order();
  const auto elements = static_cast<Element>(n);

  for (std::size_t p = 2; p * p <= n; ++p) {
    if (p * p != n || !is_prime(p) || !group.is_abelian()) continue;
    bool exponent_p = true;
    for (Element x = 1; x < elements && exponent_p; ++x) exponent_p = group.element_order(x) == p;
    if (exponent_p) return {SmallGroupTag::Kind::ZpxZp, p};
  }

  if (n >= 4 && n % 2 == 0) {
    const std::size_t m = n / 2;
    for (Element r = 1; r < elements; ++r) {
      if (group.element_order(r) != m) continue;
      for (Element s = 1; s < elements; ++s) {
        if (group.element_order(s) != 2) continue;
        if (group.mul(group.mul(s, r), group.inverse(s)) != group.inverse(r)) continue;
        const Element generators[] = {r, s};
        if (generated_subgroup(group, generators).size() == n) {
          return {SmallGroupTag::Kind::Dihedral, m};
        }
      }
    }
  }
  return {};
}

namespace {

using Bits = boost::dynamic_bitset<>;

// Exact maximum clique: branch and bound with a greedy-colouring bound.
class MaxClique {
 public:
  explicit MaxClique(std::vector<Bits> adjacency) : adj_(std::move(adjacency)) {}

  std::vector<std::size_t> solve() {
    Bits all(adj_.size());
    all.set();
    std::vector<std::size_t> current;
    expand(current, all);
    return best_;
  }

 private:
  void expand(std::vector<std::size_t>& current, Bits candidates) {
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    colour_sort(candidates, order, colour);
    for (std::size_t k = order.size(); k-- > 0;) {
      if (current.size() + colour[k] <= best_.size()) return;
      const std::size_t v = order[k];
      current.push_back(v);
      Bits next = candidates & adj_[v];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
      candidates.reset(v);
    }
  }

  void colour_sort(Bits uncoloured, std::vector<std::size_t>& order,
                   std::vector<std::size_t>& colour) const {
    std::size_t c = 0;
    while (uncoloured.any()) {
      ++c;
      Bits available = uncoloured;
      for (auto v = available.find_first(); v != Bits::npos; v = available.find_next(v)) {
        available.reset(v);
        available -= adj_[v];
        uncoloured.reset(v);
        order.push_back(v);
        colour.push_back(c);
      }
    }
  }

  std::vector<Bits> adj_;
  std::vector<std::size_t> best_;
};

}  // namespace

std::vector<Element> max_noncommuting_set(const FiniteGroup& group) {
  if (group.is_abelian()) throw Error(ErrorKind::AbelianGroup, "every pair of elements commutes");

  // Elements sharing a centralizer commute with exactly the same elements,
  // so one representative per non-central centralizer loses nothing.
  std::vector<Element> reps;
  for (const auto& [members, rep] : distinct_centralizers(group)) {
    if (members.size() != group.order()) reps.push_back(rep);
  }
  std::sort(reps.begin(), reps.end());

  std::vector<Bits> noncommuting(reps.size(), Bits(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < reps.size(); ++j) {
      if (i != j && !group.commute(reps[i], reps[j])) noncommuting[i].set(j);
    }
  }
  std::vector<Element> witness;
  for (std::size_t v : MaxClique(std::move(noncommuting)).solve()) witness.push_back(reps[v]);
  std::sort(witness.begin(), witness.end());
  return witness;
}

FiniteGroup read_cayley_text(std::istream& in) {
  std::string token;
  if (!(in >> token)) throw Error(ErrorKind::ParseError, "missing order line");
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    n = std::stoul(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "order is not a number: '" + token + "'");
  }
  if (n == 0) throw Error(ErrorKind::ParseError, "order must be positive");

  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(in >> token)) throw Error(ErrorKind::ParseError, "table truncated at row " + std::to_string(i));
      unsigned long value = 0;
      try {
        std::size_t used = 0;
        value = std::stoul(token, &used);
        if (used != token.size() || token.front() == '-') throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad table entry '" + token + "' at (" +
                                               std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if (value >= n) {
        throw Error(ErrorKind::IndexOutOfRange, "entry (" + std::to_string(i) + "," +
                                                    std::to_string(j) + ") = " + std::to_string(value));
      }
      table[i][j] = static_cast<Element>(value);
    }
  }

  std::vector<std::string> names;
  if (in >> token) {
    if (token != "names:") throw Error(ErrorKind::ParseError, "unexpected trailing token '" + token + "'");
    while (in >> token) names.push_back(token);
    if (names.size() != n) {
      throw Error(ErrorKind::ParseError, "expected " + std::to_string(n) + " names, got " +
                                             std::to_string(names.size()));
    }
  }
  return FiniteGroup::from_cayley_table(table, std::move(names));
}

FiniteGroup read_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  return read_cayley_text(in);
}

std::string write_cayley_text(const FiniteGroup& group) {
  std::ostringstream out;
  const auto n = static_cast<Element>(group.order());
  out << n << '\n';
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) out << (j ? " " : "") << group.mul(i, j);
    out << '\n';
  }
  out << "names:";
  for (const auto& name : group.names()) out << ' ' << name;
  out << '\n';
  return out.str();
}

}  // namespace commint
