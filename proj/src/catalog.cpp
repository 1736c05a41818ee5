#include "commint/catalog.hpp"

#include <functional>

namespace commint {

namespace {

constexpr std::size_t kMaxOrder = 512;

// "1", "a", "a^3" ...
std::string power(const char* symbol, std::size_t exponent) {
  if (exponent == 0) return "";
  if (exponent == 1) return symbol;
  return std::string(symbol) + "^" + std::to_string(exponent);
}

std::string word(std::size_t i, std::size_t j) {
  std::string w = power("a", i) + power("b", j);
  return w.empty() ? "1" : w;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::ParameterOutOfRange, what);
}

void require_order(std::size_t order) {
  require(order <= kMaxOrder,
          "order " + std::to_string(order) + " exceeds " + std::to_string(kMaxOrder));
}

// Builds a group whose elements are the normal forms a^i b^j with
// 0 <= i < a_order, 0 <= j < b_order, indexed i + a_order * j.
// `product` maps two normal forms to the normal form of their product.
using NormalForm = std::pair<std::size_t, std::size_t>;

FiniteGroup from_normal_forms(std::size_t a_order, std::size_t b_order,
                              const std::function<NormalForm(NormalForm, NormalForm)>& product) {
  const std::size_t n = a_order * b_order;
  require_order(n);
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    const NormalForm lhs{x % a_order, x / a_order};
    names[x] = word(lhs.first, lhs.second);
    for (std::size_t y = 0; y < n; ++y) {
      const auto [i, j] = product(lhs, {y % a_order, y / a_order});
      table[x][y] = static_cast<Element>(i + a_order * j);
    }
  }
  return FiniteGroup::from_cayley_table(table, std::move(names));
}

std::size_t mod(long long value, std::size_t modulus) {
  const auto m = static_cast<long long>(modulus);
  return static_cast<std::size_t>(((value % m) + m) % m);
}

// b^j a^k b^-j = a^(k * sign^j) for the inversion automorphism.
long long conjugate_by_b(std::size_t k, std::size_t j) {
  return j % 2 == 0 ? static_cast<long long>(k) : -static_cast<long long>(k);
}

FiniteGroup dihedral_group(std::size_t m) {
  require(m >= 2, "dihedral needs m >= 2");
  return from_normal_forms(m, 2, [m](NormalForm x, NormalForm y) {
    return NormalForm{mod(static_cast<long long>(x.first) + conjugate_by_b(y.first, x.second), m),
                      (x.second + y.second) % 2};
  });
}

FiniteGroup dicyclic_group(std::size_t m) {
  require(m >= 2, "dicyclic needs m >= 2");
  const std::size_t a_order = 2 * m;
  return from_normal_forms(a_order, 2, [m, a_order](NormalForm x, NormalForm y) {
    long long i = static_cast<long long>(x.first) + conjugate_by_b(y.first, x.second);
    std::size_t j = x.second + y.second;
    if (j == 2) {  // b^2 = a^m
      i += static_cast<long long>(m);
      j = 0;
    }
    return NormalForm{mod(i, a_order), j};
  });
}

FiniteGroup metacyclic_group(std::size_t m, std::size_t n) {
  require(m > 2, "metacyclic needs m > 2");
  require(n >= 1, "metacyclic needs n >= 1");
  const std::size_t b_order = 2 * n;
  return from_normal_forms(m, b_order, [m, b_order](NormalForm x, NormalForm y) {
    return NormalForm{mod(static_cast<long long>(x.first) + conjugate_by_b(y.first, x.second), m),
                      (x.second + y.second) % b_order};
  });
}

// a^2n = b^3 = 1, a^-1 b a = b^-1, i.e. b^j a^k = a^k b^(j * (-1)^k).
FiniteGroup u6n_group(std::size_t n) {
  require(n >= 1, "u6n needs n >= 1");
  const std::size_t a_order = 2 * n;
  std::vector<std::vector<Element>> table(6 * n, std::vector<Element>(6 * n));
  require_order(6 * n);
  std::vector<std::string> names(6 * n);
  auto index = [a_order](std::size_t i, std::size_t j) { return static_cast<Element>(i + a_order * j); };
  for (std::size_t i = 0; i < a_order; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      names[index(i, j)] = word(i, j);
      for (std::size_t k = 0; k < a_order; ++k) {
        for (std::size_t l = 0; l < 3; ++l) {
          const long long twisted = k % 2 == 0 ? static_cast<long long>(j) : -static_cast<long long>(j);
          table[index(i, j)][index(k, l)] =
              index((i + k) % a_order, mod(twisted + static_cast<long long>(l), 3));
        }
      }
    }
  }
  return FiniteGroup::from_cayley_table(table, std::move(names));
}

FiniteGroup zpxzp_group(std::size_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
  return direct_product(cyclic_group(p), cyclic_group(p));
}

// Upper unitriangular 3x3 matrices over Z_p, [x, y, z] = [[1,x,z],[0,1,y],[0,0,1]].
FiniteGroup heisenberg_group(std::size_t p) {
  const std::size_t n = p * p * p;
  require_order(n);
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  std::vector<std::string> names(n);
  for (std::size_t u = 0; u < n; ++u) {
    const std::size_t x = u % p, y = (u / p) % p, z = u / (p * p);
    names[u] = "[" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + "]";
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t x2 = v % p, y2 = (v / p) % p, z2 = v / (p * p);
      const std::size_t rx = (x + x2) % p, ry = (y + y2) % p, rz = (z + z2 + x * y2) % p;
      table[u][v] = static_cast<Element>(rx + p * ry + p * p * rz);
    }
  }
  return FiniteGroup::from_cayley_table(table, std::move(names));
}

// a^(p^2) = b^p = 1, b a b^-1 = a^(1+p).
FiniteGroup exp_p_squared_group(std::size_t p) {
  const std::size_t a_order = p * p;
  // (1+p)^j mod p^2
  std::vector<std::size_t> twist(p, 1);
  for (std::size_t j = 1; j < p; ++j) twist[j] = twist[j - 1] * (1 + p) % a_order;
  return from_normal_forms(a_order, p, [a_order, p, twist](NormalForm x, NormalForm y) {
    return NormalForm{(x.first + y.first * twist[x.second]) % a_order, (x.second + y.second) % p};
  });
}

}  // namespace

FiniteGroup cyclic_group(std::size_t k) {
  require(k >= 1, "cyclic needs k >= 1");
  require_order(k);
  std::vector<std::vector<Element>> table(k, std::vector<Element>(k));
  std::vector<std::string> names(k);
  for (std::size_t i = 0; i < k; ++i) {
    names[i] = i == 0 ? "1" : power("z", i);
    for (std::size_t j = 0; j < k; ++j) table[i][j] = static_cast<Element>((i + j) % k);
  }
  return FiniteGroup::from_cayley_table(table, std::move(names));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t gn = g.order(), hn = h.order(), n = gn * hn;
  require_order(n);
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  std::vector<std::string> names(n);
  for (std::size_t u = 0; u < n; ++u) {
    const auto ug = static_cast<Element>(u % gn), uh = static_cast<Element>(u / gn);
    names[u] = hn == 1 ? g.name(ug) : "(" + g.name(ug) + "," + h.name(uh) + ")";
    for (std::size_t v = 0; v < n; ++v) {
      const auto vg = static_cast<Element>(v % gn), vh = static_cast<Element>(v / gn);
      table[u][v] = static_cast<Element>(g.mul(ug, vg) + gn * h.mul(uh, vh));
    }
  }
  return FiniteGroup::from_cayley_table(table, std::move(names));
}

FiniteGroup extraspecial(std::size_t p, ExtraspecialType type) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
  if (type == ExtraspecialType::Heisenberg) return heisenberg_group(p);
  // At p = 2 the a^(1+p) presentation collapses to D8; the second
  // non-abelian group of order 8 is Q8.
  if (p == 2) return dicyclic_group(2);
  return exp_p_squared_group(p);
}

FiniteGroup build(const FamilySpec& spec) {
  using K = FamilySpec::Kind;
  switch (spec.kind) {
    case K::Dihedral: return dihedral_group(spec.m);
    case K::Dicyclic: return dicyclic_group(spec.m);
    case K::Metacyclic: return metacyclic_group(spec.m, spec.n);
    case K::U6n: return u6n_group(spec.m);
    case K::ExtraspecialHeisenberg: return extraspecial(spec.m, ExtraspecialType::Heisenberg);
    case K::ExtraspecialExpPSquared: return extraspecial(spec.m, ExtraspecialType::ExpPSquared);
    case K::Cyclic: return cyclic_group(spec.m);
    case K::ZpxZp: return zpxzp_group(spec.m);
    case K::DirectProduct:
      require(spec.factor != nullptr, "direct product without a factor");
      return direct_product(build(*spec.factor), cyclic_group(spec.n));
  }
  throw Error(ErrorKind::UnsupportedFamily, "unknown family kind");
}

std::string FamilySpec::to_string() const {
  const auto s = [](std::size_t v) { return std::to_string(v); };
  switch (kind) {
    case Kind::Dihedral: return "dihedral:" + s(m);
    case Kind::Dicyclic: return "dicyclic:" + s(m);
    case Kind::Metacyclic: return "metacyclic:" + s(m) + "," + s(n);
    case Kind::U6n: return "u6n:" + s(m);
    case Kind::ExtraspecialHeisenberg: return "heis:" + s(m);
    case Kind::ExtraspecialExpPSquared: return "expp2:" + s(m);
    case Kind::Cyclic: return "z" + s(m);
    case Kind::ZpxZp: return "zpxzp:" + s(m);
    case Kind::DirectProduct: return "prod:" + (factor ? factor->to_string() : "?") + ",z" + s(n);
  }
  return "?";
}

bool operator==(const FamilySpec& a, const FamilySpec& b) {
  if (a.kind != b.kind || a.m != b.m || a.n != b.n) return false;
  if (!a.factor || !b.factor) return a.factor == b.factor;
  return *a.factor == *b.factor;
}

namespace {

std::size_t parse_count(const std::string& text, const std::string& whole) {
  if (text.empty() || text.size() > 9 ||
      text.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorKind::ParseError, "bad number '" + text + "' in '" + whole + "'");
  }
  return std::stoul(text);
}

}  // namespace

FamilySpec parse_family(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    if (text.size() > 1 && text[0] == 'z') return FamilySpec::cyclic(parse_count(text.substr(1), text));
    throw Error(ErrorKind::ParseError, "unknown group spec '" + text + "'");
  }
  const std::string family = text.substr(0, colon);
  const std::string args = text.substr(colon + 1);

  if (family == "prod") {
    const auto split = args.rfind(",z");
    if (split == std::string::npos) throw Error(ErrorKind::ParseError, "prod needs '<spec>,z<k>'");
    return FamilySpec::product(parse_family(args.substr(0, split)),
                               parse_count(args.substr(split + 2), text));
  }
  if (family == "metacyclic") {
    const auto comma = args.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::ParseError, "metacyclic needs 'm,n'");
    return FamilySpec::metacyclic(parse_count(args.substr(0, comma), text),
                                  parse_count(args.substr(comma + 1), text));
  }
  const std::size_t value = parse_count(args, text);
  if (family == "dihedral") return FamilySpec::dihedral(value);
  if (family == "dicyclic") return FamilySpec::dicyclic(value);
  if (family == "u6n") return FamilySpec::u6n(value);
  if (family == "heis") return FamilySpec::heisenberg(value);
  if (family == "expp2") return FamilySpec::exp_p_squared(value);
  if (family == "zpxzp") return FamilySpec::zpxzp(value);
  throw Error(ErrorKind::ParseError, "unknown family '" + family + "'");
}

std::vector<CatalogEntry> list_catalog() {
  std::vector<CatalogEntry> grid;
  const auto add = [&grid](std::string name, FamilySpec spec, const char* selector) {
    grid.push_back({std::move(name), std::move(spec), selector});
  };
  for (std::size_t p : {2, 3, 5}) add("Heis(" + std::to_string(p) + ")", FamilySpec::heisenberg(p), "extraspecial");
  for (std::size_t p : {2, 3, 5}) add("ExpP2(" + std::to_string(p) + ")", FamilySpec::exp_p_squared(p), "extraspecial");
  for (std::size_t k = 1; k <= 4; ++k) add("D8xZ" + std::to_string(k), FamilySpec::product(FamilySpec::dihedral(4), k), "products");
  for (std::size_t k = 1; k <= 4; ++k) add("Q8xZ" + std::to_string(k), FamilySpec::product(FamilySpec::dicyclic(2), k), "products");
  for (std::size_t m = 2; m <= 12; ++m) add("Q" + std::to_string(4 * m), FamilySpec::dicyclic(m), "dicyclic");
  for (std::size_t n = 1; n <= 6; ++n) add("U" + std::to_string(6 * n), FamilySpec::u6n(n), "u6n");
  for (std::size_t m = 3; m <= 8; ++m) {
    for (std::size_t n = 1; n <= 4; ++n) {
      add("M(" + std::to_string(m) + "," + std::to_string(n) + ")", FamilySpec::metacyclic(m, n), "metacyclic");
    }
  }
  for (std::size_t m = 3; m <= 20; ++m) add("D" + std::to_string(2 * m), FamilySpec::dihedral(m), "dihedral");
  return grid;
}

}  // namespace commint
