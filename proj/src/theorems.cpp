#include "commint/theorems.hpp"

#include <algorithm>

namespace commint {

namespace {

void require_positive(std::int64_t value, const char* what) {
  if (value < 1) throw Error(ErrorKind::ParameterOutOfRange, std::string(what) + " must be >= 1");
}

Prediction make(std::string source, std::vector<std::pair<std::string, std::int64_t>> params,
                std::vector<Eigenvalue> pairs) {
  return Prediction{std::move(source), std::move(params), canonical(std::move(pairs))};
}

}  // namespace

Prediction predict_zpzp(std::int64_t p, std::int64_t z) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw Error(ErrorKind::NotPrime, std::to_string(p));
  require_positive(z, "center size");
  // p + 1 cliques of size (p - 1)z.
  return make("zpxzp-quotient", {{"p", p}, {"z", z}},
              {{(p - 1) * z - 1, p + 1}, {-1, (p * p - 1) * z - p - 1}});
}

Prediction predict_order_p_cubed(std::int64_t p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw Error(ErrorKind::NotPrime, std::to_string(p));
  return make("order-p-cubed", {{"p", p}}, {{p * p - p - 1, p + 1}, {-1, p * p * p - 2 * p - 1}});
}

Prediction predict_dihedral_quotient(std::int64_t m, std::int64_t z) {
  if (m < 2) throw Error(ErrorKind::ParameterOutOfRange, "m must be >= 2");
  require_positive(z, "center size");
  // One clique of size (m - 1)z and m cliques of size z.
  return make("dihedral-quotient", {{"m", m}, {"z", z}},
              {{(m - 1) * z - 1, 1}, {z - 1, m}, {-1, (2 * m - 1) * z - m - 1}});
}

Prediction predict_family(const FamilySpec& spec) {
  using K = FamilySpec::Kind;
  const auto m = static_cast<std::int64_t>(spec.m);
  const auto n = static_cast<std::int64_t>(spec.n);
  switch (spec.kind) {
    case K::Metacyclic:
      if (m <= 2 || n < 1) throw Error(ErrorKind::ParameterOutOfRange, spec.to_string());
      if (m % 2 == 1) {
        return make("metacyclic-odd", {{"m", m}, {"n", n}},
                    {{-1, 2 * m * n - m - n - 1}, {n - 1, m}, {m * n - n - 1, 1}});
      }
      return make("metacyclic-even", {{"m", m}, {"n", n}},
                  {{-1, 2 * m * n - 2 * n - m / 2 - 1}, {2 * n - 1, m / 2}, {m * n - 2 * n - 1, 1}});
    case K::Dihedral:
      if (m <= 2) throw Error(ErrorKind::ParameterOutOfRange, spec.to_string());
      if (m % 2 == 1) return make("dihedral-odd", {{"m", m}}, {{-1, m - 2}, {0, m}, {m - 2, 1}});
      return make("dihedral-even", {{"m", m}}, {{-1, 3 * m / 2 - 3}, {1, m / 2}, {m - 3, 1}});
    case K::Dicyclic:
      if (m < 2) throw Error(ErrorKind::ParameterOutOfRange, spec.to_string());
      return make("dicyclic", {{"m", m}}, {{-1, 3 * m - 3}, {1, m}, {2 * m - 3, 1}});
    case K::U6n:
      require_positive(m, "n");
      return make("u6n", {{"n", m}}, {{-1, 5 * m - 4}, {m - 1, 3}, {2 * m - 1, 1}});
    default:
      throw Error(ErrorKind::UnsupportedFamily, spec.to_string());
  }
}

bool VerificationReport::all_match() const {
  return std::all_of(predictions.begin(), predictions.end(),
                     [](const PredictionVerdict& v) { return v.match; });
}

namespace {

bool agrees(const Spectrum& computed, const Spectrum& predicted) {
  return computed.complete && spectra_agree(computed, predicted);
}

// p when n = p^k for a prime p and k >= 1, else 0.
std::size_t prime_power_base(std::size_t n) {
  for (std::size_t p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    return n == 1 ? p : 0;
  }
  return 0;
}

std::optional<Prediction> quotient_prediction(const SmallGroupTag& tag, std::int64_t z) {
  const auto param = static_cast<std::int64_t>(tag.parameter);
  switch (tag.kind) {
    case SmallGroupTag::Kind::ZpxZp: return predict_zpzp(param, z);
    case SmallGroupTag::Kind::Dihedral: return predict_dihedral_quotient(param, z);
    case SmallGroupTag::Kind::Other: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

VerificationReport verify_group(const FiniteGroup& group, const std::string& name,
                                const std::optional<FamilySpec>& family) {
  if (group.is_abelian()) throw Error(ErrorKind::AbelianGroup, name + " is abelian");

  VerificationReport report;
  report.group = name;
  report.order = group.order();
  report.center_size = center(group).members.size();
  report.centralizer_count = centralizer_count(group);
  report.quotient = recognize_small(quotient_by_center(group).group);

  const auto graph = CommutingGraph::build(group);
  report.vertices = graph.vertex_count();
  report.edges = graph.edge_count();
  report.vertex_names = graph.labels();
  report.edge_list = graph.edges();
  const auto decomposition = clique_decomposition(graph);
  report.component_sizes = decomposition.component_sizes;
  report.all_cliques = decomposition.all_cliques;

  auto integrality = is_integral(graph);
  report.char_poly = std::move(integrality.char_poly);
  report.spectrum = std::move(integrality.spectrum);
  report.remainder = std::move(integrality.remainder);
  report.integral = integrality.integral;

  std::vector<Prediction> predictions;
  const auto z = static_cast<std::int64_t>(report.center_size);
  if (auto p = quotient_prediction(report.quotient, z)) predictions.push_back(std::move(*p));

  const std::size_t base = prime_power_base(report.order);
  if (base != 0 && base * base * base == report.order) {
    predictions.push_back(predict_order_p_cubed(static_cast<std::int64_t>(base)));
  }
  if (family) {
    try {
      predictions.push_back(predict_family(*family));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnsupportedFamily) throw;
    }
  }

  for (auto& prediction : predictions) {
    const bool match = agrees(report.spectrum, prediction.spectrum);
    report.predictions.push_back({std::move(prediction), match});
  }
  return report;
}

bool CorollaryChecklist::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const CorollaryCheck& c) {
    return !c.hypothesis_held || c.conclusion_verified;
  });
}

CorollaryChecklist verify_centralizer_corollaries(const FiniteGroup& group) {
  if (group.is_abelian()) throw Error(ErrorKind::AbelianGroup, "corollaries need a non-abelian group");

  CorollaryChecklist list;
  list.centralizer_count = centralizer_count(group);
  list.max_noncommuting = max_noncommuting_set(group).size();

  const auto z = static_cast<std::int64_t>(center(group).members.size());
  const SmallGroupTag quotient = recognize_small(quotient_by_center(group).group);
  const auto integrality = is_integral(CommutingGraph::build(group));
  const std::size_t count = list.centralizer_count;

  const auto quotient_matches = [&](SmallGroupTag expected) {
    if (quotient != expected) return false;
    const auto prediction = quotient_prediction(quotient, z);
    return integrality.integral && prediction && agrees(integrality.spectrum, prediction->spectrum);
  };
  const std::string observed = "count=" + std::to_string(count) + " quotient=" + quotient.to_string() +
                               " integral=" + (integrality.integral ? "true" : "false");

  {
    CorollaryCheck c{"4-centralizer", count == 4, false, observed};
    if (c.hypothesis_held) c.conclusion_verified = quotient_matches({SmallGroupTag::Kind::ZpxZp, 2});
    list.checks.push_back(std::move(c));
  }
  {
    const std::size_t p = prime_power_base(group.order());
    CorollaryCheck c{"(p+2)-centralizer p-group", p != 0 && count == p + 2, false,
                     observed + " p=" + std::to_string(p)};
    if (c.hypothesis_held) c.conclusion_verified = quotient_matches({SmallGroupTag::Kind::ZpxZp, p});
    list.checks.push_back(std::move(c));
  }
  {
    CorollaryCheck c{"5-centralizer", count == 5, false, observed};
    if (c.hypothesis_held) {
      c.conclusion_verified = quotient_matches({SmallGroupTag::Kind::ZpxZp, 3}) ||
                              quotient_matches({SmallGroupTag::Kind::Dihedral, 3});
    }
    list.checks.push_back(std::move(c));
  }
  {
    const std::size_t r = list.max_noncommuting;
    CorollaryCheck c{"max non-commuting set of size 3 or 4", r == 3 || r == 4, false,
                     observed + " r=" + std::to_string(r)};
    if (c.hypothesis_held) c.conclusion_verified = count == r + 1 && integrality.integral;
    list.checks.push_back(std::move(c));
  }
  return list;
}

Json to_json(const Spectrum& spectrum) {
  Json out = Json::array();
  for (const auto& e : spectrum.pairs) out.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
  return out;
}

Json to_json(const CharPoly& poly) {
  // Coefficients beyond 64 bits are written as decimal strings.
  Json out = Json::array();
  for (const auto& c : poly.coefficients) {
    if (c.fits_slong_p()) {
      out.push_back(static_cast<std::int64_t>(c.get_si()));
    } else {
      out.push_back(c.get_str());
    }
  }
  return out;
}

Json to_json(const Prediction& prediction) {
  Json params = Json::object();
  for (const auto& [key, value] : prediction.params) params[key] = value;
  return {{"source", prediction.source}, {"params", params}, {"spectrum", to_json(prediction.spectrum)}};
}

Json to_json(const VerificationReport& report) {
  Json predictions = Json::array();
  for (const auto& v : report.predictions) {
    Json entry = to_json(v.prediction);
    entry["verdict"] = v.match ? "match" : "mismatch";
    predictions.push_back(std::move(entry));
  }
  Json edges = Json::array();
  for (const auto& [u, v] : report.edge_list) edges.push_back({u, v});
  return {
      {"schema", 1},
      {"group", report.group},
      {"order", report.order},
      {"center_size", report.center_size},
      {"centralizer_count", report.centralizer_count},
      {"vertices", report.vertices},
      {"component_sizes", report.component_sizes},
      {"spectrum", to_json(report.spectrum)},
      {"integral", report.integral},
      {"predictions", predictions},
      {"graph", {{"vertices", report.vertex_names}, {"edges", edges}}},
      {"char_poly", to_json(report.char_poly)},
      {"remainder", to_json(report.remainder)},
  };
}

Json to_json(const CorollaryChecklist& checklist) {
  Json checks = Json::array();
  for (const auto& c : checklist.checks) {
    checks.push_back({{"name", c.name},
                      {"hypothesis_held", c.hypothesis_held},
                      {"conclusion_verified", c.conclusion_verified},
                      {"detail", c.detail}});
  }
  return {{"centralizer_count", checklist.centralizer_count},
          {"max_noncommuting", checklist.max_noncommuting},
          {"checks", checks}};
}

}  // namespace commint
