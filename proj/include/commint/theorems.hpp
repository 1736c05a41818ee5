#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "commint/catalog.hpp"
#include "commint/spectra.hpp"

namespace commint {

/// A closed-form commuting-graph spectrum, tagged with the formula it came
/// from. Source tags:
///   zpxzp-quotient     G/Z(G) = Zp x Zp, params p, z
///   order-p-cubed      non-abelian group of order p^3, param p
///   dihedral-quotient  G/Z(G) = D_2m, params m, z
///   metacyclic-odd / metacyclic-even   M_2mn, params m, n
///   dihedral-odd / dihedral-even       D_2m, param m
///   dicyclic           Q_4m, param m
///   u6n                U_6n, param n
struct Prediction {
  std::string source;
  std::vector<std::pair<std::string, std::int64_t>> params;
  Spectrum spectrum;
};

Prediction predict_zpzp(std::int64_t p, std::int64_t z);
Prediction predict_order_p_cubed(std::int64_t p);
Prediction predict_dihedral_quotient(std::int64_t m, std::int64_t z);
/// Displayed family spectra for Metacyclic, Dicyclic, U6n and Dihedral;
/// anything else throws UnsupportedFamily.
Prediction predict_family(const FamilySpec& spec);

struct PredictionVerdict {
  Prediction prediction;
  bool match = false;
};

struct VerificationReport {
  std::string group;
  std::size_t order = 0;
  std::size_t center_size = 0;
  std::size_t centralizer_count = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::vector<std::string> vertex_names;
  std::vector<std::pair<std::size_t, std::size_t>> edge_list;
  SmallGroupTag quotient;
  std::vector<std::size_t> component_sizes;
  bool all_cliques = false;
  CharPoly char_poly;
  Spectrum spectrum;
  CharPoly remainder;
  bool integral = false;
  std::vector<PredictionVerdict> predictions;

  bool all_match() const;
};

/// Runs center -> quotient -> recognition -> graph -> spectrum and checks
/// every applicable prediction. `family` adds the family-level formula when
/// the group came from the catalog. Throws AbelianGroup.
VerificationReport verify_group(const FiniteGroup& group, const std::string& name,
                                const std::optional<FamilySpec>& family = std::nullopt);

struct CorollaryCheck {
  std::string name;
  bool hypothesis_held = false;
  /// Only meaningful when the hypothesis held; false otherwise.
  bool conclusion_verified = false;
  std::string detail;
};

struct CorollaryChecklist {
  std::size_t centralizer_count = 0;
  std::size_t max_noncommuting = 0;
  std::vector<CorollaryCheck> checks;

  bool all_hold() const;
};

/// Checks the 4-centralizer, (p+2)-centralizer p-group, 5-centralizer and
/// maximal non-commuting set (r = 3, 4) implications on G.
CorollaryChecklist verify_centralizer_corollaries(const FiniteGroup& group);

using Json = nlohmann::ordered_json;

Json to_json(const Spectrum& spectrum);
Json to_json(const CharPoly& poly);
Json to_json(const Prediction& prediction);
/// Report schema: {schema, group, order, center_size, centralizer_count,
/// vertices, component_sizes, spectrum, integral, predictions}.
Json to_json(const VerificationReport& report);
Json to_json(const CorollaryChecklist& checklist);

}  // namespace commint
