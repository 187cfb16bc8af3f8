#pragma once

// JSON forms of reports. Rationals are "num/den" strings throughout.

#include "liehodge/homology_engine.hpp"

#include "json.hpp"

namespace liehodge {

using json = nlohmann::json;

json rational_json(const Rational& q);
Rational rational_from_json(const json& j);
json rational_vector_json(const RatVector& v);

json to_json(const AffineWeight& w);
AffineWeight affine_weight_from_json(const json& j);

json to_json(const IsotypicComponent& c);
json to_json(const IdealMatch& m);
IdealMatch ideal_match_from_json(const json& j);

/// {pair, p, s, dim_harmonic, components, ideals_matched, verdicts, failures}.
json to_json(const HodgeReport& r);
/// Highest-weight vectors are not serialized and come back empty.
HodgeReport hodge_report_from_json(const json& j);

struct SpectrumRow {
  int p = 0;
  std::vector<IsotypicComponent> components;
  Rational max_casimir;
  Rational bound;
  std::vector<std::vector<IntVector>> witnesses;  ///< dim-p abelian subspaces
};

/// Isotypic decomposition of Lambda^p p with its Casimir scalars.
SpectrumRow spectrum_row(const HomologyEngine& engine, int p);
json to_json(const SpectrumRow& row);

json describe_json(const SymmetricPair& sp, const AffineRootSystem& roots);
json abelian_json(const HomologyEngine& engine);

}  // namespace liehodge
