#include "liehodge/report.hpp"

namespace liehodge {

json rational_json(const Rational& q) { return to_fraction_string(q); }

Rational rational_from_json(const json& j) { return parse_rational(j.get<std::string>()); }

json rational_vector_json(const RatVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

namespace {

RatVector rational_vector_from_json(const json& j) {
  RatVector out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

json weights_json(const std::vector<IntVector>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(w);
  return out;
}

}  // namespace

json to_json(const AffineWeight& w) {
  return {{"finite", rational_vector_json(w.finite)},
          {"delta", rational_json(w.delta)},
          {"lambda0", rational_json(w.lambda0)}};
}

AffineWeight affine_weight_from_json(const json& j) {
  return {rational_vector_from_json(j.at("finite")), rational_from_json(j.at("delta")),
          rational_from_json(j.at("lambda0"))};
}

json to_json(const IsotypicComponent& c) {
  return {{"hw", c.highest_weight},
          {"dim", c.dimension.get_str()},
          {"multiplicity", c.multiplicity},
          {"casimir", rational_json(c.casimir)}};
}

json to_json(const IdealMatch& m) {
  return {{"phi", m.phi},
          {"dim", m.phi.size()},
          {"weights", weights_json(m.weights)},
          {"mu", m.mu},
          {"word", m.word},
          {"shift", to_json(m.shift)}};
}

IdealMatch ideal_match_from_json(const json& j) {
  IdealMatch m;
  m.phi = j.at("phi").get<WeightSubset>();
  m.weights = j.at("weights").get<std::vector<IntVector>>();
  m.mu = j.at("mu").get<IntVector>();
  m.word = j.at("word").get<WeylWord>();
  m.shift = affine_weight_from_json(j.at("shift"));
  return m;
}

json to_json(const HodgeReport& r) {
  json comps = json::array();
  for (const auto& c : r.components) comps.push_back(to_json(c));
  json ideals = json::array();
  for (const auto& m : r.ideals_matched) ideals.push_back(to_json(m));
  json verdicts = json::object();
  for (const auto& [name, v] : r.verdicts) verdicts[name] = v ? json(*v) : json(nullptr);
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"check", f.name}, {"detail", f.detail}});
  return {{"pair", r.pair},
          {"p", r.p},
          {"s", rational_json(r.s())},
          {"dim_harmonic", r.dim_harmonic},
          {"components", comps},
          {"ideals_matched", ideals},
          {"verdicts", verdicts},
          {"failures", failures}};
}

HodgeReport hodge_report_from_json(const json& j) {
  HodgeReport r;
  r.pair = j.at("pair").get<std::string>();
  r.p = j.at("p").get<int>();
  r.twice_s = twice(rational_from_json(j.at("s")));
  r.dim_harmonic = j.at("dim_harmonic").get<std::size_t>();
  for (const auto& c : j.at("components")) {
    IsotypicComponent comp;
    comp.highest_weight = c.at("hw").get<IntVector>();
    comp.dimension = Integer(c.at("dim").get<std::string>());
    comp.multiplicity = c.at("multiplicity").get<std::size_t>();
    comp.casimir = rational_from_json(c.at("casimir"));
    r.components.push_back(std::move(comp));
  }
  for (const auto& m : j.at("ideals_matched")) r.ideals_matched.push_back(ideal_match_from_json(m));
  for (const auto& [name, v] : j.at("verdicts").items()) {
    r.verdicts[name] = v.is_null() ? std::nullopt : std::optional<bool>(v.get<bool>());
  }
  for (const auto& f : j.at("failures")) {
    r.failures.push_back({f.at("check").get<std::string>(), false, f.at("detail").get<std::string>()});
  }
  return r;
}

SpectrumRow spectrum_row(const HomologyEngine& engine, int p) {
  const auto& sp = engine.pair();
  if (p < 0 || p > static_cast<int>(sp.dim_p())) throw std::invalid_argument("degree out of range");
  SpectrumRow row;
  row.p = p;
  FiniteExterior fin(sp, p);
  row.components = engine.isotypic_components(engine.finite_module(fin),
                                              linalg::SparseRatMatrix::identity(fin.size()));
  for (auto& c : row.components) c.hw_vectors.clear();
  row.bound = make_rational(p, 2);
  for (const auto& c : row.components) row.max_casimir = std::max(row.max_casimir, c.casimir);
  for (const auto& s : engine.ideals_of_dimension(p)) row.witnesses.push_back(s.weights(sp));
  return row;
}

json to_json(const SpectrumRow& row) {
  json comps = json::array();
  for (const auto& c : row.components) comps.push_back(to_json(c));
  json witnesses = json::array();
  for (const auto& w : row.witnesses) witnesses.push_back(weights_json(w));
  return {{"p", row.p},
          {"components", comps},
          {"max_casimir", rational_json(row.max_casimir)},
          {"bound", rational_json(row.bound)},
          {"attained", row.max_casimir == row.bound},
          {"witnesses", witnesses}};
}

json describe_json(const SymmetricPair& sp, const AffineRootSystem& roots) {
  json simple = json::array();
  for (int i = 0; i < roots.num_simple(); ++i) {
    const auto& a = roots.simple_roots()[i];
    simple.push_back({{"index", i},
                      {"root", to_json(a)},
                      {"s", rational_json(a.delta)},
                      {"norm", rational_json(roots.pairing(a, a))},
                      {"rho_coroot", rational_json(roots.coroot_value(roots.rho(), i))}});
  }
  return {{"pair", sp.name()},
          {"dim_g", sp.dim()},
          {"dim_k", sp.dim_k()},
          {"dim_p", sp.dim_p()},
          {"rank", sp.rank()},
          {"delta0_positive", weights_json(sp.delta0_positive())},
          {"p_weights", weights_json(sp.p_weights())},
          {"simple_roots", simple},
          {"rho0", rational_vector_json(sp.rho0())},
          {"rho", to_json(roots.rho())}};
}

json abelian_json(const HomologyEngine& engine) {
  const auto& sp = engine.pair();
  json list = json::array();
  for (const auto& m : engine.match_ideals()) list.push_back(to_json(m));
  json out{{"pair", sp.name()}, {"count", list.size()}, {"subspaces", list}};
  if (sp.involution().is_switch()) {
    std::size_t expected = std::size_t{1} << sp.rank();
    out["peterson"] = {{"expected", expected}, {"matches", list.size() == expected}};
  }
  return out;
}

}  // namespace liehodge
