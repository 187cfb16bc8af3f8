#include "liehodge/runner.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace liehodge;

namespace {

struct Options {
  std::string pair;
  int p_max = 4;
  std::string s_max = "3";
  std::string d_bound = "3";
  std::string format = "table";
  std::string out;
  std::vector<std::string> which{"all"};
  unsigned jobs = 1;
  bool negative_control = false;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("pair,--pair", o.pair, "symmetric pair, e.g. A2:switch or B2:signs=-+")->required();
  cmd->add_option("--pmax", o.p_max, "largest exterior degree")->check(CLI::NonNegativeNumber);
  cmd->add_option("--smax", o.s_max, "largest energy s (half-integer)");
  cmd->add_option("--dbound", o.d_bound, "bound on delta coefficients of affine roots");
  cmd->add_option("--format", o.format, "table or json")->check(CLI::IsMember({"table", "json"}));
  cmd->add_option("--out", o.out, "write output to this file");
  cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--negative-control", o.negative_control)->group("");
}

std::string weights_text(const std::vector<IntVector>& ws) {
  std::string out = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) out += (i ? " " : "") + weight_string(ws[i]);
  return out + "}";
}

std::string verdict_text(const std::optional<bool>& v) { return v ? (*v ? "pass" : "FAIL") : "-"; }

std::string describe_table(const SymmetricPair& sp, const AffineRootSystem& roots) {
  std::ostringstream os;
  os << "pair      " << sp.name() << "\n"
     << "dim g     " << sp.dim() << "\n"
     << "dim k     " << sp.dim_k() << "\n"
     << "dim p     " << sp.dim_p() << "\n"
     << "rank      " << sp.rank() << "\n"
     << "Delta0+   " << weights_text(sp.delta0_positive()) << "\n"
     << "p weights " << weights_text(sp.p_weights()) << "\n"
     << "simple roots (" << roots.num_simple() << ")\n";
  for (int i = 0; i < roots.num_simple(); ++i) {
    const auto& a = roots.simple_roots()[i];
    os << "  a" << i << "  s = " << std::left << std::setw(4) << to_string(a.delta) << std::setw(16) << a.to_string()
       << " (a,a) = " << std::setw(5) << to_string(roots.pairing(a, a))
       << " rho(a^vee) = " << to_string(roots.coroot_value(roots.rho(), i)) << "\n";
  }
  os << "rho0      " << weight_string(sp.rho0()) << "\n"
     << "rho       " << roots.rho().to_string() << "\n";
  return os.str();
}

std::string abelian_table(const HomologyEngine& engine) {
  const auto& sp = engine.pair();
  std::ostringstream os;
  os << std::left << std::setw(5) << "dim" << std::setw(28) << "weights" << std::setw(14) << "word"
     << "w(rho) - rho\n";
  auto matches = engine.match_ideals();
  for (const auto& m : matches) {
    bool found = m.word.size() == m.phi.size();
    os << std::setw(5) << m.phi.size() << std::setw(28) << weights_text(m.weights) << std::setw(14)
       << (found ? word_string(m.word) : "none") << (found ? m.shift.to_string() : "-") << "\n";
  }
  os << "count " << matches.size();
  if (sp.involution().is_switch()) {
    std::size_t expected = std::size_t{1} << sp.rank();
    os << (matches.size() == expected ? " = " : " != ") << "2^" << sp.rank() << " (Peterson) "
       << (matches.size() == expected ? "ok" : "FAIL");
  }
  os << "\n";
  return os.str();
}

std::string verify_table(const RunResult& result) {
  std::ostringstream os;
  os << std::left << std::setw(4) << "p" << std::setw(6) << "s" << std::setw(10) << "dim Ker";
  for (const auto& name : verdict_names()) os << std::setw(9) << name;
  os << "\n";
  for (const auto& r : result.reports) {
    os << std::setw(4) << r.p << std::setw(6) << to_string(r.s()) << std::setw(10) << r.dim_harmonic;
    for (const auto& name : verdict_names()) os << std::setw(9) << verdict_text(r.verdicts.at(name));
    os << "\n";
  }
  for (const auto& r : result.reports) {
    for (const auto& f : r.failures) {
      os << "failed at (" << r.p << ", " << to_string(r.s()) << "): " << f.name
         << (f.detail.empty() ? "" : " [" + f.detail + "]") << "\n";
    }
  }
  if (result.structure) {
    os << "structure: " << (result.structure->passed() ? "pass" : "FAIL") << " (" << result.structure->checks.size()
       << " checks)\n";
    for (const auto& f : result.structure->failures()) {
      os << "failed: " << f.name << (f.detail.empty() ? "" : " [" + f.detail + "]") << "\n";
    }
  }
  os << (result.passed() ? "all verifications passed" : "VERIFICATION FAILED") << "\n";
  return os.str();
}

std::string spectrum_table(const std::vector<SpectrumRow>& rows) {
  std::ostringstream os;
  for (const auto& row : rows) {
    os << "p = " << row.p << "  max " << to_string(row.max_casimir) << "  bound " << to_string(row.bound)
       << "  witnesses";
    if (row.witnesses.empty()) os << " none";
    for (const auto& w : row.witnesses) os << " " << weights_text(w);
    os << "\n";
    for (const auto& c : row.components) {
      os << "    " << std::left << std::setw(12) << weight_string(c.highest_weight) << " dim " << std::setw(5)
         << c.dimension.get_str() << " x" << std::setw(3) << c.multiplicity << " casimir " << to_string(c.casimir)
         << "\n";
    }
  }
  return os.str();
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw std::runtime_error("cannot write " + o.out);
  file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplacians, abelian subspaces and affine Weyl groups for symmetric pairs"};
  app.require_subcommand(1);
  Options o;
  auto* describe = app.add_subcommand("describe", "dimensions, roots and rho of a pair");
  auto* abelian = app.add_subcommand("abelian", "abelian b0-stable subspaces and their Weyl words");
  auto* verify = app.add_subcommand("verify", "run verifications over a range of bidegrees");
  auto* spectrum = app.add_subcommand("spectrum", "Casimir spectrum of Lambda^p p");
  for (auto* cmd : {describe, abelian, verify, spectrum}) add_common(cmd, o);
  verify->add_option("--which", o.which, "garland, eigen, w, gl, finito or all")
      ->check(CLI::IsMember({"garland", "eigen", "w", "gl", "finito", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::optional<SymmetricPair> sp;
  RunConfig config;
  try {
    sp.emplace(SymmetricPair::parse(o.pair));
    config.pair = o.pair;
    config.p_max = o.p_max;
    config.s_max = parse_rational(o.s_max);
    config.d_bound = parse_rational(o.d_bound);
    config.which = o.which;
    config.jobs = o.jobs;
    twice(config.s_max);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " in '" << o.pair << "'\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (o.negative_control) std::cerr << "negative control: " << sp->perturb_structure_constant() << "\n";

  try {
    const bool as_json = o.format == "json";
    if (describe->parsed()) {
      AffineRootSystem roots(*sp, config.d_bound);
      emit(o, as_json ? dump(describe_json(*sp, roots)) : describe_table(*sp, roots));
      return 0;
    }
    HomologyEngine engine(*sp, config.d_bound);
    if (abelian->parsed()) {
      json j = abelian_json(engine);
      emit(o, as_json ? dump(j) : abelian_table(engine));
      return j.contains("peterson") && !j["peterson"]["matches"].get<bool>() ? 1 : 0;
    }
    if (spectrum->parsed()) {
      std::vector<SpectrumRow> rows(std::min<std::size_t>(config.p_max, sp->dim_p()) + 1);
      parallel_for(rows.size(), config.jobs, [&](std::size_t p) { rows[p] = spectrum_row(engine, static_cast<int>(p)); });
      json j{{"pair", sp->name()}, {"rows", json::array()}};
      for (const auto& row : rows) j["rows"].push_back(to_json(row));
      emit(o, as_json ? dump(j) : spectrum_table(rows));
      return 0;
    }
    RunResult result = run_verify(engine, config);
    emit(o, as_json ? dump(to_json(result, config)) : verify_table(result));
    return result.passed() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
