#include "liehodge/homology_engine.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace liehodge;

namespace {

const char* const kPairs[] = {"A1:switch", "A2:switch", "A1:signs=-", "B2:signs=-+"};

struct Outcome {
  bool passed = true;
  std::string detail;
};

void absorb(Outcome& o, const std::string& where, const VerificationResult& r) {
  for (const auto& f : r.failures()) {
    o.passed = false;
    if (o.detail.size() < 400) o.detail += where + ": " + f.name + (f.detail.empty() ? "" : " [" + f.detail + "]") + "; ";
  }
}

int max_degree(const SymmetricPair& sp) { return std::min<int>(static_cast<int>(sp.dim_p()), 4); }

Outcome peterson() {
  Outcome o;
  std::ostringstream counts;
  auto start = std::chrono::steady_clock::now();
  for (const char* spec : {"A1:switch", "A2:switch", "A3:switch", "B2:switch", "G2:switch"}) {
    auto sp = SymmetricPair::parse(spec);
    std::size_t n = enumerate_abelian_bstable(sp).size();
    std::size_t expected = std::size_t{1} << sp.rank();
    counts << spec << " " << n << "/" << expected << " ";
    if (n != expected) o.passed = false;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 10) o.passed = false;
  counts << "in " << secs << " s";
  o.detail = counts.str();
  return o;
}

Outcome for_pairs(const std::function<void(const SymmetricPair&, const HomologyEngine&, Outcome&)>& body) {
  Outcome o;
  for (const char* spec : kPairs) {
    auto sp = SymmetricPair::parse(spec);
    HomologyEngine engine(sp);
    body(sp, engine, o);
  }
  return o;
}

Outcome garland(const SymmetricPair* only = nullptr) {
  auto body = [](const SymmetricPair& sp, const HomologyEngine& engine, Outcome& o) {
    for (int p = 0; p <= 3; ++p) {
      for (int ts = 0; ts <= 6; ++ts) absorb(o, sp.name(), engine.verify_garland(p, ts));
    }
  };
  if (only) {
    Outcome o;
    body(*only, HomologyEngine(*only), o);
    return o;
  }
  return for_pairs(body);
}

Outcome eigen() {
  return for_pairs([](const SymmetricPair& sp, const HomologyEngine& engine, Outcome& o) {
    for (int p = 0; p <= max_degree(sp); ++p) absorb(o, sp.name() + " p=" + std::to_string(p), engine.verify_eigen(p));
  });
}

Outcome weyl() {
  return for_pairs([](const SymmetricPair& sp, const HomologyEngine& engine, Outcome& o) {
    absorb(o, sp.name(), engine.verify_w());
  });
}

Outcome gl() {
  return for_pairs([](const SymmetricPair& sp, const HomologyEngine& engine, Outcome& o) {
    for (int p = 0; p <= max_degree(sp); ++p) absorb(o, sp.name() + " p=" + std::to_string(p), engine.verify_gl(p));
  });
}

Outcome finito() {
  return for_pairs([](const SymmetricPair& sp, const HomologyEngine& engine, Outcome& o) {
    if (sp.dim_p() > 10) return;
    const int n = static_cast<int>(sp.dim_p());
    for (int p = 0; p <= n; ++p) absorb(o, sp.name() + " p=" + std::to_string(p), engine.verify_finito(p));
    absorb(o, sp.name(), engine.generation_check(n));
  });
}

// Criteria 2-6 on one perturbed pair; true when at least one fails.
bool perturbation_detected(std::string& detail) {
  auto sp = SymmetricPair::parse("A1:switch");
  detail = sp.perturb_structure_constant();
  HomologyEngine engine(sp);
  std::vector<std::pair<std::string, bool>> outcomes;
  Outcome g = garland(&sp);
  outcomes.emplace_back("garland", g.passed);
  auto run = [&](const std::string& name, const std::function<VerificationResult()>& f) {
    try {
      outcomes.emplace_back(name, f().passed());
    } catch (const std::exception&) {
      outcomes.emplace_back(name, false);
    }
  };
  for (int p = 0; p <= 3; ++p) {
    run("eigen", [&] { return engine.verify_eigen(p); });
    run("gl", [&] { return engine.verify_gl(p); });
    run("finito", [&] { return engine.verify_finito(p); });
  }
  run("w", [&] { return engine.verify_w(); });
  std::set<std::string> failed;
  for (const auto& [name, ok] : outcomes) {
    if (!ok) failed.insert(name);
  }
  detail += "; failing:";
  for (const auto& f : failed) detail += " " + f;
  return !failed.empty();
}

Outcome structure() {
  Outcome o = for_pairs([](const SymmetricPair& sp, const HomologyEngine& engine, Outcome& out) {
    absorb(out, sp.name(), engine.verify_structure(3, 6));
  });
  std::string detail;
  bool detected = perturbation_detected(detail);
  if (!detected) o.passed = false;
  o.detail += "negative control " + std::string(detected ? "detected" : "NOT detected") + " (" + detail + ")";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"Peterson count 2^rank for switch pairs", peterson},
      {"Laplacian formula L + (d + Omega)/2 = 0", [] { return garland(); }},
      {"Casimir eigenvalue bound p/2 and abelian witnesses", eigen},
      {"Weyl group correspondence for abelian subspaces", weyl},
      {"harmonic space decomposition at (p, p/2)", gl},
      {"orthogonal decomposition and generation of Lambda p", finito},
      {"structural oracles and negative control", structure},
  };
  bool all = true;
  int k = 1;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.passed;
    std::cout << "criterion " << k++ << ": " << (o.passed ? "PASS" : "FAIL") << "  " << c.name << "  ("
              << secs << " s)" << (o.detail.empty() ? "" : "  " + o.detail) << std::endl;
  }
  return all ? 0 : 1;
}
