#include "doctest.h"

#include "liehodge/homology_engine.hpp"

using namespace liehodge;
using linalg::SparseRatMatrix;

namespace {

std::string failures_of(const VerificationResult& r) {
  std::string out;
  for (const auto& f : r.failures()) out += f.name + " [" + f.detail + "]\n";
  return out;
}

void require_pass(const VerificationResult& r) {
  CAPTURE(failures_of(r));
  CHECK(r.passed());
  CHECK_FALSE(r.checks.empty());
}

const char* const kPairs[] = {"A1:switch", "A2:switch", "A1:signs=-", "B2:signs=-+"};

}  // namespace

TEST_CASE("harmonic spaces") {
  auto sw = SymmetricPair::parse("A1:switch");
  HomologyEngine sw_engine(sw);
  CHECK(sw_engine.harmonic_space(0, 0).cols() == 1);
  CHECK(sw_engine.harmonic_space(1, 1).cols() == 3);
  auto in = SymmetricPair::parse("A1:signs=-");
  HomologyEngine in_engine(in);
  CHECK(in_engine.harmonic_space(2, 2).cols() == 0);
}

TEST_CASE("highest weight vectors") {
  auto sw = SymmetricPair::parse("A1:switch");
  HomologyEngine sw_engine(sw);
  auto hw = sw_engine.highest_weight_vectors(sw_engine.loop_module(1, 1), sw_engine.harmonic_space(1, 1));
  REQUIRE(hw.size() == 1);
  CHECK(hw[0].first == IntVector{1});

  auto in = SymmetricPair::parse("A1:signs=-");
  HomologyEngine in_engine(in);
  auto all = in_engine.highest_weight_vectors(in_engine.loop_module(1, 1), SparseRatMatrix::identity(2));
  REQUIRE(all.size() == 2);
  CHECK(all[0].first == IntVector{-1});
  CHECK(all[1].first == IntVector{1});

  // A single weight vector of the adjoint is not stable.
  SparseRatMatrix line(3, 1);
  line.set(0, 0, Rational(1));
  CHECK_THROWS_AS(sw_engine.highest_weight_vectors(sw_engine.loop_module(1, 1), line), NotStableError);
}

TEST_CASE("isotypic decomposition of Lambda^2 of the adjoint of sl3") {
  auto sp = SymmetricPair::parse("A2:switch");
  HomologyEngine engine(sp);
  FiniteExterior fin(sp, 2);
  VerificationResult r;
  auto comps = engine.isotypic_components(engine.finite_module(fin), SparseRatMatrix::identity(fin.size()), &r);
  require_pass(r);
  // Lambda^2 sl3 = sl3 + V(3 omega1) + V(3 omega2).
  REQUIRE(comps.size() == 3);
  CHECK(comps[0].highest_weight == IntVector{1, 1});
  CHECK(comps[0].dimension == 8);
  CHECK(comps[1].highest_weight == IntVector{1, 2});
  CHECK(comps[1].dimension == 10);
  CHECK(comps[2].highest_weight == IntVector{2, 1});
  CHECK(comps[1].casimir == 1);
}

TEST_CASE("Garland formula") {
  for (const char* spec : kPairs) {
    auto sp = SymmetricPair::parse(spec);
    HomologyEngine engine(sp);
    for (int p = 0; p <= 3; ++p) {
      for (int ts = 0; ts <= 6; ++ts) require_pass(engine.verify_garland(p, ts));
    }
  }
}

TEST_CASE("eigenvalue bound") {
  for (const char* spec : kPairs) {
    CAPTURE(std::string(spec));
    auto sp = SymmetricPair::parse(spec);
    HomologyEngine engine(sp);
    for (int p = 0; p <= std::min<int>(sp.dim_p(), 4); ++p) {
      CAPTURE(p);
      require_pass(engine.verify_eigen(p));
    }
  }
}

TEST_CASE("Weyl group correspondence") {
  for (const char* spec : kPairs) {
    CAPTURE(std::string(spec));
    auto sp = SymmetricPair::parse(spec);
    HomologyEngine engine(sp);
    require_pass(engine.verify_w());
  }
  auto sp = SymmetricPair::parse("A1:switch");
  HomologyEngine engine(sp);
  auto matches = engine.match_ideals();
  REQUIRE(matches.size() == 2);
  CHECK(matches[1].word == WeylWord{0});
}

TEST_CASE("Garland-Lepowsky decomposition") {
  for (const char* spec : kPairs) {
    CAPTURE(std::string(spec));
    auto sp = SymmetricPair::parse(spec);
    HomologyEngine engine(sp);
    for (int p = 0; p <= std::min<int>(sp.dim_p(), 4); ++p) {
      CAPTURE(p);
      require_pass(engine.verify_gl(p));
    }
  }
  auto sp = SymmetricPair::parse("A2:switch");
  HomologyEngine engine(sp);
  CHECK(engine.harmonic_space(2, 2).cols() == 20);
  CHECK(engine.harmonic_space(3, 3).cols() == 0);
}

TEST_CASE("orthogonal decomposition and generation") {
  for (const char* spec : kPairs) {
    CAPTURE(std::string(spec));
    auto sp = SymmetricPair::parse(spec);
    HomologyEngine engine(sp);
    for (int p = 0; p <= static_cast<int>(sp.dim_p()); ++p) {
      CAPTURE(p);
      require_pass(engine.verify_finito(p));
    }
    require_pass(engine.generation_check(static_cast<int>(sp.dim_p())));
  }
}

TEST_CASE("structural oracles") {
  for (const char* spec : kPairs) {
    CAPTURE(std::string(spec));
    auto sp = SymmetricPair::parse(spec);
    HomologyEngine engine(sp);
    require_pass(engine.verify_structure(3, 4));
  }
}

TEST_CASE("reports") {
  auto sp = SymmetricPair::parse("A2:switch");
  HomologyEngine engine(sp);
  auto rep = engine.report(2, 2, {"all"});
  CHECK(rep.passed());
  CHECK(rep.dim_harmonic == 20);
  CHECK(rep.components.size() == 2);
  CHECK(rep.ideals_matched.size() == 2);
  for (const auto& name : verdict_names()) CHECK(rep.verdicts.at(name) == true);
  auto off = engine.report(2, 3, {"garland", "eigen"});
  CHECK(off.verdicts.at("garland") == true);
  CHECK_FALSE(off.verdicts.at("eigen").has_value());
}

TEST_CASE("negative control is detected") {
  auto sp = SymmetricPair::parse("A1:switch");
  sp.perturb_structure_constant();
  HomologyEngine engine(sp);
  bool any_failed = false;
  for (int p = 0; p <= 3; ++p) {
    auto rep = engine.report(p, p, {"all"});
    if (!rep.passed()) any_failed = true;
  }
  CHECK(any_failed);
  CHECK_FALSE(engine.verify_structure(2, 2).passed());
}
