#pragma once

// Harmonic spaces Ker L_p, highest-weight extraction and isotypic
// decomposition under k, and the end-to-end checks of the eigenvalue bound,
// the Weyl-group correspondence, the Garland-Lepowsky decomposition at
// bidegree (p, p/2) and the orthogonal decomposition of Lambda p.

#include "liehodge/abelian_enum.hpp"
#include "liehodge/affine_weyl.hpp"

#include <functional>

namespace liehodge {

struct IsotypicComponent {
  IntVector highest_weight;
  std::size_t multiplicity = 0;
  Integer dimension;  ///< of one irreducible constituent
  Rational casimir;
  std::vector<linalg::SparseVector> hw_vectors;
};

struct NotStableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite-dimensional k-module in a fixed weight basis.
struct KModule {
  std::vector<IntVector> weights;
  std::function<linalg::SparseRatMatrix(std::size_t)> action;  ///< by adapted k index
  linalg::SparseRatMatrix casimir;

  std::size_t size() const { return weights.size(); }
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationResult {
  std::vector<Check> checks;

  void add(std::string name, bool passed, std::string detail = "");
  bool passed() const;
  std::vector<Check> failures() const;
  void merge(const VerificationResult& other, const std::string& prefix = "");
};

struct IdealMatch {
  WeightSubset phi;
  std::vector<IntVector> weights;
  IntVector mu;
  WeylWord word;
  AffineWeight shift;  ///< w(rho) - rho
};

struct HodgeReport {
  std::string pair;
  int p = 0;
  int twice_s = 0;
  std::size_t dim_harmonic = 0;
  std::vector<IsotypicComponent> components;
  std::vector<IdealMatch> ideals_matched;
  /// eigen, w, GL, finito, garland; nullopt when not run at this bidegree.
  std::map<std::string, std::optional<bool>> verdicts;
  std::vector<Check> failures;

  Rational s() const { return make_rational(twice_s, 2); }
  bool passed() const;
};

/// The verification kinds in report order.
const std::vector<std::string>& verdict_names();

class HomologyEngine {
 public:
  explicit HomologyEngine(const SymmetricPair& sp, const Rational& d_bound = Rational(3));

  const SymmetricPair& pair() const { return sp_; }
  const ExteriorComplex& complex() const { return complex_; }
  const AffineRootSystem& roots() const { return roots_; }
  const std::vector<AbelianSubspace>& ideals() const { return ideals_; }
  std::vector<AbelianSubspace> ideals_of_dimension(int p) const;

  /// Lambda^(p,s) u- and Lambda^p p as k-modules.
  KModule loop_module(int p, int twice_s) const;
  KModule finite_module(const FiniteExterior& fin) const;

  /// Columns span Ker L_p on Lambda^(p,s).
  linalg::SparseRatMatrix harmonic_space(int p, int twice_s) const;

  /// Highest-weight vectors in the column span of `space`, grouped by
  /// weight. Throws NotStableError unless the span is k-stable.
  std::vector<std::pair<IntVector, linalg::SparseVector>> highest_weight_vectors(
      const KModule& module, const linalg::SparseRatMatrix& space) const;
  /// Components sorted by highest weight. With `check`, records that Omega
  /// is scalar on each highest-weight vector and the dimensions add up.
  std::vector<IsotypicComponent> isotypic_components(const KModule& module, const linalg::SparseRatMatrix& space,
                                                     VerificationResult* check = nullptr) const;

  VerificationResult verify_garland(int p, int twice_s) const;
  VerificationResult verify_eigen(int p) const;
  VerificationResult verify_w() const;
  VerificationResult verify_gl(int p) const;
  VerificationResult verify_finito(int p) const;
  /// Sum_k (tau theta k)^k ^ A_{p-2k} exhausts Lambda^p p for p <= p_max.
  VerificationResult generation_check(int p_max) const;
  /// Structural oracles: Jacobi, sigma, Killing invariance, d^2 = 0,
  /// adjointness, positivity, contravariance up to the given bidegrees.
  VerificationResult verify_structure(int p_max, int twice_s_max) const;

  /// Word data of every enumerated ideal; the word stays empty when none is found.
  std::vector<IdealMatch> match_ideals() const;

  /// Report at one bidegree; `which` selects among verdict_names().
  HodgeReport report(int p, int twice_s, const std::vector<std::string>& which) const;

 private:
  const SymmetricPair& sp_;
  ExteriorComplex complex_;
  AffineRootSystem roots_;
  std::vector<AbelianSubspace> ideals_;
};

}  // namespace liehodge
