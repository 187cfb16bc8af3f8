#pragma once

// Finite semisimple Lie algebras from Cartan type data: root systems,
// Chevalley bases with integral structure constants, and the Killing form.

#include "liehodge/linalg.hpp"
#include "liehodge/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace liehodge {

struct ParseError : std::invalid_argument {
  ParseError(std::size_t position, const std::string& message);
  std::size_t position;
};

struct SimpleFactor {
  char type = 'A';  ///< one of A..G
  int rank = 1;
  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

struct CartanSpec {
  std::vector<SimpleFactor> factors;

  /// "A2", "a1xA1", "B2" ... ('x' separates simple factors).
  static CartanSpec parse(std::string_view text);
  std::string to_string() const;
  int rank() const;
  friend bool operator==(const CartanSpec&, const CartanSpec&) = default;
};

/// Throws ParseError unless the type/rank combination exists.
void validate(const SimpleFactor& factor, std::size_t position = 0);

class RootSystem {
 public:
  explicit RootSystem(const CartanSpec& spec);

  const CartanSpec& spec() const { return spec_; }
  int rank() const { return rank_; }
  /// cartan()[i][j] = <alpha_j, alpha_i^vee> = 2(alpha_i, alpha_j)/(alpha_i, alpha_i).
  const std::vector<IntVector>& cartan() const { return cartan_; }
  /// Symmetric integer form on the root lattice, (alpha_i, alpha_i) = 2 for
  /// the short roots of each component. Proportional to the Killing-induced
  /// form on each simple factor.
  const std::vector<IntVector>& symmetric_form() const { return form_; }

  /// Ordered by height, then lexicographically descending (so simple roots
  /// appear as alpha_1, alpha_2, ...).
  const std::vector<IntVector>& positive_roots() const { return positive_; }
  std::size_t num_positive() const { return positive_.size(); }
  std::size_t dimension() const { return static_cast<std::size_t>(rank_) + 2 * positive_.size(); }

  /// Index into positive_roots(), or -1.
  int positive_index(const IntVector& root) const;
  bool is_root(const IntVector& v) const;
  int inner(const IntVector& a, const IntVector& b) const;
  /// <a, alpha_i^vee>.
  int coroot_pairing(const IntVector& a, int i) const;
  IntVector highest_root() const { return positive_.back(); }
  IntVector simple_root(int i) const;

 private:
  CartanSpec spec_;
  int rank_ = 0;
  std::vector<IntVector> cartan_;
  std::vector<IntVector> form_;
  std::vector<IntVector> positive_;
  std::map<IntVector, int> index_;
};

int height(const IntVector& root);
IntVector negate(const IntVector& v);
IntVector add(const IntVector& a, const IntVector& b);
IntVector subtract(const IntVector& a, const IntVector& b);
bool is_zero(const IntVector& v);
/// True when every coordinate is >= 0 and the vector is nonzero.
bool is_positive(const IntVector& v);

/// A finite-dimensional Lie algebra given by structure constants on a basis.
class LieAlgebra {
 public:
  using Vector = linalg::SparseVector;

  LieAlgebra() = default;
  explicit LieAlgebra(std::vector<std::string> labels);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vector& bracket(std::size_t i, std::size_t j) const { return table_[i][j]; }
  /// Sets [b_i, b_j] = v and [b_j, b_i] = -v.
  void set_bracket(std::size_t i, std::size_t j, Vector v);
  Vector bracket(const Vector& x, const Vector& y) const;

  /// Matrix of ad(b_i) on the basis.
  linalg::SparseRatMatrix ad(std::size_t i) const;
  linalg::SparseRatMatrix ad(const Vector& x) const;

  /// Largest entrywise Jacobi residual over all basis triples is zero.
  bool jacobi_holds() const;
  Vector jacobi_residual(std::size_t i, std::size_t j, std::size_t k) const;
  bool antisymmetric() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Vector>> table_;
};

/// Direct sum a (+) b with labels prefixed by `prefix_a` / `prefix_b`.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b, const std::string& prefix_a,
                      const std::string& prefix_b);

/// Killing form trace(ad x ad y) on the basis of `g`.
linalg::SparseRatMatrix killing_gram(const LieAlgebra& g);

/// Basis element kinds of a Chevalley basis.
enum class ChevalleyKind { Cartan, Positive, Negative };

struct ChevalleyElement {
  ChevalleyKind kind;
  int index;        ///< simple index for Cartan, positive-root index otherwise
  IntVector weight; ///< root-lattice coordinates (zero for Cartan)
};

/// Basis order: h_1..h_n, e_alpha (alpha in positive_roots order), f_alpha
/// (same order, f_alpha = e_{-alpha}).
class ChevalleyBasis {
 public:
  explicit ChevalleyBasis(const RootSystem& roots);

  const RootSystem& roots() const { return roots_; }
  const LieAlgebra& algebra() const { return algebra_; }
  std::size_t dim() const { return algebra_.dim(); }
  const std::vector<ChevalleyElement>& elements() const { return elements_; }

  std::size_t cartan_index(int i) const { return static_cast<std::size_t>(i); }
  std::size_t e_index(int root) const;
  std::size_t f_index(int root) const;
  /// Basis index of the root vector of a (possibly negative) root.
  std::size_t root_vector(const IntVector& root) const;

  /// N_{alpha,beta} for roots alpha, beta with alpha+beta a root.
  int structure_constant(const IntVector& alpha, const IntVector& beta) const;
  /// Coroot h_alpha in the h_i basis.
  IntVector coroot(const IntVector& alpha) const;

  /// Chevalley anti-involution e_alpha <-> e_{-alpha}, identity on the
  /// Cartan: an anti-automorphism with tau^2 = 1.
  std::size_t anti_involution(std::size_t basis_index) const;

 private:
  RootSystem roots_;
  LieAlgebra algebra_;
  std::vector<ChevalleyElement> elements_;
  std::map<std::pair<int, int>, int> positive_constants_;
};

struct KillingForm {
  linalg::SparseRatMatrix gram;        ///< on the Chevalley basis
  linalg::SparseRatMatrix cartan_gram; ///< restriction to h_1..h_n
  /// (alpha_i, alpha_j) for the form induced on h* via h_mu.
  std::vector<RatVector> dual_form;

  Rational dual_inner(const RatVector& a, const RatVector& b) const;
};

KillingForm killing_form(const ChevalleyBasis& basis);

/// Residual ([x,y],z) + (y,[x,z]) for basis triples.
Rational killing_invariance_residual(const LieAlgebra& g, const linalg::SparseRatMatrix& gram,
                                     std::size_t x, std::size_t y, std::size_t z);

}  // namespace liehodge
