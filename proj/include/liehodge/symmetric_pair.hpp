#pragma once

// Z/2-gradings g = k + p from the switch involution on s + s and from inner
// sign involutions, in a basis adapted to the grading and to the h0-weights.

#include "liehodge/lie_core.hpp"

#include <optional>

namespace liehodge {

struct Involution {
  enum class Kind { Switch, InnerSigns };

  Kind kind = Kind::InnerSigns;
  /// The factor s for the switch (g = s + s), or g itself for signs.
  CartanSpec algebra;
  /// One entry per simple root, +1 or -1 (inner signs only).
  std::vector<int> signs;

  /// "A2:switch", "B2:signs=+-". Throws ParseError.
  static Involution parse(std::string_view text);
  std::string to_string() const;
  bool is_switch() const { return kind == Kind::Switch; }
};

struct AdaptedElement {
  std::string label;
  bool in_k = true;
  IntVector weight;  ///< h0-weight in simple-root coordinates
  std::size_t tau = 0;
  Rational norm;     ///< (b, tau b) > 0
};

struct CasimirElement {
  std::vector<std::size_t> basis;            ///< adapted indices spanning k
  std::vector<LieAlgebra::Vector> dual;      ///< dual[i] pairs to 1 with basis[i]
};

/// Adapted basis: k first (Cartan h0, then e_beta and f_beta for beta in
/// Delta0+), then p (Cartan part if any, then positive, then negative
/// weight vectors). The Cartan parts are Killing-orthogonalized, so the
/// form {x, y} = (x, tau y) is diagonal on the adapted basis.
class SymmetricPair {
 public:
  explicit SymmetricPair(const Involution& inv);
  static SymmetricPair parse(std::string_view text) { return SymmetricPair(Involution::parse(text)); }

  const Involution& involution() const { return inv_; }
  std::string name() const { return inv_.to_string(); }

  /// g in its Chevalley basis (a direct sum for the switch).
  const LieAlgebra& ambient() const { return ambient_; }
  const linalg::SparseRatMatrix& ambient_killing() const { return ambient_killing_; }
  /// Matrix of sigma on the ambient basis.
  const linalg::SparseRatMatrix& sigma() const { return sigma_; }
  /// Columns are the adapted basis vectors in ambient coordinates.
  const linalg::SparseRatMatrix& change_of_basis() const { return basis_; }

  /// g in the adapted basis.
  const LieAlgebra& algebra() const { return adapted_; }
  const linalg::SparseRatMatrix& killing() const { return killing_; }
  const std::vector<AdaptedElement>& elements() const { return elements_; }
  const AdaptedElement& element(std::size_t i) const { return elements_.at(i); }

  std::size_t dim() const { return elements_.size(); }
  std::size_t dim_k() const { return dim_k_; }
  std::size_t dim_p() const { return dim() - dim_k_; }
  int rank() const { return rank_; }
  bool in_k(std::size_t i) const { return i < dim_k_; }
  std::size_t p_index(std::size_t j) const { return dim_k_ + j; }

  /// The first rank() elements of k span h0; coefficients over h_1..h_n.
  const std::vector<RatVector>& h0_coordinates() const { return h0_coords_; }

  const std::vector<IntVector>& delta0_positive() const { return delta0_pos_; }
  const std::vector<IntVector>& delta0_simple() const { return delta0_simple_; }
  /// Adapted index of the k root vector of weight beta (beta in Delta0).
  std::size_t k_root_vector(const IntVector& beta) const;
  /// h0-weights of p in adapted order (with multiplicity).
  std::vector<IntVector> p_weights() const;
  /// Adapted index of the p-vector of a nonzero weight, or nullopt.
  std::optional<std::size_t> p_vector(const IntVector& weight) const;

  /// Form on h0* in simple-root coordinates, induced by the Killing form of g.
  const std::vector<RatVector>& h0_form() const { return h0_form_; }
  Rational inner(const RatVector& a, const RatVector& b) const;
  Rational inner(const IntVector& a, const IntVector& b) const;
  const RatVector& rho0() const { return rho0_; }

  bool is_dominant(const RatVector& xi) const;
  /// (xi, xi + 2 rho0); throws std::invalid_argument unless xi is dominant.
  Rational casimir_scalar(const RatVector& xi) const;
  /// Weyl dimension formula over Delta0+.
  Integer weyl_dimension(const RatVector& xi) const;

  CasimirElement casimir_element() const;
  /// Largest |(b_i, b'_j) - delta_ij|, zero for a correct dual pair.
  Rational casimir_duality_residual() const;

  /// Matrix of ad(b_i) restricted to p (dim_p x dim_p), i in k.
  linalg::SparseRatMatrix action_on_p(std::size_t i) const;

  bool grading_holds() const;
  bool sigma_is_involution() const;
  bool sigma_preserves_killing() const;
  bool sigma_is_automorphism() const;
  /// [h, b_j] = mu_j(h) b_j for h in h0.
  bool weights_consistent() const;

  /// Negative control: doubles one k-on-p structure constant. Returns a
  /// description of the perturbed bracket.
  std::string perturb_structure_constant();
  bool perturbed() const { return perturbed_; }

 private:
  void build_switch();
  void build_inner();
  void finish();

  Involution inv_;
  int rank_ = 0;
  std::vector<IntVector> cartan_;  ///< Cartan matrix of the factor carrying h0
  LieAlgebra ambient_;
  linalg::SparseRatMatrix ambient_killing_;
  linalg::SparseRatMatrix sigma_;
  linalg::SparseRatMatrix basis_;
  LieAlgebra adapted_;
  linalg::SparseRatMatrix killing_;
  std::vector<AdaptedElement> elements_;
  std::size_t dim_k_ = 0;
  std::vector<RatVector> h0_coords_;
  std::vector<IntVector> delta0_pos_;
  std::vector<IntVector> delta0_simple_;
  std::vector<RatVector> h0_form_;
  RatVector rho0_;
  std::vector<std::size_t> ambient_tau_;
  std::vector<linalg::SparseVector> columns_;
  std::map<IntVector, std::size_t> k_roots_;
  std::map<IntVector, std::size_t> p_nonzero_;
  bool perturbed_ = false;
};

std::string weight_string(const IntVector& v);
std::string weight_string(const RatVector& v);

}  // namespace liehodge
