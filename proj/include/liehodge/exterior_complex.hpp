#pragma once

// The bigraded exterior algebra of u- (loop vectors x_r with r < 0, k at
// integer and p at half-odd energies) with the Chevalley-Eilenberg boundary,
// the contravariant Gram matrices, the Laplacian and the Casimir of k.
// The second half of the file is the finite exterior algebra of p.

#include "liehodge/symmetric_pair.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>

namespace liehodge {

struct LoopVector {
  int twice_energy = -1;  ///< 2r, negative
  std::size_t index = 0;  ///< adapted basis index
  auto operator<=>(const LoopVector&) const = default;
  Rational energy() const { return make_rational(twice_energy, 2); }
};

/// Strictly increasing in (energy, index).
using ExtMonomial = std::vector<LoopVector>;

struct BidegreeSpace {
  int p = 0;
  int twice_s = 0;
  std::vector<ExtMonomial> basis;
  std::vector<IntVector> weights;  ///< h0-weight of each monomial
  std::map<ExtMonomial, std::size_t> index;

  std::size_t size() const { return basis.size(); }
  Rational s() const { return make_rational(twice_s, 2); }
  std::size_t find(const ExtMonomial& m) const;
  /// Monomials grouped by weight, each group in basis order.
  std::map<IntVector, std::vector<std::size_t>> weight_blocks() const;
};

/// 2s as an integer; throws unless s is in (1/2)Z and s >= 0.
int twice(const Rational& s);

class ExteriorComplex {
 public:
  explicit ExteriorComplex(const SymmetricPair& sp);

  const SymmetricPair& pair() const { return sp_; }

  /// Lambda^(p,s) u-, enumerated with bit-stable ordering. Cached.
  std::shared_ptr<const BidegreeSpace> space(int p, int twice_s) const;
  std::shared_ptr<const BidegreeSpace> space(int p, const Rational& s) const { return space(p, twice(s)); }

  /// d_p : Lambda^(p,s) -> Lambda^(p-1,s).
  linalg::SparseRatMatrix boundary(int p, int twice_s) const;
  /// Diagonal Gram matrix of {.,.} on Lambda^(p,s).
  linalg::SparseRatMatrix gram(int p, int twice_s) const;
  /// d*_p : Lambda^(p-1,s) -> Lambda^(p,s), the {.,.}-adjoint of d_p.
  linalg::SparseRatMatrix coboundary(int p, int twice_s) const;
  /// L_p = d_{p+1} d*_{p+1} + d*_p d_p on Lambda^(p,s).
  linalg::SparseRatMatrix laplacian(int p, int twice_s) const;
  /// Derivation action of the k-element b_i (adapted index) on Lambda^(p,s).
  linalg::SparseRatMatrix k_action(std::size_t i, int p, int twice_s) const;
  /// Omega_k = sum b_i b'_i acting on Lambda^(p,s).
  linalg::SparseRatMatrix casimir(int p, int twice_s) const;
  /// The scaling element: -s times the identity.
  linalg::SparseRatMatrix d_matrix(int p, int twice_s) const;
  /// L_p + (d + Omega)/2, identically zero when the Laplacian formula holds.
  linalg::SparseRatMatrix garland_residual(int p, int twice_s) const;

  /// Bracket of loop vectors, [x_r, y_t] = [x, y]_{r+t}.
  std::vector<std::pair<LoopVector, Rational>> bracket(const LoopVector& a, const LoopVector& b) const;

  /// {x_r, y_t} = delta_{r,t} (x, tau y).
  Rational form(const LoopVector& x, const LoopVector& y) const;
  /// Counts triples violating {[a,x],y} = sign {x,[sigma0 a, y]}, where
  /// sigma0(a_u) = (tau a)_{-u}; a ranges over energies in (-max/2, 0] and
  /// x, y over u- down to energy -max/2.
  std::size_t contravariance_failures(int max_twice_energy, int sign = 1) const;

 private:
  std::vector<std::pair<std::size_t, Rational>> wedge_front(const LoopVector& v, const ExtMonomial& rest,
                                                             const BidegreeSpace& target) const;

  const SymmetricPair& sp_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, std::shared_ptr<const BidegreeSpace>> cache_;
};

// ---------------------------------------------------------------------------
// Finite side: Lambda^p p with monomials as bitmasks over the p-basis.

using Mask = std::uint64_t;
/// Sparse element of the exterior algebra of p.
using FormVector = std::map<Mask, Rational>;

/// x ^ y on masks: (sign, mask), sign 0 when they overlap.
std::pair<int, Mask> wedge_masks(Mask x, Mask y);
FormVector wedge(const FormVector& a, const FormVector& b);

class FiniteExterior {
 public:
  FiniteExterior(const SymmetricPair& sp, int p);

  int degree() const { return p_; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<Mask>& basis() const { return basis_; }
  std::size_t index(Mask m) const;
  IntVector weight(std::size_t i) const;

  linalg::SparseVector coordinates(const FormVector& v) const;
  FormVector form(const linalg::SparseVector& coords) const;
  FormVector form(const RatVector& coords) const;

  /// ad(b_i) extended as a derivation, i a k index.
  linalg::SparseRatMatrix action(std::size_t i) const;
  linalg::SparseRatMatrix casimir() const;
  /// Determinant extension of the Killing form restricted to p.
  linalg::SparseRatMatrix killing_gram() const;
  /// Determinant extension of {x, y} = (x, tau y).
  linalg::SparseRatMatrix contravariant_gram() const;
  /// Matrix of the identification Lambda^(p,p/2) u- -> Lambda^p p.
  linalg::SparseRatMatrix identification(const BidegreeSpace& loop_side) const;

 private:
  const SymmetricPair& sp_;
  int p_;
  std::vector<Mask> basis_;
  std::map<Mask, std::size_t> index_;
};

/// tau(theta(x)) = -1/4 sum_i [x, p_i] ^ p^i in Lambda^2 p, with {p^i} the
/// Killing-dual basis of p. `x` is a k index.
FormVector tau_theta(const SymmetricPair& sp, std::size_t x);

/// Monomial of the listed p positions (0-based within p).
Mask mask_of(const std::vector<std::size_t>& p_positions);

}  // namespace liehodge
