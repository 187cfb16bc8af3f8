#pragma once

// Abelian b0-stable subspaces of p spanned by weight vectors.

#include "liehodge/exterior_complex.hpp"

namespace liehodge {

/// Adapted indices of p-vectors of nonzero weight, sorted ascending.
using WeightSubset = std::vector<std::size_t>;

struct AbelianSubspace {
  WeightSubset phi;
  bool is_abelian = false;
  bool is_b0_stable = false;
  IntVector mu;  ///< sum of the weights in phi

  std::size_t dim() const { return phi.size(); }
  std::vector<IntVector> weights(const SymmetricPair& sp) const;
};

bool is_abelian(const SymmetricPair& sp, const WeightSubset& phi);
/// [x_beta, p_alpha] lies in the span of phi for every alpha in phi and
/// beta in Delta0+.
bool is_b0_stable(const SymmetricPair& sp, const WeightSubset& phi);

AbelianSubspace make_subspace(const SymmetricPair& sp, WeightSubset phi);

/// All abelian b0-stable weight subsets, ordered by dimension and then
/// lexicographically. Depth-first over weights of decreasing height with
/// pruning on abelianness and stability.
std::vector<AbelianSubspace> enumerate_abelian_bstable(const SymmetricPair& sp);

bool has_abelian_of_dimension(const SymmetricPair& sp, int p);
bool has_abelian_of_dimension(const std::vector<AbelianSubspace>& ideals, int p);

/// v_a = v^1 ^ ... ^ v^p in Lambda^p p, vectors in ascending index order.
FormVector decomposable_generator(const SymmetricPair& sp, const WeightSubset& phi);

/// Same vector in Lambda^(p,p/2) u-.
ExtMonomial loop_generator(const WeightSubset& phi);

}  // namespace liehodge
