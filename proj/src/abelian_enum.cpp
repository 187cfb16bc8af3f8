#include "liehodge/abelian_enum.hpp"

#include <algorithm>

namespace liehodge {

std::vector<IntVector> AbelianSubspace::weights(const SymmetricPair& sp) const {
  std::vector<IntVector> out;
  for (std::size_t i : phi) out.push_back(sp.element(i).weight);
  return out;
}

namespace {

void check_subset(const SymmetricPair& sp, const WeightSubset& phi) {
  for (std::size_t i : phi) {
    if (sp.in_k(i) || is_zero(sp.element(i).weight)) {
      throw std::invalid_argument("weight subsets must consist of nonzero p-weights");
    }
  }
}

bool raises_into(const SymmetricPair& sp, std::size_t alpha, const std::vector<char>& member) {
  for (const auto& beta : sp.delta0_positive()) {
    for (const auto& [z, c] : sp.algebra().bracket(sp.k_root_vector(beta), alpha)) {
      if (!member[z]) return false;
    }
  }
  return true;
}

}  // namespace

bool is_abelian(const SymmetricPair& sp, const WeightSubset& phi) {
  check_subset(sp, phi);
  for (std::size_t a = 0; a < phi.size(); ++a) {
    for (std::size_t b = a + 1; b < phi.size(); ++b) {
      if (!sp.algebra().bracket(phi[a], phi[b]).empty()) return false;
    }
  }
  return true;
}

bool is_b0_stable(const SymmetricPair& sp, const WeightSubset& phi) {
  check_subset(sp, phi);
  std::vector<char> member(sp.dim(), 0);
  for (std::size_t i : phi) member[i] = 1;
  return std::all_of(phi.begin(), phi.end(), [&](std::size_t a) { return raises_into(sp, a, member); });
}

AbelianSubspace make_subspace(const SymmetricPair& sp, WeightSubset phi) {
  std::sort(phi.begin(), phi.end());
  AbelianSubspace s;
  s.is_abelian = is_abelian(sp, phi);
  s.is_b0_stable = is_b0_stable(sp, phi);
  s.mu.assign(sp.rank(), 0);
  for (std::size_t i : phi) s.mu = add(s.mu, sp.element(i).weight);
  s.phi = std::move(phi);
  return s;
}

std::vector<AbelianSubspace> enumerate_abelian_bstable(const SymmetricPair& sp) {
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < sp.dim_p(); ++j) {
    std::size_t i = sp.p_index(j);
    if (!is_zero(sp.element(i).weight)) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return height(sp.element(a).weight) > height(sp.element(b).weight);
  });

  std::vector<WeightSubset> found;
  std::vector<char> member(sp.dim(), 0);
  WeightSubset chosen;
  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      found.push_back(chosen);
      return;
    }
    std::size_t alpha = order[pos];
    self(self, pos + 1);
    // Everything alpha raises into has larger height, hence is decided.
    for (std::size_t b : chosen) {
      if (!sp.algebra().bracket(alpha, b).empty()) return;
    }
    if (!raises_into(sp, alpha, member)) return;
    chosen.push_back(alpha);
    member[alpha] = 1;
    self(self, pos + 1);
    member[alpha] = 0;
    chosen.pop_back();
  };
  recurse(recurse, 0);

  std::vector<AbelianSubspace> out;
  for (auto& phi : found) out.push_back(make_subspace(sp, std::move(phi)));
  std::sort(out.begin(), out.end(), [](const AbelianSubspace& a, const AbelianSubspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.phi < b.phi;
  });
  return out;
}

bool has_abelian_of_dimension(const std::vector<AbelianSubspace>& ideals, int p) {
  return std::any_of(ideals.begin(), ideals.end(),
                     [&](const AbelianSubspace& s) { return static_cast<int>(s.dim()) == p; });
}

bool has_abelian_of_dimension(const SymmetricPair& sp, int p) {
  if (p < 0 || p > static_cast<int>(sp.dim_p())) throw std::invalid_argument("dimension out of range");
  return has_abelian_of_dimension(enumerate_abelian_bstable(sp), p);
}

FormVector decomposable_generator(const SymmetricPair& sp, const WeightSubset& phi) {
  std::vector<std::size_t> positions;
  for (std::size_t i : phi) positions.push_back(i - sp.dim_k());
  return {{mask_of(positions), Rational(1)}};
}

ExtMonomial loop_generator(const WeightSubset& phi) {
  ExtMonomial m;
  for (std::size_t i : phi) m.push_back({-1, i});
  std::sort(m.begin(), m.end());
  return m;
}

}  // namespace liehodge
