#include "liehodge/exterior_complex.hpp"

#include <algorithm>
#include <bit>

namespace liehodge {

using linalg::SparseRatMatrix;
using linalg::SparseVector;

int twice(const Rational& s) {
  Rational t = 2 * s;
  if (!is_integer(t) || t < 0) throw std::invalid_argument("energy must be a nonnegative half-integer");
  return static_cast<int>(t.get_num().get_si());
}

std::size_t BidegreeSpace::find(const ExtMonomial& m) const {
  auto it = index.find(m);
  if (it == index.end()) throw std::logic_error("monomial outside its bidegree");
  return it->second;
}

std::map<IntVector, std::vector<std::size_t>> BidegreeSpace::weight_blocks() const {
  std::map<IntVector, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < basis.size(); ++i) blocks[weights[i]].push_back(i);
  return blocks;
}

ExteriorComplex::ExteriorComplex(const SymmetricPair& sp) : sp_(sp) {}

std::shared_ptr<const BidegreeSpace> ExteriorComplex::space(int p, int twice_s) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find({p, twice_s}); it != cache_.end()) return it->second;
  }
  auto sp = std::make_shared<BidegreeSpace>();
  sp->p = p;
  sp->twice_s = twice_s;
  if (p == 0 && twice_s == 0) sp->basis.push_back({});
  if (p > 0 && twice_s >= p) {
    // Candidate loop vectors, most negative energy first.
    std::vector<LoopVector> loops;
    for (int e = -twice_s; e <= -1; ++e) {
      bool k_level = e % 2 == 0;
      for (std::size_t i = 0; i < sp_.dim(); ++i) {
        if (sp_.in_k(i) == k_level) loops.push_back({e, i});
      }
    }
    ExtMonomial current;
    auto recurse = [&](auto&& self, std::size_t start, int left, int budget) -> void {
      if (left == 0) {
        if (budget == 0) sp->basis.push_back(current);
        return;
      }
      for (std::size_t pos = start; pos < loops.size(); ++pos) {
        int e = -loops[pos].twice_energy;
        if (left * e < budget) break;
        if (e > budget - (left - 1)) continue;
        current.push_back(loops[pos]);
        self(self, pos + 1, left - 1, budget - e);
        current.pop_back();
      }
    };
    recurse(recurse, 0, p, twice_s);
  }
  for (std::size_t i = 0; i < sp->basis.size(); ++i) {
    sp->index.emplace(sp->basis[i], i);
    IntVector w(sp_.rank(), 0);
    for (const auto& v : sp->basis[i]) w = add(w, sp_.element(v.index).weight);
    sp->weights.push_back(std::move(w));
  }
  std::lock_guard lock(mutex_);
  return cache_.emplace(std::make_pair(p, twice_s), std::move(sp)).first->second;
}

std::vector<std::pair<LoopVector, Rational>> ExteriorComplex::bracket(const LoopVector& a,
                                                                      const LoopVector& b) const {
  std::vector<std::pair<LoopVector, Rational>> out;
  for (const auto& [z, c] : sp_.algebra().bracket(a.index, b.index)) {
    out.push_back({{a.twice_energy + b.twice_energy, z}, c});
  }
  return out;
}

std::vector<std::pair<std::size_t, Rational>> ExteriorComplex::wedge_front(const LoopVector& v,
                                                                           const ExtMonomial& rest,
                                                                           const BidegreeSpace& target) const {
  auto pos = std::lower_bound(rest.begin(), rest.end(), v);
  if (pos != rest.end() && *pos == v) return {};
  ExtMonomial m(rest.begin(), pos);
  m.push_back(v);
  m.insert(m.end(), pos, rest.end());
  Rational sign = (pos - rest.begin()) % 2 == 0 ? 1 : -1;
  return {{target.find(m), sign}};
}

SparseRatMatrix ExteriorComplex::boundary(int p, int twice_s) const {
  auto dom = space(p, twice_s);
  if (p <= 0) return SparseRatMatrix(0, dom->size());
  auto cod = space(p - 1, twice_s);
  SparseRatMatrix m(cod->size(), dom->size());
  for (std::size_t col = 0; col < dom->size(); ++col) {
    const ExtMonomial& x = dom->basis[col];
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = i + 1; j < x.size(); ++j) {
        auto br = bracket(x[i], x[j]);
        if (br.empty()) continue;
        if (x[i].twice_energy + x[j].twice_energy >= 0) throw std::logic_error("central term inside u-");
        ExtMonomial rest;
        for (std::size_t l = 0; l < x.size(); ++l) {
          if (l != i && l != j) rest.push_back(x[l]);
        }
        Rational sign = (i + j) % 2 == 0 ? 1 : -1;
        for (const auto& [z, c] : br) {
          for (const auto& [row, s] : wedge_front(z, rest, *cod)) m.add(row, col, sign * s * c);
        }
      }
    }
  }
  return m;
}

SparseRatMatrix ExteriorComplex::gram(int p, int twice_s) const {
  auto sp = space(p, twice_s);
  RatVector diag;
  diag.reserve(sp->size());
  for (const auto& m : sp->basis) {
    Rational g(1);
    for (const auto& v : m) g *= sp_.element(v.index).norm;
    diag.push_back(g);
  }
  return SparseRatMatrix::diagonal(diag);
}

SparseRatMatrix ExteriorComplex::coboundary(int p, int twice_s) const {
  SparseRatMatrix d = boundary(p, twice_s);
  if (d.rows() == 0 || d.cols() == 0) return SparseRatMatrix(d.cols(), d.rows());
  return linalg::gram_adjoint(d, gram(p, twice_s), gram(p - 1, twice_s));
}

SparseRatMatrix ExteriorComplex::laplacian(int p, int twice_s) const {
  std::size_t n = space(p, twice_s)->size();
  SparseRatMatrix l(n, n);
  SparseRatMatrix up = coboundary(p + 1, twice_s);
  if (up.rows() > 0) l += boundary(p + 1, twice_s) * up;
  if (p > 0) l += coboundary(p, twice_s) * boundary(p, twice_s);
  return l;
}

SparseRatMatrix ExteriorComplex::k_action(std::size_t i, int p, int twice_s) const {
  if (!sp_.in_k(i)) throw std::invalid_argument("k_action: not a k index");
  auto sp = space(p, twice_s);
  SparseRatMatrix m(sp->size(), sp->size());
  for (std::size_t col = 0; col < sp->size(); ++col) {
    const ExtMonomial& x = sp->basis[col];
    for (std::size_t j = 0; j < x.size(); ++j) {
      ExtMonomial rest = x;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
      Rational sign = j % 2 == 0 ? 1 : -1;
      for (const auto& [z, c] : sp_.algebra().bracket(i, x[j].index)) {
        for (const auto& [row, s] : wedge_front({x[j].twice_energy, z}, rest, *sp)) m.add(row, col, sign * s * c);
      }
    }
  }
  return m;
}

SparseRatMatrix ExteriorComplex::casimir(int p, int twice_s) const {
  std::size_t n = space(p, twice_s)->size();
  SparseRatMatrix omega(n, n);
  if (p == 0) return omega;
  CasimirElement c = sp_.casimir_element();
  std::map<std::size_t, SparseRatMatrix> actions;
  auto act = [&](std::size_t i) -> const SparseRatMatrix& {
    auto it = actions.find(i);
    if (it == actions.end()) it = actions.emplace(i, k_action(i, p, twice_s)).first;
    return it->second;
  };
  for (std::size_t a = 0; a < c.basis.size(); ++a) {
    SparseRatMatrix dual(n, n);
    for (const auto& [k, x] : c.dual[a]) dual += act(k) * x;
    omega += act(c.basis[a]) * dual;
  }
  return omega;
}

SparseRatMatrix ExteriorComplex::d_matrix(int p, int twice_s) const {
  return SparseRatMatrix::identity(space(p, twice_s)->size(), -make_rational(twice_s, 2));
}

SparseRatMatrix ExteriorComplex::garland_residual(int p, int twice_s) const {
  SparseRatMatrix half = d_matrix(p, twice_s) + casimir(p, twice_s);
  half *= make_rational(1, 2);
  return laplacian(p, twice_s) + half;
}

Rational ExteriorComplex::form(const LoopVector& x, const LoopVector& y) const {
  if (x.twice_energy != y.twice_energy) return Rational(0);
  return sp_.killing().at(x.index, sp_.element(y.index).tau);
}

std::size_t ExteriorComplex::contravariance_failures(int max_twice_energy, int sign) const {
  std::vector<LoopVector> generators, lowers;
  for (int e = 1 - max_twice_energy; e <= 0; ++e) {
    for (std::size_t i = 0; i < sp_.dim(); ++i) {
      if (sp_.in_k(i) == (e % 2 == 0)) generators.push_back({e, i});
    }
  }
  for (int e = -max_twice_energy; e <= -1; ++e) {
    for (std::size_t i = 0; i < sp_.dim(); ++i) {
      if (sp_.in_k(i) == (e % 2 == 0)) lowers.push_back({e, i});
    }
  }
  std::size_t failures = 0;
  for (const auto& a : generators) {
    LoopVector sigma_a{-a.twice_energy, sp_.element(a.index).tau};
    for (const auto& x : lowers) {
      auto ax = bracket(a, x);
      for (const auto& y : lowers) {
        Rational lhs, rhs;
        for (const auto& [z, c] : ax) lhs += c * form(z, y);
        for (const auto& [z, c] : bracket(sigma_a, y)) {
          if (z.twice_energy < 0) rhs += c * form(x, z);
        }
        if (lhs != sign * rhs) ++failures;
      }
    }
  }
  return failures;
}

// ---------------------------------------------------------------------------
// Finite side

std::pair<int, Mask> wedge_masks(Mask x, Mask y) {
  if (x & y) return {0, 0};
  int swaps = 0;
  for (Mask rest = y; rest; rest &= rest - 1) {
    Mask bit = rest & (~rest + 1);
    swaps += std::popcount(x & ~((bit << 1) - 1));
  }
  return {swaps % 2 == 0 ? 1 : -1, x | y};
}

FormVector wedge(const FormVector& a, const FormVector& b) {
  FormVector out;
  for (const auto& [x, cx] : a) {
    for (const auto& [y, cy] : b) {
      auto [sign, m] = wedge_masks(x, y);
      if (sign == 0) continue;
      Rational& slot = out[m];
      slot += sign * cx * cy;
      if (slot == 0) out.erase(m);
    }
  }
  return out;
}

Mask mask_of(const std::vector<std::size_t>& p_positions) {
  Mask m = 0;
  for (std::size_t j : p_positions) m |= Mask{1} << j;
  return m;
}

FiniteExterior::FiniteExterior(const SymmetricPair& sp, int p) : sp_(sp), p_(p) {
  const std::size_t n = sp.dim_p();
  if (n > 63) throw std::invalid_argument("p too large for bitmask monomials");
  if (p >= 0 && static_cast<std::size_t>(p) <= n) {
    std::vector<std::size_t> pick;
    auto recurse = [&](auto&& self, std::size_t start) -> void {
      if (pick.size() == static_cast<std::size_t>(p)) {
        basis_.push_back(mask_of(pick));
        return;
      }
      for (std::size_t j = start; j < n; ++j) {
        pick.push_back(j);
        self(self, j + 1);
        pick.pop_back();
      }
    };
    recurse(recurse, 0);
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
}

std::size_t FiniteExterior::index(Mask m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw std::logic_error("mask outside the degree");
  return it->second;
}

IntVector FiniteExterior::weight(std::size_t i) const {
  IntVector w(sp_.rank(), 0);
  for (Mask m = basis_.at(i); m; m &= m - 1) {
    w = add(w, sp_.element(sp_.p_index(std::countr_zero(m))).weight);
  }
  return w;
}

SparseVector FiniteExterior::coordinates(const FormVector& v) const {
  SparseVector out;
  for (const auto& [m, c] : v) out.emplace_back(index(m), c);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

FormVector FiniteExterior::form(const SparseVector& coords) const {
  FormVector out;
  for (const auto& [i, c] : coords) out[basis_.at(i)] = c;
  return out;
}

FormVector FiniteExterior::form(const RatVector& coords) const {
  return form(linalg::to_sparse(coords));
}

SparseRatMatrix FiniteExterior::action(std::size_t i) const {
  SparseRatMatrix m(size(), size());
  const std::size_t k = sp_.dim_k();
  for (std::size_t col = 0; col < size(); ++col) {
    FormVector image;
    const Mask x = basis_[col];
    for (Mask rest = x; rest; rest &= rest - 1) {
      int j = std::countr_zero(rest);
      Mask without = x & ~(Mask{1} << j);
      int sign = std::popcount(x & ((Mask{1} << j) - 1)) % 2 == 0 ? 1 : -1;
      FormVector term;
      for (const auto& [z, c] : sp_.algebra().bracket(i, sp_.p_index(j))) {
        if (z < k) throw std::logic_error("[k, p] has a k-component");
        term[Mask{1} << (z - k)] += sign * c;
      }
      for (const auto& [mm, c] : wedge(term, {{without, Rational(1)}})) image[mm] += c;
    }
    for (const auto& [mm, c] : image) {
      if (c != 0) m.add(index(mm), col, c);
    }
  }
  return m;
}

SparseRatMatrix FiniteExterior::casimir() const {
  SparseRatMatrix omega(size(), size());
  CasimirElement c = sp_.casimir_element();
  for (std::size_t a = 0; a < c.basis.size(); ++a) {
    SparseRatMatrix dual(size(), size());
    for (const auto& [k, x] : c.dual[a]) dual += action(k) * x;
    omega += action(c.basis[a]) * dual;
  }
  return omega;
}

SparseRatMatrix FiniteExterior::killing_gram() const {
  SparseRatMatrix g(size(), size());
  const std::size_t k = sp_.dim_k();
  for (std::size_t row = 0; row < size(); ++row) {
    std::vector<std::size_t> images;
    Rational value(1);
    for (Mask m = basis_[row]; m; m &= m - 1) {
      std::size_t j = sp_.p_index(std::countr_zero(m));
      std::size_t t = sp_.element(j).tau;
      value *= sp_.killing().at(j, t);
      images.push_back(t - k);
    }
    int inversions = 0;
    for (std::size_t a = 0; a < images.size(); ++a) {
      for (std::size_t b = a + 1; b < images.size(); ++b) inversions += images[a] > images[b];
    }
    if (inversions % 2) value = -value;
    g.set(row, index(mask_of(images)), value);
  }
  return g;
}

SparseRatMatrix FiniteExterior::contravariant_gram() const {
  RatVector diag;
  for (Mask m : basis_) {
    Rational g(1);
    for (Mask r = m; r; r &= r - 1) g *= sp_.element(sp_.p_index(std::countr_zero(r))).norm;
    diag.push_back(g);
  }
  return SparseRatMatrix::diagonal(diag);
}

SparseRatMatrix FiniteExterior::identification(const BidegreeSpace& loop_side) const {
  if (loop_side.p != p_ || loop_side.twice_s != p_) throw std::invalid_argument("identification needs bidegree (p, p/2)");
  SparseRatMatrix m(size(), loop_side.size());
  for (std::size_t col = 0; col < loop_side.size(); ++col) {
    std::vector<std::size_t> positions;
    for (const auto& v : loop_side.basis[col]) positions.push_back(v.index - sp_.dim_k());
    m.set(index(mask_of(positions)), col, Rational(1));
  }
  return m;
}

FormVector tau_theta(const SymmetricPair& sp, std::size_t x) {
  FormVector out;
  const std::size_t k = sp.dim_k();
  for (std::size_t t = 0; t < sp.dim_p(); ++t) {
    const auto& el = sp.element(sp.p_index(t));
    FormVector dual{{Mask{1} << (el.tau - k), 1 / el.norm}};
    FormVector image;
    for (const auto& [z, c] : sp.algebra().bracket(x, sp.p_index(t))) image[Mask{1} << (z - k)] = c;
    for (const auto& [m, c] : wedge(image, dual)) {
      Rational& slot = out[m];
      slot += make_rational(-1, 4) * c;
      if (slot == 0) out.erase(m);
    }
  }
  return out;
}

}  // namespace liehodge
