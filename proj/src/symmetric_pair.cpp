#include "liehodge/symmetric_pair.hpp"

#include <algorithm>
#include <cctype>

namespace liehodge {

using linalg::SparseRatMatrix;
using linalg::SparseVector;

Involution Involution::parse(std::string_view text) {
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError(text.size(), "expected ':' after the Cartan type");
  Involution inv;
  inv.algebra = CartanSpec::parse(text.substr(0, colon));
  std::string kind;
  for (char c : text.substr(colon + 1)) kind += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (kind == "switch") {
    if (inv.algebra.factors.size() != 1) throw ParseError(0, "the switch involution needs a simple factor");
    inv.kind = Kind::Switch;
    return inv;
  }
  const std::string prefix = "signs=";
  if (kind.rfind(prefix, 0) != 0) throw ParseError(colon + 1, "expected 'switch' or 'signs=...'");
  inv.kind = Kind::InnerSigns;
  std::size_t start = colon + 1 + prefix.size();
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] == '+') inv.signs.push_back(1);
    else if (text[i] == '-') inv.signs.push_back(-1);
    else throw ParseError(i, "signs must be '+' or '-'");
  }
  if (static_cast<int>(inv.signs.size()) != inv.algebra.rank()) {
    throw ParseError(start, "expected " + std::to_string(inv.algebra.rank()) + " signs");
  }
  return inv;
}

std::string Involution::to_string() const {
  std::string out = algebra.to_string() + ":";
  if (is_switch()) return out + "switch";
  out += "signs=";
  for (int s : signs) out += s > 0 ? '+' : '-';
  return out;
}

std::string weight_string(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

std::string weight_string(const RatVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + ")";
}

namespace {

// Killing-orthogonal basis of the Cartan subalgebra, each vector scaled to a
// primitive integer vector.
std::vector<RatVector> orthogonal_cartan(const SparseRatMatrix& gram) {
  const std::size_t n = gram.rows();
  auto form = [&](const RatVector& a, const RatVector& b) {
    Rational s;
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (const auto& [j, g] : gram.row(i)) s += a[i] * g * b[j];
    }
    return s;
  };
  std::vector<RatVector> out;
  for (std::size_t k = 0; k < n; ++k) {
    RatVector v(n);
    v[k] = 1;
    for (const auto& u : out) {
      Rational c = form(v, u) / form(u, u);
      for (std::size_t i = 0; i < n; ++i) v[i] -= c * u[i];
    }
    Integer lcm = 1, gcd = 0;
    for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    for (auto& x : v) {
      x *= lcm;
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), x.get_num_mpz_t());
    }
    for (auto& x : v) x /= gcd;
    out.push_back(std::move(v));
  }
  return out;
}

SparseVector unit(std::size_t i) { return {{i, Rational(1)}}; }

SparseVector shifted(const SparseVector& v, std::size_t shift) {
  SparseVector out = v;
  for (auto& e : out) e.first += shift;
  return out;
}

}  // namespace

SymmetricPair::SymmetricPair(const Involution& inv) : inv_(inv) {
  if (inv_.is_switch()) build_switch();
  else build_inner();
  finish();
}

void SymmetricPair::build_inner() {
  RootSystem rs(inv_.algebra);
  ChevalleyBasis cb(rs);
  KillingForm kf = killing_form(cb);
  const int n = rs.rank();
  const auto& pos = rs.positive_roots();
  rank_ = n;
  cartan_ = rs.cartan();
  ambient_ = cb.algebra();
  ambient_killing_ = kf.gram;
  h0_form_ = kf.dual_form;
  for (std::size_t i = 0; i < cb.dim(); ++i) ambient_tau_.push_back(cb.anti_involution(i));

  auto eps = [&](const IntVector& r) {
    int s = 1;
    for (int i = 0; i < n; ++i) {
      if (inv_.signs.at(i) < 0 && r[i] % 2 != 0) s = -s;
    }
    return s;
  };
  RatVector diag(cb.dim(), Rational(1));
  for (int k = 0; k < static_cast<int>(pos.size()); ++k) {
    diag[cb.e_index(k)] = diag[cb.f_index(k)] = eps(pos[k]);
  }
  sigma_ = SparseRatMatrix::diagonal(diag);

  auto cartan_vector = [&](const RatVector& c) {
    SparseVector v;
    for (int i = 0; i < n; ++i) {
      if (c[i] != 0) v.emplace_back(cb.cartan_index(i), c[i]);
    }
    return v;
  };
  const auto& labels = ambient_.labels();
  auto orth = orthogonal_cartan(kf.cartan_gram);
  for (int i = 0; i < n; ++i) {
    columns_.push_back(cartan_vector(orth[i]));
    elements_.push_back({"H" + std::to_string(i + 1), true, IntVector(n, 0), 0, {}});
    h0_coords_.push_back(orth[i]);
  }
  for (int sign : {1, -1}) {
    bool k_part = sign > 0;
    for (bool positive : {true, false}) {
      for (int k = 0; k < static_cast<int>(pos.size()); ++k) {
        if (eps(pos[k]) != sign) continue;
        std::size_t idx = positive ? cb.e_index(k) : cb.f_index(k);
        columns_.push_back(unit(idx));
        elements_.push_back({labels[idx], k_part, positive ? pos[k] : negate(pos[k]), 0, {}});
      }
    }
    if (k_part) dim_k_ = elements_.size();
  }
  for (const auto& r : pos) {
    if (eps(r) > 0) delta0_pos_.push_back(r);
  }
}

void SymmetricPair::build_switch() {
  RootSystem rs(inv_.algebra);
  ChevalleyBasis cb(rs);
  KillingForm kf = killing_form(cb);
  const int n = rs.rank();
  const std::size_t N = cb.dim();
  const auto& pos = rs.positive_roots();
  rank_ = n;
  cartan_ = rs.cartan();
  ambient_ = direct_sum(cb.algebra(), cb.algebra(), "L.", "R.");
  ambient_killing_ = SparseRatMatrix(2 * N, 2 * N);
  for (std::size_t i = 0; i < N; ++i) {
    for (const auto& [j, x] : kf.gram.row(i)) {
      ambient_killing_.set(i, j, x);
      ambient_killing_.set(i + N, j + N, x);
    }
  }
  sigma_ = SparseRatMatrix(2 * N, 2 * N);
  for (std::size_t i = 0; i < N; ++i) {
    sigma_.set(i, i + N, Rational(1));
    sigma_.set(i + N, i, Rational(1));
  }
  h0_form_ = kf.dual_form;
  for (auto& row : h0_form_) {
    for (auto& x : row) x /= 2;
  }
  for (std::size_t half : {std::size_t{0}, N}) {
    for (std::size_t i = 0; i < N; ++i) ambient_tau_.push_back(cb.anti_involution(i) + half);
  }

  auto orth = orthogonal_cartan(kf.cartan_gram);
  const auto& labels = cb.algebra().labels();
  for (int sign : {1, -1}) {
    const std::string part = sign > 0 ? "k." : "p.";
    auto both = [&](const SparseVector& v) {
      SparseVector out = v;
      linalg::axpy(out, Rational(sign), shifted(v, N));
      return out;
    };
    for (int i = 0; i < n; ++i) {
      SparseVector h;
      for (int j = 0; j < n; ++j) {
        if (orth[i][j] != 0) h.emplace_back(cb.cartan_index(j), orth[i][j]);
      }
      columns_.push_back(both(h));
      elements_.push_back({part + "H" + std::to_string(i + 1), sign > 0, IntVector(n, 0), 0, {}});
      if (sign > 0) h0_coords_.push_back(orth[i]);
    }
    for (bool positive : {true, false}) {
      for (int k = 0; k < static_cast<int>(pos.size()); ++k) {
        std::size_t idx = positive ? cb.e_index(k) : cb.f_index(k);
        columns_.push_back(both(unit(idx)));
        elements_.push_back({part + labels[idx], sign > 0, positive ? pos[k] : negate(pos[k]), 0, {}});
      }
    }
    if (sign > 0) dim_k_ = elements_.size();
  }
  delta0_pos_ = pos;
}

void SymmetricPair::finish() {
  const std::size_t d = columns_.size();
  if (d != ambient_.dim()) throw std::logic_error("adapted basis has the wrong size");
  basis_ = SparseRatMatrix::from_columns(d, columns_);
  SparseRatMatrix inv = linalg::inverse(basis_);

  std::vector<std::string> labels;
  for (const auto& e : elements_) labels.push_back(e.label);
  adapted_ = LieAlgebra(labels);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      SparseVector v = ambient_.bracket(columns_[i], columns_[j]);
      if (!v.empty()) adapted_.set_bracket(i, j, inv.apply(v));
    }
  }
  killing_ = basis_.transpose() * ambient_killing_ * basis_;

  for (std::size_t i = 0; i < d; ++i) {
    SparseVector image;
    for (const auto& [k, x] : columns_[i]) linalg::axpy(image, x, unit(ambient_tau_[k]));
    SparseVector coords = inv.apply(image);
    if (coords.size() != 1 || coords[0].second != 1) {
      throw std::logic_error("anti-involution does not permute the adapted basis");
    }
    elements_[i].tau = coords[0].first;
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (const auto& [j, x] : killing_.row(i)) {
      if (j != elements_[i].tau) throw std::logic_error("contravariant form is not diagonal");
    }
    elements_[i].norm = killing_.at(i, elements_[i].tau);
    if (elements_[i].norm <= 0) throw std::logic_error("contravariant form is not positive");
  }

  for (const auto& b : delta0_pos_) {
    bool decomposable = false;
    for (const auto& a : delta0_pos_) {
      IntVector rest = subtract(b, a);
      if (std::find(delta0_pos_.begin(), delta0_pos_.end(), rest) != delta0_pos_.end()) decomposable = true;
    }
    if (!decomposable) delta0_simple_.push_back(b);
  }
  rho0_.assign(rank_, Rational(0));
  for (const auto& b : delta0_pos_) {
    for (int i = 0; i < rank_; ++i) rho0_[i] += make_rational(b[i], 2);
  }

  for (std::size_t i = 0; i < d; ++i) {
    const auto& w = elements_[i].weight;
    if (is_zero(w)) continue;
    auto& table = in_k(i) ? k_roots_ : p_nonzero_;
    if (!table.emplace(w, i).second) throw std::logic_error("nonzero weight with multiplicity > 1");
  }
}

std::size_t SymmetricPair::k_root_vector(const IntVector& beta) const {
  auto it = k_roots_.find(beta);
  if (it == k_roots_.end()) throw std::invalid_argument("not a root of k: " + weight_string(beta));
  return it->second;
}

std::vector<IntVector> SymmetricPair::p_weights() const {
  std::vector<IntVector> out;
  for (std::size_t i = dim_k_; i < dim(); ++i) out.push_back(elements_[i].weight);
  return out;
}

std::optional<std::size_t> SymmetricPair::p_vector(const IntVector& weight) const {
  auto it = p_nonzero_.find(weight);
  if (it == p_nonzero_.end()) return std::nullopt;
  return it->second;
}

Rational SymmetricPair::inner(const RatVector& a, const RatVector& b) const {
  Rational s;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) s += a[i] * h0_form_[i][j] * b[j];
  }
  return s;
}

Rational SymmetricPair::inner(const IntVector& a, const IntVector& b) const {
  return inner(to_rational(a), to_rational(b));
}

bool SymmetricPair::is_dominant(const RatVector& xi) const {
  for (const auto& beta : delta0_simple_) {
    RatVector b = to_rational(beta);
    Rational c = 2 * inner(xi, b) / inner(b, b);
    if (c < 0 || !is_integer(c)) return false;
  }
  return true;
}

Rational SymmetricPair::casimir_scalar(const RatVector& xi) const {
  if (!is_dominant(xi)) throw std::invalid_argument("casimir_scalar: weight " + weight_string(xi) + " is not dominant");
  RatVector shifted(xi);
  for (int i = 0; i < rank_; ++i) shifted[i] += 2 * rho0_[i];
  return inner(xi, shifted);
}

Integer SymmetricPair::weyl_dimension(const RatVector& xi) const {
  Rational d(1);
  RatVector shifted(xi);
  for (int i = 0; i < rank_; ++i) shifted[i] += rho0_[i];
  for (const auto& beta : delta0_pos_) {
    RatVector b = to_rational(beta);
    d *= inner(shifted, b) / inner(rho0_, b);
  }
  if (!is_integer(d)) throw std::logic_error("non-integral Weyl dimension");
  return d.get_num();
}

CasimirElement SymmetricPair::casimir_element() const {
  CasimirElement c;
  for (std::size_t i = 0; i < dim_k_; ++i) {
    c.basis.push_back(i);
    Rational inv_norm = 1 / elements_[i].norm;
    c.dual.push_back({{elements_[i].tau, inv_norm}});
  }
  return c;
}

Rational SymmetricPair::casimir_duality_residual() const {
  CasimirElement c = casimir_element();
  Rational worst;
  for (std::size_t i = 0; i < c.basis.size(); ++i) {
    for (std::size_t j = 0; j < c.basis.size(); ++j) {
      Rational v;
      for (const auto& [k, x] : c.dual[j]) v += x * killing_.at(c.basis[i], k);
      if (i == j) v -= 1;
      if (abs(v) > worst) worst = abs(v);
    }
  }
  return worst;
}

SparseRatMatrix SymmetricPair::action_on_p(std::size_t i) const {
  if (!in_k(i)) throw std::invalid_argument("action_on_p: not a k index");
  SparseRatMatrix m(dim_p(), dim_p());
  for (std::size_t j = 0; j < dim_p(); ++j) {
    for (const auto& [r, x] : adapted_.bracket(i, p_index(j))) {
      if (in_k(r)) throw std::logic_error("[k, p] has a k-component");
      m.set(r - dim_k_, j, x);
    }
  }
  return m;
}

bool SymmetricPair::grading_holds() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      bool target_k = in_k(i) == in_k(j);
      for (const auto& [r, x] : adapted_.bracket(i, j)) {
        if (in_k(r) != target_k) return false;
      }
    }
  }
  return true;
}

bool SymmetricPair::sigma_is_involution() const {
  return sigma_ * sigma_ == SparseRatMatrix::identity(sigma_.rows());
}

bool SymmetricPair::sigma_preserves_killing() const {
  return sigma_.transpose() * ambient_killing_ * sigma_ == ambient_killing_;
}

bool SymmetricPair::sigma_is_automorphism() const {
  const std::size_t n = ambient_.dim();
  std::vector<SparseVector> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = sigma_.apply(unit(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sigma_.apply(ambient_.bracket(i, j)) != ambient_.bracket(images[i], images[j])) return false;
    }
  }
  return true;
}

bool SymmetricPair::weights_consistent() const {
  for (int c = 0; c < rank_; ++c) {
    for (std::size_t j = 0; j < dim(); ++j) {
      Rational value;
      const auto& w = elements_[j].weight;
      for (int i = 0; i < rank_; ++i) {
        int pairing = 0;
        for (int m = 0; m < rank_; ++m) pairing += w[m] * cartan_[i][m];
        value += h0_coords_[c][i] * pairing;
      }
      SparseVector expected;
      if (value != 0) expected.emplace_back(j, value);
      if (adapted_.bracket(static_cast<std::size_t>(c), j) != expected) return false;
    }
  }
  return true;
}

std::string SymmetricPair::perturb_structure_constant() {
  for (std::size_t i = 0; i < dim_k_; ++i) {
    for (std::size_t j = dim_k_; j < dim(); ++j) {
      SparseVector v = adapted_.bracket(i, j);
      if (v.empty()) continue;
      std::string what = "[" + elements_[i].label + ", " + elements_[j].label + "] doubled";
      adapted_.set_bracket(i, j, linalg::scaled(v, Rational(2)));
      perturbed_ = true;
      return what;
    }
  }
  throw std::logic_error("no k-on-p bracket to perturb");
}

}  // namespace liehodge
