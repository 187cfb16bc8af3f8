#include "liehodge/lie_core.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace liehodge {

ParseError::ParseError(std::size_t pos, const std::string& message)
    : std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + message),
      position(pos) {}

// ---------------------------------------------------------------------------
// CartanSpec

void validate(const SimpleFactor& f, std::size_t position) {
  bool ok = false;
  switch (f.type) {
    case 'A': ok = f.rank >= 1; break;
    case 'B': ok = f.rank >= 2; break;
    case 'C': ok = f.rank >= 2; break;
    case 'D': ok = f.rank >= 3; break;
    case 'E': ok = f.rank >= 6 && f.rank <= 8; break;
    case 'F': ok = f.rank == 4; break;
    case 'G': ok = f.rank == 2; break;
    default:
      throw ParseError(position, std::string("unknown Cartan type '") + f.type + "'");
  }
  if (!ok) {
    throw ParseError(position, std::string("invalid rank ") + std::to_string(f.rank) +
                                   " for type " + f.type);
  }
}

CartanSpec CartanSpec::parse(std::string_view text) {
  CartanSpec spec;
  std::size_t pos = 0;
  if (text.empty()) throw ParseError(0, "empty Cartan type");
  while (pos < text.size()) {
    char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
    std::size_t start = pos;
    if (letter < 'A' || letter > 'Z') throw ParseError(pos, "expected a Cartan type letter");
    ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (digits == pos) throw ParseError(pos, "expected a rank after the type letter");
    if (pos - digits > 3) throw ParseError(digits, "rank too large");
    SimpleFactor factor{letter, std::stoi(std::string(text.substr(digits, pos - digits)))};
    validate(factor, start);
    spec.factors.push_back(factor);
    if (pos == text.size()) break;
    if (text[pos] != 'x' && text[pos] != 'X') throw ParseError(pos, "expected 'x' between factors");
    ++pos;
    if (pos == text.size()) throw ParseError(pos, "dangling 'x'");
  }
  return spec;
}

std::string CartanSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += 'x';
    out += factors[i].type;
    out += std::to_string(factors[i].rank);
  }
  return out;
}

int CartanSpec::rank() const {
  int r = 0;
  for (const auto& f : factors) r += f.rank;
  return r;
}

// ---------------------------------------------------------------------------
// Root vectors

int height(const IntVector& root) {
  int h = 0;
  for (int c : root) h += c;
  return h;
}

IntVector negate(const IntVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b.at(i);
  return out;
}

IntVector subtract(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b.at(i);
  return out;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](int c) { return c == 0; });
}

bool is_positive(const IntVector& v) {
  return !is_zero(v) && std::all_of(v.begin(), v.end(), [](int c) { return c >= 0; });
}

namespace {

// Symmetric form of one simple factor, Bourbaki numbering, short roots of
// squared length 2.
std::vector<IntVector> factor_form(const SimpleFactor& f) {
  const int n = f.rank;
  std::vector<IntVector> b(n, IntVector(n, 0));
  auto link = [&](int i, int j, int value) { b[i][j] = b[j][i] = value; };
  for (int i = 0; i < n; ++i) b[i][i] = 2;
  switch (f.type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) b[i][i] = 4;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case 'C':
      b[n - 1][n - 1] = 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case 'E':
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'F':
      b[0][0] = b[1][1] = 4;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case 'G':
      b[1][1] = 6;
      link(0, 1, -3);
      break;
    default:
      break;
  }
  return b;
}

}  // namespace

RootSystem::RootSystem(const CartanSpec& spec) : spec_(spec) {
  if (spec.factors.empty()) throw std::invalid_argument("RootSystem: empty Cartan spec");
  for (const auto& f : spec.factors) validate(f);
  rank_ = spec.rank();
  form_.assign(rank_, IntVector(rank_, 0));
  int offset = 0;
  for (const auto& f : spec.factors) {
    auto block = factor_form(f);
    for (int i = 0; i < f.rank; ++i) {
      for (int j = 0; j < f.rank; ++j) form_[offset + i][offset + j] = block[i][j];
    }
    offset += f.rank;
  }
  cartan_.assign(rank_, IntVector(rank_, 0));
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) cartan_[i][j] = 2 * form_[i][j] / form_[i][i];
  }

  // Closure by root strings: beta + alpha_i is a root iff q - <beta, alpha_i^vee> > 0,
  // where q is the length of the downward alpha_i-string through beta.
  std::set<IntVector> known;
  std::vector<IntVector> layer;
  for (int i = 0; i < rank_; ++i) layer.push_back(simple_root(i));
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end(), std::greater<IntVector>());
    for (const auto& r : layer) {
      known.insert(r);
      positive_.push_back(r);
    }
    std::set<IntVector> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < rank_; ++i) {
        int q = 0;
        IntVector v = beta;
        while (true) {
          v[i] -= 1;
          if (!known.count(v)) break;
          ++q;
        }
        if (q - coroot_pairing(beta, i) > 0) {
          IntVector up = beta;
          up[i] += 1;
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
  }
  for (std::size_t k = 0; k < positive_.size(); ++k) index_[positive_[k]] = static_cast<int>(k);
}

IntVector RootSystem::simple_root(int i) const {
  IntVector v(rank_, 0);
  v.at(i) = 1;
  return v;
}

int RootSystem::positive_index(const IntVector& root) const {
  auto it = index_.find(root);
  return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_root(const IntVector& v) const {
  return positive_index(v) >= 0 || positive_index(negate(v)) >= 0;
}

int RootSystem::inner(const IntVector& a, const IntVector& b) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) s += a[i] * form_[i][j] * b[j];
  }
  return s;
}

int RootSystem::coroot_pairing(const IntVector& a, int i) const {
  int s = 0;
  for (int j = 0; j < rank_; ++j) s += a[j] * cartan_[i][j];
  return s;
}

// ---------------------------------------------------------------------------
// LieAlgebra

LieAlgebra::LieAlgebra(std::vector<std::string> labels)
    : labels_(std::move(labels)), table_(labels_.size(), std::vector<Vector>(labels_.size())) {}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, Vector v) {
  if (i == j && !v.empty()) throw std::invalid_argument("set_bracket: [x,x] must vanish");
  table_.at(j).at(i) = linalg::scaled(v, Rational(-1));
  table_.at(i).at(j) = std::move(v);
}

LieAlgebra::Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  Vector out;
  for (const auto& [i, a] : x) {
    for (const auto& [j, b] : y) linalg::axpy(out, a * b, table_[i][j]);
  }
  return out;
}

linalg::SparseRatMatrix LieAlgebra::ad(std::size_t i) const {
  linalg::SparseRatMatrix m(dim(), dim());
  for (std::size_t l = 0; l < dim(); ++l) {
    for (const auto& [k, x] : table_[i][l]) m.add(k, l, x);
  }
  return m;
}

linalg::SparseRatMatrix LieAlgebra::ad(const Vector& x) const {
  linalg::SparseRatMatrix m(dim(), dim());
  for (const auto& [i, a] : x) m += ad(i) * a;
  return m;
}

LieAlgebra::Vector LieAlgebra::jacobi_residual(std::size_t i, std::size_t j, std::size_t k) const {
  Vector bi{{i, Rational(1)}}, bj{{j, Rational(1)}}, bk{{k, Rational(1)}};
  Vector out = bracket(bi, table_[j][k]);
  linalg::axpy(out, Rational(1), bracket(bj, table_[k][i]));
  linalg::axpy(out, Rational(1), bracket(bk, table_[i][j]));
  return out;
}

bool LieAlgebra::jacobi_holds() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = i + 1; j < dim(); ++j) {
      for (std::size_t k = j + 1; k < dim(); ++k) {
        if (!jacobi_residual(i, j, k).empty()) return false;
      }
    }
  }
  return true;
}

bool LieAlgebra::antisymmetric() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!table_[i][i].empty()) return false;
    for (std::size_t j = i + 1; j < dim(); ++j) {
      if (table_[i][j] != linalg::scaled(table_[j][i], Rational(-1))) return false;
    }
  }
  return true;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b, const std::string& prefix_a,
                      const std::string& prefix_b) {
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(prefix_a + l);
  for (const auto& l : b.labels()) labels.push_back(prefix_b + l);
  LieAlgebra sum(std::move(labels));
  const std::size_t shift = a.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i + 1; j < a.dim(); ++j) sum.set_bracket(i, j, a.bracket(i, j));
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = i + 1; j < b.dim(); ++j) {
      LieAlgebra::Vector v = b.bracket(i, j);
      for (auto& e : v) e.first += shift;
      sum.set_bracket(i + shift, j + shift, std::move(v));
    }
  }
  return sum;
}

linalg::SparseRatMatrix killing_gram(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<linalg::SparseRatMatrix> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad(i));
  linalg::SparseRatMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      linalg::SparseRatMatrix prod = ads[i] * ads[j];
      Rational trace;
      for (std::size_t k = 0; k < n; ++k) trace += prod.at(k, k);
      if (trace != 0) {
        gram.set(i, j, trace);
        gram.set(j, i, trace);
      }
    }
  }
  return gram;
}

// ---------------------------------------------------------------------------
// ChevalleyBasis
//
// Signs follow the extraspecial-pair convention: for each non-simple
// positive root xi, its extraspecial pair is (alpha_i, xi - alpha_i) with i
// minimal, and N_{alpha_i, xi - alpha_i} = +(p+1). All other constants are
// derived from the standard relations
//   N_{r,s}/(t,t) = N_{s,t}/(r,r) = N_{t,r}/(s,s)              (r+s+t = 0)
//   N_{-r,-s} = -N_{r,s}
//   N_{r,s}N_{t,u}/(r+s,r+s) + N_{s,t}N_{r,u}/(s+t,s+t)
//     + N_{t,r}N_{s,u}/(t+r,t+r) = 0                           (r+s+t+u = 0)

namespace {

class StructureConstants {
 public:
  explicit StructureConstants(const RootSystem& rs) : rs_(rs) {}

  Rational get(const IntVector& r, const IntVector& s) {
    bool rp = is_positive(r), sp = is_positive(s);
    if (rp && sp) return positive(rs_.positive_index(r), rs_.positive_index(s));
    if (!rp && !sp) return -positive(rs_.positive_index(negate(r)), rs_.positive_index(negate(s)));
    IntVector t = negate(add(r, s));
    if (is_positive(s) == is_positive(t)) return make_rational(norm(t), norm(r)) * get(s, t);
    return make_rational(norm(t), norm(s)) * get(t, r);
  }

  Rational get_or_zero(const IntVector& r, const IntVector& s) {
    IntVector sum = add(r, s);
    if (is_zero(sum) || !rs_.is_root(sum)) return Rational(0);
    return get(r, s);
  }

  const std::map<std::pair<int, int>, int>& table() const { return cache_; }

 private:
  int norm(const IntVector& v) const { return rs_.inner(v, v); }

  std::pair<int, int> extraspecial(int xi) const {
    const IntVector& root = rs_.positive_roots()[xi];
    for (int i = 0; i < rs_.rank(); ++i) {
      IntVector rest = root;
      rest[i] -= 1;
      int idx = rs_.positive_index(rest);
      if (idx >= 0) return {i, idx};
    }
    throw std::logic_error("extraspecial pair requested for a simple root");
  }

  Rational positive(int a, int b) {
    auto key = std::make_pair(a, b);
    if (auto it = cache_.find(key); it != cache_.end()) return Rational(it->second);
    const auto& roots = rs_.positive_roots();
    IntVector xi = add(roots[a], roots[b]);
    int xi_idx = rs_.positive_index(xi);
    if (xi_idx < 0) throw std::logic_error("structure constant requested for a non-root sum");
    auto [ea, eb] = extraspecial(xi_idx);
    Rational value;
    if (a == ea && b == eb) {
      value = string_length(roots[ea], roots[eb]) + 1;
    } else if (a == eb && b == ea) {
      value = -(string_length(roots[ea], roots[eb]) + 1);
    } else if (a > b) {
      value = -positive(b, a);
    } else {
      const IntVector& alpha = roots[a];
      const IntVector& beta = roots[b];
      const IntVector& alpha1 = roots[ea];
      const IntVector& beta1 = roots[eb];
      Rational sum;
      IntVector d1 = subtract(beta, alpha1);
      if (!is_zero(d1) && rs_.is_root(d1)) {
        sum += get(beta, negate(alpha1)) * get(alpha, negate(beta1)) / norm(d1);
      }
      IntVector d2 = subtract(alpha, alpha1);
      if (!is_zero(d2) && rs_.is_root(d2)) {
        sum += get(negate(alpha1), alpha) * get(beta, negate(beta1)) / norm(d2);
      }
      value = sum * norm(xi) / positive(ea, eb);
    }
    if (!is_integer(value)) throw std::logic_error("non-integral structure constant");
    cache_[key] = static_cast<int>(value.get_num().get_si());
    return value;
  }

  // Largest p with beta - p*alpha a root.
  int string_length(const IntVector& alpha, const IntVector& beta) const {
    int p = 0;
    IntVector v = subtract(beta, alpha);
    while (!is_zero(v) && rs_.is_root(v)) {
      ++p;
      v = subtract(v, alpha);
    }
    return p;
  }

  const RootSystem& rs_;
  std::map<std::pair<int, int>, int> cache_;
};

std::string root_label(const IntVector& r) {
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i) s += std::to_string(r[i]);
  return s;
}

}  // namespace

ChevalleyBasis::ChevalleyBasis(const RootSystem& roots) : roots_(roots) {
  const int n = roots_.rank();
  const auto& pos = roots_.positive_roots();
  const int m = static_cast<int>(pos.size());

  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back("h" + std::to_string(i + 1));
    elements_.push_back({ChevalleyKind::Cartan, i, IntVector(n, 0)});
  }
  for (int k = 0; k < m; ++k) {
    labels.push_back("e" + root_label(pos[k]));
    elements_.push_back({ChevalleyKind::Positive, k, pos[k]});
  }
  for (int k = 0; k < m; ++k) {
    labels.push_back("f" + root_label(pos[k]));
    elements_.push_back({ChevalleyKind::Negative, k, negate(pos[k])});
  }
  algebra_ = LieAlgebra(labels);

  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < m; ++k) {
      int c = roots_.coroot_pairing(pos[k], i);
      if (c == 0) continue;
      algebra_.set_bracket(cartan_index(i), e_index(k), {{e_index(k), Rational(c)}});
      algebra_.set_bracket(cartan_index(i), f_index(k), {{f_index(k), Rational(-c)}});
    }
  }
  for (int k = 0; k < m; ++k) {
    IntVector h = coroot(pos[k]);
    LieAlgebra::Vector v;
    for (int i = 0; i < n; ++i) {
      if (h[i] != 0) v.emplace_back(cartan_index(i), Rational(h[i]));
    }
    algebra_.set_bracket(e_index(k), f_index(k), std::move(v));
  }

  StructureConstants constants(roots_);
  const std::size_t dim = algebra_.dim();
  for (std::size_t i = static_cast<std::size_t>(n); i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      const IntVector& r = elements_[i].weight;
      const IntVector& s = elements_[j].weight;
      IntVector sum = add(r, s);
      if (is_zero(sum) || !roots_.is_root(sum)) continue;
      Rational value = constants.get(r, s);
      algebra_.set_bracket(i, j, {{root_vector(sum), value}});
    }
  }
  positive_constants_ = constants.table();
}

std::size_t ChevalleyBasis::e_index(int root) const {
  return static_cast<std::size_t>(roots_.rank() + root);
}

std::size_t ChevalleyBasis::f_index(int root) const {
  return static_cast<std::size_t>(roots_.rank() + static_cast<int>(roots_.num_positive()) + root);
}

std::size_t ChevalleyBasis::root_vector(const IntVector& root) const {
  int k = roots_.positive_index(root);
  if (k >= 0) return e_index(k);
  k = roots_.positive_index(negate(root));
  if (k >= 0) return f_index(k);
  throw std::invalid_argument("root_vector: not a root");
}

int ChevalleyBasis::structure_constant(const IntVector& alpha, const IntVector& beta) const {
  const auto& v = algebra_.bracket(root_vector(alpha), root_vector(beta));
  if (v.empty()) return 0;
  return static_cast<int>(v.front().second.get_num().get_si());
}

IntVector ChevalleyBasis::coroot(const IntVector& alpha) const {
  const int n = roots_.rank();
  int norm = roots_.inner(alpha, alpha);
  IntVector h(n, 0);
  for (int i = 0; i < n; ++i) {
    int num = alpha[i] * roots_.symmetric_form()[i][i];
    if (num % norm != 0) throw std::logic_error("non-integral coroot");
    h[i] = num / norm;
  }
  return h;
}

std::size_t ChevalleyBasis::anti_involution(std::size_t basis_index) const {
  const auto& el = elements_.at(basis_index);
  switch (el.kind) {
    case ChevalleyKind::Cartan: return basis_index;
    case ChevalleyKind::Positive: return f_index(el.index);
    case ChevalleyKind::Negative: return e_index(el.index);
  }
  return basis_index;
}

// ---------------------------------------------------------------------------
// Killing form

Rational KillingForm::dual_inner(const RatVector& a, const RatVector& b) const {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * dual_form[i][j] * b[j];
  }
  return s;
}

KillingForm killing_form(const ChevalleyBasis& basis) {
  const LieAlgebra& g = basis.algebra();
  const std::size_t dim = g.dim();
  const auto& els = basis.elements();
  KillingForm kf;
  kf.gram = linalg::SparseRatMatrix(dim, dim);
  // Only pairs of opposite weight can pair nontrivially.
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      if (!is_zero(add(els[i].weight, els[j].weight))) continue;
      Rational trace;
      for (std::size_t l = 0; l < dim; ++l) {
        LieAlgebra::Vector inner = g.bracket(j, l);
        LieAlgebra::Vector outer = g.bracket({{i, Rational(1)}}, inner);
        for (const auto& [k, x] : outer) {
          if (k == l) trace += x;
        }
      }
      if (trace != 0) {
        kf.gram.set(i, j, trace);
        kf.gram.set(j, i, trace);
      }
    }
  }
  const int n = basis.roots().rank();
  std::vector<std::size_t> cartan(n);
  for (int i = 0; i < n; ++i) cartan[i] = basis.cartan_index(i);
  kf.cartan_gram = kf.gram.submatrix(cartan, cartan);

  // C[i][k] = alpha_i(h_k); (alpha_i, alpha_j) = C G^{-1} C^T.
  linalg::SparseRatMatrix c(n, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) c.set(i, k, Rational(basis.roots().cartan()[k][i]));
  }
  linalg::SparseRatMatrix dual = c * linalg::solve(kf.cartan_gram, c.transpose());
  kf.dual_form = dual.to_dense();
  return kf;
}

Rational killing_invariance_residual(const LieAlgebra& g, const linalg::SparseRatMatrix& gram,
                                     std::size_t x, std::size_t y, std::size_t z) {
  auto pair = [&](const LieAlgebra::Vector& u, std::size_t b) {
    Rational s;
    for (const auto& [k, a] : u) s += a * gram.at(k, b);
    return s;
  };
  return pair(g.bracket(x, y), z) + pair(g.bracket(x, z), y);
}

}  // namespace liehodge
