#include "liehodge/affine_weyl.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace liehodge {

AffineWeight& AffineWeight::operator+=(const AffineWeight& o) {
  if (finite.size() != o.finite.size()) throw std::invalid_argument("affine weights of different rank");
  for (std::size_t i = 0; i < finite.size(); ++i) finite[i] += o.finite[i];
  delta += o.delta;
  lambda0 += o.lambda0;
  return *this;
}

AffineWeight& AffineWeight::operator-=(const AffineWeight& o) { return *this += -o; }

AffineWeight& AffineWeight::operator*=(const Rational& c) {
  for (auto& x : finite) x *= c;
  delta *= c;
  lambda0 *= c;
  return *this;
}

AffineWeight AffineWeight::operator-() const {
  AffineWeight out = *this;
  out *= Rational(-1);
  return out;
}

bool operator==(const AffineWeight& a, const AffineWeight& b) {
  return a.finite == b.finite && a.delta == b.delta && a.lambda0 == b.lambda0;
}

bool operator<(const AffineWeight& a, const AffineWeight& b) {
  if (a.delta != b.delta) return a.delta < b.delta;
  if (a.finite != b.finite) return a.finite < b.finite;
  return a.lambda0 < b.lambda0;
}

std::string AffineWeight::to_string() const {
  std::ostringstream os;
  os << liehodge::to_string(delta) << "d";
  os << (finite.empty() ? "" : "+" + weight_string(finite));
  if (lambda0 != 0) os << "+" << liehodge::to_string(lambda0) << "L0";
  return os.str();
}

AffineWeight affine(const IntVector& finite, const Rational& delta, const Rational& lambda0) {
  return {to_rational(finite), delta, lambda0};
}

AffineWeight half_delta_minus(const IntVector& alpha) {
  return affine(negate(alpha), make_rational(1, 2));
}

std::string word_string(const WeylWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? " " : "") + ("s" + std::to_string(w[i]));
  return out;
}

namespace {

std::optional<IntVector> integral(const RatVector& v) {
  IntVector out;
  for (const auto& x : v) {
    if (!is_integer(x)) return std::nullopt;
    out.push_back(static_cast<int>(x.get_num().get_si()));
  }
  return out;
}

bool half_odd(const Rational& s) { return !is_integer(s) && is_integer(2 * s); }

}  // namespace

AffineRootSystem::AffineRootSystem(const SymmetricPair& sp, const Rational& d_bound)
    : sp_(sp), d_bound_(d_bound) {
  if (d_bound_ < 1) throw std::invalid_argument("d_bound must be at least 1");
  const auto& pos0 = sp.delta0_positive();
  std::set<IntVector> p_nonzero;
  bool p_has_zero = false;
  for (const auto& w : sp.p_weights()) {
    if (is_zero(w)) p_has_zero = true;
    else p_nonzero.insert(w);
  }

  for (const auto& beta : pos0) real_.push_back(affine(beta, Rational(0)));
  for (int twice_s = 1; make_rational(twice_s, 2) <= d_bound_; ++twice_s) {
    Rational s = make_rational(twice_s, 2);
    if (twice_s % 2 == 0) {
      imaginary_.push_back(affine(IntVector(sp.rank(), 0), s));
      for (const auto& beta : pos0) {
        real_.push_back(affine(beta, s));
        real_.push_back(affine(negate(beta), s));
      }
    } else {
      if (p_has_zero) imaginary_.push_back(affine(IntVector(sp.rank(), 0), s));
      for (const auto& w : p_nonzero) real_.push_back(affine(w, s));
    }
  }

  std::set<AffineWeight> positive(real_.begin(), real_.end());
  positive.insert(imaginary_.begin(), imaginary_.end());
  std::vector<AffineWeight> top, level;
  for (const auto& a : real_) {
    bool decomposable = false;
    for (const auto& b : positive) {
      if (b.delta > a.delta) continue;
      if (positive.count(a - b)) {
        decomposable = true;
        break;
      }
    }
    if (decomposable) continue;
    (a.delta > 0 ? top : level).push_back(a);
  }
  std::sort(top.begin(), top.end(), [](const AffineWeight& a, const AffineWeight& b) {
    if (a.delta != b.delta) return a.delta < b.delta;
    return a.finite < b.finite;
  });
  simple_ = top;
  simple_.insert(simple_.end(), level.begin(), level.end());
  if (static_cast<int>(simple_.size()) != sp.rank() + 1) {
    throw std::logic_error("expected rank + 1 simple roots for " + sp.name() + ", found " +
                           std::to_string(simple_.size()));
  }
}

Rational AffineRootSystem::pairing(const AffineWeight& x, const AffineWeight& y) const {
  return sp_.inner(x.finite, y.finite) + x.delta * y.lambda0 + y.delta * x.lambda0;
}

void AffineRootSystem::check_bound(const AffineWeight& x) const {
  if (abs(x.delta) > d_bound_) {
    throw RootBoundError("delta coefficient " + to_string(x.delta) + " exceeds the bound " + to_string(d_bound_));
  }
}

bool AffineRootSystem::is_real_root(const AffineWeight& x) const {
  if (x.lambda0 != 0) return false;
  check_bound(x);
  auto fin = integral(x.finite);
  if (!fin || is_zero(*fin)) return false;
  if (is_integer(x.delta)) {
    const auto& pos = sp_.delta0_positive();
    return std::find(pos.begin(), pos.end(), *fin) != pos.end() ||
           std::find(pos.begin(), pos.end(), negate(*fin)) != pos.end();
  }
  return half_odd(x.delta) && sp_.p_vector(*fin).has_value();
}

bool AffineRootSystem::is_positive_real_root(const AffineWeight& x) const {
  if (!is_real_root(x)) return false;
  if (x.delta > 0) return true;
  if (x.delta < 0) return false;
  const auto& pos = sp_.delta0_positive();
  return std::find(pos.begin(), pos.end(), *integral(x.finite)) != pos.end();
}

AffineWeight AffineRootSystem::rho() const { return {sp_.rho0(), Rational(0), make_rational(1, 2)}; }

Rational AffineRootSystem::coroot_value(const AffineWeight& lambda, int i) const {
  const auto& a = simple_.at(i);
  return 2 * pairing(lambda, a) / pairing(a, a);
}

Rational AffineRootSystem::coroot_value_explicit(const AffineWeight& lambda, int i) const {
  const auto& a = simple_.at(i);
  Rational norm = sp_.inner(a.finite, a.finite);
  // lambda(c) is the Lambda0 coefficient; lambda(h_i) = 2 (lambda, a)/(a, a) on h0.
  return 2 * a.delta / norm * lambda.lambda0 + 2 * sp_.inner(lambda.finite, a.finite) / norm;
}

AffineWeight AffineRootSystem::reflect(const AffineWeight& lambda, const AffineWeight& alpha) const {
  Rational n = pairing(alpha, alpha);
  if (n == 0) throw std::invalid_argument("reflection in an isotropic vector");
  return lambda - (2 * pairing(lambda, alpha) / n) * alpha;
}

AffineWeight AffineRootSystem::simple_reflection(const AffineWeight& lambda, int i) const {
  return reflect(lambda, simple_.at(i));
}

AffineWeight AffineRootSystem::apply(const WeylWord& w, const AffineWeight& lambda) const {
  AffineWeight out = lambda;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = simple_reflection(out, *it);
  return out;
}

AffineWeight AffineRootSystem::apply_inverse(const WeylWord& w, const AffineWeight& lambda) const {
  AffineWeight out = lambda;
  for (int i : w) out = simple_reflection(out, i);
  return out;
}

std::vector<AffineWeight> AffineRootSystem::inversion_set(const WeylWord& w) const {
  std::vector<AffineWeight> out;
  std::set<AffineWeight> seen;
  for (std::size_t k = 0; k < w.size(); ++k) {
    AffineWeight beta = simple_.at(w[k]);
    for (std::size_t j = k; j-- > 0;) beta = simple_reflection(beta, w[j]);
    if (!is_positive_real_root(beta) || !seen.insert(beta).second) {
      throw NonReducedWordError("word " + word_string(w) + " is not reduced");
    }
    out.push_back(beta);
  }
  return out;
}

std::optional<WeylWord> AffineRootSystem::find_word(const std::vector<AffineWeight>& target) const {
  std::set<AffineWeight> rest(target.begin(), target.end());
  if (rest.size() != target.size()) return std::nullopt;
  WeylWord word;
  while (!rest.empty()) {
    int found = -1;
    for (int i = 0; i < num_simple() && found < 0; ++i) {
      if (rest.count(simple_[i])) found = i;
    }
    if (found < 0) return std::nullopt;
    std::set<AffineWeight> next;
    for (const auto& beta : rest) {
      if (beta == simple_[found]) continue;
      AffineWeight r = simple_reflection(beta, found);
      if (!is_positive_real_root(r)) return std::nullopt;
      next.insert(r);
    }
    word.push_back(found);
    rest = std::move(next);
  }
  return word;
}

AffineWeight AffineRootSystem::w_rho_minus_rho(const WeylWord& w) const {
  AffineWeight direct = apply(w, rho()) - rho();
  AffineWeight summed{RatVector(sp_.rank(), Rational(0)), Rational(0), Rational(0)};
  for (const auto& beta : inversion_set(w)) summed -= beta;
  if (!(direct == summed)) {
    throw std::logic_error("w(rho) - rho = " + direct.to_string() + " but -sum N(w) = " + summed.to_string());
  }
  return direct;
}

bool AffineRootSystem::in_w_prime(const WeylWord& w) const {
  for (const auto& beta : sp_.delta0_positive()) {
    if (!is_positive_real_root(apply_inverse(w, affine(beta, Rational(0))))) return false;
  }
  return true;
}

}  // namespace liehodge
