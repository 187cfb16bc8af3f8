#pragma once

// Affine root data of the twisted loop algebra of a symmetric pair: real
// roots s delta + a (s integer with a in Delta0, s half-odd with a a nonzero
// p-weight), simple roots, rho = Lambda0/2 + rho0, reflections and inversion
// sets of words in the simple reflections.

#include "liehodge/symmetric_pair.hpp"

#include <optional>

namespace liehodge {

struct AffineWeight {
  RatVector finite;  ///< h0* part in simple-root coordinates of Delta0's ambient
  Rational delta;
  Rational lambda0;

  AffineWeight& operator+=(const AffineWeight& o);
  AffineWeight& operator-=(const AffineWeight& o);
  AffineWeight& operator*=(const Rational& c);
  friend AffineWeight operator+(AffineWeight a, const AffineWeight& b) { return a += b; }
  friend AffineWeight operator-(AffineWeight a, const AffineWeight& b) { return a -= b; }
  friend AffineWeight operator*(const Rational& c, AffineWeight a) { return a *= c; }
  AffineWeight operator-() const;
  friend bool operator==(const AffineWeight& a, const AffineWeight& b);
  /// Ordering by (delta, finite, lambda0), for use in sets.
  friend bool operator<(const AffineWeight& a, const AffineWeight& b);

  std::string to_string() const;
};

AffineWeight affine(const IntVector& finite, const Rational& delta, const Rational& lambda0 = Rational(0));
/// The root 1/2 delta - alpha attached to a p-weight alpha.
AffineWeight half_delta_minus(const IntVector& alpha);

using WeylWord = std::vector<int>;

struct NonReducedWordError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RootBoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class AffineRootSystem {
 public:
  AffineRootSystem(const SymmetricPair& sp, const Rational& d_bound = Rational(3));

  const SymmetricPair& pair() const { return sp_; }
  const Rational& d_bound() const { return d_bound_; }

  /// (mu + a delta + b Lambda0, mu' + a' delta + b' Lambda0) = (mu, mu') + ab' + a'b.
  Rational pairing(const AffineWeight& x, const AffineWeight& y) const;

  /// Positive real roots with delta-coefficient at most d_bound.
  const std::vector<AffineWeight>& positive_real_roots() const { return real_; }
  /// Positive imaginary roots s delta, s <= d_bound.
  const std::vector<AffineWeight>& imaginary_roots() const { return imaginary_; }
  const std::vector<AffineWeight>& simple_roots() const { return simple_; }
  int num_simple() const { return static_cast<int>(simple_.size()); }

  /// Throws RootBoundError when |delta| exceeds d_bound.
  bool is_real_root(const AffineWeight& x) const;
  bool is_positive_real_root(const AffineWeight& x) const;

  AffineWeight rho() const;
  /// lambda(alpha_i^vee) = 2 (lambda, alpha_i)/(alpha_i, alpha_i).
  Rational coroot_value(const AffineWeight& lambda, int i) const;
  /// Same number from alpha_i^vee = (2 s_i/(a_i, a_i)) c + h_i.
  Rational coroot_value_explicit(const AffineWeight& lambda, int i) const;

  /// lambda - 2 (lambda, alpha)/(alpha, alpha) alpha; throws on isotropic alpha.
  AffineWeight reflect(const AffineWeight& lambda, const AffineWeight& alpha) const;
  AffineWeight simple_reflection(const AffineWeight& lambda, int i) const;
  /// w(lambda) for w = s_{i1} ... s_{ik}.
  AffineWeight apply(const WeylWord& w, const AffineWeight& lambda) const;
  /// w^{-1}(lambda).
  AffineWeight apply_inverse(const WeylWord& w, const AffineWeight& lambda) const;

  /// N(w) = {a_{i1}, s_{i1} a_{i2}, ...}; throws NonReducedWordError.
  std::vector<AffineWeight> inversion_set(const WeylWord& w) const;
  /// Word with N(w) = target by peeling simple roots, or nullopt if stalled.
  std::optional<WeylWord> find_word(const std::vector<AffineWeight>& target) const;
  /// w(rho) - rho, checked against -sum N(w); throws std::logic_error on mismatch.
  AffineWeight w_rho_minus_rho(const WeylWord& w) const;
  /// w^{-1}(Delta0+) inside the positive roots.
  bool in_w_prime(const WeylWord& w) const;

 private:
  void check_bound(const AffineWeight& x) const;

  const SymmetricPair& sp_;
  Rational d_bound_;
  std::vector<AffineWeight> real_;
  std::vector<AffineWeight> imaginary_;
  std::vector<AffineWeight> simple_;
};

std::string word_string(const WeylWord& w);

}  // namespace liehodge
