#include "liehodge/homology_engine.hpp"

#include <algorithm>
#include <set>

namespace liehodge {

using linalg::SparseRatMatrix;
using linalg::SparseVector;

void VerificationResult::add(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

bool VerificationResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<Check> VerificationResult::failures() const {
  std::vector<Check> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c);
  }
  return out;
}

void VerificationResult::merge(const VerificationResult& other, const std::string& prefix) {
  for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.passed, c.detail});
}

bool HodgeReport::passed() const {
  return failures.empty() &&
         std::all_of(verdicts.begin(), verdicts.end(), [](const auto& kv) { return kv.second.value_or(true); });
}

const std::vector<std::string>& verdict_names() {
  static const std::vector<std::string> names{"eigen", "w", "GL", "finito", "garland"};
  return names;
}

namespace {

std::size_t dim_span(const SparseRatMatrix& m) {
  return m.rows() == 0 || m.cols() == 0 ? 0 : linalg::rank(m);
}

bool same_span(const SparseRatMatrix& a, const SparseRatMatrix& b) {
  std::size_t ra = dim_span(a);
  if (ra != dim_span(b)) return false;
  return ra == 0 || dim_span(linalg::hconcat(a, b)) == ra;
}

bool span_contains(const SparseRatMatrix& space, const SparseRatMatrix& sub) {
  return dim_span(linalg::hconcat(space, sub)) == dim_span(space);
}

SparseRatMatrix vconcat(const std::vector<SparseRatMatrix>& parts, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& m : parts) rows += m.rows();
  SparseRatMatrix out(rows, cols);
  std::size_t r0 = 0;
  for (const auto& m : parts) {
    for (std::size_t r = 0; r < m.rows(); ++r) out.set_row(r0 + r, m.row(r));
    r0 += m.rows();
  }
  return out;
}

SparseRatMatrix kernel(const SparseRatMatrix& m) {
  if (m.rows() == 0) return SparseRatMatrix::identity(m.cols());
  return linalg::nullspace_matrix(m);
}

SparseRatMatrix column_matrix(std::size_t rows, const std::vector<SparseVector>& cols) {
  return SparseRatMatrix::from_columns(rows, cols);
}

std::map<IntVector, std::vector<std::size_t>> blocks_of(const std::vector<IntVector>& weights) {
  std::map<IntVector, std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < weights.size(); ++i) out[weights[i]].push_back(i);
  return out;
}

// Kernel of a weight-preserving square matrix, computed block by block.
SparseRatMatrix block_kernel(const SparseRatMatrix& m, const std::vector<IntVector>& weights) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& [c, x] : m.row(r)) {
      if (weights[r] != weights[c]) throw std::logic_error("matrix does not preserve weights");
    }
  }
  std::vector<SparseVector> cols;
  for (const auto& [w, ids] : blocks_of(weights)) {
    SparseRatMatrix k = kernel(m.submatrix(ids, ids));
    for (std::size_t j = 0; j < k.cols(); ++j) {
      SparseVector v;
      for (const auto& [r, x] : k.column(j)) v.emplace_back(ids[r], x);
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      cols.push_back(std::move(v));
    }
  }
  return column_matrix(m.cols(), cols);
}

Integer binomial(std::size_t n, std::size_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::string weights_string(const std::vector<IntVector>& ws) {
  std::string out = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) out += (i ? ", " : "") + weight_string(ws[i]);
  return out + "}";
}

std::string bidegree(int p, int twice_s) {
  return "(" + std::to_string(p) + ", " + to_string(make_rational(twice_s, 2)) + ")";
}

}  // namespace

HomologyEngine::HomologyEngine(const SymmetricPair& sp, const Rational& d_bound)
    : sp_(sp), complex_(sp), roots_(sp, d_bound), ideals_(enumerate_abelian_bstable(sp)) {}

std::vector<AbelianSubspace> HomologyEngine::ideals_of_dimension(int p) const {
  std::vector<AbelianSubspace> out;
  for (const auto& s : ideals_) {
    if (static_cast<int>(s.dim()) == p) out.push_back(s);
  }
  return out;
}

KModule HomologyEngine::loop_module(int p, int twice_s) const {
  KModule m;
  m.weights = complex_.space(p, twice_s)->weights;
  m.action = [this, p, twice_s](std::size_t i) { return complex_.k_action(i, p, twice_s); };
  m.casimir = complex_.casimir(p, twice_s);
  return m;
}

KModule HomologyEngine::finite_module(const FiniteExterior& fin) const {
  KModule m;
  for (std::size_t i = 0; i < fin.size(); ++i) m.weights.push_back(fin.weight(i));
  m.action = [&fin](std::size_t i) { return fin.action(i); };
  m.casimir = fin.casimir();
  return m;
}

SparseRatMatrix HomologyEngine::harmonic_space(int p, int twice_s) const {
  auto space = complex_.space(p, twice_s);
  return block_kernel(complex_.laplacian(p, twice_s), space->weights);
}

std::vector<std::pair<IntVector, SparseVector>> HomologyEngine::highest_weight_vectors(
    const KModule& module, const SparseRatMatrix& space) const {
  const std::size_t n = module.size();
  if (space.rows() != n) throw std::invalid_argument("space has the wrong ambient dimension");
  std::vector<std::size_t> generators;
  for (int i = 0; i < sp_.rank(); ++i) generators.push_back(static_cast<std::size_t>(i));
  std::vector<SparseRatMatrix> raising;
  for (const auto& beta : sp_.delta0_simple()) {
    generators.push_back(sp_.k_root_vector(beta));
    generators.push_back(sp_.k_root_vector(negate(beta)));
    raising.push_back(module.action(sp_.k_root_vector(beta)));
  }
  if (space.cols() > 0) {
    for (std::size_t g : generators) {
      if (!span_contains(space, module.action(g) * space)) {
        throw NotStableError("subspace is not stable under " + sp_.element(g).label);
      }
    }
  }

  std::vector<std::pair<IntVector, SparseVector>> out;
  std::vector<std::size_t> all_cols(space.cols());
  for (std::size_t j = 0; j < all_cols.size(); ++j) all_cols[j] = j;
  for (const auto& [w, ids] : blocks_of(module.weights)) {
    if (space.cols() == 0) break;
    SparseRatMatrix piece = linalg::column_space(space.submatrix(ids, all_cols));
    if (piece.cols() == 0) continue;
    std::vector<SparseVector> cols;
    for (std::size_t j = 0; j < piece.cols(); ++j) {
      SparseVector v;
      for (const auto& [r, x] : piece.column(j)) v.emplace_back(ids[r], x);
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      cols.push_back(std::move(v));
    }
    SparseRatMatrix basis = column_matrix(n, cols);
    std::vector<SparseRatMatrix> images;
    for (const auto& e : raising) images.push_back(e * basis);
    SparseRatMatrix coeffs = kernel(vconcat(images, basis.cols()));
    SparseRatMatrix hw = basis * coeffs;
    for (std::size_t j = 0; j < hw.cols(); ++j) out.emplace_back(w, hw.column(j));
  }
  return out;
}

std::vector<IsotypicComponent> HomologyEngine::isotypic_components(const KModule& module,
                                                                   const SparseRatMatrix& space,
                                                                   VerificationResult* check) const {
  std::map<IntVector, IsotypicComponent> by_weight;
  for (auto& [w, v] : highest_weight_vectors(module, space)) {
    auto& c = by_weight[w];
    c.highest_weight = w;
    c.multiplicity += 1;
    c.hw_vectors.push_back(std::move(v));
  }
  std::vector<IsotypicComponent> out;
  Integer total = 0;
  for (auto& [w, c] : by_weight) {
    RatVector xi = to_rational(w);
    bool dominant = sp_.is_dominant(xi);
    if (check) check->add("highest weight " + weight_string(w) + " is dominant", dominant);
    if (dominant) {
      c.dimension = sp_.weyl_dimension(xi);
      c.casimir = sp_.casimir_scalar(xi);
    }
    total += c.dimension * static_cast<unsigned long>(c.multiplicity);
    if (check) {
      bool scalar = true;
      for (const auto& v : c.hw_vectors) {
        if (module.casimir.apply(v) != linalg::scaled(v, c.casimir)) scalar = false;
      }
      check->add("Omega = " + to_string(c.casimir) + " on highest weight " + weight_string(w), scalar);
    }
    out.push_back(std::move(c));
  }
  if (check) {
    check->add("sum of multiplicity x Weyl dimension equals dimension", total == space.cols(),
               total.get_str() + " vs " + std::to_string(space.cols()));
  }
  return out;
}

VerificationResult HomologyEngine::verify_garland(int p, int twice_s) const {
  VerificationResult r;
  auto residual = complex_.garland_residual(p, twice_s);
  r.add("L + (d + Omega)/2 = 0 on " + bidegree(p, twice_s), residual.is_zero(),
        residual.is_zero() ? "" : std::to_string(residual.nnz()) + " nonzero residual entries");
  return r;
}

VerificationResult HomologyEngine::verify_eigen(int p) const {
  if (p < 0 || p > static_cast<int>(sp_.dim_p())) throw std::invalid_argument("degree out of range");
  VerificationResult r;
  FiniteExterior fin(sp_, p);
  KModule module = finite_module(fin);
  auto comps = isotypic_components(module, SparseRatMatrix::identity(fin.size()), &r);
  const Rational bound = make_rational(p, 2);
  Rational top = comps.empty() ? Rational(0) : comps.front().casimir;
  std::set<Rational> scalars;
  for (const auto& c : comps) {
    top = std::max(top, c.casimir);
    scalars.insert(c.casimir);
    r.add("Casimir " + to_string(c.casimir) + " of " + weight_string(c.highest_weight) + " <= p/2",
          c.casimir <= bound);
  }
  bool attained = top == bound;
  bool abelian = has_abelian_of_dimension(ideals_, p);
  r.add("p/2 attained iff a " + std::to_string(p) + "-dimensional abelian subspace exists", attained == abelian,
        "max " + to_string(top) + ", abelian " + (abelian ? "yes" : "no"));
  // Eigenspaces as exact kernels, one per candidate scalar.
  std::size_t total = 0;
  for (const auto& c : scalars) {
    std::size_t expected = 0;
    for (const auto& comp : comps) {
      if (comp.casimir == c) expected += comp.multiplicity * comp.dimension.get_ui();
    }
    SparseRatMatrix shifted = module.casimir - SparseRatMatrix::identity(fin.size(), c);
    std::size_t got = block_kernel(shifted, module.weights).cols();
    total += got;
    r.add("Ker(Omega - " + to_string(c) + ") has the isotypic dimension", got == expected,
          std::to_string(got) + " vs " + std::to_string(expected));
  }
  r.add("Omega is diagonalizable", total == fin.size());
  for (const auto& s : ideals_of_dimension(p)) {
    SparseVector v = fin.coordinates(decomposable_generator(sp_, s.phi));
    r.add("Omega v = (p/2) v for " + weights_string(s.weights(sp_)),
          module.casimir.apply(v) == linalg::scaled(v, bound));
  }
  return r;
}

std::vector<IdealMatch> HomologyEngine::match_ideals() const {
  std::vector<IdealMatch> out;
  for (const auto& s : ideals_) {
    IdealMatch m;
    m.phi = s.phi;
    m.weights = s.weights(sp_);
    m.mu = s.mu;
    std::vector<AffineWeight> target;
    for (const auto& a : m.weights) target.push_back(half_delta_minus(a));
    if (auto w = roots_.find_word(target)) {
      m.word = *w;
      m.shift = roots_.apply(m.word, roots_.rho()) - roots_.rho();
    }
    out.push_back(std::move(m));
  }
  return out;
}

VerificationResult HomologyEngine::verify_w() const {
  VerificationResult r;
  std::map<int, std::unique_ptr<FiniteExterior>> fins;
  for (const auto& s : ideals_) {
    const auto weights = s.weights(sp_);
    const std::string name = weights_string(weights);
    const int p = static_cast<int>(s.dim());
    std::vector<AffineWeight> target;
    for (const auto& a : weights) target.push_back(half_delta_minus(a));
    auto w = roots_.find_word(target);
    r.add("word found for " + name, w.has_value());
    if (!w) continue;
    try {
      auto n = roots_.inversion_set(*w);
      r.add("N(w) = roots of " + name, std::set<AffineWeight>(n.begin(), n.end()) ==
                                           std::set<AffineWeight>(target.begin(), target.end()),
            word_string(*w));
      r.add("length of w equals dim for " + name, static_cast<int>(w->size()) == p);
      r.add("w in W' for " + name, roots_.in_w_prime(*w));
      AffineWeight expected{to_rational(s.mu), -make_rational(p, 2), Rational(0)};
      AffineWeight shift = roots_.w_rho_minus_rho(*w);
      r.add("w(rho) - rho = -(dim/2) delta + mu for " + name, shift == expected, shift.to_string());
    } catch (const std::exception& e) {
      r.add("word data for " + name, false, e.what());
    }
    auto& fin = fins[p];
    if (!fin) fin = std::make_unique<FiniteExterior>(sp_, p);
    SparseVector v = fin->coordinates(decomposable_generator(sp_, s.phi));
    r.add("Omega v = (dim/2) v for " + name, fin->casimir().apply(v) == linalg::scaled(v, make_rational(p, 2)));
    r.add("abelian and b0-stable: " + name, is_abelian(sp_, s.phi) && is_b0_stable(sp_, s.phi));
  }

  // Converse over short words: inversion sets made of 1/2 delta - alpha roots.
  std::set<WeightSubset> known;
  for (const auto& s : ideals_) known.insert(s.phi);
  std::vector<WeylWord> words{{}};
  for (int i = 0; i < roots_.num_simple(); ++i) {
    words.push_back({i});
    for (int j = 0; j < roots_.num_simple(); ++j) {
      if (j != i) words.push_back({i, j});
    }
  }
  std::size_t matched = 0;
  for (const auto& w : words) {
    std::vector<AffineWeight> n;
    try {
      n = roots_.inversion_set(w);
    } catch (const std::runtime_error&) {
      continue;
    }
    bool half = std::all_of(n.begin(), n.end(), [](const AffineWeight& b) { return b.delta == make_rational(1, 2); });
    if (!half || !roots_.in_w_prime(w)) continue;
    WeightSubset phi;
    bool ok = true;
    for (const auto& b : n) {
      IntVector alpha;
      for (const auto& x : b.finite) alpha.push_back(-static_cast<int>(x.get_num().get_si()));
      auto idx = sp_.p_vector(alpha);
      if (!idx) ok = false;
      else phi.push_back(*idx);
    }
    std::sort(phi.begin(), phi.end());
    ok = ok && known.count(phi);
    matched += ok;
    r.add("word " + word_string(w) + " gives an enumerated subspace", ok);
  }
  r.add("short converse words examined", true, std::to_string(matched));
  return r;
}

VerificationResult HomologyEngine::verify_gl(int p) const {
  if (p < 0 || p > static_cast<int>(sp_.dim_p())) throw std::invalid_argument("degree out of range");
  VerificationResult r;
  auto space = complex_.space(p, p);
  const std::size_t n = space->size();
  SparseRatMatrix harmonic = harmonic_space(p, p);
  SparseRatMatrix d = complex_.boundary(p, p);
  r.add("Ker L = Ker d", same_span(harmonic, kernel(d)));

  KModule module = loop_module(p, p);
  auto comps = isotypic_components(module, harmonic, &r);
  auto ideals = ideals_of_dimension(p);
  std::vector<IntVector> expected, found;
  for (const auto& s : ideals) expected.push_back(s.mu);
  std::sort(expected.begin(), expected.end());
  bool multiplicity_free = true;
  for (const auto& c : comps) {
    found.push_back(c.highest_weight);
    if (c.multiplicity != 1) multiplicity_free = false;
  }
  r.add("multiplicity free", multiplicity_free);
  r.add("highest weights are the ideal weights", found == expected,
        "found " + weights_string(found) + ", expected " + weights_string(expected));
  Integer total = 0;
  for (const auto& mu : expected) total += sp_.weyl_dimension(to_rational(mu));
  r.add("dim Ker L = sum of Weyl dimensions", total == harmonic.cols(),
        std::to_string(harmonic.cols()) + " vs " + total.get_str());
  if (ideals.empty()) r.add("no ideal and Ker L = 0", harmonic.cols() == 0);

  // The complement of Ker L for the contravariant form is the image of d*.
  SparseRatMatrix complement = harmonic.cols() == 0 ? SparseRatMatrix::identity(n)
                                                    : kernel((complex_.gram(p, p) * harmonic).transpose());
  SparseRatMatrix image = p == 0 ? SparseRatMatrix(n, 0) : complex_.coboundary(p, p);
  r.add("(Ker L)^perp = Im d*", same_span(complement, image));

  for (const auto& s : ideals) {
    const std::string name = weights_string(s.weights(sp_));
    SparseRatMatrix v(n, 1);
    v.set(space->find(loop_generator(s.phi)), 0, Rational(1));
    r.add("generator of " + name + " is harmonic", span_contains(harmonic, v));
    bool highest = true;
    for (const auto& beta : sp_.delta0_simple()) {
      if (!(module.action(sp_.k_root_vector(beta)) * v).is_zero()) highest = false;
    }
    r.add("generator of " + name + " is a highest weight vector", highest);
    std::vector<AffineWeight> target;
    for (const auto& a : s.weights(sp_)) target.push_back(half_delta_minus(a));
    auto w = roots_.find_word(target);
    AffineWeight mu{to_rational(s.mu), -make_rational(p, 2), Rational(0)};
    r.add("mu = w(rho) - rho for " + name, w && roots_.apply(*w, roots_.rho()) - roots_.rho() == mu);
  }
  return r;
}

VerificationResult HomologyEngine::verify_finito(int p) const {
  if (p < 0 || p > static_cast<int>(sp_.dim_p())) throw std::invalid_argument("degree out of range");
  VerificationResult r;
  FiniteExterior fin(sp_, p);
  const std::size_t n = fin.size();
  std::vector<IntVector> weights;
  for (std::size_t i = 0; i < n; ++i) weights.push_back(fin.weight(i));
  SparseRatMatrix omega = fin.casimir();
  SparseRatMatrix a = block_kernel(omega - SparseRatMatrix::identity(n, make_rational(p, 2)), weights);

  auto loop = complex_.space(p, p);
  SparseRatMatrix ident = fin.identification(*loop);
  r.add("Ker(Omega - p/2) = Ker L under the identification", same_span(a, ident * harmonic_space(p, p)));

  SparseRatMatrix j = SparseRatMatrix(n, 0);
  if (p >= 1 && complex_.space(p - 1, p)->size() > 0) {
    SparseRatMatrix image = ident * complex_.coboundary(p, p);
    if (dim_span(image) > 0) j = linalg::column_space(image);
  }
  if (p >= 2) {
    FiniteExterior lower(sp_, p - 2);
    std::vector<SparseVector> cols;
    for (std::size_t x = 0; x < sp_.dim_k(); ++x) {
      FormVector t = tau_theta(sp_, x);
      for (Mask m : lower.basis()) cols.push_back(fin.coordinates(wedge(t, {{m, Rational(1)}})));
    }
    r.add("Im d* = tau theta(k) ^ Lambda^(p-2)", same_span(j, column_matrix(n, cols)));
  } else {
    r.add("Im d* = 0 below degree 2", dim_span(j) == 0);
  }

  const std::size_t da = dim_span(a), dj = dim_span(j);
  Integer c = binomial(sp_.dim_p(), p);
  r.add("dim A + dim J = C(dim p, p)", c == da + dj,
        std::to_string(da) + " + " + std::to_string(dj) + " vs " + c.get_str());
  r.add("A + J spans Lambda^p", c == dim_span(linalg::hconcat(a, j)));
  r.add("A orthogonal to J for the contravariant form", (a.transpose() * fin.contravariant_gram() * j).is_zero());
  r.add("A orthogonal to J for the Killing form", (a.transpose() * fin.killing_gram() * j).is_zero());
  for (const auto& s : ideals_of_dimension(p)) {
    SparseRatMatrix v = column_matrix(n, {fin.coordinates(decomposable_generator(sp_, s.phi))});
    r.add("v in A for " + weights_string(s.weights(sp_)), span_contains(a, v));
  }
  return r;
}

VerificationResult HomologyEngine::generation_check(int p_max) const {
  const int top = std::min(p_max, static_cast<int>(sp_.dim_p()));
  VerificationResult r;
  std::vector<FormVector> tau;
  for (std::size_t x = 0; x < sp_.dim_k(); ++x) tau.push_back(tau_theta(sp_, x));
  std::vector<std::vector<FormVector>> generated;
  for (int p = 0; p <= top; ++p) {
    FiniteExterior fin(sp_, p);
    const std::size_t n = fin.size();
    std::vector<IntVector> weights;
    for (std::size_t i = 0; i < n; ++i) weights.push_back(fin.weight(i));
    SparseRatMatrix a = block_kernel(fin.casimir() - SparseRatMatrix::identity(n, make_rational(p, 2)), weights);
    std::vector<SparseVector> cols;
    for (std::size_t k = 0; k < a.cols(); ++k) cols.push_back(a.column(k));
    if (p >= 2) {
      for (const auto& t : tau) {
        for (const auto& g : generated[p - 2]) cols.push_back(fin.coordinates(wedge(t, g)));
      }
    }
    SparseRatMatrix span = column_matrix(n, cols);
    std::vector<FormVector> basis;
    if (dim_span(span) > 0) {
      SparseRatMatrix reduced = linalg::column_space(span);
      for (std::size_t k = 0; k < reduced.cols(); ++k) basis.push_back(fin.form(reduced.column(k)));
    }
    Integer c = binomial(sp_.dim_p(), p);
    r.add("degree " + std::to_string(p) + " generated by A and tau theta(k)", c == basis.size(),
          std::to_string(basis.size()) + " vs " + c.get_str());
    generated.push_back(std::move(basis));
  }
  return r;
}

VerificationResult HomologyEngine::verify_structure(int p_max, int twice_s_max) const {
  VerificationResult r;
  const auto& g = sp_.algebra();
  r.add("antisymmetry", g.antisymmetric());
  r.add("Jacobi identity", g.jacobi_holds());
  r.add("sigma^2 = id", sp_.sigma_is_involution());
  r.add("sigma preserves the Killing form", sp_.sigma_preserves_killing());
  r.add("sigma is an automorphism", sp_.sigma_is_automorphism());
  r.add("grading [k,k] in k, [k,p] in p, [p,p] in k", sp_.grading_holds());
  r.add("weights consistent", sp_.weights_consistent());
  r.add("Casimir dual basis", sp_.casimir_duality_residual() == 0);
  bool invariant = true;
  for (std::size_t x = 0; x < sp_.dim() && invariant; ++x) {
    for (std::size_t y = 0; y < sp_.dim() && invariant; ++y) {
      for (std::size_t z = 0; z < sp_.dim() && invariant; ++z) {
        if (killing_invariance_residual(g, sp_.killing(), x, y, z) != 0) invariant = false;
      }
    }
  }
  r.add("Killing form invariant", invariant);
  for (int p = 0; p <= p_max; ++p) {
    for (int ts = 0; ts <= twice_s_max; ++ts) {
      const std::string at = " on " + bidegree(p, ts);
      auto d = complex_.boundary(p, ts);
      if (p >= 2) r.add("d^2 = 0" + at, (complex_.boundary(p - 1, ts) * d).is_zero());
      auto gram = complex_.gram(p, ts);
      if (gram.rows() > 0) r.add("Gram positive definite" + at, linalg::is_positive_definite(gram));
      if (p >= 1 && d.rows() > 0 && d.cols() > 0) {
        r.add("d* adjoint to d" + at, d.transpose() * complex_.gram(p - 1, ts) == gram * complex_.coboundary(p, ts));
      }
    }
  }
  std::size_t bad = complex_.contravariance_failures(std::max(twice_s_max, 2), +1);
  r.add("contravariance on generators", bad == 0, std::to_string(bad) + " failing triples");
  return r;
}

HodgeReport HomologyEngine::report(int p, int twice_s, const std::vector<std::string>& which) const {
  HodgeReport rep;
  rep.pair = sp_.name();
  rep.p = p;
  rep.twice_s = twice_s;
  SparseRatMatrix harmonic = harmonic_space(p, twice_s);
  rep.dim_harmonic = harmonic.cols();
  try {
    rep.components = isotypic_components(loop_module(p, twice_s), harmonic);
  } catch (const std::exception& e) {
    rep.failures.push_back({"components", false, e.what()});
  }
  const bool diagonal = twice_s == p && p <= static_cast<int>(sp_.dim_p());
  if (diagonal) {
    for (auto& m : match_ideals()) {
      if (static_cast<int>(m.phi.size()) == p) rep.ideals_matched.push_back(std::move(m));
    }
  }
  auto wanted = [&](const std::string& name) {
    return std::find(which.begin(), which.end(), name) != which.end() ||
           std::find(which.begin(), which.end(), "all") != which.end();
  };
  auto record = [&](const std::string& name, const std::function<VerificationResult()>& run) {
    VerificationResult res;
    try {
      res = run();
    } catch (const std::exception& e) {
      res.add("exception", false, e.what());
    }
    rep.verdicts[name] = res.passed();
    for (auto f : res.failures()) {
      f.name = name + ": " + f.name;
      rep.failures.push_back(std::move(f));
    }
  };
  for (const auto& name : verdict_names()) rep.verdicts[name] = std::nullopt;
  if (wanted("garland")) record("garland", [&] { return verify_garland(p, twice_s); });
  if (diagonal) {
    if (wanted("eigen")) record("eigen", [&] { return verify_eigen(p); });
    if (wanted("w")) record("w", [&] { return verify_w(); });
    if (wanted("GL") || wanted("gl")) record("GL", [&] { return verify_gl(p); });
    if (wanted("finito")) {
      record("finito", [&] {
        VerificationResult res = verify_finito(p);
        if (sp_.dim_p() <= 10) res.merge(generation_check(p));
        return res;
      });
    }
  }
  return rep;
}

}  // namespace liehodge
