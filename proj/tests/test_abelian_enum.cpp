#include "doctest.h"

#include "liehodge/abelian_enum.hpp"

#include <algorithm>

using namespace liehodge;

namespace {

std::size_t p_of(const SymmetricPair& sp, const IntVector& w) { return *sp.p_vector(w); }

// Every subset of the nonzero p-weights, filtered by the two predicates.
std::vector<WeightSubset> brute_force(const SymmetricPair& sp) {
  std::vector<std::size_t> nonzero;
  for (std::size_t j = 0; j < sp.dim_p(); ++j) {
    if (!is_zero(sp.element(sp.p_index(j)).weight)) nonzero.push_back(sp.p_index(j));
  }
  std::vector<WeightSubset> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << nonzero.size()); ++m) {
    WeightSubset phi;
    for (std::size_t b = 0; b < nonzero.size(); ++b) {
      if (m >> b & 1) phi.push_back(nonzero[b]);
    }
    if (is_abelian(sp, phi) && is_b0_stable(sp, phi)) out.push_back(phi);
  }
  std::sort(out.begin(), out.end(), [](const WeightSubset& a, const WeightSubset& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace

TEST_CASE("is_abelian") {
  auto in = SymmetricPair::parse("A1:signs=-");
  CHECK(is_abelian(in, {}));
  CHECK_FALSE(is_abelian(in, {p_of(in, {1}), p_of(in, {-1})}));
  auto sw = SymmetricPair::parse("A1:switch");
  CHECK(is_abelian(sw, {p_of(sw, {1})}));
  CHECK_THROWS(is_abelian(sw, {0}));
}

TEST_CASE("is_b0_stable") {
  auto a2 = SymmetricPair::parse("A2:switch");
  CHECK(is_b0_stable(a2, {p_of(a2, {1, 1})}));
  CHECK_FALSE(is_b0_stable(a2, {p_of(a2, {1, 0})}));
  auto in = SymmetricPair::parse("A1:signs=-");
  CHECK(is_b0_stable(in, {p_of(in, {-1})}));
  CHECK(is_b0_stable(in, {p_of(in, {1}), p_of(in, {-1})}));
  // -alpha raises into the zero weight space of the switch.
  auto a1 = SymmetricPair::parse("A1:switch");
  CHECK_FALSE(is_b0_stable(a1, {p_of(a1, {-1})}));
}

TEST_CASE("Peterson count for the switch") {
  struct Case { const char* spec; std::size_t count; };
  for (auto [spec, count] : {Case{"A1:switch", 2}, Case{"A2:switch", 4}, Case{"A3:switch", 8},
                             Case{"B2:switch", 4}, Case{"G2:switch", 4}}) {
    CAPTURE(std::string(spec));
    auto sp = SymmetricPair::parse(spec);
    CHECK(enumerate_abelian_bstable(sp).size() == count);
  }
}

TEST_CASE("enumeration agrees with brute force") {
  for (const char* spec : {"A1:switch", "A2:switch", "B2:switch", "A1:signs=-", "A2:signs=-+",
                           "B2:signs=-+", "B2:signs=+-", "G2:signs=+-"}) {
    CAPTURE(std::string(spec));
    auto sp = SymmetricPair::parse(spec);
    auto list = enumerate_abelian_bstable(sp);
    std::vector<WeightSubset> phis;
    for (const auto& s : list) {
      CHECK(s.is_abelian);
      CHECK(s.is_b0_stable);
      CHECK(is_abelian(sp, s.phi));
      CHECK(is_b0_stable(sp, s.phi));
      phis.push_back(s.phi);
    }
    CHECK(phis == brute_force(sp));
  }
}

TEST_CASE("inner A1 has three abelian subspaces") {
  auto sp = SymmetricPair::parse("A1:signs=-");
  auto list = enumerate_abelian_bstable(sp);
  REQUIRE(list.size() == 3);
  CHECK(list[0].dim() == 0);
  CHECK(list[1].dim() == 1);
  CHECK(list[2].dim() == 1);
}

TEST_CASE("existence of abelian subspaces by dimension") {
  auto a1 = SymmetricPair::parse("A1:switch");
  CHECK(has_abelian_of_dimension(a1, 0));
  CHECK(has_abelian_of_dimension(a1, 1));
  CHECK_FALSE(has_abelian_of_dimension(a1, 2));
  auto a2 = SymmetricPair::parse("A2:switch");
  CHECK(has_abelian_of_dimension(a2, 2));
  CHECK_FALSE(has_abelian_of_dimension(a2, 3));
  std::vector<IntVector> two;
  for (const auto& s : enumerate_abelian_bstable(a2)) {
    if (s.dim() == 2) two.push_back(s.mu);
  }
  std::sort(two.begin(), two.end());
  // {theta, theta - alpha_1} and {theta, theta - alpha_2}.
  CHECK(two == std::vector<IntVector>{{1, 2}, {2, 1}});
}

TEST_CASE("upper closures that stay abelian are enumerated") {
  auto sp = SymmetricPair::parse("B2:switch");
  auto list = enumerate_abelian_bstable(sp);
  std::vector<WeightSubset> phis;
  for (const auto& s : list) phis.push_back(s.phi);
  for (const auto& s : list) {
    for (std::size_t j = 0; j < sp.dim_p(); ++j) {
      std::size_t i = sp.p_index(j);
      if (is_zero(sp.element(i).weight) || std::count(s.phi.begin(), s.phi.end(), i)) continue;
      WeightSubset bigger = s.phi;
      bigger.push_back(i);
      std::sort(bigger.begin(), bigger.end());
      if (is_abelian(sp, bigger) && is_b0_stable(sp, bigger)) {
        CHECK(std::find(phis.begin(), phis.end(), bigger) != phis.end());
      }
    }
  }
}

TEST_CASE("subspaces containing Cartan directions are never abelian and stable") {
  for (const char* spec : {"A1:switch", "A2:switch"}) {
    CAPTURE(std::string(spec));
    auto sp = SymmetricPair::parse(spec);
    const std::size_t n = sp.dim_p();
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
      std::vector<char> member(sp.dim(), 0);
      bool has_cartan = false;
      for (std::size_t j = 0; j < n; ++j) {
        if (m >> j & 1) {
          member[sp.p_index(j)] = 1;
          if (is_zero(sp.element(sp.p_index(j)).weight)) has_cartan = true;
        }
      }
      if (!has_cartan) continue;
      bool abelian = true, stable = true;
      for (std::size_t a = 0; a < sp.dim(); ++a) {
        if (!member[a]) continue;
        for (std::size_t b = 0; b < sp.dim(); ++b) {
          if (member[b] && !sp.algebra().bracket(a, b).empty()) abelian = false;
        }
        for (const auto& beta : sp.delta0_positive()) {
          for (const auto& [z, c] : sp.algebra().bracket(sp.k_root_vector(beta), a)) {
            if (!member[z]) stable = false;
          }
        }
      }
      CHECK_FALSE((abelian && stable));
    }
  }
}

TEST_CASE("generators of enumerated subspaces are cycles") {
  for (const char* spec : {"A2:switch", "B2:signs=-+", "A1:signs=-"}) {
    auto sp = SymmetricPair::parse(spec);
    ExteriorComplex cx(sp);
    for (const auto& s : enumerate_abelian_bstable(sp)) {
      int p = static_cast<int>(s.dim());
      auto space = cx.space(p, p);
      linalg::SparseVector v{{space->find(loop_generator(s.phi)), Rational(1)}};
      CHECK(cx.boundary(p, p).apply(v).empty());
    }
  }
}
