#include "doctest.h"

#include "liehodge/exterior_complex.hpp"

using namespace liehodge;
using linalg::SparseRatMatrix;

namespace {

const char* const kPairs[] = {"A1:switch", "A1:signs=-", "A2:signs=-+", "B2:signs=-+"};

bool is_zero_vector(const RatVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("bidegree dimensions") {
  auto sw = SymmetricPair::parse("A1:switch");
  ExteriorComplex cx(sw);
  CHECK(cx.space(0, 0)->size() == 1);
  CHECK(cx.space(0, 2)->size() == 0);
  CHECK(cx.space(1, 1)->size() == 3);
  CHECK(cx.space(2, 3)->size() == 9);
  CHECK(cx.space(3, 2)->size() == 0);
  CHECK(cx.space(2, make_rational(3, 2))->size() == 9);
  CHECK_THROWS(cx.space(1, make_rational(1, 3)));
  // Monomials are strictly increasing and have the right total energy.
  for (int ts = 0; ts <= 6; ++ts) {
    for (int p = 0; p <= 3; ++p) {
      for (const auto& m : cx.space(p, ts)->basis) {
        int total = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
          total -= m[i].twice_energy;
          CHECK((m[i].twice_energy % 2 == 0) == sw.in_k(m[i].index));
          if (i > 0) CHECK(m[i - 1] < m[i]);
        }
        CHECK(total == ts);
      }
    }
  }
}

TEST_CASE("boundary of e ^ f for inner A1") {
  auto sp = SymmetricPair::parse("A1:signs=-");
  ExteriorComplex cx(sp);
  auto dom = cx.space(2, 2);
  auto cod = cx.space(1, 2);
  REQUIRE(dom->size() == 1);
  auto d = cx.boundary(2, 2);
  // e = 1, f = 2, h = 0 in the adapted basis.
  std::size_t row = cod->find({LoopVector{-2, 0}});
  CHECK(d.at(row, 0) == -1);
  CHECK(d.nnz() == 1);
  CHECK(cx.boundary(1, 1).is_zero());
  CHECK(cx.boundary(0, 0).is_zero());
  // L_2 (e ^ f) != 0 on the one-dimensional space.
  CHECK(cx.laplacian(2, 2).at(0, 0) != 0);
}

TEST_CASE("complex identities on all tested bidegrees") {
  for (const char* spec : kPairs) {
    auto sp = SymmetricPair::parse(spec);
    ExteriorComplex cx(sp);
    for (int p = 0; p <= 3; ++p) {
      for (int ts = 0; ts <= 5; ++ts) {
        CAPTURE(std::string(spec));
        CAPTURE(p);
        CAPTURE(ts);
        auto d = cx.boundary(p, ts);
        if (p >= 2) CHECK((cx.boundary(p - 1, ts) * d).is_zero());
        auto g = cx.gram(p, ts);
        if (g.rows() > 0) CHECK(linalg::is_positive_definite(g));
        if (p >= 1 && d.rows() > 0 && d.cols() > 0) {
          // {d x, y} = {x, d* y} on all basis pairs.
          auto ds = cx.coboundary(p, ts);
          CHECK(d.transpose() * cx.gram(p - 1, ts) == g * ds);
        }
        auto l = cx.laplacian(p, ts);
        CHECK((g * l).is_symmetric());
        CHECK(cx.d_matrix(p, ts) == SparseRatMatrix::identity(g.rows(), -make_rational(ts, 2)));
        CHECK(cx.garland_residual(p, ts).is_zero());
      }
    }
  }
}

TEST_CASE("first Laplacian summand vanishes at s = p/2") {
  auto sp = SymmetricPair::parse("A2:signs=-+");
  ExteriorComplex cx(sp);
  for (int p = 1; p <= 3; ++p) {
    CHECK(cx.space(p + 1, p)->size() == 0);
    CHECK(cx.laplacian(p, p) == cx.coboundary(p, p) * cx.boundary(p, p));
  }
}

TEST_CASE("Casimir on Lambda^(1,1/2) for the switch on A1") {
  auto sp = SymmetricPair::parse("A1:switch");
  ExteriorComplex cx(sp);
  CHECK(cx.casimir(1, 1) == SparseRatMatrix::identity(3, make_rational(1, 2)));
  CHECK(cx.casimir(0, 0).is_zero());
  CHECK(cx.coboundary(2, 1).rows() == 0);
  CHECK(cx.laplacian(1, 1).is_zero());
}

TEST_CASE("Casimir is central and block diagonal by weight") {
  for (const char* spec : {"A2:switch", "B2:signs=-+"}) {
    auto sp = SymmetricPair::parse(spec);
    ExteriorComplex cx(sp);
    for (auto [p, ts] : {std::pair{2, 3}, std::pair{2, 2}, std::pair{3, 4}}) {
      auto space = cx.space(p, ts);
      auto omega = cx.casimir(p, ts);
      for (const auto& beta : sp.delta0_positive()) {
        auto e = cx.k_action(sp.k_root_vector(beta), p, ts);
        CHECK(omega * e == e * omega);
      }
      for (std::size_t r = 0; r < omega.rows(); ++r) {
        for (const auto& [c, x] : omega.row(r)) CHECK(space->weights[r] == space->weights[c]);
      }
    }
  }
}

TEST_CASE("Laplacian kernel equals Ker d intersected with Ker d*") {
  for (const char* spec : kPairs) {
    auto sp = SymmetricPair::parse(spec);
    ExteriorComplex cx(sp);
    for (auto [p, ts] : {std::pair{1, 3}, std::pair{2, 2}, std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 3}}) {
      CAPTURE(std::string(spec));
      CAPTURE(p);
      CAPTURE(ts);
      auto l = cx.laplacian(p, ts);
      if (l.rows() == 0) continue;
      SparseRatMatrix stacked(0, l.cols());
      auto d = cx.boundary(p, ts);
      auto up = cx.coboundary(p + 1, ts);
      std::vector<RatVector> rows = d.to_dense();
      for (auto& r : up.to_dense()) rows.push_back(r);
      auto both = rows.empty() ? SparseRatMatrix(1, l.cols()) : SparseRatMatrix::from_dense(rows);
      CHECK(linalg::nullspace_matrix(l) == linalg::nullspace_matrix(both));
    }
  }
}

TEST_CASE("d*_2 on Lambda^(1,1) matches the spin formula") {
  for (const char* spec : kPairs) {
    CAPTURE(std::string(spec));
    auto sp = SymmetricPair::parse(spec);
    ExteriorComplex cx(sp);
    FiniteExterior two(sp, 2);
    auto ident = two.identification(*cx.space(2, 2));
    auto dstar = cx.coboundary(2, 2);
    auto source = cx.space(1, 2);
    for (std::size_t x = 0; x < sp.dim_k(); ++x) {
      linalg::SparseVector unit{{source->find({LoopVector{-2, x}}), Rational(1)}};
      auto image = ident.apply(dstar.apply(unit));
      // -1/2 sum [x, p_t] ^ p^t = 2 tau(theta(x)).
      CHECK(image == linalg::scaled(two.coordinates(tau_theta(sp, x)), Rational(2)));
    }
  }
}

TEST_CASE("Lemma: d vanishes on a p-monomial iff its vectors commute") {
  for (const char* spec : kPairs) {
    auto sp = SymmetricPair::parse(spec);
    ExteriorComplex cx(sp);
    for (int p = 1; p <= 4; ++p) {
      auto space = cx.space(p, p);
      auto d = cx.boundary(p, p);
      for (std::size_t col = 0; col < space->size(); ++col) {
        const auto& m = space->basis[col];
        bool commute = true;
        for (std::size_t i = 0; i < m.size(); ++i) {
          for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (!sp.algebra().bracket(m[i].index, m[j].index).empty()) commute = false;
          }
        }
        bool closed = p < 2 || is_zero_vector(d.to_dense().empty() ? RatVector{} : [&] {
          RatVector c(d.rows());
          for (std::size_t r = 0; r < d.rows(); ++r) c[r] = d.at(r, col);
          return c;
        }());
        CHECK(commute == closed);
      }
    }
  }
}

TEST_CASE("contravariance on generators") {
  for (const char* spec : {"A1:switch", "A1:signs=-", "B2:signs=-+"}) {
    CAPTURE(std::string(spec));
    auto sp = SymmetricPair::parse(spec);
    ExteriorComplex cx(sp);
    CHECK(cx.contravariance_failures(3, +1) == 0);
    CHECK(cx.contravariance_failures(3, -1) > 0);
  }
}

TEST_CASE("finite side agrees with the loop side at s = p/2") {
  for (const char* spec : kPairs) {
    auto sp = SymmetricPair::parse(spec);
    ExteriorComplex cx(sp);
    for (int p = 0; p <= static_cast<int>(sp.dim_p()); ++p) {
      CAPTURE(std::string(spec));
      CAPTURE(p);
      FiniteExterior fin(sp, p);
      auto loop = cx.space(p, p);
      REQUIRE(fin.size() == loop->size());
      auto ident = fin.identification(*loop);
      CHECK(fin.casimir() * ident == ident * cx.casimir(p, p));
      CHECK(fin.contravariant_gram() * ident == ident * cx.gram(p, p));
      CHECK(fin.killing_gram().is_symmetric());
    }
  }
}

TEST_CASE("Casimir on Lambda p for the switch on A1") {
  auto sp = SymmetricPair::parse("A1:switch");
  // Lambda^2 of the adjoint of sl2 is again the adjoint.
  CHECK(FiniteExterior(sp, 2).casimir() == SparseRatMatrix::identity(3, make_rational(1, 2)));
  // The top form has weight zero.
  CHECK(FiniteExterior(sp, 3).casimir().is_zero());
}

TEST_CASE("determinant extension of the Killing form on Lambda^2 p") {
  auto sp = SymmetricPair::parse("B2:signs=-+");
  FiniteExterior two(sp, 2);
  auto g = two.killing_gram();
  const auto& kill = sp.killing();
  auto first_two = [&](Mask m) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < sp.dim_p(); ++j) {
      if (m >> j & 1) out.push_back(sp.p_index(j));
    }
    return out;
  };
  for (std::size_t r = 0; r < two.size(); ++r) {
    for (std::size_t c = 0; c < two.size(); ++c) {
      auto a = first_two(two.basis()[r]);
      auto b = first_two(two.basis()[c]);
      Rational det = kill.at(a[0], b[0]) * kill.at(a[1], b[1]) - kill.at(a[0], b[1]) * kill.at(a[1], b[0]);
      CHECK(g.at(r, c) == det);
    }
  }
}

TEST_CASE("wedge_masks signs") {
  CHECK(wedge_masks(0b1, 0b10) == std::pair<int, Mask>{1, 0b11});
  CHECK(wedge_masks(0b10, 0b1) == std::pair<int, Mask>{-1, 0b11});
  CHECK(wedge_masks(0b100, 0b011) == std::pair<int, Mask>{1, 0b111});
  CHECK(wedge_masks(0b1, 0b1).first == 0);
}
