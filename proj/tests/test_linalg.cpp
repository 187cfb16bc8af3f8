#include "doctest.h"

#include "liehodge/linalg.hpp"

#include <algorithm>
#include <random>
#include <sstream>

using namespace liehodge;
using namespace liehodge::linalg;

namespace {

SparseRatMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                              double density, int range = 5) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 3);
  SparseRatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (coin(rng) < density) m.add(r, c, make_rational(num(rng), den(rng)));
    }
  }
  return m;
}

// Rank-deficient by construction: product of thin factors.
SparseRatMatrix low_rank(std::mt19937& rng, std::size_t rows, std::size_t cols, std::size_t r) {
  return random_matrix(rng, rows, r, 0.6) * random_matrix(rng, r, cols, 0.6);
}

}  // namespace

TEST_CASE("nullspace of small examples") {
  CHECK(nullspace(SparseRatMatrix::identity(3)).empty());
  CHECK(nullspace(SparseRatMatrix(2, 3)).size() == 3);

  auto m = SparseRatMatrix::from_dense({{1, 2}, {2, 4}});
  auto ker = nullspace(m);
  REQUIRE(ker.size() == 1);
  // Proportional to (2, -1).
  CHECK(ker[0][0] * -1 == ker[0][1] * 2);
  CHECK(ker[0][1] == 1);
}

TEST_CASE("nullspace vectors are annihilated and rank-nullity holds") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
    SparseRatMatrix m = (trial % 2) ? random_matrix(rng, rows, cols, 0.4)
                                    : low_rank(rng, rows, cols, 1 + rng() % 3);
    auto ker = nullspace(m);
    CHECK(rank(m) + ker.size() == cols);
    for (const auto& v : ker) {
      auto image = m.apply(v);
      CHECK(std::all_of(image.begin(), image.end(), [](const Rational& x) { return x == 0; }));
    }
  }
}

TEST_CASE("dense Bareiss and sparse elimination agree bit-exactly") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
    SparseRatMatrix m = (trial % 3 == 0) ? low_rank(rng, rows, cols, 2)
                                         : random_matrix(rng, rows, cols, 0.35, 9);
    auto dense = reduced_row_echelon_dense(m);
    auto sparse = reduced_row_echelon_sparse(m);
    CHECK(dense.pivots == sparse.pivots);
    CHECK(dense.reduced == sparse.reduced);
  }
}

TEST_CASE("results do not depend on entry insertion order") {
  std::mt19937 rng(3);
  SparseRatMatrix m = low_rank(rng, 8, 10, 3);
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> entries;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& [c, x] : m.row(r)) entries.emplace_back(r, c, x);
  }
  std::shuffle(entries.begin(), entries.end(), rng);
  SparseRatMatrix shuffled(m.rows(), m.cols());
  for (const auto& [r, c, x] : entries) shuffled.add(r, c, x);
  CHECK(shuffled == m);
  CHECK(nullspace_matrix(shuffled) == nullspace_matrix(m));
}

TEST_CASE("kernel basis depends only on the kernel") {
  std::mt19937 rng(5);
  SparseRatMatrix m = low_rank(rng, 6, 9, 3);
  // Row operations preserve the kernel.
  SparseRatMatrix mix = random_matrix(rng, 6, 6, 1.0);
  while (rank(mix) < 6) mix = random_matrix(rng, 6, 6, 1.0);
  CHECK(nullspace_matrix(mix * m) == nullspace_matrix(m));
}

TEST_CASE("gram_adjoint") {
  SparseRatMatrix a = SparseRatMatrix::from_dense({{1, 2, 0}, {0, -1, 3}});
  CHECK(gram_adjoint(a, SparseRatMatrix::identity(3), SparseRatMatrix::identity(2)) ==
        a.transpose());
  CHECK(gram_adjoint(SparseRatMatrix(2, 3), SparseRatMatrix::identity(3),
                     SparseRatMatrix::identity(2))
            .is_zero());
  auto scalar = gram_adjoint(SparseRatMatrix::from_dense({{2}}), SparseRatMatrix::from_dense({{3}}),
                             SparseRatMatrix::from_dense({{5}}));
  CHECK(scalar.at(0, 0) == make_rational(10, 3));

  SUBCASE("adjoint identity on basis pairs with non-diagonal Gram matrices") {
    std::mt19937 rng(17);
    SparseRatMatrix map = random_matrix(rng, 4, 5, 0.5);
    // B^T B + I is positive definite.
    SparseRatMatrix bd = random_matrix(rng, 5, 5, 0.5);
    SparseRatMatrix bc = random_matrix(rng, 4, 4, 0.5);
    SparseRatMatrix gd = bd.transpose() * bd + SparseRatMatrix::identity(5);
    SparseRatMatrix gc = bc.transpose() * bc + SparseRatMatrix::identity(4);
    SparseRatMatrix adj = gram_adjoint(map, gd, gc);
    // <A x, y>_cod = <x, A* y>_dom for all basis x, y.
    CHECK((map.transpose() * gc) == (gd * adj));
  }

  CHECK_THROWS_AS(gram_adjoint(SparseRatMatrix::identity(2), SparseRatMatrix(2, 2),
                               SparseRatMatrix::identity(2)),
                  SingularMatrixError);
}

TEST_CASE("is_positive_definite") {
  CHECK(is_positive_definite(SparseRatMatrix::identity(4)));
  CHECK_FALSE(is_positive_definite(SparseRatMatrix::from_dense({{1, 2}, {2, 1}})));
  CHECK(is_positive_definite(SparseRatMatrix::diagonal({make_rational(1, 2), Rational(3)})));
  CHECK_FALSE(is_positive_definite(SparseRatMatrix::from_dense({{1, 0}, {0, 0}})));
  CHECK_THROWS_AS(is_positive_definite(SparseRatMatrix::from_dense({{1, 2}, {0, 1}})),
                  NonSymmetricError);
  // Leading minors 2, 3, 4 for the tridiagonal (2,-1) matrix.
  auto t = SparseRatMatrix::from_dense({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  CHECK(is_positive_definite(t));
  auto pivots = ldl_pivots(t);
  CHECK(pivots[0] * pivots[1] * pivots[2] == 4);
}

TEST_CASE("solve and inverse") {
  auto a = SparseRatMatrix::from_dense({{2, 1}, {1, 3}});
  auto inv = inverse(a);
  CHECK(a * inv == SparseRatMatrix::identity(2));
  CHECK_THROWS_AS(inverse(SparseRatMatrix::from_dense({{1, 2}, {2, 4}})), SingularMatrixError);
}

TEST_CASE("column spaces") {
  auto a = SparseRatMatrix::from_dense({{1, 2}, {0, 0}, {1, 2}});
  auto b = SparseRatMatrix::from_dense({{3}, {0}, {3}});
  CHECK(same_column_space(a, b));
  CHECK(column_space_contains(a, b));
  CHECK_FALSE(column_space_contains(b, SparseRatMatrix::from_dense({{1}, {1}, {0}})));
}

TEST_CASE("dump format round trip") {
  std::mt19937 rng(23);
  SparseRatMatrix m = random_matrix(rng, 5, 7, 0.3, 20);
  std::stringstream ss;
  write_dump(ss, m);
  std::string header;
  std::getline(ss, header);
  CHECK(header == "5 7 " + std::to_string(m.nnz()));
  ss.seekg(0);
  CHECK(read_dump(ss) == m);

  std::stringstream bad("2 2 1\n0 0 1/0\n");
  CHECK_THROWS(read_dump(bad));
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("-6/4") == make_rational(-3, 2));
  CHECK(parse_rational("7") == 7);
  CHECK(to_fraction_string(Rational(3)) == "3/1");
  CHECK_THROWS(parse_rational("1/"));
  CHECK_THROWS(parse_rational("x"));
}
