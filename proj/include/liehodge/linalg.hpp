#pragma once

// Exact sparse linear algebra over arbitrary-precision rationals.

#include "liehodge/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <utility>
#include <vector>

namespace liehodge::linalg {

using SparseEntry = std::pair<std::size_t, Rational>;
/// Sorted by index, no stored zeros.
using SparseVector = std::vector<SparseEntry>;

struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonSymmetricError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Adds `scale * v` into `acc` (both sorted sparse vectors).
void axpy(SparseVector& acc, const Rational& scale, const SparseVector& v);
SparseVector scaled(const SparseVector& v, const Rational& scale);
SparseVector to_sparse(const RatVector& v);
RatVector to_dense(const SparseVector& v, std::size_t n);

/// Row-major sparse matrix. Entries of a row are kept sorted by column and
/// zeros are never stored, so two equal matrices compare equal entrywise.
class SparseRatMatrix {
 public:
  using Row = SparseVector;

  SparseRatMatrix() = default;
  SparseRatMatrix(std::size_t nrows, std::size_t ncols);

  static SparseRatMatrix identity(std::size_t n, const Rational& scale = Rational(1));
  static SparseRatMatrix diagonal(const RatVector& diag);
  static SparseRatMatrix from_dense(const std::vector<RatVector>& rows);
  static SparseRatMatrix from_columns(std::size_t nrows, const std::vector<SparseVector>& cols);

  std::size_t rows() const { return nrows_; }
  std::size_t cols() const { return ncols_; }
  std::size_t nnz() const;

  /// Accumulates `value` into entry (r, c).
  void add(std::size_t r, std::size_t c, const Rational& value);
  void set(std::size_t r, std::size_t c, const Rational& value);
  Rational at(std::size_t r, std::size_t c) const;
  const Row& row(std::size_t r) const { return data_.at(r); }
  void set_row(std::size_t r, Row row);
  SparseVector column(std::size_t c) const;

  bool is_zero() const;
  bool is_square() const { return nrows_ == ncols_; }
  bool is_diagonal() const;
  bool is_symmetric() const;

  SparseRatMatrix transpose() const;
  SparseRatMatrix submatrix(const std::vector<std::size_t>& row_ids,
                            const std::vector<std::size_t>& col_ids) const;
  /// Columns `col_ids` kept, rows untouched.
  SparseRatMatrix select_columns(const std::vector<std::size_t>& col_ids) const;
  std::vector<RatVector> to_dense() const;

  RatVector apply(const RatVector& x) const;
  SparseVector apply(const SparseVector& x) const;

  SparseRatMatrix& operator+=(const SparseRatMatrix& other);
  SparseRatMatrix& operator-=(const SparseRatMatrix& other);
  SparseRatMatrix& operator*=(const Rational& scale);

  friend SparseRatMatrix operator+(SparseRatMatrix a, const SparseRatMatrix& b) { return a += b; }
  friend SparseRatMatrix operator-(SparseRatMatrix a, const SparseRatMatrix& b) { return a -= b; }
  friend SparseRatMatrix operator*(SparseRatMatrix a, const Rational& s) { return a *= s; }
  friend SparseRatMatrix operator*(const Rational& s, SparseRatMatrix a) { return a *= s; }
  friend SparseRatMatrix operator*(const SparseRatMatrix& a, const SparseRatMatrix& b);
  friend bool operator==(const SparseRatMatrix& a, const SparseRatMatrix& b);

 private:
  std::size_t nrows_ = 0;
  std::size_t ncols_ = 0;
  std::vector<Row> data_;
};

/// Horizontal concatenation [a | b].
SparseRatMatrix hconcat(const SparseRatMatrix& a, const SparseRatMatrix& b);

struct EliminationOptions {
  /// Matrices with at most this many columns use the dense Bareiss path.
  std::size_t dense_threshold = 64;
};

struct RowEchelon {
  std::vector<std::size_t> pivots;  ///< pivot column of each row of `reduced`
  SparseRatMatrix reduced;          ///< rank x cols, unit pivots, zeros above and below
};

/// Canonical reduced row echelon form. The result is unique for the input,
/// so the dense and sparse paths produce identical output.
RowEchelon reduced_row_echelon(const SparseRatMatrix& m, const EliminationOptions& opts = {});
RowEchelon reduced_row_echelon_sparse(const SparseRatMatrix& m);
RowEchelon reduced_row_echelon_dense(const SparseRatMatrix& m);

std::size_t rank(const SparseRatMatrix& m, const EliminationOptions& opts = {});

/// Basis of the kernel read off the RREF: one vector per free column, with
/// a 1 in that column and 0 in every other free column. Depends only on the
/// kernel itself, hence comparable bit-exactly across different matrices.
std::vector<RatVector> nullspace(const SparseRatMatrix& m, const EliminationOptions& opts = {});
/// Same basis, as the columns of a matrix.
SparseRatMatrix nullspace_matrix(const SparseRatMatrix& m, const EliminationOptions& opts = {});

/// Canonical basis of the column space (columns of the result).
SparseRatMatrix column_space(const SparseRatMatrix& m, const EliminationOptions& opts = {});
bool same_column_space(const SparseRatMatrix& a, const SparseRatMatrix& b);
/// True when every column of `sub` lies in the column space of `space`.
bool column_space_contains(const SparseRatMatrix& space, const SparseRatMatrix& sub);

/// Solves a X = b for square nonsingular a.
SparseRatMatrix solve(const SparseRatMatrix& a, const SparseRatMatrix& b);
SparseRatMatrix inverse(const SparseRatMatrix& a);

/// A* = G_dom^{-1} A^T G_cod, the adjoint of A : dom -> cod for the forms
/// given by the two Gram matrices.
SparseRatMatrix gram_adjoint(const SparseRatMatrix& a, const SparseRatMatrix& gram_dom,
                             const SparseRatMatrix& gram_cod);

/// Leading principal minors all positive. Throws NonSymmetricError.
bool is_positive_definite(const SparseRatMatrix& g);

/// Symmetric elimination without pivoting; returns the pivots d_k, i.e.
/// g = L diag(d) L^T. Throws SingularMatrixError on a zero pivot.
RatVector ldl_pivots(const SparseRatMatrix& g);

/// Text dump: header "rows cols nnz", then "row col num/den" per nonzero.
void write_dump(std::ostream& out, const SparseRatMatrix& m);
SparseRatMatrix read_dump(std::istream& in);

}  // namespace liehodge::linalg
