#include "liehodge/linalg.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

namespace liehodge::linalg {

void axpy(SparseVector& acc, const Rational& scale, const SparseVector& v) {
  if (scale == 0 || v.empty()) return;
  SparseVector out;
  out.reserve(acc.size() + v.size());
  auto a = acc.begin();
  auto b = v.begin();
  while (a != acc.end() || b != v.end()) {
    if (b == v.end() || (a != acc.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == acc.end() || b->first < a->first) {
      out.emplace_back(b->first, scale * b->second);
      ++b;
    } else {
      Rational sum = a->second + scale * b->second;
      if (sum != 0) out.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  acc = std::move(out);
}

SparseVector scaled(const SparseVector& v, const Rational& scale) {
  SparseVector out;
  if (scale == 0) return out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) out.emplace_back(i, x * scale);
  return out;
}

SparseVector to_sparse(const RatVector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) out.emplace_back(i, v[i]);
  }
  return out;
}

RatVector to_dense(const SparseVector& v, std::size_t n) {
  RatVector out(n);
  for (const auto& [i, x] : v) out.at(i) = x;
  return out;
}

// ---------------------------------------------------------------------------
// SparseRatMatrix

SparseRatMatrix::SparseRatMatrix(std::size_t nrows, std::size_t ncols)
    : nrows_(nrows), ncols_(ncols), data_(nrows) {}

SparseRatMatrix SparseRatMatrix::identity(std::size_t n, const Rational& scale) {
  SparseRatMatrix m(n, n);
  if (scale != 0) {
    for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, scale);
  }
  return m;
}

SparseRatMatrix SparseRatMatrix::diagonal(const RatVector& diag) {
  SparseRatMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] != 0) m.data_[i].emplace_back(i, diag[i]);
  }
  return m;
}

SparseRatMatrix SparseRatMatrix::from_dense(const std::vector<RatVector>& rows) {
  std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  SparseRatMatrix m(rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) throw std::invalid_argument("ragged dense matrix");
    m.data_[r] = to_sparse(rows[r]);
  }
  return m;
}

SparseRatMatrix SparseRatMatrix::from_columns(std::size_t nrows,
                                              const std::vector<SparseVector>& cols) {
  SparseRatMatrix m(nrows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (const auto& [r, x] : cols[c]) {
      if (r >= nrows) throw std::out_of_range("column entry out of range");
      m.data_[r].emplace_back(c, x);
    }
  }
  return m;
}

std::size_t SparseRatMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

void SparseRatMatrix::add(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= nrows_ || c >= ncols_) throw std::out_of_range("matrix index out of range");
  if (value == 0) return;
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const SparseEntry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += value;
    if (it->second == 0) row.erase(it);
  } else {
    row.insert(it, SparseEntry(c, value));
  }
}

void SparseRatMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= nrows_ || c >= ncols_) throw std::out_of_range("matrix index out of range");
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const SparseEntry& e, std::size_t col) { return e.first < col; });
  bool present = it != row.end() && it->first == c;
  if (value == 0) {
    if (present) row.erase(it);
  } else if (present) {
    it->second = value;
  } else {
    row.insert(it, SparseEntry(c, value));
  }
}

Rational SparseRatMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= nrows_ || c >= ncols_) throw std::out_of_range("matrix index out of range");
  const auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const SparseEntry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return Rational(0);
}

void SparseRatMatrix::set_row(std::size_t r, Row row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i].first >= ncols_ || row[i].second == 0 ||
        (i > 0 && row[i - 1].first >= row[i].first)) {
      throw std::invalid_argument("set_row: row must be sorted, in range and zero-free");
    }
  }
  data_.at(r) = std::move(row);
}

SparseVector SparseRatMatrix::column(std::size_t c) const {
  SparseVector out;
  for (std::size_t r = 0; r < nrows_; ++r) {
    Rational x = at(r, c);
    if (x != 0) out.emplace_back(r, std::move(x));
  }
  return out;
}

bool SparseRatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Row& r) { return r.empty(); });
}

bool SparseRatMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < nrows_; ++r) {
    for (const auto& e : data_[r]) {
      if (e.first != r) return false;
    }
  }
  return true;
}

bool SparseRatMatrix::is_symmetric() const {
  return is_square() && *this == transpose();
}

SparseRatMatrix SparseRatMatrix::transpose() const {
  SparseRatMatrix t(ncols_, nrows_);
  for (std::size_t r = 0; r < nrows_; ++r) {
    for (const auto& [c, x] : data_[r]) t.data_[c].emplace_back(r, x);
  }
  return t;
}

SparseRatMatrix SparseRatMatrix::submatrix(const std::vector<std::size_t>& row_ids,
                                           const std::vector<std::size_t>& col_ids) const {
  std::vector<long> col_map(ncols_, -1);
  for (std::size_t j = 0; j < col_ids.size(); ++j) col_map.at(col_ids[j]) = static_cast<long>(j);
  SparseRatMatrix s(row_ids.size(), col_ids.size());
  for (std::size_t i = 0; i < row_ids.size(); ++i) {
    for (const auto& [c, x] : data_.at(row_ids[i])) {
      if (col_map[c] >= 0) s.data_[i].emplace_back(static_cast<std::size_t>(col_map[c]), x);
    }
    std::sort(s.data_[i].begin(), s.data_[i].end(),
              [](const SparseEntry& a, const SparseEntry& b) { return a.first < b.first; });
  }
  return s;
}

SparseRatMatrix SparseRatMatrix::select_columns(const std::vector<std::size_t>& col_ids) const {
  std::vector<std::size_t> all_rows(nrows_);
  std::iota(all_rows.begin(), all_rows.end(), 0);
  return submatrix(all_rows, col_ids);
}

std::vector<RatVector> SparseRatMatrix::to_dense() const {
  std::vector<RatVector> out(nrows_, RatVector(ncols_));
  for (std::size_t r = 0; r < nrows_; ++r) {
    for (const auto& [c, x] : data_[r]) out[r][c] = x;
  }
  return out;
}

RatVector SparseRatMatrix::apply(const RatVector& x) const {
  if (x.size() != ncols_) throw std::invalid_argument("apply: dimension mismatch");
  RatVector y(nrows_);
  for (std::size_t r = 0; r < nrows_; ++r) {
    for (const auto& [c, a] : data_[r]) y[r] += a * x[c];
  }
  return y;
}

SparseVector SparseRatMatrix::apply(const SparseVector& x) const {
  RatVector dense(ncols_);
  for (const auto& [i, v] : x) dense.at(i) = v;
  return to_sparse(apply(dense));
}

SparseRatMatrix& SparseRatMatrix::operator+=(const SparseRatMatrix& other) {
  if (nrows_ != other.nrows_ || ncols_ != other.ncols_) {
    throw std::invalid_argument("matrix sum: shape mismatch");
  }
  for (std::size_t r = 0; r < nrows_; ++r) axpy(data_[r], Rational(1), other.data_[r]);
  return *this;
}

SparseRatMatrix& SparseRatMatrix::operator-=(const SparseRatMatrix& other) {
  if (nrows_ != other.nrows_ || ncols_ != other.ncols_) {
    throw std::invalid_argument("matrix difference: shape mismatch");
  }
  for (std::size_t r = 0; r < nrows_; ++r) axpy(data_[r], Rational(-1), other.data_[r]);
  return *this;
}

SparseRatMatrix& SparseRatMatrix::operator*=(const Rational& scale) {
  if (scale == 0) {
    for (auto& row : data_) row.clear();
    return *this;
  }
  for (auto& row : data_) {
    for (auto& e : row) e.second *= scale;
  }
  return *this;
}

SparseRatMatrix operator*(const SparseRatMatrix& a, const SparseRatMatrix& b) {
  if (a.ncols_ != b.nrows_) throw std::invalid_argument("matrix product: shape mismatch");
  SparseRatMatrix out(a.nrows_, b.ncols_);
  RatVector scratch(b.ncols_);
  std::vector<char> touched(b.ncols_, 0);
  std::vector<std::size_t> touched_list;
  for (std::size_t r = 0; r < a.nrows_; ++r) {
    touched_list.clear();
    for (const auto& [k, x] : a.data_[r]) {
      for (const auto& [c, y] : b.data_[k]) {
        if (!touched[c]) {
          touched[c] = 1;
          touched_list.push_back(c);
          scratch[c] = x * y;
        } else {
          scratch[c] += x * y;
        }
      }
    }
    std::sort(touched_list.begin(), touched_list.end());
    auto& row = out.data_[r];
    for (std::size_t c : touched_list) {
      if (scratch[c] != 0) row.emplace_back(c, scratch[c]);
      touched[c] = 0;
    }
  }
  return out;
}

bool operator==(const SparseRatMatrix& a, const SparseRatMatrix& b) {
  return a.nrows_ == b.nrows_ && a.ncols_ == b.ncols_ && a.data_ == b.data_;
}

SparseRatMatrix hconcat(const SparseRatMatrix& a, const SparseRatMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row mismatch");
  SparseRatMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    SparseVector row = a.row(r);
    for (const auto& [c, x] : b.row(r)) row.emplace_back(c + a.cols(), x);
    out.set_row(r, std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

using IntEntry = std::pair<std::size_t, Integer>;
using IntRow = std::vector<IntEntry>;

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& e : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& e : row) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
  }
}

IntRow integer_row(const SparseVector& row) {
  Integer lcm = 1;
  for (const auto& e : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.second.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, x] : row) {
    Integer v = x.get_num() * (lcm / x.get_den());
    out.emplace_back(c, std::move(v));
  }
  make_primitive(out);
  return out;
}

// row <- a*row - b*pivot, where the column being cleared cancels.
IntRow combine(const IntRow& row, const Integer& a, const IntRow& pivot, const Integer& b) {
  IntRow out;
  out.reserve(row.size() + pivot.size());
  auto x = row.begin();
  auto y = pivot.begin();
  while (x != row.end() || y != pivot.end()) {
    if (y == pivot.end() || (x != row.end() && x->first < y->first)) {
      out.emplace_back(x->first, a * x->second);
      ++x;
    } else if (x == row.end() || y->first < x->first) {
      out.emplace_back(y->first, -b * y->second);
      ++y;
    } else {
      Integer v = a * x->second - b * y->second;
      if (v != 0) out.emplace_back(x->first, std::move(v));
      ++x;
      ++y;
    }
  }
  make_primitive(out);
  return out;
}

// Clears column `col` of `row` using `pivot` (whose entry at `col` is `p`).
void eliminate(IntRow& row, const Integer& entry, const IntRow& pivot, const Integer& p) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), entry.get_mpz_t(), p.get_mpz_t());
  Integer a = p / g;
  Integer b = entry / g;
  row = combine(row, a, pivot, b);
}

const Integer* entry_at(const IntRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const IntEntry& e, std::size_t c) { return e.first < c; });
  if (it != row.end() && it->first == col) return &it->second;
  return nullptr;
}

RowEchelon finish_from_integer_rows(std::vector<IntRow> pivot_rows, std::size_t ncols) {
  // Pivot rows sorted by leading column, each with zeros in every other
  // pivot column; scale leading entries to one.
  std::sort(pivot_rows.begin(), pivot_rows.end(),
            [](const IntRow& a, const IntRow& b) { return a.front().first < b.front().first; });
  RowEchelon result;
  result.reduced = SparseRatMatrix(pivot_rows.size(), ncols);
  for (std::size_t i = 0; i < pivot_rows.size(); ++i) {
    const auto& row = pivot_rows[i];
    result.pivots.push_back(row.front().first);
    const Integer& lead = row.front().second;
    SparseVector out;
    out.reserve(row.size());
    for (const auto& [c, v] : row) {
      Rational q(v, lead);
      q.canonicalize();
      out.emplace_back(c, std::move(q));
    }
    result.reduced.set_row(i, std::move(out));
  }
  return result;
}

void back_substitute(std::vector<IntRow>& rows) {
  std::sort(rows.begin(), rows.end(),
            [](const IntRow& a, const IntRow& b) { return a.front().first > b.front().first; });
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::size_t col = rows[k].front().first;
    for (std::size_t j = k + 1; j < rows.size(); ++j) {
      const Integer* e = entry_at(rows[j], col);
      if (e) {
        Integer entry = *e;
        eliminate(rows[j], entry, rows[k], rows[k].front().second);
      }
    }
  }
}

}  // namespace

RowEchelon reduced_row_echelon_sparse(const SparseRatMatrix& m) {
  std::vector<std::size_t> order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  // Sparsest rows first keeps fill-in down.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return m.row(a).size() < m.row(b).size();
  });

  std::vector<IntRow> pivot_rows;
  std::vector<long> pivot_of_col(m.cols(), -1);
  for (std::size_t r : order) {
    if (m.row(r).empty()) continue;
    IntRow row = integer_row(m.row(r));
    while (!row.empty()) {
      std::size_t lead = row.front().first;
      long p = pivot_of_col[lead];
      if (p < 0) break;
      const IntRow& pivot = pivot_rows[static_cast<std::size_t>(p)];
      Integer entry = row.front().second;
      eliminate(row, entry, pivot, pivot.front().second);
    }
    if (!row.empty()) {
      pivot_of_col[row.front().first] = static_cast<long>(pivot_rows.size());
      pivot_rows.push_back(std::move(row));
    }
  }
  back_substitute(pivot_rows);
  return finish_from_integer_rows(std::move(pivot_rows), m.cols());
}

RowEchelon reduced_row_echelon_dense(const SparseRatMatrix& m) {
  const std::size_t nrows = m.rows();
  const std::size_t ncols = m.cols();
  std::vector<std::vector<Integer>> a(nrows, std::vector<Integer>(ncols));
  for (std::size_t r = 0; r < nrows; ++r) {
    IntRow row = integer_row(m.row(r));
    for (auto& [c, v] : row) a[r][c] = std::move(v);
  }

  // Fraction-free (Bareiss) forward elimination: every division is exact.
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < nrows; ++c) {
    std::size_t pivot = rank;
    while (pivot < nrows && a[pivot][c] == 0) ++pivot;
    if (pivot == nrows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j) {
        Integer v = a[rank][c] * a[i][j] - a[i][c] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }

  std::vector<IntRow> rows;
  for (std::size_t r = 0; r < rank; ++r) {
    IntRow row;
    for (std::size_t c = 0; c < ncols; ++c) {
      if (a[r][c] != 0) row.emplace_back(c, a[r][c]);
    }
    make_primitive(row);
    rows.push_back(std::move(row));
  }
  back_substitute(rows);
  return finish_from_integer_rows(std::move(rows), ncols);
}

RowEchelon reduced_row_echelon(const SparseRatMatrix& m, const EliminationOptions& opts) {
  if (m.cols() <= opts.dense_threshold && m.rows() <= 4 * opts.dense_threshold) {
    return reduced_row_echelon_dense(m);
  }
  return reduced_row_echelon_sparse(m);
}

std::size_t rank(const SparseRatMatrix& m, const EliminationOptions& opts) {
  return reduced_row_echelon(m, opts).pivots.size();
}

SparseRatMatrix nullspace_matrix(const SparseRatMatrix& m, const EliminationOptions& opts) {
  RowEchelon ech = reduced_row_echelon(m, opts);
  std::vector<char> is_pivot(m.cols(), 0);
  for (std::size_t p : ech.pivots) is_pivot[p] = 1;
  std::vector<long> free_index(m.cols(), -1);
  std::size_t nfree = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_index[c] = static_cast<long>(nfree++);
  }
  SparseRatMatrix basis(m.cols(), nfree);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) basis.add(c, static_cast<std::size_t>(free_index[c]), Rational(1));
  }
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    for (const auto& [c, x] : ech.reduced.row(i)) {
      if (!is_pivot[c]) basis.add(ech.pivots[i], static_cast<std::size_t>(free_index[c]), -x);
    }
  }
  return basis;
}

std::vector<RatVector> nullspace(const SparseRatMatrix& m, const EliminationOptions& opts) {
  SparseRatMatrix basis = nullspace_matrix(m, opts);
  SparseRatMatrix cols = basis.transpose();
  std::vector<RatVector> out;
  out.reserve(cols.rows());
  for (std::size_t k = 0; k < cols.rows(); ++k) out.push_back(to_dense(cols.row(k), m.cols()));
  return out;
}

SparseRatMatrix column_space(const SparseRatMatrix& m, const EliminationOptions& opts) {
  return reduced_row_echelon(m.transpose(), opts).reduced.transpose();
}

bool same_column_space(const SparseRatMatrix& a, const SparseRatMatrix& b) {
  return column_space(a) == column_space(b);
}

bool column_space_contains(const SparseRatMatrix& space, const SparseRatMatrix& sub) {
  return rank(hconcat(space, sub)) == rank(space);
}

SparseRatMatrix solve(const SparseRatMatrix& a, const SparseRatMatrix& b) {
  if (!a.is_square() || a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  const std::size_t n = a.rows();
  if (a.is_diagonal()) {
    SparseRatMatrix x(n, b.cols());
    for (std::size_t r = 0; r < n; ++r) {
      Rational d = a.at(r, r);
      if (d == 0) throw SingularMatrixError("solve: singular diagonal matrix");
      SparseVector row = b.row(r);
      for (auto& e : row) e.second /= d;
      x.set_row(r, std::move(row));
    }
    return x;
  }
  RowEchelon ech = reduced_row_echelon_sparse(hconcat(a, b));
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) {
    throw SingularMatrixError("solve: singular matrix");
  }
  SparseRatMatrix x(n, b.cols());
  for (std::size_t r = 0; r < n; ++r) {
    SparseVector row;
    for (const auto& [c, v] : ech.reduced.row(r)) {
      if (c >= n) row.emplace_back(c - n, v);
    }
    x.set_row(r, std::move(row));
  }
  return x;
}

SparseRatMatrix inverse(const SparseRatMatrix& a) {
  return solve(a, SparseRatMatrix::identity(a.rows()));
}

SparseRatMatrix gram_adjoint(const SparseRatMatrix& a, const SparseRatMatrix& gram_dom,
                             const SparseRatMatrix& gram_cod) {
  if (gram_dom.rows() != a.cols() || gram_cod.rows() != a.rows()) {
    throw std::invalid_argument("gram_adjoint: Gram matrix size mismatch");
  }
  return solve(gram_dom, a.transpose() * gram_cod);
}

RatVector ldl_pivots(const SparseRatMatrix& g) {
  if (!g.is_symmetric()) throw NonSymmetricError("ldl_pivots: matrix is not symmetric");
  const std::size_t n = g.rows();
  RatVector pivots(n);
  if (g.is_diagonal()) {
    for (std::size_t i = 0; i < n; ++i) {
      pivots[i] = g.at(i, i);
      if (pivots[i] == 0) throw SingularMatrixError("ldl_pivots: zero pivot");
    }
    return pivots;
  }
  std::vector<SparseVector> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = g.row(i);
  for (std::size_t k = 0; k < n; ++k) {
    const SparseVector& pivot_row = rows[k];
    Rational d;
    for (const auto& [c, x] : pivot_row) {
      if (c == k) d = x;
    }
    if (d == 0) throw SingularMatrixError("ldl_pivots: zero pivot");
    pivots[k] = d;
    for (std::size_t i = k + 1; i < n; ++i) {
      auto it = std::lower_bound(rows[i].begin(), rows[i].end(), k,
                                 [](const SparseEntry& e, std::size_t c) { return e.first < c; });
      if (it == rows[i].end() || it->first != k) continue;
      Rational factor = -it->second / d;
      axpy(rows[i], factor, pivot_row);
    }
  }
  return pivots;
}

bool is_positive_definite(const SparseRatMatrix& g) {
  if (!g.is_symmetric()) throw NonSymmetricError("is_positive_definite: matrix is not symmetric");
  try {
    RatVector pivots = ldl_pivots(g);
    return std::all_of(pivots.begin(), pivots.end(), [](const Rational& d) { return d > 0; });
  } catch (const SingularMatrixError&) {
    return false;
  }
}

void write_dump(std::ostream& out, const SparseRatMatrix& m) {
  out << m.rows() << ' ' << m.cols() << ' ' << m.nnz() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& [c, x] : m.row(r)) out << r << ' ' << c << ' ' << to_fraction_string(x) << '\n';
  }
}

SparseRatMatrix read_dump(std::istream& in) {
  std::size_t nrows = 0, ncols = 0, nnz = 0;
  if (!(in >> nrows >> ncols >> nnz)) throw std::invalid_argument("read_dump: bad header");
  SparseRatMatrix m(nrows, ncols);
  for (std::size_t k = 0; k < nnz; ++k) {
    std::size_t r = 0, c = 0;
    std::string value;
    if (!(in >> r >> c >> value)) {
      throw std::invalid_argument("read_dump: truncated at entry " + std::to_string(k));
    }
    m.add(r, c, parse_rational(value));
  }
  return m;
}

}  // namespace liehodge::linalg
