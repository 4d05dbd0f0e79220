#include "nlsa/linalg.hpp"

#include <algorithm>

#include "nlsa/error.hpp"

namespace nlsa {

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = Rational(1);
  return v;
}

Vec& axpy(Vec& y, const Rational& a, std::span<const Rational> x) {
  if (y.size() != x.size()) throw Error(ErrorCode::DimensionMismatch, "axpy");
  if (a.is_zero()) return y;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i] += a * x[i];
  }
  return y;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "Matrix::from_rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Vec Matrix::col_vec(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::append_row(std::span<const Rational> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "Matrix::append_row");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const { return nlsa::is_zero(data_); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

Vec operator*(const Matrix& a, std::span<const Rational> v) {
  if (a.cols() != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  Vec out(a.rows());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (!a(i, k).is_zero()) out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
  Matrix c = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) c(r, k) += b(r, k);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Rational(-1) * b; }

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix c = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) c(r, k) *= s;
  return c;
}

Echelon row_reduce(Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pr = lead;
    while (pr < rows && m(pr, c).is_zero()) ++pr;
    if (pr == rows) continue;
    if (pr != lead) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(pr, k), m(lead, k));
    }
    const Rational inv = Rational(1) / m(lead, c);
    for (std::size_t k = c; k < cols; ++k) {
      if (!m(lead, k).is_zero()) m(lead, k) *= inv;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || m(r, c).is_zero()) continue;
      const Rational f = m(r, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (!m(lead, k).is_zero()) m(r, k) -= f * m(lead, k);
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  Matrix reduced(pivots.size(), cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t k = 0; k < cols; ++k) reduced(r, k) = m(r, k);
  }
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

namespace {

Matrix kernel_from_echelon(const Echelon& e, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols);
    v[f] = Rational(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      if (!e.rows(r, f).is_zero()) v[e.pivots[r]] = -e.rows(r, f);
    }
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return Matrix(0, cols);
  return row_reduce(Matrix::from_rows(cols, basis)).rows;
}

}  // namespace

Matrix kernel(const Matrix& m) { return kernel_from_echelon(row_reduce(m), m.cols()); }

std::optional<Vec> solve(const Matrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "solve");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const Echelon e = row_reduce(std::move(aug));
  Vec x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.rows(r, m.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Rational(1);
  }
  const Echelon e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.rows(r, n + c);
  return inv;
}

void normalize(SparseRow& row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  out.reserve(row.size());
  for (auto& [c, v] : row) {
    if (!out.empty() && out.back().first == c) {
      out.back().second += v;
    } else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.emplace_back(c, std::move(v));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  row = std::move(out);
}

Vec densify(const SparseRow& row, std::size_t cols) {
  Vec v(cols);
  for (const auto& [c, x] : row) v.at(c) += x;
  return v;
}

namespace {

// a - f * b for sorted sparse rows.
SparseRow subtract_scaled(const SparseRow& a, const Rational& f, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(f * b[j].second));
      ++j;
    } else {
      Rational v = a[i].second - f * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool SparseEliminator::add(SparseRow row) {
  normalize(row);
  while (!row.empty()) {
    auto it = pivot_rows_.find(row.front().first);
    if (it == pivot_rows_.end()) break;
    const Rational f = row.front().second;
    row = subtract_scaled(row, f, it->second);
  }
  if (row.empty()) return false;
  const Rational inv = Rational(1) / row.front().second;
  for (auto& [c, v] : row) v *= inv;
  const std::size_t lead = row.front().first;
  pivot_rows_.emplace(lead, std::move(row));
  return true;
}

Echelon SparseEliminator::echelon() const {
  std::vector<std::size_t> leads;
  leads.reserve(pivot_rows_.size());
  for (const auto& [c, r] : pivot_rows_) leads.push_back(c);
  std::sort(leads.begin(), leads.end());
  Matrix m(leads.size(), cols_);
  for (std::size_t i = 0; i < leads.size(); ++i) {
    for (const auto& [c, v] : pivot_rows_.at(leads[i])) m(i, c) = v;
  }
  return row_reduce(std::move(m));
}

Matrix sparse_kernel(const std::vector<SparseRow>& rows, std::size_t cols) {
  SparseEliminator el(cols);
  for (const auto& r : rows) el.add(r);
  return kernel_from_echelon(el.echelon(), cols);
}

}  // namespace nlsa
