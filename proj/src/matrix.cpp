#include "homsol/matrix.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace homsol {

QVec operator+(const QVec& a, const QVec& b) {
  assert(a.size() == b.size());
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec operator-(const QVec& a, const QVec& b) {
  assert(a.size() == b.size());
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec operator*(const Rat& s, const QVec& v) {
  QVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Rat max_abs(const QVec& v) {
  Rat m(0);
  for (const auto& x : v)
    if (rat_abs(x) > m) m = rat_abs(x);
  return m;
}

QMat::QMat(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged initializer");
    for (const auto& x : r) a_.push_back(x);
  }
}

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMat QMat::diagonal(const QVec& d) {
  QMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

QMat QMat::from_columns(const std::vector<QVec>& cols) {
  if (cols.empty()) return QMat(0, 0);
  QMat m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(static_cast<int>(j), cols[j]);
  return m;
}

QVec QMat::column(int j) const {
  QVec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

QVec QMat::row(int i) const {
  QVec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

void QMat::set_column(int j, const QVec& v) {
  assert(static_cast<int>(v.size()) == rows_);
  for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

QMat QMat::transpose() const {
  QMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rat QMat::trace() const {
  Rat s(0);
  for (int i = 0; i < rows_ && i < cols_; ++i) s += (*this)(i, i);
  return s;
}

Rat QMat::max_abs_entry() const {
  Rat m(0);
  for (const auto& x : a_)
    if (rat_abs(x) > m) m = rat_abs(x);
  return m;
}

bool QMat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

QMat QMat::block(int i0, int j0, int nrows, int ncols) const {
  QMat b(nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
  return b;
}

void QMat::set_block(int i0, int j0, const QMat& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) (*this)(i0 + i, j0 + j) = m(i, j);
}

QMat operator+(const QMat& a, const QMat& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  QMat r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

QMat operator-(const QMat& a, const QMat& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  QMat r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

QMat operator*(const QMat& a, const QMat& b) {
  assert(a.cols() == b.rows());
  QMat r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

QMat operator*(const Rat& s, const QMat& a) {
  QMat r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
  return r;
}

QMat operator-(const QMat& a) { return Rat(-1) * a; }

QVec operator*(const QMat& a, const QVec& v) {
  assert(a.cols() == static_cast<int>(v.size()));
  QVec r(a.rows(), Rat(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) r[i] += a(i, j) * v[j];
  return r;
}

std::vector<int> rref(QMat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rat inv = Rat(1) / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(const QMat& m) {
  QMat w = m;
  return static_cast<int>(rref(w).size());
}

std::vector<QVec> kernel_basis(const QMat& m) {
  QMat w = m;
  std::vector<int> pivots = rref(w);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    QVec v(m.cols(), Rat(0));
    v[c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w(static_cast<int>(r), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolution solve_linear(const QMat& a, const QVec& b) {
  assert(a.rows() == static_cast<int>(b.size()));
  QMat aug(a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (int i = 0; i < a.rows(); ++i) aug(i, a.cols()) = b[i];
  std::vector<int> pivots = rref(aug);
  LinearSolution sol;
  if (!pivots.empty() && pivots.back() == a.cols()) return sol;  // inconsistent
  sol.feasible = true;
  sol.particular.assign(a.cols(), Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = aug(static_cast<int>(r), a.cols());
  sol.nullspace = kernel_basis(a);
  return sol;
}

std::optional<QMat> inverse(const QMat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  int n = m.rows();
  QMat aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, QMat::identity(n));
  std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots.back() != n - 1)) return std::nullopt;
  return aug.block(0, n, n, n);
}

Rat determinant(const QMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  QMat w = m;
  int n = m.rows();
  Rat det(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (w(i, c) != 0) { p = i; break; }
    if (p < 0) return Rat(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(w(p, j), w(c, j));
      det = -det;
    }
    det *= w(c, c);
    Rat inv = Rat(1) / w(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (w(i, c) == 0) continue;
      Rat f = w(i, c) * inv;
      for (int j = c; j < n; ++j) w(i, j) -= f * w(c, j);
    }
  }
  return det;
}

bool is_positive_definite(const QMat& m) {
  if (!m.is_symmetric()) return false;
  for (int k = 1; k <= m.rows(); ++k)
    if (determinant(m.block(0, 0, k, k)) <= 0) return false;
  return true;
}

bool is_negative_definite(const QMat& m) {
  if (!m.is_symmetric()) return false;
  for (int k = 1; k <= m.rows(); ++k) {
    Rat d = determinant(m.block(0, 0, k, k));
    if (k % 2 == 1 ? d >= 0 : d <= 0) return false;
  }
  return true;
}

std::string mat_to_string(const QMat& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << rat_to_string(m(i, j));
  }
  os << "]";
  return os.str();
}

}  // namespace homsol
