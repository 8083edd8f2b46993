#ifndef HOMSOL_MATRIX_HPP
#define HOMSOL_MATRIX_HPP

#include <initializer_list>
#include <optional>
#include <vector>

#include "homsol/rational.hpp"

namespace homsol {

using QVec = std::vector<Rat>;

QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec operator*(const Rat& s, const QVec& v);
Rat max_abs(const QVec& v);

/// Dense matrix over the rationals. Sizes in this project stay below ~70
/// columns (derivation systems on dim-8 algebras), so plain Gaussian
/// elimination is fine.
class QMat {
 public:
  QMat() : rows_(0), cols_(0) {}
  QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
  QMat(std::initializer_list<std::initializer_list<Rat>> rows);

  static QMat identity(int n);
  static QMat diagonal(const QVec& d);
  static QMat from_columns(const std::vector<QVec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& operator()(int i, int j) { return a_[i * cols_ + j]; }
  const Rat& operator()(int i, int j) const { return a_[i * cols_ + j]; }

  QVec column(int j) const;
  QVec row(int i) const;
  void set_column(int j, const QVec& v);

  QMat transpose() const;
  Rat trace() const;
  Rat max_abs_entry() const;
  bool is_zero() const { return max_abs_entry() == 0; }
  bool is_symmetric() const;

  QMat block(int i0, int j0, int nrows, int ncols) const;
  void set_block(int i0, int j0, const QMat& m);

  bool operator==(const QMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const QMat& o) const { return !(*this == o); }

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

QMat operator+(const QMat& a, const QMat& b);
QMat operator-(const QMat& a, const QMat& b);
QMat operator*(const QMat& a, const QMat& b);
QMat operator*(const Rat& s, const QMat& a);
QMat operator-(const QMat& a);
QVec operator*(const QMat& a, const QVec& v);

/// In-place reduced row echelon form; returns the pivot column of each
/// nonzero row (smallest-index pivots, rows in pivot order).
std::vector<int> rref(QMat& m);

int rank(const QMat& m);

/// Basis of the right kernel {x : m x = 0}, canonical (from RREF free columns).
std::vector<QVec> kernel_basis(const QMat& m);

/// General solution of a x = b.
struct LinearSolution {
  bool feasible = false;
  QVec particular;               // one solution (when feasible)
  std::vector<QVec> nullspace;   // kernel basis of a
};
LinearSolution solve_linear(const QMat& a, const QVec& b);

std::optional<QMat> inverse(const QMat& m);
Rat determinant(const QMat& m);

/// Sylvester criterion on an exactly symmetric matrix.
bool is_positive_definite(const QMat& m);
bool is_negative_definite(const QMat& m);

std::string mat_to_string(const QMat& m);

}  // namespace homsol

#endif
