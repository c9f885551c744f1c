#ifndef PROLONG_MATRIX_HPP
#define PROLONG_MATRIX_HPP

#include <vector>

#include "prolong/rational.hpp"

namespace prolong {

/// Dense matrix over Q, row-major.  Subspaces are represented throughout the
/// library as matrices whose columns form a basis.
class QMat {
public:
  QMat() : rows_(0), cols_(0) {}
  QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static QMat identity(int n);
  static QMat zero(int rows, int cols) { return QMat(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool is_zero() const;
  bool operator==(const QMat& o) const;

  QMat transpose() const;
  QMat operator*(const QMat& o) const;
  QMat operator+(const QMat& o) const;
  QMat operator-(const QMat& o) const;
  QMat scaled(const Rat& s) const;

  QMat col(int j) const;
  QMat cols_subset(const std::vector<int>& idx) const;
  void set_col(int j, const QMat& v);

  /// Stack side by side / on top of each other.
  static QMat hstack(const QMat& a, const QMat& b);
  static QMat vstack(const QMat& a, const QMat& b);

private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

/// In-place reduction to reduced row echelon form; returns the rank and, if
/// requested, the pivot column indices.
int rref(QMat& m, std::vector<int>* pivots = nullptr);

int rank(QMat m);

/// Columns span the nullspace {x : m x = 0}.  Zero-column matrix if trivial.
QMat kernel_basis(const QMat& m);

/// The subset of m's columns that forms a basis of its column space.
QMat column_space_basis(const QMat& m);

QMat inverse(const QMat& m);

/// Unique X with A X = B; requires A of full column rank and the system
/// consistent (internal_error otherwise).
QMat solve_exact(const QMat& A, const QMat& B);

/// Basis of span(A) ∩ span(B), expressed as vectors in the common ambient.
QMat intersect_spans(const QMat& A, const QMat& B);

QMat kron(const QMat& a, const QMat& b);

bool in_span(const QMat& basis, const QMat& v);

/// Whether span(sub) is contained in span(big).
bool span_contained(const QMat& sub, const QMat& big);

bool same_span(const QMat& a, const QMat& b);

/// Repeated coordinate extraction against a fixed full-column-rank basis:
/// factors once, then solves B x = v per column with an exact membership check.
class ColumnSolver {
public:
  explicit ColumnSolver(QMat basis);

  /// Coordinates X with basis * X = V.  If check is true (default) the
  /// product is verified and internal_error is thrown on mismatch; with
  /// check false the caller must know V lies in the span.
  QMat solve(const QMat& V, bool check = true) const;

  const QMat& basis() const { return basis_; }

private:
  QMat basis_;
  QMat inv_;                 // inverse of the selected row submatrix
  std::vector<int> rows_;    // indices of a set of independent rows
};

} // namespace prolong

#endif
