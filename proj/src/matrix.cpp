#include "prolong/matrix.hpp"

#include <algorithm>

#include "prolong/errors.hpp"

namespace prolong {

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool QMat::is_zero() const {
  for (const Rat& q : a_)
    if (sgn(q) != 0) return false;
  return true;
}

bool QMat::operator==(const QMat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

QMat QMat::transpose() const {
  QMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

QMat QMat::operator*(const QMat& o) const {
  check_internal(cols_ == o.rows_, "QMat product: shape mismatch");
  QMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& aik = at(i, k);
      if (sgn(aik) == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rat& bkj = o.at(k, j);
        if (sgn(bkj) != 0) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

QMat QMat::operator+(const QMat& o) const {
  check_internal(rows_ == o.rows_ && cols_ == o.cols_, "QMat sum: shape mismatch");
  QMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

QMat QMat::operator-(const QMat& o) const {
  check_internal(rows_ == o.rows_ && cols_ == o.cols_, "QMat difference: shape mismatch");
  QMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

QMat QMat::scaled(const Rat& s) const {
  QMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

QMat QMat::col(int j) const {
  QMat c(rows_, 1);
  for (int i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
  return c;
}

QMat QMat::cols_subset(const std::vector<int>& idx) const {
  QMat c(rows_, int(idx.size()));
  for (int j = 0; j < int(idx.size()); ++j)
    for (int i = 0; i < rows_; ++i) c.at(i, j) = at(i, idx[j]);
  return c;
}

void QMat::set_col(int j, const QMat& v) {
  check_internal(v.rows() == rows_ && v.cols() == 1, "set_col: shape mismatch");
  for (int i = 0; i < rows_; ++i) at(i, j) = v.at(i, 0);
}

QMat QMat::hstack(const QMat& a, const QMat& b) {
  check_internal(a.rows_ == b.rows_, "hstack: row mismatch");
  QMat r(a.rows_, a.cols_ + b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
  }
  return r;
}

QMat QMat::vstack(const QMat& a, const QMat& b) {
  check_internal(a.cols_ == b.cols_, "vstack: column mismatch");
  QMat r(a.rows_ + b.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
  return r;
}

int rref(QMat& m, std::vector<int>* pivots) {
  const int rows = m.rows(), cols = m.cols();
  if (pivots) pivots->clear();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // Prefer a unit pivot: most entries here are 0 or ±1 and choosing one
    // keeps the fractions from growing during elimination.
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (sgn(m.at(i, c)) == 0) continue;
      if (piv < 0) piv = i;
      Rat a = abs(m.at(i, c));
      if (a == 1) { piv = i; break; }
    }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = c; j < cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
    Rat inv_p = 1 / m.at(r, c);
    if (inv_p != 1)
      for (int j = c; j < cols; ++j)
        if (sgn(m.at(r, j)) != 0) m.at(r, j) *= inv_p;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Rat f = m.at(i, c);
      if (sgn(f) == 0) continue;
      for (int j = c; j < cols; ++j) {
        const Rat& rj = m.at(r, j);
        if (sgn(rj) != 0) m.at(i, j) -= f * rj;
      }
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

int rank(QMat m) { return rref(m); }

QMat kernel_basis(const QMat& m) {
  QMat r = m;
  std::vector<int> piv;
  const int rk = rref(r, &piv);
  const int cols = m.cols();
  std::vector<int> free_cols;
  {
    std::vector<bool> is_piv(cols, false);
    for (int c : piv) is_piv[c] = true;
    for (int c = 0; c < cols; ++c)
      if (!is_piv[c]) free_cols.push_back(c);
  }
  QMat K(cols, int(free_cols.size()));
  for (int j = 0; j < int(free_cols.size()); ++j) {
    const int f = free_cols[j];
    K.at(f, j) = 1;
    for (int i = 0; i < rk; ++i) K.at(piv[i], j) = -r.at(i, f);
  }
  return K;
}

QMat column_space_basis(const QMat& m) {
  QMat r = m;
  std::vector<int> piv;
  rref(r, &piv);
  return m.cols_subset(piv);
}

QMat inverse(const QMat& m) {
  check_internal(m.rows() == m.cols(), "inverse: not square");
  const int n = m.rows();
  QMat aug = QMat::hstack(m, QMat::identity(n));
  std::vector<int> piv;
  const int rk = rref(aug, &piv);
  check_internal(rk == n && (n == 0 || piv[n - 1] == n - 1), "inverse: singular matrix");
  QMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

QMat solve_exact(const QMat& A, const QMat& B) {
  ColumnSolver s(A);
  return s.solve(B);
}

QMat kron(const QMat& a, const QMat& b) {
  QMat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Rat& v = a.at(i, j);
      if (sgn(v) == 0) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q)
          if (sgn(b.at(p, q)) != 0)
            r.at(i * b.rows() + p, j * b.cols() + q) = v * b.at(p, q);
    }
  return r;
}

QMat intersect_spans(const QMat& A, const QMat& B) {
  check_internal(A.rows() == B.rows(), "intersect_spans: ambient mismatch");
  if (A.cols() == 0 || B.cols() == 0) return QMat(A.rows(), 0);
  // x in both spans iff A u = B v for some u, v; the kernel of [A | -B]
  // parametrizes such pairs and A u runs over the intersection.
  QMat K = kernel_basis(QMat::hstack(A, B.scaled(-1)));
  QMat U(A.cols(), K.cols());
  for (int j = 0; j < K.cols(); ++j)
    for (int i = 0; i < A.cols(); ++i) U.at(i, j) = K.at(i, j);
  return column_space_basis(A * U);
}

bool in_span(const QMat& basis, const QMat& v) {
  if (v.is_zero()) return true;
  if (basis.cols() == 0) return false;
  return rank(QMat::hstack(basis, v)) == rank(basis);
}

bool span_contained(const QMat& sub, const QMat& big) {
  if (sub.cols() == 0) return true;
  return rank(QMat::hstack(big, sub)) == rank(big);
}

bool same_span(const QMat& a, const QMat& b) {
  return span_contained(a, b) && span_contained(b, a);
}

ColumnSolver::ColumnSolver(QMat basis) : basis_(std::move(basis)) {
  // Pick independent rows of the basis via the transpose's pivot columns;
  // the corresponding square submatrix is invertible.
  std::vector<int> piv;
  QMat t = basis_.transpose();
  const int rk = rref(t, &piv);
  check_internal(rk == basis_.cols(), "ColumnSolver: basis columns dependent");
  rows_ = piv;
  QMat S(rk, rk);
  for (int i = 0; i < rk; ++i)
    for (int j = 0; j < rk; ++j) S.at(i, j) = basis_.at(rows_[i], j);
  inv_ = inverse(S);
}

QMat ColumnSolver::solve(const QMat& V, bool check) const {
  check_internal(V.rows() == basis_.rows(), "ColumnSolver: ambient mismatch");
  QMat sub(int(rows_.size()), V.cols());
  for (int i = 0; i < int(rows_.size()); ++i)
    for (int j = 0; j < V.cols(); ++j) sub.at(i, j) = V.at(rows_[i], j);
  QMat X = inv_ * sub;
  if (check) {
    check_internal(basis_ * X == V, "ColumnSolver: vector not in span");
  }
  return X;
}

} // namespace prolong
