#include "doctest.h"
#include "prolong/matrix.hpp"

#include "prolong/errors.hpp"

using namespace prolong;

namespace {

QMat from_rows(int rows, int cols, std::initializer_list<long> vals) {
  QMat m(rows, cols);
  auto it = vals.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rat(*it++);
  return m;
}

} // namespace

TEST_CASE("rref and rank") {
  QMat m = from_rows(3, 3, {1, 2, 3, 2, 4, 6, 1, 1, 1});
  std::vector<int> piv;
  CHECK(rref(m, &piv) == 2);
  CHECK(piv == std::vector<int>{0, 1});
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(1, 1) == 1);
  CHECK(m.at(0, 1) == 0);
  CHECK(rank(QMat::identity(5)) == 5);
  CHECK(rank(QMat::zero(4, 7)) == 0);
}

TEST_CASE("kernel basis annihilates and has complementary dimension") {
  QMat m = from_rows(2, 4, {1, 0, 2, -1, 0, 1, 1, 1});
  QMat K = kernel_basis(m);
  CHECK(K.cols() == 2);
  CHECK((m * K).is_zero());
  CHECK(rank(K) == 2);

  QMat inj = from_rows(3, 2, {1, 0, 0, 1, 1, 1});
  CHECK(kernel_basis(inj).cols() == 0);
}

TEST_CASE("inverse and solve") {
  QMat m = from_rows(3, 3, {2, 1, 0, 1, 3, 1, 0, 1, 1});
  QMat inv = inverse(m);
  CHECK(m * inv == QMat::identity(3));

  QMat A = from_rows(4, 2, {1, 0, 0, 1, 1, 1, 2, -1});
  QMat X = from_rows(2, 1, {3, 5});
  QMat B = A * X;
  CHECK(solve_exact(A, B) == X);
}

TEST_CASE("span arithmetic") {
  QMat A = from_rows(3, 2, {1, 0, 0, 1, 0, 0});   // xy-plane
  QMat B = from_rows(3, 2, {1, 0, 0, 0, 0, 1});   // xz-plane
  QMat I = intersect_spans(A, B);
  CHECK(I.cols() == 1);
  QMat x_axis = from_rows(3, 1, {1, 0, 0});
  CHECK(same_span(I, x_axis));
  CHECK(in_span(A, from_rows(3, 1, {2, 7, 0})));
  CHECK(!in_span(A, from_rows(3, 1, {0, 0, 1})));
  CHECK(span_contained(x_axis, A));
  CHECK(!span_contained(B, A));
}

TEST_CASE("column solver round trips and rejects outsiders") {
  QMat basis = from_rows(4, 2, {1, 2, 0, 1, 1, 0, 3, 1});
  ColumnSolver s(basis);
  QMat X = from_rows(2, 3, {1, 0, 2, 0, 1, -5});
  CHECK(s.solve(basis * X) == X);
  CHECK_THROWS_AS(s.solve(from_rows(4, 1, {1, 0, 0, 0})), internal_error);
}

TEST_CASE("rational entries stay exact through elimination") {
  QMat m(2, 2);
  m.at(0, 0) = rat(1, 3);
  m.at(0, 1) = rat(1, 7);
  m.at(1, 0) = rat(2, 3);
  m.at(1, 1) = rat(2, 7);
  CHECK(rank(m) == 1);
  QMat K = kernel_basis(m);
  CHECK(K.cols() == 1);
  CHECK((m * K).is_zero());
}
