#include "doctest.h"

#include "prolong/hodge.hpp"
#include "prolong/kostant.hpp"

using namespace prolong;

namespace {

void expect_all(std::vector<CheckResult> checks) {
  for (const auto& c : checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.pass);
  }
}

} // namespace

TEST_CASE("graded module for first-order one-form systems") {
  for (auto kind : {StructureKind::Affine, StructureKind::Riemannian}) {
    GradedModel gm = assemble_graded_module(3, kind, ESpec::lambda(1), 1);
    expect_all(verify_graded_structure(gm));
    if (kind == StructureKind::Affine) {
      CHECK(gm.N == 1);
      CHECK(gm.levels[0].dim == 3);
      CHECK(gm.levels[1].dim == 3);
    } else {
      CHECK(gm.N == 2);
      CHECK(gm.levels[1].dim == 4);
    }
  }
}

TEST_CASE("graded module for second-order scalar systems") {
  GradedModel aff = assemble_graded_module(3, StructureKind::Affine, ESpec::trivial(), 2);
  CHECK(aff.N == 1);
  CHECK(aff.levels[1].dim == 3);
  expect_all(verify_graded_structure(aff));

  GradedModel riem = assemble_graded_module(3, StructureKind::Riemannian, ESpec::trivial(), 2);
  CHECK(riem.N == 2);
  CHECK(riem.levels[2].dim == 1);
  expect_all(verify_graded_structure(riem));
}

TEST_CASE("graded module for the order-two one-form system") {
  GradedModel gm = assemble_graded_module(3, StructureKind::Riemannian, ESpec::lambda(1), 2);
  CHECK(gm.N == 4);
  int total = 0;
  for (const auto& L : gm.levels) total += L.dim;
  CHECK(total == 35);
  expect_all(verify_graded_structure(gm));
}

TEST_CASE("graded module for two-form and trace-free symmetric systems") {
  // A closed two-form system: the only prolonged variable is the exterior
  // derivative, so the module is just forms of the two adjacent degrees.
  GradedModel forms = assemble_graded_module(3, StructureKind::Affine, ESpec::lambda(2), 1);
  CHECK(forms.N == 1);
  CHECK(forms.levels[0].dim == 3);
  CHECK(forms.levels[1].dim == 1);
  expect_all(verify_graded_structure(forms));

  GradedModel tf = assemble_graded_module(3, StructureKind::Riemannian, ESpec::sym0(2), 1);
  expect_all(verify_graded_structure(tf));
}

TEST_CASE("contraction blocks drop one degree and commute") {
  GradedModel gm = assemble_graded_module(3, StructureKind::Riemannian, ESpec::lambda(1), 1);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      QMat ab = gm.contraction[1][a] * gm.contraction[2][b];
      QMat ba = gm.contraction[1][b] * gm.contraction[2][a];
      CHECK(ab == ba);
    }
}

TEST_CASE("hodge split separates image, harmonic and coimage") {
  GradedModel gm = assemble_graded_module(3, StructureKind::Riemannian, ESpec::lambda(1), 1);
  HodgeSplit h0 = hodge_split(gm, 0);
  CHECK(h0.total_dim == 10);
  CHECK(h0.image.cols() == 0);
  CHECK(h0.harmonic.cols() == 3);
  CHECK(h0.coimage.cols() == 7);

  HodgeSplit h1 = hodge_split(gm, 1);
  CHECK(h1.total_dim == 30);
  CHECK(h1.image.cols() == 7);
  CHECK(h1.harmonic.cols() == 5);

  HodgeSplit h2 = hodge_split(gm, 2);
  CHECK(h2.image.cols() + h2.harmonic.cols() + h2.coimage.cols() == h2.total_dim);
}

TEST_CASE("codifferential undoes the differential block by block") {
  GradedModel gm = assemble_graded_module(3, StructureKind::Affine, ESpec::lambda(1), 1);
  build_codifferential(gm);
  QMat A = graded_del(gm, 0, 1);
  CHECK(gm.dstar0[1] * A == QMat::identity(gm.levels[1].dim));
  CHECK(A * gm.dstar0[1] * A == A);
}
