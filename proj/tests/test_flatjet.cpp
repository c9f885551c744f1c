#include "doctest.h"

#include "prolong/errors.hpp"
#include "prolong/flatjet.hpp"

using namespace prolong;

namespace {

GradedModel model_with_codiff(int n, StructureKind kind, const ESpec& e, int k) {
  GradedModel gm = assemble_graded_module(n, kind, e, k);
  build_codifferential(gm);
  return gm;
}

} // namespace

TEST_CASE("flat operator kernels at fixed degree") {
  CHECK(kernel_basis(flat_operator_matrix(3, StructureKind::Affine,
                                          ESpec::trivial(), 2, 2)).cols() == 4);
  CHECK(kernel_basis(flat_operator_matrix(3, StructureKind::Riemannian,
                                          ESpec::lambda(1), 1, 2)).cols() == 10);
  CHECK(kernel_basis(flat_operator_matrix(3, StructureKind::Riemannian,
                                          ESpec::lambda(1), 2, 4)).cols() == 35);
}

TEST_CASE("flat solution spaces match the predicted totals") {
  CHECK(solution_space(3, StructureKind::Affine, ESpec::lambda(1), 1).dim == 6);
  CHECK(solution_space(3, StructureKind::Riemannian, ESpec::lambda(1), 1).dim == 10);
  CHECK(solution_space(3, StructureKind::Affine, ESpec::trivial(), 2).dim == 4);
  CHECK(solution_space(3, StructureKind::Riemannian, ESpec::trivial(), 2).dim == 5);
  CHECK(solution_space(4, StructureKind::Riemannian, ESpec::lambda(1), 1).dim == 15);
}

TEST_CASE("solutions with vanishing low jets fill exactly the top level") {
  struct Case { StructureKind kind; ESpec e; int k; };
  const Case cases[] = {
      {StructureKind::Affine, ESpec::lambda(1), 1},
      {StructureKind::Riemannian, ESpec::lambda(1), 1},
      {StructureKind::Affine, ESpec::trivial(), 2},
      {StructureKind::Riemannian, ESpec::trivial(), 2},
      {StructureKind::Riemannian, ESpec::lambda(1), 2},
  };
  for (const auto& c : cases) {
    FlatSolutionSpace sol = solution_space(3, c.kind, c.e, c.k);
    GradedModel gm = assemble_graded_module(3, c.kind, c.e, c.k);
    QMat high = low_jet_vanishing_solutions(sol, sol.N);
    CHECK(high.cols() == gm.levels[size_t(gm.N)].dim);
    CHECK(high.cols() > 0);
  }
}

TEST_CASE("splitting of a constant section has no higher components") {
  GradedModel gm = model_with_codiff(3, StructureKind::Riemannian, ESpec::lambda(1), 1);
  PolySection sigma = zero_section(3, 3, 0);
  std::vector<int> one(3, 0);
  sigma.coeff(one, 1) = Rat(2);
  GradedPolySection L = splitting_L(gm, sigma);
  CHECK(same_polynomial(L.comp[0], sigma));
  CHECK(section_is_zero(L.comp[1]));
  CHECK(section_is_zero(L.comp[2]));
}

TEST_CASE("splitting of a coordinate function in the scalar order-two system") {
  GradedModel gm = model_with_codiff(3, StructureKind::Riemannian, ESpec::trivial(), 2);
  PolySection sigma = zero_section(3, 1, 1);
  sigma.coeff({1, 0, 0}, 0) = Rat(1); // the first coordinate function
  GradedPolySection L = splitting_L(gm, sigma);
  // gradient slot: minus the unit covector along the first coordinate
  CHECK(L.comp[1].degree_bound == 0);
  CHECK(L.comp[1].coeffs.at(0, 0) == Rat(0));
  CHECK(L.comp[1].coeffs.at(1, 0) == Rat(0));
  CHECK(L.comp[1].coeffs.at(2, 0) == Rat(-1));
  CHECK(section_is_zero(L.comp[2]));
}

TEST_CASE("splitting leading terms reproduce derivative coordinates") {
  // Degree-one monomial sections: level 1 of the splitting is minus the
  // gradient in level coordinates.
  GradedModel gm = model_with_codiff(3, StructureKind::Riemannian, ESpec::lambda(1), 2);
  for (int a = 0; a < 3; ++a)
    for (int e = 0; e < 3; ++e) {
      PolySection sigma = zero_section(3, 3, 1);
      std::vector<int> alpha(3, 0);
      alpha[size_t(a)] = 1;
      sigma.coeff(alpha, e) = Rat(1);
      GradedPolySection L = splitting_L(gm, sigma);
      // level 1 is the full jet space: coordinates (multiset, fiber)
      const int slot = ExpIndex(gm.levels[1].multisets).at(alpha) * 3 + e;
      for (int r = 0; r < L.comp[1].coeffs.rows(); ++r)
        CHECK(L.comp[1].coeffs.at(r, 0) == (r == slot ? Rat(-1) : Rat(0)));
    }
}

TEST_CASE("splitting recursion is accepted and perturbations are rejected") {
  GradedModel gm = model_with_codiff(3, StructureKind::Affine, ESpec::lambda(1), 1);
  std::mt19937_64 rng(7);
  PolySection sigma = random_section(3, 3, 2, rng);
  GradedPolySection L = splitting_L(gm, sigma);
  CHECK(check_splitting_range(gm, L));
  CHECK(delta_star_annihilates(gm, L));

  GradedPolySection bad = L;
  std::vector<int> zero(3, 0);
  bad.comp[1].coeff(zero, 0) += Rat(1);
  CHECK_FALSE(check_splitting_range(gm, bad));
}

TEST_CASE("codifferential annihilates the extended derivative of any splitting") {
  std::mt19937_64 rng(20240817);
  struct Case { StructureKind kind; ESpec e; int k; int f; };
  const Case cases[] = {
      {StructureKind::Riemannian, ESpec::lambda(1), 1, 3},
      {StructureKind::Riemannian, ESpec::trivial(), 2, 1},
      {StructureKind::Riemannian, ESpec::lambda(1), 2, 3},
  };
  for (const auto& c : cases) {
    GradedModel gm = model_with_codiff(3, c.kind, c.e, c.k);
    for (int trial = 0; trial < 4; ++trial) {
      PolySection sigma = random_section(3, c.f, 3, rng);
      CHECK(delta_star_annihilates(gm, splitting_L(gm, sigma)));
    }
  }
}

TEST_CASE("origin jet map is square and invertible below the order") {
  GradedModel gm = model_with_codiff(3, StructureKind::Riemannian, ESpec::lambda(1), 2);
  for (int i = 0; i < 2; ++i) {
    QMat J = origin_jet_map(gm, i);
    int want = 0;
    for (int j = 0; j <= i; ++j) want += gm.levels[size_t(j)].dim;
    CHECK(J.rows() == J.cols());
    CHECK(rank(J) == want);
  }
}

TEST_CASE("splittings of flat solutions are parallel sections") {
  GradedModel gm = model_with_codiff(3, StructureKind::Affine, ESpec::lambda(1), 1);
  FlatSolutionSpace sol = solution_space(3, StructureKind::Affine, ESpec::lambda(1), 1);
  for (int j = 0; j < sol.dim; ++j) {
    PolySection sigma = section_from_vector(3, 3, sol.N, sol.basis.col(j));
    auto nt = nabla_tilde(gm, splitting_L(gm, sigma));
    for (const auto& comp : nt) CHECK(section_is_zero(comp));
  }
  // a non-solution is split consistently but is not parallel
  PolySection bad = zero_section(3, 3, 1);
  bad.coeff({1, 0, 0}, 0) = Rat(1);
  auto nt = nabla_tilde(gm, splitting_L(gm, bad));
  bool all_zero = true;
  for (const auto& comp : nt) all_zero = all_zero && section_is_zero(comp);
  CHECK_FALSE(all_zero);
}

TEST_CASE("the extended flat connection has zero curvature") {
  GradedModel gm = model_with_codiff(3, StructureKind::Riemannian, ESpec::trivial(), 2);
  std::mt19937_64 rng(5);
  GradedPolySection S;
  for (int i = 0; i <= gm.N; ++i)
    S.comp.push_back(random_section(3, gm.levels[size_t(i)].dim, 3, rng));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < a; ++b) {
      GradedPolySection ab = nabla_tilde_direction(gm, nabla_tilde_direction(gm, S, b), a);
      GradedPolySection ba = nabla_tilde_direction(gm, nabla_tilde_direction(gm, S, a), b);
      for (int i = 0; i <= gm.N; ++i)
        CHECK(same_polynomial(ab.comp[size_t(i)], ba.comp[size_t(i)]));
    }
}
