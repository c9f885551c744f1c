#include "doctest.h"
#include "prolong/kostant.hpp"

#include "prolong/comb.hpp"

#include "prolong/errors.hpp"

using namespace prolong;

TEST_CASE("structures pick the right algebras") {
  StructureData a3 = make_structure(StructureKind::Affine, 3);
  CHECK(a3.g.series == Series::A);
  CHECK(a3.g.rank == 3);
  CHECK(a3.g0s.rank == 2);

  StructureData r3 = make_structure(StructureKind::Riemannian, 3);
  CHECK(r3.g.series == Series::B);
  CHECK(r3.g.rank == 2);
  CHECK(r3.g0s.rank == 1);

  StructureData r4 = make_structure(StructureKind::Riemannian, 4);
  CHECK(r4.g.series == Series::D);
  CHECK(r4.g.rank == 3);
  CHECK(r4.g0s.positive_roots.size() == 2);

  StructureData r6 = make_structure(StructureKind::Riemannian, 6);
  CHECK(r6.g.series == Series::D);
  CHECK(r6.g.rank == 4);

  CHECK_THROWS_AS(make_structure(StructureKind::Affine, 1), config_error);
  CHECK_THROWS_AS(make_structure(StructureKind::Riemannian, 2), config_error);
}

TEST_CASE("prolongation module labels") {
  StructureData sd = make_structure(StructureKind::Affine, 3);
  CHECK(prolongation_module(sd, {1, 0}, 1) == Labels{0, 1, 0});
  CHECK(prolongation_module(sd, {0, 0}, 2) == Labels{1, 0, 0});
  CHECK_THROWS_AS(prolongation_module(sd, {1}, 1), config_error);
  CHECK_THROWS_AS(prolongation_module(sd, {1, 0}, 0), config_error);
}

TEST_CASE("system order from the module labels") {
  StructureData a3 = make_structure(StructureKind::Affine, 3);
  CHECK(order_N(a3, {1, 0}, 1) == 1);   // one-forms, first order
  CHECK(order_N(a3, {0, 0}, 2) == 1);   // functions, second order
  CHECK(order_N(a3, {1, 0}, 2) == 2);

  StructureData r3 = make_structure(StructureKind::Riemannian, 3);
  CHECK(order_N(r3, {2}, 1) == 2);
  CHECK(order_N(r3, {2}, 2) == 4);
  CHECK(order_N(r3, {0}, 2) == 2);
  CHECK(order_N(r3, {4}, 1) == 4);

  StructureData r4 = make_structure(StructureKind::Riemannian, 4);
  CHECK(order_N(r4, {1, 1}, 1) == 2);

  StructureData r6 = make_structure(StructureKind::Riemannian, 6);
  CHECK(order_N(r6, {0, 1, 1}, 1) == 2);  // two-forms: both fork labels count once
}

TEST_CASE("graded profile of first-order one-form systems") {
  StructureData r3 = make_structure(StructureKind::Riemannian, 3);
  GradedProfile gp = graded_profile(r3, {2}, 1);
  CHECK(gp.N == 2);
  CHECK(gp.total == 10);
  CHECK(gp.level_dims == std::vector<Int>{3, 4, 3});

  StructureData a3 = make_structure(StructureKind::Affine, 3);
  GradedProfile ga = graded_profile(a3, {1, 0}, 1);
  CHECK(ga.N == 1);
  CHECK(ga.total == 6);
  CHECK(ga.level_dims == std::vector<Int>{3, 3});
}

TEST_CASE("graded profile of the flat second-order scalar system") {
  StructureData a3 = make_structure(StructureKind::Affine, 3);
  GradedProfile gp = graded_profile(a3, {0, 0}, 2);
  CHECK(gp.N == 1);
  CHECK(gp.level_dims == std::vector<Int>{1, 3});

  StructureData r3 = make_structure(StructureKind::Riemannian, 3);
  GradedProfile gr = graded_profile(r3, {0}, 2);
  CHECK(gr.N == 2);
  CHECK(gr.total == 5);
  CHECK(gr.level_dims == std::vector<Int>{1, 3, 1});
}

TEST_CASE("totals across dimensions for the two classical systems") {
  for (int n = 3; n <= 6; ++n) {
    StructureData r = make_structure(StructureKind::Riemannian, n);
    Labels cot = cotangent_labels(r);
    GradedProfile gp = graded_profile(r, cot, 1);
    CHECK(gp.N == 2);
    CHECK(gp.total == Int((n + 1) * (n + 2) / 2));

    StructureData a = make_structure(StructureKind::Affine, n);
    GradedProfile ga = graded_profile(a, cotangent_labels(a), 1);
    CHECK(ga.N == 1);
    CHECK(ga.total == Int(n * (n + 1) / 2));
  }
}

TEST_CASE("second-order one-form systems") {
  for (int n : {3, 5}) {
    StructureData r = make_structure(StructureKind::Riemannian, n);
    GradedProfile gp = graded_profile(r, cotangent_labels(r), 2);
    CHECK(gp.N == 4);
    CHECK(gp.total == Int(n * (n + 2) * (n + 4) / 3));
  }
}

TEST_CASE("form-valued first-order systems have a three-step grading") {
  auto check_forms = [](int n, int p, const Labels& e) {
    StructureData r = make_structure(StructureKind::Riemannian, n);
    GradedProfile gp = graded_profile(r, e, 1);
    CHECK(gp.N == 2);
    CHECK(gp.total == binomial(n + 2, p + 1));
    CHECK(gp.level_dims[0] == binomial(n, p));
    CHECK(gp.level_dims[1] == binomial(n, p + 1) + binomial(n, p - 1));
    CHECK(gp.level_dims[2] == binomial(n, p));
  };
  check_forms(5, 2, {0, 2});
  check_forms(6, 1, {1, 0, 0});
  check_forms(6, 2, {0, 1, 1});
}

TEST_CASE("level zero always carries the bundle itself") {
  StructureData r5 = make_structure(StructureKind::Riemannian, 5);
  GradedProfile gp = graded_profile(r5, {2, 0}, 1);
  CHECK(gp.level_dims[0] == reductive_dimension(r5, {2, 0}));
}

TEST_CASE("cohomology labels") {
  StructureData a3 = make_structure(StructureKind::Affine, 3);
  CohomologyPair c = cohomology(a3, {0, 1, 0});
  CHECK(c.h0 == Labels{1, 0});
  CHECK(c.h1 == Labels{2, 0});

  StructureData r3 = make_structure(StructureKind::Riemannian, 3);
  CohomologyPair cr = cohomology(r3, {0, 2});
  CHECK(cr.h0 == Labels{2});
  CHECK(cr.h1 == Labels{4});

  // one more derivative doubles the cotangent contribution
  CohomologyPair cr2 = cohomology(r3, {1, 2});
  CHECK(cr2.h1 == Labels{6});

  StructureData r4 = make_structure(StructureKind::Riemannian, 4);
  CohomologyPair c4 = cohomology(r4, {0, 1, 1});
  CHECK(c4.h0 == Labels{1, 1});
  CHECK(c4.h1 == Labels{2, 2});
}

TEST_CASE("first cohomology equals cotangent-weighted bundle labels") {
  // h1 = k * cotangent + bundle labels, across structures and orders
  for (int n = 3; n <= 6; ++n) {
    for (StructureKind kind : {StructureKind::Affine, StructureKind::Riemannian}) {
      StructureData sd = make_structure(kind, n);
      Labels cot = cotangent_labels(sd);
      for (int k = 1; k <= 3; ++k) {
        Labels e = cot;  // arbitrary dominant choice
        Labels v = prolongation_module(sd, e, k);
        CohomologyPair c = cohomology(sd, v);
        Labels expect(sd.g0s.rank);
        for (int i = 0; i < sd.g0s.rank; ++i) expect[i] = k * cot[i] + e[i];
        CHECK(c.h0 == e);
        CHECK(c.h1 == expect);
      }
    }
  }
}
