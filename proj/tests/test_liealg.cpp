#include "doctest.h"
#include "prolong/liealg.hpp"

#include <map>

#include "prolong/errors.hpp"

using namespace prolong;

TEST_CASE("root system construction") {
  RootData a2 = build_root_system(Series::A, 2);
  CHECK(a2.positive_roots.size() == 3);
  CHECK(a2.cartan == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});

  RootData b2 = build_root_system(Series::B, 2);
  CHECK(b2.positive_roots.size() == 4);
  CHECK(b2.cartan == std::vector<std::vector<int>>{{2, -1}, {-2, 2}});

  RootData d4 = build_root_system(Series::D, 4);
  CHECK(d4.positive_roots.size() == 12);
  CHECK(d4.cartan[1] == std::vector<int>{-1, 2, -1, -1});

  CHECK_THROWS_AS(build_root_system(Series::B, 1), config_error);
  CHECK_THROWS_AS(build_root_system(Series::D, 2), config_error);
  CHECK_NOTHROW(build_root_system(Series::A, 1));

  // degenerate diagrams used internally as reductive factors
  RootData b1 = build_root_system_any(Series::B, 1);
  CHECK(b1.positive_roots.size() == 1);
  RootData d2 = build_root_system_any(Series::D, 2);
  CHECK(d2.positive_roots.size() == 2);
  CHECK(d2.cartan == std::vector<std::vector<int>>{{2, 0}, {0, 2}});
}

TEST_CASE("symmetric form on the weight lattice") {
  RootData a2 = build_root_system(Series::A, 2);
  CHECK(a2.symmetric_form.at(0, 0) == rat(2, 3));
  CHECK(a2.symmetric_form.at(0, 1) == rat(1, 3));

  RootData b2 = build_root_system(Series::B, 2);
  CHECK(b2.symmetric_form.at(0, 0) == rat(1));       // <e0, e0>
  CHECK(b2.symmetric_form.at(1, 1) == rat(1, 2));    // spin weight
}

TEST_CASE("weyl dimension matches classical formulas") {
  for (int n = 1; n <= 6; ++n) {
    RootData a = build_root_system(Series::A, n);
    Labels first(n, 0);
    first[0] = 1;
    CHECK(weyl_dimension(a, first) == n + 1);
  }
  CHECK(weyl_dimension(build_root_system(Series::A, 2), {1, 1}) == 8);
  CHECK(weyl_dimension(build_root_system(Series::B, 2), {1, 0}) == 5);
  CHECK(weyl_dimension(build_root_system(Series::B, 2), {0, 1}) == 4);
  CHECK(weyl_dimension(build_root_system(Series::B, 2), {0, 2}) == 10);
  CHECK(weyl_dimension(build_root_system(Series::B, 3), {1, 1, 0}) == 105);
  CHECK(weyl_dimension(build_root_system(Series::D, 3), {0, 1, 1}) == 15);
  CHECK(weyl_dimension(build_root_system(Series::D, 4), {0, 1, 0, 0}) == 28);
  CHECK(weyl_dimension(build_root_system_any(Series::B, 1), {2}) == 3);
  CHECK(weyl_dimension(build_root_system_any(Series::D, 2), {1, 1}) == 4);
}

TEST_CASE("label round trip") {
  for (auto rd : {build_root_system(Series::A, 3), build_root_system(Series::B, 3),
                  build_root_system(Series::D, 4)}) {
    Labels la(rd.rank, 0);
    la[0] = 2;
    la[rd.rank - 1] = 1;
    CHECK(eps_to_labels(rd, labels_to_eps(rd, la)) == la);
  }
}

namespace {

std::map<Labels, Int> as_map(const WeightMultiplicityTable& t) {
  std::map<Labels, Int> m;
  for (const auto& e : t.entries) m[e.labels] = e.multiplicity;
  return m;
}

} // namespace

TEST_CASE("weight multiplicities of small modules") {
  RootData a1 = build_root_system(Series::A, 1);
  auto t = weight_multiplicities(a1, {2});
  CHECK(t.dimension == 3);
  auto m = as_map(t);
  CHECK(m.size() == 3);
  CHECK(m[{2}] == 1);
  CHECK(m[{0}] == 1);
  CHECK(m[{-2}] == 1);
}

TEST_CASE("adjoint of A2 has a double zero weight") {
  RootData a2 = build_root_system(Series::A, 2);
  auto t = weight_multiplicities(a2, {1, 1});
  CHECK(t.dimension == 8);
  auto m = as_map(t);
  CHECK(m.size() == 7);
  CHECK(m[{0, 0}] == 2);
  CHECK(m[{1, 1}] == 1);
  CHECK(m[{-1, -1}] == 1);
}

TEST_CASE("vector representation of B2") {
  auto t = weight_multiplicities(build_root_system(Series::B, 2), {1, 0});
  CHECK(t.dimension == 5);
  CHECK(t.entries.size() == 5);
  for (const auto& e : t.entries) CHECK(e.multiplicity == 1);
  // depth of the lowest weight spans the full string
  CHECK(t.entries.front().depth == std::vector<int>{0, 0});
  CHECK(t.entries.back().depth == std::vector<int>{2, 2});
}

TEST_CASE("adjoint of B2") {
  auto t = weight_multiplicities(build_root_system(Series::B, 2), {0, 2});
  CHECK(t.dimension == 10);
  auto m = as_map(t);
  CHECK(m[{0, 0}] == 2);
}

TEST_CASE("dimension cap") {
  RootData b3 = build_root_system(Series::B, 3);
  CHECK_THROWS_AS(weight_multiplicities(b3, {1, 1, 0}, Int(50)), resource_error);
  CHECK_NOTHROW(weight_multiplicities(b3, {1, 1, 0}, Int(200)));
}
