#include "doctest.h"
#include "prolong/comb.hpp"

using namespace prolong;

TEST_CASE("binomial and multinomial") {
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(factorial(5) == 120);
  CHECK(multinomial({2, 1}) == 3);
  CHECK(multinomial({1, 1, 1}) == 6);
  CHECK(multinomial({3, 0, 0}) == 1);
}

TEST_CASE("exponent enumeration matches stars and bars") {
  auto e = exponents_exact(3, 2);
  CHECK(Int(e.size()) == binomial(3 + 2 - 1, 2));
  for (auto& v : e) {
    int s = 0;
    for (int x : v) s += x;
    CHECK(s == 2);
  }
  auto up = exponents_up_to(2, 3);
  CHECK(up.size() == 10);
  CHECK(up.front() == std::vector<int>{0, 0});

  ExpIndex idx(e);
  for (int i = 0; i < int(e.size()); ++i) CHECK(idx.at(e[i]) == i);
}

TEST_CASE("subsets are increasing and complete") {
  auto s = subsets(5, 3);
  CHECK(Int(s.size()) == binomial(5, 3));
  for (auto& v : s) {
    CHECK(v.size() == 3);
    CHECK(v[0] < v[1]);
    CHECK(v[1] < v[2]);
  }
  CHECK(subsets(4, 0).size() == 1);
}

TEST_CASE("arrangements of a multiset") {
  auto a = distinct_arrangements({1, 0, 2});
  CHECK(Int(a.size()) == multinomial({1, 0, 2}));
  CHECK(slots_to_exps(a.front(), 3) == std::vector<int>{1, 0, 2});
  CHECK(exps_to_slots({1, 0, 2}) == std::vector<int>{0, 2, 2});
  CHECK(tensor_rank({1, 0, 2}, 3) == 9 + 0 + 2);
}
