#include "prolong/comb.hpp"

#include <algorithm>

#include "prolong/errors.hpp"

namespace prolong {

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int factorial(int n) {
  check_internal(n >= 0, "factorial of negative");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int multinomial(const std::vector<int>& exps) {
  int total = 0;
  for (int e : exps) total += e;
  Int r = factorial(total);
  for (int e : exps) r /= factorial(e);
  return r;
}

static void exact_rec(int vars, int degree, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (int(cur.size()) == vars - 1) {
    cur.push_back(degree);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur.push_back(e);
    exact_rec(vars, degree - e, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> exponents_exact(int vars, int degree) {
  check_internal(vars >= 1 && degree >= 0, "exponents_exact: bad args");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  exact_rec(vars, degree, cur, out);
  // exact_rec emits first coordinate descending; lex order wants ascending.
  std::reverse(out.begin(), out.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> exponents_up_to(int vars, int degree) {
  std::vector<std::vector<int>> out;
  for (int d = 0; d <= degree; ++d) {
    auto level = exponents_exact(vars, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<std::vector<int>> subsets(int n, int p) {
  std::vector<std::vector<int>> out;
  if (p < 0 || p > n) return out;
  std::vector<int> cur(p);
  for (int i = 0; i < p; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = p - 1;
    while (i >= 0 && cur[i] == n - p + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < p; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<int> exps_to_slots(const std::vector<int>& exps) {
  std::vector<int> slots;
  for (int v = 0; v < int(exps.size()); ++v)
    for (int c = 0; c < exps[v]; ++c) slots.push_back(v);
  return slots;
}

std::vector<int> slots_to_exps(const std::vector<int>& slots, int vars) {
  std::vector<int> exps(vars, 0);
  for (int s : slots) {
    check_internal(0 <= s && s < vars, "slots_to_exps: slot out of range");
    ++exps[s];
  }
  return exps;
}

std::vector<std::vector<int>> distinct_arrangements(const std::vector<int>& exps) {
  std::vector<int> slots = exps_to_slots(exps);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(slots);
  } while (std::next_permutation(slots.begin(), slots.end()));
  return out;
}

long long tensor_rank(const std::vector<int>& index, int n) {
  long long r = 0;
  for (int i : index) {
    check_internal(0 <= i && i < n, "tensor_rank: index out of range");
    r = r * n + i;
  }
  return r;
}

ExpIndex::ExpIndex(const std::vector<std::vector<int>>& list) {
  for (int i = 0; i < int(list.size()); ++i) idx_[list[i]] = i;
}

int ExpIndex::at(const std::vector<int>& e) const {
  auto it = idx_.find(e);
  check_internal(it != idx_.end(), "ExpIndex: unknown exponent vector");
  return it->second;
}

bool ExpIndex::contains(const std::vector<int>& e) const {
  return idx_.find(e) != idx_.end();
}

} // namespace prolong
