#ifndef PROLONG_COMB_HPP
#define PROLONG_COMB_HPP

#include <map>
#include <vector>

#include "prolong/rational.hpp"

namespace prolong {

Int binomial(int n, int k);
Int factorial(int n);

/// Number of distinct arrangements of the multiset with the given exponent
/// vector: (sum e)! / prod(e_i!).
Int multinomial(const std::vector<int>& exps);

/// Exponent vectors over `vars` symbols with total degree exactly `degree`,
/// in lexicographic order.
std::vector<std::vector<int>> exponents_exact(int vars, int degree);

/// Total degree at most `degree`, ordered by degree then lexicographically.
std::vector<std::vector<int>> exponents_up_to(int vars, int degree);

/// Strictly increasing index lists of length p drawn from {0..n-1}.
std::vector<std::vector<int>> subsets(int n, int p);

/// (2,0,1) -> [0,0,2]: the sorted slot list of a multiset.
std::vector<int> exps_to_slots(const std::vector<int>& exps);
std::vector<int> slots_to_exps(const std::vector<int>& slots, int vars);

/// All distinct orderings of the multiset given by an exponent vector.
std::vector<std::vector<int>> distinct_arrangements(const std::vector<int>& exps);

/// Row-major rank of a tensor multi-index over an n-dimensional factor space.
long long tensor_rank(const std::vector<int>& index, int n);

/// Position lookup within a fixed list of exponent vectors.
class ExpIndex {
public:
  ExpIndex() = default;
  explicit ExpIndex(const std::vector<std::vector<int>>& list);
  int at(const std::vector<int>& e) const;
  bool contains(const std::vector<int>& e) const;
  int size() const { return int(idx_.size()); }

private:
  std::map<std::vector<int>, int> idx_;
};

} // namespace prolong

#endif
