#ifndef PROLONG_LIEALG_HPP
#define PROLONG_LIEALG_HPP

#include <vector>

#include "prolong/matrix.hpp"
#include "prolong/rational.hpp"

namespace prolong {

enum class Series { A, B, D };

/// Dynkin labels, i.e. coordinates in the fundamental-weight basis.
using Labels = std::vector<int>;

/// Weights and roots in orthogonal coordinates, stored doubled so that the
/// half-integer spin weights of the B and D series stay integral.
using EpsVec = std::vector<long long>;

/// Simple roots, positive roots, fundamental weights and rho for one simple
/// root system of series A, B or D, all in doubled orthogonal coordinates.
struct RootData {
  Series series = Series::A;
  int rank = 0;
  int eps_dim = 0;
  std::vector<EpsVec> simple_roots;
  std::vector<EpsVec> positive_roots;
  std::vector<EpsVec> fundamental_weights;
  EpsVec rho;
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = 2<a_i,a_j>/<a_i,a_i>
  QMat symmetric_form;                   // Gram matrix of the fundamental weights
};

/// Ranks accepted: A >= 1, B >= 2, D >= 3 (the usual non-overlapping list).
RootData build_root_system(Series s, int rank);

/// Also accepts the degenerate diagrams B1 and D2 that appear as reductive
/// factors after deleting a node; not part of the public catalog.
RootData build_root_system_any(Series s, int rank);

/// 4 <a, b> as an exact integer (both arguments doubled).
long long dot4(const EpsVec& a, const EpsVec& b);

EpsVec eps_add(const EpsVec& a, const EpsVec& b);
EpsVec eps_sub(const EpsVec& a, const EpsVec& b);
EpsVec eps_scaled(const EpsVec& a, long long s);

/// <mu, alpha_i^vee>, always an integer for lattice weights.
long long pairing(const RootData& rd, const EpsVec& mu, int i);

EpsVec labels_to_eps(const RootData& rd, const Labels& la);
Labels eps_to_labels(const RootData& rd, const EpsVec& mu);

/// Weyl dimension formula, exact.
Int weyl_dimension(const RootData& rd, const Labels& highest);

/// Weyl dimension over an explicit set of positive roots, evaluated with an
/// ambient rho.  Correct whenever rho differs from the sub-system's own rho
/// by something orthogonal to all the listed roots.
Int weyl_dimension_over_roots(const std::vector<EpsVec>& positive,
                              const EpsVec& rho, const EpsVec& mu);

struct WeightEntry {
  Labels labels;
  Int multiplicity;
  std::vector<int> depth;  // simple-root coefficients of (highest - weight)
};

struct WeightMultiplicityTable {
  Labels highest;
  Int dimension;
  std::vector<WeightEntry> entries;  // ordered by total depth, then by depth vector
};

/// Full weight system with multiplicities (string generation + Freudenthal).
/// Throws resource_error if the dimension exceeds the cap.
WeightMultiplicityTable weight_multiplicities(const RootData& rd, const Labels& highest,
                                              const Int& cap = Int(20000));

} // namespace prolong

#endif
