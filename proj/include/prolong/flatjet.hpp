#ifndef PROLONG_FLATJET_HPP
#define PROLONG_FLATJET_HPP

#include <random>
#include <vector>

#include "prolong/hodge.hpp"
#include "prolong/matrix.hpp"

namespace prolong {

/// Polynomial with values in a fixed fiber: exact coefficients indexed by
/// (monomial of total degree <= degree_bound, fiber index), monomials ordered
/// by degree then lexicographically.
struct PolySection {
  int n = 0;
  int fiber_dim = 0;
  int degree_bound = 0;
  std::vector<std::vector<int>> monomials;
  ExpIndex index;
  QMat coeffs; // (#monomials * fiber_dim) x 1

  Rat& coeff(const std::vector<int>& alpha, int e);
  const Rat& coeff(const std::vector<int>& alpha, int e) const;
};

PolySection zero_section(int n, int fiber_dim, int degree_bound);
PolySection section_from_vector(int n, int fiber_dim, int degree_bound, QMat coeffs);
PolySection random_section(int n, int fiber_dim, int degree_bound,
                           std::mt19937_64& rng);

/// Coordinate gradient: output fiber index a * fiber_dim + e.
PolySection poly_gradient(const PolySection& s);

/// Apply a constant linear map to the fiber at every monomial.
PolySection apply_fiber_map(const QMat& M, const PolySection& s);

PolySection section_sum(const PolySection& a, const PolySection& b);
PolySection section_scaled(const PolySection& a, const Rat& c);

/// Equality as polynomials (padding with zeros across degree bounds).
bool same_polynomial(const PolySection& a, const PolySection& b);

bool section_is_zero(const PolySection& s);

QMat eval_section(const PolySection& s, const std::vector<Rat>& x);

/// One polynomial component per graded level, component i valued in level-i
/// coordinates of the graded module.
struct GradedPolySection {
  std::vector<PolySection> comp;
};

/// Matrix of the k-th order constant-coefficient operator from E-valued
/// polynomials of degree <= degree_bound to constraint-valued polynomials of
/// degree <= degree_bound - k: k-fold coordinate differentiation followed by
/// the symbol projection.
QMat flat_operator_matrix(const SymbolData& S, int degree_bound);
QMat flat_operator_matrix(int n, StructureKind kind, const ESpec& espec, int k,
                          int degree_bound, long long entry_cap = 200000);

struct FlatSolutionSpace {
  int n = 0, k = 0, N = 0;
  int fiber_dim = 0;
  std::vector<std::vector<int>> monomials; // degree <= N
  QMat basis;                              // solution coefficients, one per column
  int dim = 0;
};

/// Kernel of the flat operator at degree N, verified to match the graded
/// module total and to be stable under raising the degree bound to N + 1.
/// Throws verification_error on either mismatch.
FlatSolutionSpace solution_space(int n, StructureKind kind, const ESpec& espec,
                                 int k, long long entry_cap = 200000);

/// Solutions whose coefficients vanish in all degrees < min_degree, as a
/// coordinate subspace of the given solution basis.
QMat low_jet_vanishing_solutions(const FlatSolutionSpace& sol, int min_degree);

/// The splitting: top slot sigma, then each level is minus the codifferential
/// of the gradient of the previous one.
GradedPolySection splitting_L(const GradedModel& gm, const PolySection& sigma);

/// True iff the recursion defining the splitting holds in every level.
bool check_splitting_range(const GradedModel& gm, const GradedPolySection& S);

/// Per level i: the (forms x level-i)-valued section with components
/// d_a Sigma_i + contraction_a Sigma_{i+1}; entry i of the result corresponds
/// to level i, fiber index a * dim_i + v.
std::vector<PolySection> nabla_tilde(const GradedModel& gm,
                                     const GradedPolySection& S);

/// Covariant derivative of a graded section in one coordinate direction.
GradedPolySection nabla_tilde_direction(const GradedModel& gm,
                                        const GradedPolySection& S, int a);

/// True iff the codifferential annihilates nabla_tilde of S.
bool delta_star_annihilates(const GradedModel& gm, const GradedPolySection& S);

/// Matrix of (jet of sigma at 0 up to degree i) -> (levels 0..i of the
/// splitting evaluated at 0).
QMat origin_jet_map(const GradedModel& gm, int i);

} // namespace prolong

#endif
