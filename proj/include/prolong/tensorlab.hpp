#ifndef PROLONG_TENSORLAB_HPP
#define PROLONG_TENSORLAB_HPP

#include <string>
#include <vector>

#include "prolong/comb.hpp"
#include "prolong/kostant.hpp"
#include "prolong/matrix.hpp"

namespace prolong {

/// Bundle catalog: trivial, lambda(p) = p-forms, sym(m) = symmetric m-tensors
/// (affine only), sym0(m) = trace-free symmetric m-tensors (riemannian only).
struct ESpec {
  enum Kind { Trivial, Lambda, Sym, Sym0 };
  Kind kind = Trivial;
  int arg = 0;

  static ESpec trivial() { return {Trivial, 0}; }
  static ESpec lambda(int p) { return {Lambda, p}; }
  static ESpec sym(int m) { return {Sym, m}; }
  static ESpec sym0(int m) { return {Sym0, m}; }

  std::string name() const;
  /// "trivial", "lambdaP", "symM", "sym0M"; throws config_error on garbage.
  static ESpec parse(const std::string& token);
};

/// Throws config_error unless the bundle descriptor fits the structure: forms
/// need 1 <= p <= n-1 (affine) or 1 <= p <= (n-1)/2 (riemannian), sym is
/// affine-only, sym0 riemannian-only.
void validate_espec(StructureKind kind, int n, const ESpec& espec);

/// Labels of the bundle on the uncrossed nodes.
Labels espec_labels(const StructureData& sd, const ESpec& espec);

/// Concrete realization of a bundle as a subspace of (R^n*)^{x valence}.
/// Basis columns live in the n^valence tensor ambient; generator_action gives
/// the structure algebra in basis coordinates (existence of those matrices is
/// the invariance of the subspace, verified during construction).
struct TensorModel {
  int n = 0;
  StructureKind kind = StructureKind::Affine;
  ESpec espec;
  int valence = 0;
  long long ambient_dim = 0;
  int fiber_dim = 0;
  QMat basis;
  std::vector<QMat> generators;        // n x n matrices spanning the algebra
  std::vector<QMat> generator_action;  // fiber_dim x fiber_dim, same order
};

TensorModel realize_bundle(int n, StructureKind kind, const ESpec& espec,
                           long long entry_cap = 200000);

/// gl(n) for affine (all E_uv), so(n) for riemannian (E_uv - E_vu, u < v).
std::vector<QMat> structure_generators(StructureKind kind, int n);

/// Action of X on the s-th slot of dual tensors: sum over slots of -X^T.
QMat slotwise_dual_action(const QMat& X, int n, int valence);

/// Action of X on multiset ("symmetric power") coordinates of dual tensors.
QMat sym_dual_action(const QMat& X, const std::vector<std::vector<int>>& exps,
                     const ExpIndex& index);

/// Action of the g-th structure generator on multiset x fiber coordinates of
/// bundle-valued symmetric tensors.
QMat level_generator_action(const TensorModel& E,
                            const std::vector<std::vector<int>>& exps,
                            const ExpIndex& index, size_t g);

/// All integer eigenvalues of an exactly diagonalizable integer matrix, via
/// Krylov minimal polynomials; verified by annihilating the matrix.
std::vector<long> integer_spectrum(const QMat& C);

/// Order-k symbol data on multiset coordinates of sym^k(T*) tensor E:
/// projector onto the constraint summand F and its kernel K.
struct SymbolData {
  int n = 0, k = 0;
  StructureKind kind = StructureKind::Affine;
  TensorModel bundle;
  std::vector<std::vector<int>> multisets;  // exponent vectors, |mu| = k
  ExpIndex multiset_index;
  int domain_dim = 0;                       // #multisets * fiber_dim
  QMat projector;                           // idempotent, rank = dim F
  Int constraint_dim;
  QMat constraint_coords;                   // W with projector = U * W, U = im basis
  QMat image_basis;                         // U
  QMat kernel;                              // basis of K = ker(projector)
};

SymbolData symbol_projector(int n, StructureKind kind, const ESpec& espec, int k,
                            long long entry_cap = 200000);

/// One graded level of the prolongation computed by brute force.
struct LevelBasis {
  int level = 0;
  std::vector<std::vector<int>> multisets;  // exponent vectors, |mu| = level
  QMat sym_basis;      // (multisets x fiber) x dim
  QMat ambient_basis;  // n^level * fiber x dim
};

/// Exact level-by-level prolongation: V_i is the joint kernel of the symbol
/// constraint applied under i-k extra derivatives, inside sym^i(T*) tensor E.
/// Iterates until the first empty level.
std::vector<LevelBasis> classical_prolongations(int n, StructureKind kind,
                                                const ESpec& espec, int k,
                                                long long entry_cap = 200000);

/// One (structure, bundle, order) combination from the verification catalog.
struct CatalogCase {
  StructureKind kind = StructureKind::Affine;
  ESpec espec;
  int k = 1;
};

/// Every catalog combination whose bundle spec is admissible at dimension n.
/// This is the case list the cross-check suites iterate over.
std::vector<CatalogCase> catalog_cases(int n);

} // namespace prolong

#endif
