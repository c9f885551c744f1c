#ifndef PROLONG_HODGE_HPP
#define PROLONG_HODGE_HPP

#include <vector>

#include "prolong/matrix.hpp"
#include "prolong/report.hpp"
#include "prolong/tensorlab.hpp"

namespace prolong {

/// One graded piece V_i realized inside sym^i coordinates x fiber.
struct LevelData {
  int level = 0;
  std::vector<std::vector<int>> multisets; // degree-i exponent vectors, lex order
  QMat basis;                              // (|multisets| * fiber_dim) x dim_i
  int dim = 0;
  QMat gram; // dim_i x dim_i, induced by the weighted ambient inner product
};

/// The full prolongation bundle V = V_0 + ... + V_N together with the
/// contraction maps that generate the graded differential.
struct GradedModel {
  int n = 0;
  StructureKind kind = StructureKind::Affine;
  ESpec espec;
  int k = 0;
  int N = 0;
  TensorModel bundle;
  SymbolData symbol;
  std::vector<LevelData> levels; // index 0..N
  QMat fiber_gram;               // fiber_dim x fiber_dim
  // contraction[i][a]: V_i -> V_{i-1} in level coordinates, i = 1..N
  std::vector<std::vector<QMat>> contraction;
  // codifferential blocks, filled by build_codifferential:
  // dstar0[i]: (n * dim_{i-1}) -> dim_i for i = 1..N
  std::vector<QMat> dstar0;
  // dstar1[i]: (C(n,2) * dim_{i-1}) -> (n * dim_i) for i = 1..N
  std::vector<QMat> dstar1;
  bool has_codifferential = false;
};

GradedModel assemble_graded_module(int n, StructureKind kind, const ESpec& espec,
                                   int k, long long entry_cap = 200000);

/// Differential block on p-forms: Lambda^p (x) V_i -> Lambda^{p+1} (x) V_{i-1},
/// alternating sum of slot contractions. Valid for 0 <= p, 1 <= i <= N.
QMat graded_del(const GradedModel& gm, int p, int i);

/// Inner product on Lambda^p (x) V_i in level coordinates.
QMat form_gram(const GradedModel& gm, int p, int i);

/// Fill dstar0/dstar1 with the orthogonal partial inverses of the p = 0 and
/// p = 1 differential blocks.
void build_codifferential(GradedModel& gm);

/// Orthogonal decomposition of Lambda^p (x) V under the graded differential:
/// image of the incoming map, harmonic part, and the complement of the kernel.
struct HodgeSplit {
  int p = 0;
  int total_dim = 0;
  std::vector<int> level_offsets; // offset of the level-i block, size N+2
  QMat image;
  QMat harmonic;
  QMat coimage;
};

HodgeSplit hodge_split(const GradedModel& gm, int p);

/// Identity battery for the assembled module: differential squares to zero,
/// it is injective level by level, the low levels fill the full symmetric
/// power, the defect sits in degree k with the predicted dimension, and the
/// codifferential is a two-sided partial inverse.
std::vector<CheckResult> verify_graded_structure(GradedModel& gm);

} // namespace prolong

#endif
