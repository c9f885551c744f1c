#ifndef PROLONG_KOSTANT_HPP
#define PROLONG_KOSTANT_HPP

#include <string>
#include <vector>

#include "prolong/liealg.hpp"

namespace prolong {

enum class StructureKind { Affine, Riemannian };

/// One |1|-graded parabolic geometry from the two families handled here:
/// affine(n) crosses the first node of A_n, riemannian(n) the first node of
/// B_{(n+1)/2} (n odd) or D_{(n+2)/2} (n even).  The crossed node is removed
/// to obtain the semisimple part of the reductive factor.
struct StructureData {
  StructureKind kind = StructureKind::Affine;
  int n = 0;
  RootData g;
  int crossed_node = 0;
  RootData g0s;  // standalone root data of the reductive factor
  std::vector<EpsVec> reductive_positive_roots;  // roots of g0s inside g's coordinates
};

/// affine needs n >= 2, riemannian n >= 3.
StructureData make_structure(StructureKind kind, int n);

std::string structure_name(const StructureData& sd);

/// Labels on g of the module V attached to the order-k system on the bundle
/// with the given labels on the uncrossed nodes: k-1 on the crossed node.
Labels prolongation_module(const StructureData& sd, const Labels& e_labels, int k);

/// Length of the grading of V: the prolonged system closes after N steps.
int order_N(const StructureData& sd, const Labels& e_labels, int k);

struct GradedProfile {
  Labels v_labels;
  int N = 0;
  Int total;
  std::vector<Int> level_dims;  // N+1 entries, level 0 first
};

/// Full graded decomposition of V by crossed-node depth.
GradedProfile graded_profile(const StructureData& sd, const Labels& e_labels, int k,
                             const Int& cap = Int(20000));

struct CohomologyPair {
  Labels h0;  // labels on the uncrossed nodes
  Labels h1;
};

/// Lowest-degree Lie algebra cohomology of the nilpotent radical with values
/// in V: h0 names the bundle the system lives on, h1 the symbol constraint
/// module.
CohomologyPair cohomology(const StructureData& sd, const Labels& v_labels);

/// Dimension of the irreducible module of the reductive factor.
Int reductive_dimension(const StructureData& sd, const Labels& labels_g0);

/// Labels of the cotangent representation on the uncrossed nodes.
Labels cotangent_labels(const StructureData& sd);

} // namespace prolong

#endif
