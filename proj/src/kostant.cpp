#include "prolong/kostant.hpp"

#include <algorithm>

#include "prolong/errors.hpp"

namespace prolong {

StructureData make_structure(StructureKind kind, int n) {
  StructureData sd;
  sd.kind = kind;
  sd.n = n;
  sd.crossed_node = 0;
  if (kind == StructureKind::Affine) {
    require(n >= 2, "affine structure needs n >= 2");
    sd.g = build_root_system(Series::A, n);
    sd.g0s = build_root_system_any(Series::A, n - 1);
  } else {
    require(n >= 3, "riemannian structure needs n >= 3");
    if (n % 2 == 1) {
      sd.g = build_root_system(Series::B, (n + 1) / 2);
      sd.g0s = build_root_system_any(Series::B, (n - 1) / 2);
    } else {
      sd.g = build_root_system(Series::D, (n + 2) / 2);
      sd.g0s = build_root_system_any(Series::D, n / 2);
    }
  }
  // Roots not involving the crossed node are exactly those with vanishing
  // first orthogonal coordinate, for all three series.
  for (const auto& r : sd.g.positive_roots)
    if (r[0] == 0) sd.reductive_positive_roots.push_back(r);
  check_internal(sd.reductive_positive_roots.size() == sd.g0s.positive_roots.size(),
                 "reductive factor root count mismatch");

  // The crossed node must sit at the end of a chain whose removal leaves the
  // expected diagram: compare Cartan submatrices.
  for (int i = 1; i < sd.g.rank; ++i)
    for (int j = 1; j < sd.g.rank; ++j)
      check_internal(sd.g.cartan[i][j] == sd.g0s.cartan[i - 1][j - 1],
                     "deleted diagram does not match reductive factor");
  return sd;
}

std::string structure_name(const StructureData& sd) {
  return (sd.kind == StructureKind::Affine ? std::string("affine(") : std::string("riemannian(")) +
         std::to_string(sd.n) + ")";
}

Labels prolongation_module(const StructureData& sd, const Labels& e_labels, int k) {
  require(k >= 1, "order k must be at least 1");
  require(int(e_labels.size()) == sd.g.rank - 1,
          "bundle labels must cover the uncrossed nodes");
  for (int m : e_labels) require(m >= 0, "bundle labels must be non-negative");
  Labels v(sd.g.rank);
  v[0] = k - 1;
  std::copy(e_labels.begin(), e_labels.end(), v.begin() + 1);
  return v;
}

int order_N(const StructureData& sd, const Labels& e_labels, int k) {
  Labels v = prolongation_module(sd, e_labels, k);
  EpsVec top = labels_to_eps(sd.g, v);
  // The grading depth of the lowest weight equals the crossed-node coefficient
  // of (top - lowest), which reduces to the first orthogonal coordinate.
  if (sd.kind == StructureKind::Affine) {
    check_internal(top[0] % 2 == 0, "grading depth not integral");
    long long nn = top[0] / 2;
    return int(nn);
  }
  return int(top[0]);
}

Int reductive_dimension(const StructureData& sd, const Labels& labels_g0) {
  require(int(labels_g0.size()) == sd.g0s.rank, "reductive labels have wrong length");
  Int direct = weyl_dimension(sd.g0s, labels_g0);
  // Same computation inside g's coordinates, using g's rho over the crossed-out
  // root subsystem; the two must agree.
  EpsVec mu(sd.g.eps_dim, 0);
  for (int j = 1; j < sd.g.rank; ++j)
    mu = eps_add(mu, eps_scaled(sd.g.fundamental_weights[j], labels_g0[j - 1]));
  Int embedded = weyl_dimension_over_roots(sd.reductive_positive_roots, sd.g.rho, mu);
  check_internal(direct == embedded, "reductive dimension mismatch between models");
  return direct;
}

Labels cotangent_labels(const StructureData& sd) {
  const int r0 = sd.g0s.rank;
  Labels la(r0, 0);
  if (sd.kind == StructureKind::Affine) {
    la[0] = 1;
    return la;
  }
  if (sd.n == 3) {
    la[0] = 2;  // B1: the vector representation has a doubled label
    return la;
  }
  if (sd.n == 4) {
    la[0] = 1;  // D2: both fork nodes
    la[1] = 1;
    return la;
  }
  la[0] = 1;
  return la;
}

GradedProfile graded_profile(const StructureData& sd, const Labels& e_labels, int k,
                             const Int& cap) {
  GradedProfile gp;
  gp.v_labels = prolongation_module(sd, e_labels, k);
  gp.N = order_N(sd, e_labels, k);
  auto table = weight_multiplicities(sd.g, gp.v_labels, cap);
  gp.total = table.dimension;
  gp.level_dims.assign(gp.N + 1, Int(0));
  for (const auto& e : table.entries) {
    const int level = e.depth[0];
    check_internal(level >= 0 && level <= gp.N, "grading level out of range");
    gp.level_dims[level] += e.multiplicity;
  }
  Int sum = 0;
  for (const auto& d : gp.level_dims) {
    check_internal(d > 0, "empty grading level");
    sum += d;
  }
  check_internal(sum == gp.total, "grading levels do not sum to the dimension");
  check_internal(gp.level_dims[0] == reductive_dimension(sd, e_labels),
                 "level zero does not match the bundle dimension");
  return gp;
}

CohomologyPair cohomology(const StructureData& sd, const Labels& v_labels) {
  require(int(v_labels.size()) == sd.g.rank, "module labels have wrong length");
  for (int m : v_labels) require(m >= 0, "module labels must be dominant");
  CohomologyPair c;
  c.h0.assign(v_labels.begin() + 1, v_labels.end());
  const int ell = v_labels[0];
  EpsVec mu = labels_to_eps(sd.g, v_labels);
  mu = eps_sub(mu, eps_scaled(sd.g.simple_roots[0], ell + 1));
  Labels full = eps_to_labels(sd.g, mu);
  c.h1.assign(full.begin() + 1, full.end());
  for (int m : c.h1)
    check_internal(m >= 0, "first cohomology labels not dominant");
  return c;
}

} // namespace prolong
