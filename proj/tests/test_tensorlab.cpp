#include "doctest.h"
#include "prolong/tensorlab.hpp"

#include "prolong/errors.hpp"

using namespace prolong;

TEST_CASE("bundle spec parsing and validity") {
  CHECK(ESpec::parse("trivial").kind == ESpec::Trivial);
  CHECK(ESpec::parse("lambda2").arg == 2);
  CHECK(ESpec::parse("sym3").kind == ESpec::Sym);
  CHECK(ESpec::parse("sym02").kind == ESpec::Sym0);
  CHECK(ESpec::parse("sym02").arg == 2);
  CHECK(ESpec::lambda(1).name() == "lambda1");
  CHECK_THROWS_AS(ESpec::parse("spinor"), config_error);
  CHECK_THROWS_AS(ESpec::parse("lambda"), config_error);

  CHECK_NOTHROW(validate_espec(StructureKind::Affine, 4, ESpec::lambda(3)));
  CHECK_THROWS_AS(validate_espec(StructureKind::Affine, 4, ESpec::lambda(4)), config_error);
  CHECK_NOTHROW(validate_espec(StructureKind::Riemannian, 5, ESpec::lambda(2)));
  CHECK_THROWS_AS(validate_espec(StructureKind::Riemannian, 4, ESpec::lambda(2)), config_error);
  CHECK_THROWS_AS(validate_espec(StructureKind::Riemannian, 3, ESpec::sym(2)), config_error);
  CHECK_THROWS_AS(validate_espec(StructureKind::Affine, 3, ESpec::sym0(2)), config_error);
}

TEST_CASE("bundle realizations have the predicted dimensions") {
  CHECK(realize_bundle(4, StructureKind::Affine, ESpec::lambda(2)).fiber_dim == 6);
  CHECK(realize_bundle(3, StructureKind::Riemannian, ESpec::sym0(2)).fiber_dim == 5);
  CHECK(realize_bundle(3, StructureKind::Affine, ESpec::trivial()).fiber_dim == 1);
  CHECK(realize_bundle(5, StructureKind::Riemannian, ESpec::lambda(2)).fiber_dim == 10);
  CHECK(realize_bundle(3, StructureKind::Affine, ESpec::sym(3)).fiber_dim == 10);
  CHECK(realize_bundle(4, StructureKind::Riemannian, ESpec::sym0(2)).fiber_dim == 9);
  CHECK(realize_bundle(6, StructureKind::Riemannian, ESpec::lambda(2)).fiber_dim == 15);
}

TEST_CASE("form bundle columns are alternating tensors") {
  TensorModel tm = realize_bundle(3, StructureKind::Affine, ESpec::lambda(2));
  // column for {0,1}: e0*e1 - e1*e0 at ranks 1 and 3
  CHECK(tm.basis.at(1, 0) == 1);
  CHECK(tm.basis.at(3, 0) == -1);
  CHECK(tm.basis.at(0, 0) == 0);
}

TEST_CASE("trace-free bundles are killed by the metric trace") {
  TensorModel tm = realize_bundle(4, StructureKind::Riemannian, ESpec::sym0(2));
  for (int j = 0; j < tm.fiber_dim; ++j) {
    Rat tr = 0;
    for (int a = 0; a < 4; ++a) tr += tm.basis.at(a * 4 + a, j);
    CHECK(tr == 0);
  }
}

TEST_CASE("integer spectrum of simple matrices") {
  QMat d = QMat::zero(3, 3);
  d.at(0, 0) = 2;
  d.at(1, 1) = 2;
  d.at(2, 2) = -1;
  auto spec = integer_spectrum(d);
  CHECK(spec == std::vector<long>{-1, 2});

  // nilpotent-free but non-diagonal: a symmetric permutation-ish matrix
  QMat s(2, 2);
  s.at(0, 1) = 1;
  s.at(1, 0) = 1;
  CHECK(integer_spectrum(s) == std::vector<long>{-1, 1});
}

TEST_CASE("symbol projector ranks") {
  SymbolData a = symbol_projector(3, StructureKind::Affine, ESpec::lambda(1), 1);
  CHECK(a.domain_dim == 9);
  CHECK(a.constraint_dim == 6);   // symmetrized derivative of a one-form
  CHECK(a.kernel.cols() == 3);

  SymbolData r = symbol_projector(3, StructureKind::Riemannian, ESpec::lambda(1), 1);
  CHECK(r.domain_dim == 9);
  CHECK(r.constraint_dim == 5);   // trace-free symmetric part
  CHECK(r.kernel.cols() == 4);

  SymbolData r2 = symbol_projector(3, StructureKind::Riemannian, ESpec::lambda(1), 2);
  CHECK(r2.domain_dim == 18);
  CHECK(r2.constraint_dim == 7);
  CHECK(r2.kernel.cols() == 11);
}

TEST_CASE("projector image coordinates reconstruct the projector") {
  SymbolData s = symbol_projector(3, StructureKind::Riemannian, ESpec::trivial(), 2);
  CHECK(s.image_basis * s.constraint_coords == s.projector);
  CHECK((s.projector * s.kernel).is_zero());
}

namespace {

std::vector<int> level_dims(const std::vector<LevelBasis>& levels) {
  std::vector<int> d;
  for (const auto& l : levels) d.push_back(l.sym_basis.cols());
  return d;
}

} // namespace

TEST_CASE("brute force prolongations of the classical first-order systems") {
  auto kill = classical_prolongations(3, StructureKind::Affine, ESpec::lambda(1), 1);
  CHECK(level_dims(kill) == std::vector<int>{3, 3, 0});

  auto conf = classical_prolongations(3, StructureKind::Riemannian, ESpec::lambda(1), 1);
  CHECK(level_dims(conf) == std::vector<int>{3, 4, 3, 0});
}

TEST_CASE("brute force prolongations of the scalar second-order systems") {
  auto hess = classical_prolongations(3, StructureKind::Affine, ESpec::trivial(), 2);
  CHECK(level_dims(hess) == std::vector<int>{1, 3, 0});

  auto tf = classical_prolongations(3, StructureKind::Riemannian, ESpec::trivial(), 2);
  CHECK(level_dims(tf) == std::vector<int>{1, 3, 1, 0});
}

TEST_CASE("levels are invariant under the structure algebra") {
  for (StructureKind kind : {StructureKind::Affine, StructureKind::Riemannian}) {
    TensorModel E = realize_bundle(3, kind, ESpec::lambda(1));
    auto levels = classical_prolongations(3, kind, ESpec::lambda(1), 1);
    for (const auto& lb : levels) {
      if (lb.sym_basis.cols() == 0) continue;
      ExpIndex idx(lb.multisets);
      for (size_t g = 0; g < E.generators.size(); ++g) {
        QMat A = level_generator_action(E, lb.multisets, idx, g);
        CHECK(span_contained(A * lb.sym_basis, lb.sym_basis));
      }
    }
  }
}

namespace {

// Multiset-to-tensor embedding and its averaging left inverse, fiber included.
QMat embed_with_fiber(int n, int m, int f) {
  auto mus = exponents_exact(n, m);
  long long ambient = 1;
  for (int i = 0; i < m; ++i) ambient *= n;
  QMat emb((int)ambient, (int)mus.size());
  for (int j = 0; j < int(mus.size()); ++j)
    for (const auto& arr : distinct_arrangements(mus[j]))
      emb.at(int(tensor_rank(arr, n)), j) = 1;
  return kron(emb, QMat::identity(f));
}

QMat average_with_fiber(int n, int m, int f) {
  auto mus = exponents_exact(n, m);
  long long ambient = 1;
  for (int i = 0; i < m; ++i) ambient *= n;
  QMat avg((int)mus.size(), (int)ambient);
  for (int j = 0; j < int(mus.size()); ++j) {
    Rat w = Rat(1) / Rat(long(multinomial(mus[j]).get_si()));
    for (const auto& arr : distinct_arrangements(mus[j]))
      avg.at(j, int(tensor_rank(arr, n))) = w;
  }
  return kron(avg, QMat::identity(f));
}

} // namespace

TEST_CASE("compressed constraint agrees with a literal tensor intersection") {
  // second-order scalar system: stack the full-tensor constraint and
  // intersect with the symmetric subspace, then compare level by level
  const int n = 3, k = 2;
  SymbolData S = symbol_projector(n, StructureKind::Riemannian, ESpec::trivial(), k);
  const int f = S.bundle.fiber_dim;
  QMat P_full = embed_with_fiber(n, k, f) * S.projector * average_with_fiber(n, k, f);
  auto levels = classical_prolongations(n, StructureKind::Riemannian, ESpec::trivial(), k);
  for (int i = k; i < int(levels.size()); ++i) {
    long long pref = 1;
    for (int t = 0; t < i - k; ++t) pref *= n;
    QMat M_full = kron(QMat::identity((int)pref), P_full);
    QMat sym_span = embed_with_fiber(n, i, f);
    QMat literal = intersect_spans(kernel_basis(M_full), sym_span);
    CHECK(literal.cols() == levels[i].ambient_basis.cols());
    if (literal.cols() > 0) CHECK(same_span(literal, levels[i].ambient_basis));
  }
}

TEST_CASE("first-order compressed constraint matches the literal route") {
  const int n = 3, k = 1;
  SymbolData S = symbol_projector(n, StructureKind::Riemannian, ESpec::lambda(1), k);
  const int f = S.bundle.fiber_dim;
  QMat P_full = embed_with_fiber(n, k, f) * S.projector * average_with_fiber(n, k, f);
  auto levels = classical_prolongations(n, StructureKind::Riemannian, ESpec::lambda(1), k);
  for (int i = k; i < int(levels.size()); ++i) {
    long long pref = 1;
    for (int t = 0; t < i - k; ++t) pref *= n;
    QMat M_full = kron(QMat::identity((int)pref), P_full);
    QMat sym_span = embed_with_fiber(n, i, f);
    QMat literal = intersect_spans(kernel_basis(M_full), sym_span);
    CHECK(literal.cols() == levels[i].ambient_basis.cols());
    if (literal.cols() > 0) CHECK(same_span(literal, levels[i].ambient_basis));
  }
}
