#include "prolong/tensorlab.hpp"

#include <algorithm>
#include <set>

#include "prolong/errors.hpp"

namespace prolong {

namespace {

long long pow_ll(int base, int exp, long long cap) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > cap) throw resource_error("tensor ambient exceeds the entry cap");
  }
  return r;
}

void check_entries(long long rows, long long cols, long long cap, const char* what) {
  if (rows * cols > cap)
    throw resource_error(std::string(what) + ": " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " exceeds the entry cap " +
                         std::to_string(cap));
}

int parity_of(const std::vector<int>& perm) {
  int inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2;
}

/// Embedding of multiset coordinates into the full tensor power: column mu is
/// the sum of the distinct arrangements of mu, coefficient one each.
QMat sym_embedding(int n, int m, long long cap) {
  auto mus = exponents_exact(n, m);
  long long ambient = pow_ll(n, m, cap);
  check_entries(ambient, (long long)mus.size(), cap, "symmetric embedding");
  QMat B((int)ambient, (int)mus.size());
  for (int j = 0; j < int(mus.size()); ++j)
    for (const auto& arr : distinct_arrangements(mus[j]))
      B.at(int(tensor_rank(arr, n)), j) = 1;
  return B;
}

} // namespace

std::string ESpec::name() const {
  switch (kind) {
    case Trivial: return "trivial";
    case Lambda: return "lambda" + std::to_string(arg);
    case Sym: return "sym" + std::to_string(arg);
    case Sym0: return "sym0" + std::to_string(arg);
  }
  return "?";
}

ESpec ESpec::parse(const std::string& token) {
  auto tail_int = [&](size_t prefix) -> int {
    if (token.size() <= prefix) throw config_error("bundle spec needs an argument: " + token);
    int v = 0;
    for (size_t i = prefix; i < token.size(); ++i) {
      if (token[i] < '0' || token[i] > '9')
        throw config_error("bad bundle spec: " + token);
      v = v * 10 + (token[i] - '0');
    }
    return v;
  };
  if (token == "trivial") return trivial();
  if (token.rfind("lambda", 0) == 0) return lambda(tail_int(6));
  if (token.rfind("sym0", 0) == 0) return sym0(tail_int(4));
  if (token.rfind("sym", 0) == 0) return sym(tail_int(3));
  throw config_error("unknown bundle spec: " + token +
                     " (expected trivial, lambdaP, symM or sym0M)");
}

void validate_espec(StructureKind kind, int n, const ESpec& espec) {
  switch (espec.kind) {
    case ESpec::Trivial:
      return;
    case ESpec::Lambda: {
      const int p = espec.arg;
      if (kind == StructureKind::Affine)
        require(1 <= p && p <= n - 1, "lambda(p) needs 1 <= p <= n-1 for affine");
      else
        require(1 <= p && 2 * p <= n - 1,
                "lambda(p) needs 1 <= p <= (n-1)/2 for riemannian");
      return;
    }
    case ESpec::Sym:
      require(kind == StructureKind::Affine, "sym(m) is only in the affine catalog");
      require(espec.arg >= 1, "sym(m) needs m >= 1");
      return;
    case ESpec::Sym0:
      require(kind == StructureKind::Riemannian,
              "sym0(m) is only in the riemannian catalog");
      require(espec.arg >= 1, "sym0(m) needs m >= 1");
      return;
  }
}

Labels espec_labels(const StructureData& sd, const ESpec& espec) {
  validate_espec(sd.kind, sd.n, espec);
  const int r0 = sd.g0s.rank;
  Labels la(r0, 0);
  switch (espec.kind) {
    case ESpec::Trivial:
      return la;
    case ESpec::Lambda: {
      const int p = espec.arg;
      if (sd.kind == StructureKind::Affine) {
        la[p - 1] = 1;
      } else if (sd.g0s.series == Series::B) {
        if (p == r0)
          la[r0 - 1] = 2;  // short-root end: forms double the spin label
        else
          la[p - 1] = 1;
      } else {  // series D
        if (p == r0 - 1) {
          la[r0 - 2] = 1;  // fork: middle forms carry both half-spin labels
          la[r0 - 1] = 1;
        } else {
          la[p - 1] = 1;
        }
      }
      return la;
    }
    case ESpec::Sym:
      la[0] = espec.arg;
      return la;
    case ESpec::Sym0: {
      Labels cot = cotangent_labels(sd);
      for (int i = 0; i < r0; ++i) la[i] = espec.arg * cot[i];
      return la;
    }
  }
  return la;
}

std::vector<QMat> structure_generators(StructureKind kind, int n) {
  std::vector<QMat> gens;
  if (kind == StructureKind::Affine) {
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        QMat e(n, n);
        e.at(u, v) = 1;
        gens.push_back(e);
      }
  } else {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        QMat m(n, n);
        m.at(u, v) = 1;
        m.at(v, u) = -1;
        gens.push_back(m);
      }
  }
  return gens;
}

QMat slotwise_dual_action(const QMat& X, int n, int valence) {
  if (valence == 0) return QMat(1, 1);
  long long ambient = pow_ll(n, valence, (long long)1 << 40);
  QMat A((int)ambient, (int)ambient);
  std::vector<int> seq(valence, 0);
  for (long long col = 0; col < ambient; ++col) {
    // decode the column index into a slot sequence
    long long rest = col;
    for (int j = valence - 1; j >= 0; --j) {
      seq[j] = int(rest % n);
      rest /= n;
    }
    for (int j = 0; j < valence; ++j) {
      const int w = seq[j];
      for (int v = 0; v < n; ++v) {
        if (sgn(X.at(w, v)) == 0) continue;
        std::vector<int> out = seq;
        out[j] = v;
        A.at(int(tensor_rank(out, n)), int(col)) -= X.at(w, v);
      }
    }
  }
  return A;
}

QMat sym_dual_action(const QMat& X, const std::vector<std::vector<int>>& exps,
                     const ExpIndex& index) {
  const int n = X.rows();
  const int d = int(exps.size());
  QMat A(d, d);
  for (int j = 0; j < d; ++j) {
    const auto& m = exps[j];
    for (int u = 0; u < n; ++u) {
      if (m[u] == 0) continue;
      for (int v = 0; v < n; ++v) {
        if (sgn(X.at(u, v)) == 0) continue;
        if (u == v) {
          A.at(j, j) -= Rat(m[u]) * X.at(u, u);
        } else {
          std::vector<int> t = m;
          --t[u];
          ++t[v];
          A.at(index.at(t), j) -= Rat(t[v]) * X.at(u, v);
        }
      }
    }
  }
  return A;
}

QMat level_generator_action(const TensorModel& E,
                            const std::vector<std::vector<int>>& exps,
                            const ExpIndex& index, size_t g) {
  return kron(sym_dual_action(E.generators[g], exps, index),
              QMat::identity(E.fiber_dim)) +
         kron(QMat::identity(int(exps.size())), E.generator_action[g]);
}

TensorModel realize_bundle(int n, StructureKind kind, const ESpec& espec,
                           long long entry_cap) {
  StructureData sd = make_structure(kind, n);
  validate_espec(kind, n, espec);

  TensorModel tm;
  tm.n = n;
  tm.kind = kind;
  tm.espec = espec;

  switch (espec.kind) {
    case ESpec::Trivial: {
      tm.valence = 0;
      tm.ambient_dim = 1;
      tm.basis = QMat(1, 1);
      tm.basis.at(0, 0) = 1;
      break;
    }
    case ESpec::Lambda: {
      const int p = espec.arg;
      tm.valence = p;
      tm.ambient_dim = pow_ll(n, p, entry_cap);
      auto subs = subsets(n, p);
      check_entries(tm.ambient_dim, (long long)subs.size(), entry_cap, "form bundle");
      tm.basis = QMat((int)tm.ambient_dim, (int)subs.size());
      for (int j = 0; j < int(subs.size()); ++j) {
        std::vector<int> seq = subs[j];
        std::sort(seq.begin(), seq.end());
        do {
          int sign = parity_of(seq) ? -1 : 1;
          tm.basis.at(int(tensor_rank(seq, n)), j) = sign;
        } while (std::next_permutation(seq.begin(), seq.end()));
      }
      break;
    }
    case ESpec::Sym: {
      const int m = espec.arg;
      tm.valence = m;
      tm.ambient_dim = pow_ll(n, m, entry_cap);
      tm.basis = sym_embedding(n, m, entry_cap);
      break;
    }
    case ESpec::Sym0: {
      const int m = espec.arg;
      tm.valence = m;
      tm.ambient_dim = pow_ll(n, m, entry_cap);
      QMat emb = sym_embedding(n, m, entry_cap);
      if (m < 2) {
        tm.basis = emb;
        break;
      }
      // trace over one symmetric pair, written on multiset coordinates
      auto mus = exponents_exact(n, m);
      auto sub = exponents_exact(n, m - 2);
      ExpIndex mus_idx(mus);
      QMat tr((int)sub.size(), (int)mus.size());
      for (int r = 0; r < int(sub.size()); ++r)
        for (int a = 0; a < n; ++a) {
          std::vector<int> m2 = sub[r];
          m2[a] += 2;
          tr.at(r, mus_idx.at(m2)) += 1;
        }
      tm.basis = emb * kernel_basis(tr);
      break;
    }
  }

  tm.fiber_dim = tm.basis.cols();

  // Tie the realization back to the weight computation.
  Int expect = reductive_dimension(sd, espec_labels(sd, espec));
  check_internal(Int(tm.fiber_dim) == expect, "bundle dimension mismatch: model " +
                                                  std::to_string(tm.fiber_dim) +
                                                  " vs weights " + to_string(expect));

  tm.generators = structure_generators(kind, n);
  ColumnSolver solver(tm.basis);
  for (const auto& X : tm.generators) {
    QMat amb = slotwise_dual_action(X, n, tm.valence);
    tm.generator_action.push_back(solver.solve(amb * tm.basis));
  }
  return tm;
}

std::vector<long> integer_spectrum(const QMat& C) {
  const int d = C.rows();
  check_internal(d == C.cols(), "integer_spectrum: not square");
  if (d == 0) return {};

  // Gershgorin bound on any eigenvalue.
  Rat bound = 0;
  for (int i = 0; i < d; ++i) {
    Rat s = 0;
    for (int j = 0; j < d; ++j) s += abs(C.at(i, j));
    bound = std::max(bound, s);
  }
  long B = 0;
  {
    Int num = bound.get_num(), den = bound.get_den();
    Int q = num / den + 1;
    check_internal(q.fits_slong_p(), "integer_spectrum: eigenvalue bound overflow");
    B = q.get_si();
  }

  std::set<long> roots;
  auto annihilates = [&]() {
    if (roots.empty()) return false;
    QMat M = QMat::identity(d);
    for (long r : roots) {
      QMat S = C;
      for (int i = 0; i < d; ++i) S.at(i, i) -= long(r);
      M = M * S;
    }
    return M.is_zero();
  };

  for (int seed = 0; seed < d; ++seed) {
    // Krylov space of a unit vector: the first linear dependence gives the
    // minimal polynomial of that vector.
    QMat b(d, 1);
    b.at(seed, 0) = 1;
    QMat K = b;
    std::vector<Rat> poly;
    while (true) {
      QMat next = C * K.col(K.cols() - 1);
      QMat cand = QMat::hstack(K, next);
      QMat ker = kernel_basis(cand);
      if (ker.cols() > 0) {
        int jc = -1;
        for (int j = 0; j < ker.cols(); ++j)
          if (sgn(ker.at(cand.cols() - 1, j)) != 0) { jc = j; break; }
        check_internal(jc >= 0, "integer_spectrum: degenerate Krylov kernel");
        Rat lead = ker.at(cand.cols() - 1, jc);
        poly.resize(cand.cols());
        for (int i = 0; i < cand.cols(); ++i) poly[i] = ker.at(i, jc) / lead;
        break;
      }
      K = cand;
    }
    for (long t = -B; t <= B; ++t) {
      // Horner evaluation of the monic polynomial at t.
      Rat acc = 0;
      for (int i = int(poly.size()) - 1; i >= 0; --i) acc = acc * long(t) + poly[i];
      if (sgn(acc) == 0) roots.insert(t);
    }
    if (annihilates())
      return std::vector<long>(roots.begin(), roots.end());
  }
  throw internal_error("integer_spectrum: matrix is not split with integer eigenvalues");
}

SymbolData symbol_projector(int n, StructureKind kind, const ESpec& espec, int k,
                            long long entry_cap) {
  require(k >= 1, "order k must be at least 1");
  StructureData sd = make_structure(kind, n);

  SymbolData s;
  s.n = n;
  s.k = k;
  s.kind = kind;
  s.bundle = realize_bundle(n, kind, espec, entry_cap);
  s.multisets = exponents_exact(n, k);
  s.multiset_index = ExpIndex(s.multisets);
  const int nm = int(s.multisets.size());
  const int f = s.bundle.fiber_dim;
  s.domain_dim = nm * f;
  check_entries(s.domain_dim, s.domain_dim, entry_cap, "symbol projector");

  // Quadratic Casimir of the structure algebra on multiset x fiber coordinates.
  auto act = [&](const QMat& X, const QMat& fib) {
    return kron(sym_dual_action(X, s.multisets, s.multiset_index), QMat::identity(f)) +
           kron(QMat::identity(nm), fib);
  };
  QMat C(s.domain_dim, s.domain_dim);
  if (kind == StructureKind::Affine) {
    // generators were emitted in (u,v) lexicographic order
    auto at = [&](int u, int v) { return u * n + v; };
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        QMat Duv = act(s.bundle.generators[at(u, v)], s.bundle.generator_action[at(u, v)]);
        QMat Dvu = act(s.bundle.generators[at(v, u)], s.bundle.generator_action[at(v, u)]);
        C = C + Duv * Dvu;
      }
  } else {
    for (size_t g = 0; g < s.bundle.generators.size(); ++g) {
      QMat D = act(s.bundle.generators[g], s.bundle.generator_action[g]);
      C = C - D * D;
    }
  }

  std::vector<long> spec = integer_spectrum(C);
  check_internal(!spec.empty(), "symbol projector: empty spectrum");
  const long top = spec.back();

  QMat P = QMat::identity(s.domain_dim);
  for (long lam : spec) {
    if (lam == top) continue;
    QMat S = C;
    for (int i = 0; i < s.domain_dim; ++i) S.at(i, i) -= lam;
    P = P * S.scaled(rat(1, top - lam));
  }
  check_internal(P * P == P, "symbol projector: not idempotent");
  s.projector = P;

  // The projector image must be the constraint module predicted by the
  // weight computation.
  Labels v = prolongation_module(sd, espec_labels(sd, espec), k);
  Int dim_f = reductive_dimension(sd, cohomology(sd, v).h1);
  s.image_basis = column_space_basis(P);
  s.constraint_dim = Int(s.image_basis.cols());
  check_internal(s.constraint_dim == dim_f,
                 "symbol projector rank " + std::to_string(s.image_basis.cols()) +
                     " does not match the constraint dimension " + to_string(dim_f));
  s.constraint_coords = ColumnSolver(s.image_basis).solve(P);
  s.kernel = kernel_basis(P);
  check_internal(s.kernel.cols() + s.image_basis.cols() == s.domain_dim,
                 "symbol projector: rank/nullity mismatch");
  return s;
}

std::vector<LevelBasis> classical_prolongations(int n, StructureKind kind,
                                                const ESpec& espec, int k,
                                                long long entry_cap) {
  SymbolData S = symbol_projector(n, kind, espec, k, entry_cap);
  const int f = S.bundle.fiber_dim;
  const int F = int(S.image_basis.cols());
  const QMat& W = S.constraint_coords;

  std::vector<LevelBasis> levels;
  for (int i = 0;; ++i) {
    check_internal(i <= 60, "prolongation did not terminate");
    LevelBasis lb;
    lb.level = i;
    lb.multisets = exponents_exact(n, i);
    const int nm = int(lb.multisets.size());

    if (i < k) {
      lb.sym_basis = QMat::identity(nm * f);
    } else {
      // Constraint: the symbol projector annihilates the last k slots for
      // every choice of the i-k leading symmetric slots.  On multiset
      // coordinates the row for (prefix nu, F-row r) reads off column
      // (mu - nu) of the projector's image coordinates.
      auto prefixes = exponents_exact(n, i - k);
      const ExpIndex& kidx = S.multiset_index;
      const int rows = int(prefixes.size()) * F;
      const int cols = nm * f;
      check_entries(rows, cols, entry_cap, "prolongation constraint");
      QMat M(rows, cols);
      for (int mj = 0; mj < nm; ++mj) {
        const auto& mu = lb.multisets[mj];
        for (int pj = 0; pj < int(prefixes.size()); ++pj) {
          const auto& nu = prefixes[pj];
          std::vector<int> diff(mu.size());
          bool ok = true;
          for (size_t t = 0; t < mu.size(); ++t) {
            diff[t] = mu[t] - nu[t];
            if (diff[t] < 0) { ok = false; break; }
          }
          if (!ok) continue;
          const int wcol_base = kidx.at(diff) * f;
          for (int r = 0; r < F; ++r)
            for (int e = 0; e < f; ++e) {
              const Rat& wv = W.at(r, wcol_base + e);
              if (sgn(wv) != 0) M.at(pj * F + r, mj * f + e) = wv;
            }
        }
      }
      lb.sym_basis = kernel_basis(M);
    }

    // Expand to full tensor coordinates.
    long long ambient = pow_ll(n, i, entry_cap);
    check_entries(ambient * f, lb.sym_basis.cols() == 0 ? 1 : lb.sym_basis.cols(),
                  entry_cap, "prolongation level");
    QMat amb((int)(ambient * f), lb.sym_basis.cols());
    for (int j = 0; j < lb.sym_basis.cols(); ++j)
      for (int mj = 0; mj < nm; ++mj)
        for (int e = 0; e < f; ++e) {
          const Rat& c = lb.sym_basis.at(mj * f + e, j);
          if (sgn(c) == 0) continue;
          for (const auto& arr : distinct_arrangements(lb.multisets[mj]))
            amb.at(int(tensor_rank(arr, n)) * f + e, j) = c;
        }
    lb.ambient_basis = amb;

    const bool empty = lb.sym_basis.cols() == 0;
    levels.push_back(std::move(lb));
    if (empty && i >= k) break;
  }
  return levels;
}

std::vector<CatalogCase> catalog_cases(int n) {
  require(n >= 3, "catalog requires dimension at least 3");
  std::vector<CatalogCase> out = {
      {StructureKind::Affine, ESpec::trivial(), 2},
      {StructureKind::Affine, ESpec::lambda(1), 1},
      {StructureKind::Affine, ESpec::lambda(1), 2},
      {StructureKind::Affine, ESpec::lambda(2), 1},
      {StructureKind::Riemannian, ESpec::trivial(), 2},
      {StructureKind::Riemannian, ESpec::lambda(1), 1},
      {StructureKind::Riemannian, ESpec::lambda(1), 2},
      {StructureKind::Riemannian, ESpec::sym0(2), 1},
  };
  if (n >= 5) out.push_back({StructureKind::Riemannian, ESpec::lambda(2), 1});
  return out;
}

} // namespace prolong
