#include "prolong/flatjet.hpp"

#include <string>

#include "prolong/comb.hpp"
#include "prolong/errors.hpp"
#include "prolong/kostant.hpp"

namespace prolong {

Rat& PolySection::coeff(const std::vector<int>& alpha, int e) {
  return coeffs.at(index.at(alpha) * fiber_dim + e, 0);
}

const Rat& PolySection::coeff(const std::vector<int>& alpha, int e) const {
  return coeffs.at(index.at(alpha) * fiber_dim + e, 0);
}

PolySection zero_section(int n, int fiber_dim, int degree_bound) {
  PolySection s;
  s.n = n;
  s.fiber_dim = fiber_dim;
  s.degree_bound = degree_bound;
  s.monomials = exponents_up_to(n, degree_bound);
  s.index = ExpIndex(s.monomials);
  s.coeffs = QMat::zero(int(s.monomials.size()) * fiber_dim, 1);
  return s;
}

PolySection section_from_vector(int n, int fiber_dim, int degree_bound, QMat coeffs) {
  PolySection s = zero_section(n, fiber_dim, degree_bound);
  check_internal(coeffs.rows() == s.coeffs.rows() && coeffs.cols() == 1,
                 "section coefficient size mismatch");
  s.coeffs = std::move(coeffs);
  return s;
}

PolySection random_section(int n, int fiber_dim, int degree_bound,
                           std::mt19937_64& rng) {
  PolySection s = zero_section(n, fiber_dim, degree_bound);
  for (int r = 0; r < s.coeffs.rows(); ++r) {
    long num = long(rng() % 19) - 9;
    long den = long(rng() % 4) + 1;
    s.coeffs.at(r, 0) = Rat(num, den);
  }
  return s;
}

PolySection poly_gradient(const PolySection& s) {
  PolySection out = zero_section(s.n, s.n * s.fiber_dim,
                                 s.degree_bound > 0 ? s.degree_bound - 1 : 0);
  for (size_t mj = 0; mj < s.monomials.size(); ++mj) {
    const auto& alpha = s.monomials[mj];
    for (int a = 0; a < s.n; ++a) {
      if (alpha[a] == 0) continue;
      std::vector<int> beta = alpha;
      beta[a] -= 1;
      const int row = out.index.at(beta) * out.fiber_dim;
      for (int e = 0; e < s.fiber_dim; ++e) {
        const Rat& c = s.coeffs.at(int(mj) * s.fiber_dim + e, 0);
        if (sgn(c) != 0)
          out.coeffs.at(row + a * s.fiber_dim + e, 0) = Rat(long(alpha[a])) * c;
      }
    }
  }
  return out;
}

PolySection apply_fiber_map(const QMat& M, const PolySection& s) {
  check_internal(M.cols() == s.fiber_dim, "fiber map size mismatch");
  PolySection out = zero_section(s.n, M.rows(), s.degree_bound);
  for (size_t mj = 0; mj < s.monomials.size(); ++mj)
    for (int r = 0; r < M.rows(); ++r) {
      Rat v(0);
      for (int e = 0; e < s.fiber_dim; ++e)
        v += M.at(r, e) * s.coeffs.at(int(mj) * s.fiber_dim + e, 0);
      out.coeffs.at(int(mj) * M.rows() + r, 0) = v;
    }
  return out;
}

PolySection section_sum(const PolySection& a, const PolySection& b) {
  check_internal(a.n == b.n && a.fiber_dim == b.fiber_dim, "section sum mismatch");
  PolySection out = zero_section(a.n, a.fiber_dim,
                                 std::max(a.degree_bound, b.degree_bound));
  for (const PolySection* src : {&a, &b})
    for (size_t mj = 0; mj < src->monomials.size(); ++mj) {
      const int dst = out.index.at(src->monomials[mj]) * out.fiber_dim;
      for (int e = 0; e < a.fiber_dim; ++e)
        out.coeffs.at(dst + e, 0) += src->coeffs.at(int(mj) * a.fiber_dim + e, 0);
    }
  return out;
}

PolySection section_scaled(const PolySection& a, const Rat& c) {
  PolySection out = a;
  out.coeffs = out.coeffs.scaled(c);
  return out;
}

bool same_polynomial(const PolySection& a, const PolySection& b) {
  if (a.n != b.n || a.fiber_dim != b.fiber_dim) return false;
  PolySection diff = section_sum(a, section_scaled(b, Rat(-1)));
  return diff.coeffs.is_zero();
}

bool section_is_zero(const PolySection& s) { return s.coeffs.is_zero(); }

QMat eval_section(const PolySection& s, const std::vector<Rat>& x) {
  check_internal(int(x.size()) == s.n, "evaluation point dimension mismatch");
  QMat out(s.fiber_dim, 1);
  for (size_t mj = 0; mj < s.monomials.size(); ++mj) {
    Rat mono(1);
    for (int a = 0; a < s.n; ++a)
      for (int t = 0; t < s.monomials[mj][a]; ++t) mono *= x[size_t(a)];
    if (sgn(mono) == 0) continue;
    for (int e = 0; e < s.fiber_dim; ++e)
      out.at(e, 0) += mono * s.coeffs.at(int(mj) * s.fiber_dim + e, 0);
  }
  return out;
}

QMat flat_operator_matrix(const SymbolData& S, int degree_bound) {
  require(degree_bound >= 0, "degree bound must be nonnegative");
  const int n = S.n, k = S.k, f = S.bundle.fiber_dim;
  const int F = S.image_basis.cols();
  auto in_mons = exponents_up_to(n, degree_bound);
  // Below the order the operator is identically zero.
  if (degree_bound < k) return QMat::zero(0, int(in_mons.size()) * f);
  auto out_mons = exponents_up_to(n, degree_bound - k);
  ExpIndex in_index(in_mons);
  QMat M(int(out_mons.size()) * F, int(in_mons.size()) * f);
  for (size_t bj = 0; bj < out_mons.size(); ++bj) {
    const auto& beta = out_mons[bj];
    for (size_t kj = 0; kj < S.multisets.size(); ++kj) {
      const auto& kappa = S.multisets[kj];
      std::vector<int> alpha(beta.size());
      Int fall(1);
      for (size_t t = 0; t < beta.size(); ++t) {
        alpha[t] = beta[t] + kappa[t];
        for (int v = beta[t] + 1; v <= alpha[t]; ++v) fall *= v;
      }
      const int col0 = in_index.at(alpha) * f;
      const Rat fr(fall);
      for (int r = 0; r < F; ++r)
        for (int e = 0; e < f; ++e) {
          const Rat& w = S.constraint_coords.at(r, int(kj) * f + e);
          if (sgn(w) != 0)
            M.at(int(bj) * F + r, col0 + e) += fr * w;
        }
    }
  }
  return M;
}

QMat flat_operator_matrix(int n, StructureKind kind, const ESpec& espec, int k,
                          int degree_bound, long long entry_cap) {
  SymbolData S = symbol_projector(n, kind, espec, k, entry_cap);
  return flat_operator_matrix(S, degree_bound);
}

FlatSolutionSpace solution_space(int n, StructureKind kind, const ESpec& espec,
                                 int k, long long entry_cap) {
  SymbolData S = symbol_projector(n, kind, espec, k, entry_cap);
  StructureData sd = make_structure(kind, n);
  GradedProfile gp = graded_profile(sd, espec_labels(sd, espec), k);

  FlatSolutionSpace sol;
  sol.n = n;
  sol.k = k;
  sol.N = gp.N;
  sol.fiber_dim = S.bundle.fiber_dim;
  sol.monomials = exponents_up_to(n, gp.N);

  QMat M = flat_operator_matrix(S, gp.N);
  sol.basis = kernel_basis(M);
  sol.dim = sol.basis.cols();
  if (Int(sol.dim) != gp.total)
    throw verification_error("flat kernel dimension " + std::to_string(sol.dim) +
                             " does not match the predicted total " +
                             gp.total.get_str());

  // Degree stability: no new solutions appear one degree higher.
  QMat M1 = flat_operator_matrix(S, gp.N + 1);
  const int dim1 = M1.cols() - rank(M1);
  if (dim1 != sol.dim)
    throw verification_error("flat kernel gains dimension at degree " +
                             std::to_string(gp.N + 1));
  // The degree-N solutions really sit inside the larger kernel.
  auto big_mons = exponents_up_to(n, gp.N + 1);
  ExpIndex big_index(big_mons);
  QMat padded(int(big_mons.size()) * sol.fiber_dim, sol.dim);
  for (size_t mj = 0; mj < sol.monomials.size(); ++mj) {
    const int dst = big_index.at(sol.monomials[mj]) * sol.fiber_dim;
    for (int e = 0; e < sol.fiber_dim; ++e)
      for (int j = 0; j < sol.dim; ++j)
        padded.at(dst + e, j) = sol.basis.at(int(mj) * sol.fiber_dim + e, j);
  }
  check_internal((M1 * padded).is_zero(), "padded solutions fail the larger system");
  return sol;
}

QMat low_jet_vanishing_solutions(const FlatSolutionSpace& sol, int min_degree) {
  std::vector<int> low_rows;
  for (size_t mj = 0; mj < sol.monomials.size(); ++mj) {
    int deg = 0;
    for (int v : sol.monomials[mj]) deg += v;
    if (deg < min_degree)
      for (int e = 0; e < sol.fiber_dim; ++e)
        low_rows.push_back(int(mj) * sol.fiber_dim + e);
  }
  QMat sub(int(low_rows.size()), sol.dim);
  for (size_t r = 0; r < low_rows.size(); ++r)
    for (int j = 0; j < sol.dim; ++j)
      sub.at(int(r), j) = sol.basis.at(low_rows[r], j);
  return sol.basis * kernel_basis(sub);
}

GradedPolySection splitting_L(const GradedModel& gm, const PolySection& sigma) {
  check_internal(gm.has_codifferential, "codifferential not assembled");
  check_internal(sigma.fiber_dim == gm.bundle.fiber_dim &&
                     sigma.n == gm.n,
                 "section does not match the bundle");
  GradedPolySection S;
  S.comp.reserve(size_t(gm.N) + 1);
  S.comp.push_back(sigma); // level 0 coordinates coincide with the fiber
  for (int i = 1; i <= gm.N; ++i) {
    PolySection grad = poly_gradient(S.comp.back());
    S.comp.push_back(section_scaled(apply_fiber_map(gm.dstar0[i], grad), Rat(-1)));
  }
  return S;
}

bool check_splitting_range(const GradedModel& gm, const GradedPolySection& S) {
  check_internal(gm.has_codifferential, "codifferential not assembled");
  if (int(S.comp.size()) != gm.N + 1) return false;
  for (int i = 1; i <= gm.N; ++i) {
    PolySection grad = poly_gradient(S.comp[size_t(i) - 1]);
    PolySection want = section_scaled(apply_fiber_map(gm.dstar0[i], grad), Rat(-1));
    if (!same_polynomial(S.comp[size_t(i)], want)) return false;
  }
  return true;
}

std::vector<PolySection> nabla_tilde(const GradedModel& gm,
                                     const GradedPolySection& S) {
  check_internal(int(S.comp.size()) == gm.N + 1, "graded section level mismatch");
  std::vector<PolySection> out;
  out.reserve(size_t(gm.N) + 1);
  for (int i = 0; i <= gm.N; ++i) {
    PolySection nt = poly_gradient(S.comp[size_t(i)]);
    if (i + 1 <= gm.N) {
      // contraction part: fiber (a, v) += contraction_a(Sigma_{i+1})
      const int di = gm.levels[i].dim;
      QMat stack(gm.n * di, gm.levels[i + 1].dim);
      for (int a = 0; a < gm.n; ++a) {
        const QMat& C = gm.contraction[i + 1][a];
        for (int r = 0; r < di; ++r)
          for (int c = 0; c < C.cols(); ++c)
            stack.at(a * di + r, c) = C.at(r, c);
      }
      nt = section_sum(nt, apply_fiber_map(stack, S.comp[size_t(i) + 1]));
    }
    out.push_back(std::move(nt));
  }
  return out;
}

GradedPolySection nabla_tilde_direction(const GradedModel& gm,
                                        const GradedPolySection& S, int a) {
  check_internal(int(S.comp.size()) == gm.N + 1, "graded section level mismatch");
  GradedPolySection out;
  out.comp.reserve(size_t(gm.N) + 1);
  for (int i = 0; i <= gm.N; ++i) {
    const PolySection& si = S.comp[size_t(i)];
    PolySection di = zero_section(gm.n, si.fiber_dim,
                                  si.degree_bound > 0 ? si.degree_bound - 1 : 0);
    for (size_t mj = 0; mj < si.monomials.size(); ++mj) {
      const auto& alpha = si.monomials[mj];
      if (alpha[size_t(a)] == 0) continue;
      std::vector<int> beta = alpha;
      beta[size_t(a)] -= 1;
      const int dst = di.index.at(beta) * si.fiber_dim;
      for (int e = 0; e < si.fiber_dim; ++e)
        di.coeffs.at(dst + e, 0) +=
            Rat(long(alpha[size_t(a)])) * si.coeffs.at(int(mj) * si.fiber_dim + e, 0);
    }
    if (i + 1 <= gm.N)
      di = section_sum(di, apply_fiber_map(gm.contraction[i + 1][a],
                                           S.comp[size_t(i) + 1]));
    out.comp.push_back(std::move(di));
  }
  return out;
}

bool delta_star_annihilates(const GradedModel& gm, const GradedPolySection& S) {
  check_internal(gm.has_codifferential, "codifferential not assembled");
  auto nt = nabla_tilde(gm, S);
  for (int i = 0; i + 1 <= gm.N; ++i)
    if (!section_is_zero(apply_fiber_map(gm.dstar0[i + 1], nt[size_t(i)])))
      return false;
  return true;
}

QMat origin_jet_map(const GradedModel& gm, int i) {
  check_internal(i >= 0 && i <= gm.N, "jet order out of range");
  const int f = gm.bundle.fiber_dim;
  auto mons = exponents_up_to(gm.n, i);
  int out_dim = 0;
  for (int j = 0; j <= i; ++j) out_dim += gm.levels[j].dim;
  QMat J(out_dim, int(mons.size()) * f);
  for (size_t mj = 0; mj < mons.size(); ++mj)
    for (int e = 0; e < f; ++e) {
      PolySection sigma = zero_section(gm.n, f, i);
      sigma.coeff(mons[mj], e) = Rat(1);
      GradedPolySection L = splitting_L(gm, sigma);
      int off = 0;
      for (int j = 0; j <= i; ++j) {
        const PolySection& c = L.comp[size_t(j)];
        const std::vector<int> zero_mon(size_t(gm.n), 0);
        const int base = c.index.at(zero_mon) * c.fiber_dim;
        for (int v = 0; v < c.fiber_dim; ++v)
          J.at(off + v, int(mj) * f + e) = c.coeffs.at(base + v, 0);
        off += c.fiber_dim;
      }
    }
  return J;
}

} // namespace prolong
