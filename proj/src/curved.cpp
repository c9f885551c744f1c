#include "prolong/curved.hpp"

#include "prolong/errors.hpp"

namespace prolong {

std::string system_name(SystemId s) {
  switch (s) {
    case SystemId::Killing: return "killing";
    case SystemId::ConformalKilling: return "conformal_killing";
    case SystemId::Hessian: return "hessian";
    case SystemId::TracefreeHessian: return "tracefree_hessian";
  }
  return "?";
}

SystemId parse_system(const std::string& s) {
  if (s == "killing") return SystemId::Killing;
  if (s == "conformal_killing") return SystemId::ConformalKilling;
  if (s == "hessian") return SystemId::Hessian;
  if (s == "tracefree_hessian") return SystemId::TracefreeHessian;
  throw config_error("unknown system: " + s);
}

namespace {

int idx2(int n, int a, int b) { return a * n + b; }
int idx3(int n, int a, int b, int c) { return (a * n + b) * n + c; }
int idx4(int n, int a, int b, int c, int d) { return ((a * n + b) * n + c) * n + d; }

} // namespace

GeometryData make_geometry(int n, Chart chart) {
  require(n >= 2, "chart dimension must be at least 2");
  GeometryData g;
  g.n = n;
  g.chart = chart;
  g.metric.assign(size_t(n) * n, ofun_zero(n));
  g.inverse_metric.assign(size_t(n) * n, ofun_zero(n));
  if (chart == Chart::Flat) {
    for (int a = 0; a < n; ++a) {
      g.metric[size_t(idx2(n, a, a))] = ofun_const(n, Rat(1));
      g.inverse_metric[size_t(idx2(n, a, a))] = ofun_const(n, Rat(1));
    }
  } else {
    for (int a = 0; a < n; ++a) {
      g.metric[size_t(idx2(n, a, a))] = ofun(poly_const(n, Rat(4)), 2);
      g.inverse_metric[size_t(idx2(n, a, a))] = ofun(poly_const(n, Rat(1, 4)), -2);
    }
  }

  // Verify the inverse symbolically.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      OFun s = ofun_zero(n);
      for (int c = 0; c < n; ++c)
        s = s + g.metric[size_t(idx2(n, a, c))] * g.inverse_metric[size_t(idx2(n, c, b))];
      if (a == b) s = s - ofun_const(n, Rat(1));
      check_internal(ofun_is_zero(s), "metric inverse is wrong");
    }

  // Gamma^c_ab = (1/2) g^cd (d_a g_db + d_b g_da - d_d g_ab)
  g.christoffel.assign(size_t(n) * n * n, ofun_zero(n));
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        OFun s = ofun_zero(n);
        for (int d = 0; d < n; ++d) {
          OFun inner = ofun_diff(g.metric[size_t(idx2(n, d, b))], a) +
                       ofun_diff(g.metric[size_t(idx2(n, d, a))], b) -
                       ofun_diff(g.metric[size_t(idx2(n, a, b))], d);
          s = s + g.inverse_metric[size_t(idx2(n, c, d))] * inner;
        }
        g.christoffel[size_t(idx3(n, c, a, b))] = ofun_scaled(s, Rat(1, 2));
      }

  // R_ab^c_d = d_a Gamma^c_bd - d_b Gamma^c_ad + Gamma^c_ae Gamma^e_bd
  //            - Gamma^c_be Gamma^e_ad
  g.riemann.assign(size_t(n) * n * n * n, ofun_zero(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          OFun s = ofun_diff(g.christoffel[size_t(idx3(n, c, b, d))], a) -
                   ofun_diff(g.christoffel[size_t(idx3(n, c, a, d))], b);
          for (int e = 0; e < n; ++e)
            s = s + g.christoffel[size_t(idx3(n, c, a, e))] *
                        g.christoffel[size_t(idx3(n, e, b, d))] -
                    g.christoffel[size_t(idx3(n, c, b, e))] *
                        g.christoffel[size_t(idx3(n, e, a, d))];
          g.riemann[size_t(idx4(n, a, b, c, d))] = s;
        }

  g.ricci.assign(size_t(n) * n, ofun_zero(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      OFun s = ofun_zero(n);
      for (int c = 0; c < n; ++c) s = s + g.riemann[size_t(idx4(n, c, a, c, b))];
      g.ricci[size_t(idx2(n, a, b))] = s;
    }

  // Symbolic curvature identities.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          check_internal(ofun_is_zero(g.riemann[size_t(idx4(n, a, b, c, d))] +
                                      g.riemann[size_t(idx4(n, b, a, c, d))]),
                         "curvature not antisymmetric");
          check_internal(ofun_is_zero(g.riemann[size_t(idx4(n, a, b, c, d))] +
                                      g.riemann[size_t(idx4(n, b, d, c, a))] +
                                      g.riemann[size_t(idx4(n, d, a, c, b))]),
                         "first Bianchi identity fails");
        }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      check_internal(ofun_is_zero(g.ricci[size_t(idx2(n, a, b))] -
                                  g.ricci[size_t(idx2(n, b, a))]),
                     "Ricci tensor not symmetric");
      OFun want = (chart == Chart::Flat)
                      ? ofun_zero(n)
                      : ofun_scaled(g.metric[size_t(idx2(n, a, b))], Rat(long(n - 1)));
      check_internal(ofun_is_zero(g.ricci[size_t(idx2(n, a, b))] - want),
                     "Ricci tensor has the wrong constant curvature value");
    }
  return g;
}

std::vector<OFun> covariant_scalar(const GeometryData& g, const OFun& f) {
  std::vector<OFun> out;
  out.reserve(size_t(g.n));
  for (int a = 0; a < g.n; ++a) out.push_back(ofun_diff(f, a));
  return out;
}

std::vector<OFun> covariant_oneform(const GeometryData& g, const std::vector<OFun>& s) {
  const int n = g.n;
  std::vector<OFun> out(size_t(n) * n, ofun_zero(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      OFun v = ofun_diff(s[size_t(b)], a);
      for (int e = 0; e < n; ++e)
        v = v - g.christoffel[size_t(idx3(n, e, a, b))] * s[size_t(e)];
      out[size_t(idx2(n, a, b))] = v;
    }
  return out;
}

std::vector<OFun> covariant_rank2(const GeometryData& g, const std::vector<OFun>& t) {
  const int n = g.n;
  std::vector<OFun> out(size_t(n) * n * n, ofun_zero(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        OFun v = ofun_diff(t[size_t(idx2(n, b, c))], a);
        for (int e = 0; e < n; ++e)
          v = v - g.christoffel[size_t(idx3(n, e, a, b))] * t[size_t(idx2(n, e, c))] -
              g.christoffel[size_t(idx3(n, e, a, c))] * t[size_t(idx2(n, b, e))];
        out[size_t(idx3(n, a, b, c))] = v;
      }
  return out;
}

std::vector<OFun> covariant_rank3(const GeometryData& g, const std::vector<OFun>& t) {
  const int n = g.n;
  std::vector<OFun> out(size_t(n) * n * n * n, ofun_zero(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          OFun v = ofun_diff(t[size_t(idx3(n, b, c, d))], a);
          for (int e = 0; e < n; ++e)
            v = v -
                g.christoffel[size_t(idx3(n, e, a, b))] * t[size_t(idx3(n, e, c, d))] -
                g.christoffel[size_t(idx3(n, e, a, c))] * t[size_t(idx3(n, b, e, d))] -
                g.christoffel[size_t(idx3(n, e, a, d))] * t[size_t(idx3(n, b, c, e))];
          out[size_t(idx4(n, a, b, c, d))] = v;
        }
  return out;
}

namespace {

// Ricci with the second index raised: R_a^b = g^bc R_ac.
OFun ricci_mixed(const GeometryData& g, int a, int b) {
  OFun s = ofun_zero(g.n);
  for (int c = 0; c < g.n; ++c)
    s = s + g.inverse_metric[size_t(idx2(g.n, b, c))] * g.ricci[size_t(idx2(g.n, a, c))];
  return s;
}

} // namespace

std::vector<OFun> conformal_curvature_term(const GeometryData& g,
                                           const std::vector<OFun>& sigma) {
  const int n = g.n;
  std::vector<OFun> K(size_t(n) * n * n, ofun_zero(n));
  const Rat inv(1, long(n - 1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        OFun s = ofun_zero(n);
        for (int d = 0; d < n; ++d)
          s = s + g.riemann[size_t(idx4(n, b, c, d, a))] * sigma[size_t(d)];
        OFun tb = ofun_zero(n), tc = ofun_zero(n);
        for (int d = 0; d < n; ++d) {
          tc = tc + ricci_mixed(g, c, d) * sigma[size_t(d)];
          tb = tb + ricci_mixed(g, b, d) * sigma[size_t(d)];
        }
        s = s + ofun_scaled(g.metric[size_t(idx2(n, a, b))] * tc, inv) -
            ofun_scaled(g.metric[size_t(idx2(n, a, c))] * tb, inv);
        K[size_t(idx3(n, a, b, c))] = s;
      }
  return K;
}

ClosedSystemState state_from_sigma(const GeometryData& g, SystemId system,
                                   std::vector<OFun> sigma) {
  const int n = g.n;
  ClosedSystemState st;
  st.system = system;
  st.n = n;
  st.sigma = std::move(sigma);
  switch (system) {
    case SystemId::Hessian:
    case SystemId::TracefreeHessian: {
      require(st.sigma.size() == 1, "scalar system needs a single component");
      st.mu = covariant_scalar(g, st.sigma[0]);
      if (system == SystemId::TracefreeHessian) {
        auto dmu = covariant_oneform(g, st.mu);
        OFun tr = ofun_zero(n);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            tr = tr + g.inverse_metric[size_t(idx2(n, a, b))] * dmu[size_t(idx2(n, a, b))];
        st.rho.push_back(ofun_scaled(tr, Rat(1, long(n))));
      }
      break;
    }
    case SystemId::Killing:
    case SystemId::ConformalKilling: {
      require(int(st.sigma.size()) == n, "one-form system needs n components");
      auto ds = covariant_oneform(g, st.sigma);
      st.mu.assign(size_t(n) * n, ofun_zero(n));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          st.mu[size_t(idx2(n, a, b))] = ofun_scaled(
              ds[size_t(idx2(n, a, b))] - ds[size_t(idx2(n, b, a))], Rat(1, 2));
      if (system == SystemId::ConformalKilling) {
        OFun tr = ofun_zero(n);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            tr = tr + g.inverse_metric[size_t(idx2(n, a, b))] * ds[size_t(idx2(n, a, b))];
        st.nu.push_back(ofun_scaled(tr, Rat(1, long(n))));
        auto dmu = covariant_rank2(g, st.mu);
        st.rho.assign(size_t(n), ofun_zero(n));
        for (int c = 0; c < n; ++c) {
          OFun s = ofun_zero(n);
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
              s = s + g.inverse_metric[size_t(idx2(n, a, b))] *
                          dmu[size_t(idx3(n, a, b, c))];
          st.rho[size_t(c)] = ofun_scaled(s, Rat(1, long(n - 1)));
        }
      }
      break;
    }
  }
  return st;
}

std::vector<ClosedSystemState> known_solutions(const GeometryData& g, SystemId system) {
  const int n = g.n;
  std::vector<ClosedSystemState> out;
  auto one_form_states = [&](const std::vector<std::vector<OFun>>& sigmas) {
    for (const auto& s : sigmas) out.push_back(state_from_sigma(g, system, s));
  };

  if (g.chart == Chart::Flat) {
    switch (system) {
      case SystemId::Killing:
      case SystemId::ConformalKilling: {
        std::vector<std::vector<OFun>> sigmas;
        for (int i = 0; i < n; ++i) { // translations
          std::vector<OFun> s(size_t(n), ofun_zero(n));
          s[size_t(i)] = ofun_const(n, Rat(1));
          sigmas.push_back(s);
        }
        for (int i = 0; i < n; ++i) // rotations
          for (int j = i + 1; j < n; ++j) {
            std::vector<OFun> s(size_t(n), ofun_zero(n));
            s[size_t(j)] = ofun(poly_var(n, i));
            s[size_t(i)] = ofun(poly_scaled(poly_var(n, j), Rat(-1)));
            sigmas.push_back(s);
          }
        if (system == SystemId::ConformalKilling) {
          { // dilation
            std::vector<OFun> s(size_t(n), ofun_zero(n));
            for (int b = 0; b < n; ++b) s[size_t(b)] = ofun(poly_var(n, b));
            sigmas.push_back(s);
          }
          Poly r2 = poly_zero(n);
          for (int a = 0; a < n; ++a) r2 = r2 + poly_var(n, a) * poly_var(n, a);
          for (int i = 0; i < n; ++i) { // special conformal
            std::vector<OFun> s(size_t(n), ofun_zero(n));
            for (int b = 0; b < n; ++b) {
              Poly p = poly_scaled(poly_var(n, i) * poly_var(n, b), Rat(-2));
              if (b == i) p = p + r2;
              s[size_t(b)] = ofun(std::move(p));
            }
            sigmas.push_back(s);
          }
        }
        one_form_states(sigmas);
        break;
      }
      case SystemId::Hessian:
      case SystemId::TracefreeHessian: {
        std::vector<OFun> consts = {ofun_const(n, Rat(1))};
        out.push_back(state_from_sigma(g, system, consts));
        for (int a = 0; a < n; ++a)
          out.push_back(state_from_sigma(g, system, {ofun(poly_var(n, a))}));
        if (system == SystemId::TracefreeHessian) {
          Poly r2 = poly_zero(n);
          for (int a = 0; a < n; ++a) r2 = r2 + poly_var(n, a) * poly_var(n, a);
          out.push_back(state_from_sigma(g, system, {ofun(std::move(r2))}));
        }
        break;
      }
    }
    return out;
  }

  if (g.chart == Chart::SphereStereographic && system == SystemId::Killing) {
    std::vector<std::vector<OFun>> sigmas;
    auto lower = [&](const std::vector<Poly>& xi) {
      // sigma_a = g_ab xi^b = 4 omega^-2 xi_a
      std::vector<OFun> s(size_t(n), ofun_zero(n));
      for (int a = 0; a < n; ++a)
        s[size_t(a)] = ofun(poly_scaled(xi[size_t(a)], Rat(4)), 2);
      return s;
    };
    for (int i = 0; i < n; ++i) // chart rotations
      for (int j = i + 1; j < n; ++j) {
        std::vector<Poly> xi(size_t(n), poly_zero(n));
        xi[size_t(j)] = poly_var(n, i);
        xi[size_t(i)] = poly_scaled(poly_var(n, j), Rat(-1));
        sigmas.push_back(lower(xi));
      }
    Poly r2 = poly_zero(n);
    for (int a = 0; a < n; ++a) r2 = r2 + poly_var(n, a) * poly_var(n, a);
    for (int i = 0; i < n; ++i) {
      // ambient rotation moving the pole: xi_a = ((|x|^2-1)/2) delta_ai - x_i x_a
      std::vector<Poly> xi(size_t(n), poly_zero(n));
      for (int a = 0; a < n; ++a) {
        Poly p = poly_scaled(poly_var(n, i) * poly_var(n, a), Rat(-1));
        if (a == i)
          p = p + poly_scaled(r2 - poly_const(n, Rat(1)), Rat(1, 2));
        xi[size_t(a)] = p;
      }
      sigmas.push_back(lower(xi));
    }
    one_form_states(sigmas);
    return out;
  }

  throw config_error("no catalog of solutions for chart/system combination");
}

std::vector<OFun> residual_fields(const GeometryData& g, const ClosedSystemState& st) {
  const int n = g.n;
  std::vector<OFun> r;
  switch (st.system) {
    case SystemId::Hessian: {
      require(st.sigma.size() == 1 && int(st.mu.size()) == n,
              "hessian state is incomplete");
      auto ds = covariant_scalar(g, st.sigma[0]);
      for (int a = 0; a < n; ++a) r.push_back(ds[size_t(a)] - st.mu[size_t(a)]);
      auto dmu = covariant_oneform(g, st.mu);
      for (auto& v : dmu) r.push_back(v);
      break;
    }
    case SystemId::TracefreeHessian: {
      require(st.sigma.size() == 1 && int(st.mu.size()) == n && st.rho.size() == 1,
              "tracefree hessian state is incomplete");
      auto ds = covariant_scalar(g, st.sigma[0]);
      for (int a = 0; a < n; ++a) r.push_back(ds[size_t(a)] - st.mu[size_t(a)]);
      auto dmu = covariant_oneform(g, st.mu);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          r.push_back(dmu[size_t(idx2(n, a, b))] -
                      st.rho[0] * g.metric[size_t(idx2(n, a, b))]);
      auto drho = covariant_scalar(g, st.rho[0]);
      for (int a = 0; a < n; ++a) {
        OFun s = drho[size_t(a)];
        for (int b = 0; b < n; ++b)
          s = s + ofun_scaled(ricci_mixed(g, a, b) * st.mu[size_t(b)],
                              Rat(1, long(n - 1)));
        r.push_back(s);
      }
      break;
    }
    case SystemId::Killing: {
      require(int(st.sigma.size()) == n && int(st.mu.size()) == n * n,
              "killing state is incomplete");
      auto ds = covariant_oneform(g, st.sigma);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          r.push_back(ds[size_t(idx2(n, a, b))] - st.mu[size_t(idx2(n, a, b))]);
      auto dmu = covariant_rank2(g, st.mu);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) {
            OFun s = dmu[size_t(idx3(n, a, b, c))];
            for (int d = 0; d < n; ++d)
              s = s - g.riemann[size_t(idx4(n, b, c, d, a))] * st.sigma[size_t(d)];
            r.push_back(s);
          }
      break;
    }
    case SystemId::ConformalKilling: {
      require(int(st.sigma.size()) == n && int(st.mu.size()) == n * n &&
                  st.nu.size() == 1 && int(st.rho.size()) == n,
              "conformal killing state is incomplete");
      auto ds = covariant_oneform(g, st.sigma);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          r.push_back(ds[size_t(idx2(n, a, b))] - st.mu[size_t(idx2(n, a, b))] -
                      st.nu[0] * g.metric[size_t(idx2(n, a, b))]);
      auto dnu = covariant_scalar(g, st.nu[0]);
      for (int a = 0; a < n; ++a) {
        OFun s = dnu[size_t(a)] + st.rho[size_t(a)];
        for (int b = 0; b < n; ++b)
          s = s + ofun_scaled(ricci_mixed(g, a, b) * st.sigma[size_t(b)],
                              Rat(1, long(n - 1)));
        r.push_back(s);
      }
      auto K = conformal_curvature_term(g, st.sigma);
      auto dmu = covariant_rank2(g, st.mu);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            r.push_back(dmu[size_t(idx3(n, a, b, c))] -
                        g.metric[size_t(idx2(n, a, b))] * st.rho[size_t(c)] +
                        g.metric[size_t(idx2(n, a, c))] * st.rho[size_t(b)] -
                        K[size_t(idx3(n, a, b, c))]);
      auto dK = covariant_rank3(g, K);
      auto drho = covariant_oneform(g, st.rho);
      const Rat invn2(1, long(n - 2));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          OFun rhs = ofun_zero(n);
          for (int c = 0; c < n; ++c)
            rhs = rhs + ricci_mixed(g, a, c) * st.mu[size_t(idx2(n, b, c))];
          // minus R_a^cd_b mu_cd with both middle indices raised
          for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d) {
              OFun rup = ofun_zero(n);
              for (int e = 0; e < n; ++e)
                rup = rup + g.inverse_metric[size_t(idx2(n, c, e))] *
                                g.riemann[size_t(idx4(n, a, e, d, b))];
              rhs = rhs - rup * st.mu[size_t(idx2(n, c, d))];
            }
          // minus div of K over the last index
          for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d)
              rhs = rhs - g.inverse_metric[size_t(idx2(n, c, d))] *
                              dK[size_t(idx4(n, d, a, b, c))];
          r.push_back(drho[size_t(idx2(n, a, b))] - ofun_scaled(rhs, invn2));
        }
      break;
    }
  }
  return r;
}

std::vector<Rat> residual(const GeometryData& g, const ClosedSystemState& st,
                          const std::vector<Rat>& point) {
  std::vector<Rat> out;
  for (const auto& f : residual_fields(g, st)) out.push_back(ofun_eval(f, point));
  return out;
}

std::vector<Rat> random_point(int n, std::mt19937_64& rng) {
  std::vector<Rat> x;
  x.reserve(size_t(n));
  for (int a = 0; a < n; ++a) {
    long num = long(rng() % 17) - 8;
    long den = long(rng() % 16) + 1;
    x.push_back(Rat(num, den));
  }
  return x;
}

} // namespace prolong
