#include "prolong/polyring.hpp"

#include "prolong/errors.hpp"

namespace prolong {

Poly poly_zero(int n) {
  Poly p;
  p.n = n;
  return p;
}

Poly poly_const(int n, const Rat& c) {
  Poly p = poly_zero(n);
  if (sgn(c) != 0) p.terms[std::vector<int>(size_t(n), 0)] = c;
  return p;
}

Poly poly_var(int n, int a) {
  Poly p = poly_zero(n);
  std::vector<int> e(size_t(n), 0);
  e[size_t(a)] = 1;
  p.terms[e] = Rat(1);
  return p;
}

void poly_add_term(Poly& p, const std::vector<int>& e, const Rat& c) {
  if (sgn(c) == 0) return;
  auto it = p.terms.find(e);
  if (it == p.terms.end()) {
    p.terms[e] = c;
  } else {
    it->second += c;
    if (sgn(it->second) == 0) p.terms.erase(it);
  }
}

Poly operator+(const Poly& a, const Poly& b) {
  check_internal(a.n == b.n, "polynomial variable count mismatch");
  Poly out = a;
  for (const auto& [e, c] : b.terms) poly_add_term(out, e, c);
  return out;
}

Poly operator-(const Poly& a, const Poly& b) {
  return a + poly_scaled(b, Rat(-1));
}

Poly operator*(const Poly& a, const Poly& b) {
  check_internal(a.n == b.n, "polynomial variable count mismatch");
  Poly out = poly_zero(a.n);
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      std::vector<int> e(ea.size());
      for (size_t t = 0; t < e.size(); ++t) e[t] = ea[t] + eb[t];
      poly_add_term(out, e, ca * cb);
    }
  return out;
}

Poly poly_scaled(const Poly& a, const Rat& c) {
  Poly out = poly_zero(a.n);
  if (sgn(c) == 0) return out;
  for (const auto& [e, v] : a.terms) out.terms[e] = v * c;
  return out;
}

Poly poly_diff(const Poly& a, int v) {
  Poly out = poly_zero(a.n);
  for (const auto& [e, c] : a.terms) {
    if (e[size_t(v)] == 0) continue;
    std::vector<int> d = e;
    d[size_t(v)] -= 1;
    poly_add_term(out, d, c * Rat(long(e[size_t(v)])));
  }
  return out;
}

Rat poly_eval(const Poly& a, const std::vector<Rat>& x) {
  check_internal(int(x.size()) == a.n, "evaluation point dimension mismatch");
  Rat out(0);
  for (const auto& [e, c] : a.terms) {
    Rat mono = c;
    for (size_t t = 0; t < e.size(); ++t)
      for (int i = 0; i < e[t]; ++i) mono *= x[t];
    out += mono;
  }
  return out;
}

bool poly_is_zero(const Poly& a) { return a.terms.empty(); }

Poly omega_poly(int n) {
  Poly p = poly_const(n, Rat(1));
  for (int a = 0; a < n; ++a) {
    std::vector<int> e(size_t(n), 0);
    e[size_t(a)] = 2;
    p.terms[e] = Rat(1);
  }
  return p;
}

OFun ofun(Poly num, int mpow) {
  OFun f;
  f.n = num.n;
  f.num = std::move(num);
  f.mpow = f.num.terms.empty() ? 0 : mpow;
  return f;
}

OFun ofun_const(int n, const Rat& c) { return ofun(poly_const(n, c)); }

OFun ofun_zero(int n) { return ofun(poly_zero(n)); }

namespace {

Poly omega_power(int n, int p) {
  Poly out = poly_const(n, Rat(1));
  Poly w = omega_poly(n);
  for (int i = 0; i < p; ++i) out = out * w;
  return out;
}

} // namespace

OFun operator+(const OFun& a, const OFun& b) {
  check_internal(a.n == b.n, "function variable count mismatch");
  const int m = std::max(a.mpow, b.mpow);
  Poly num = a.num * omega_power(a.n, m - a.mpow) +
             b.num * omega_power(a.n, m - b.mpow);
  return ofun(std::move(num), m);
}

OFun operator-(const OFun& a, const OFun& b) {
  return a + ofun_scaled(b, Rat(-1));
}

OFun operator*(const OFun& a, const OFun& b) {
  check_internal(a.n == b.n, "function variable count mismatch");
  return ofun(a.num * b.num, a.mpow + b.mpow);
}

OFun ofun_scaled(const OFun& a, const Rat& c) {
  return ofun(poly_scaled(a.num, c), a.mpow);
}

OFun ofun_diff(const OFun& a, int v) {
  // d(p w^-m) = (w dp - m p dw) w^-(m+1)
  Poly w = omega_poly(a.n);
  Poly num = w * poly_diff(a.num, v) -
             poly_scaled(a.num * poly_diff(w, v), Rat(long(a.mpow)));
  return ofun(std::move(num), a.mpow + 1);
}

Rat ofun_eval(const OFun& a, const std::vector<Rat>& x) {
  Rat num = poly_eval(a.num, x);
  Rat w = poly_eval(omega_poly(a.n), x);
  if (a.mpow >= 0) {
    Rat denom(1);
    for (int i = 0; i < a.mpow; ++i) denom *= w;
    return num / denom;
  }
  for (int i = 0; i < -a.mpow; ++i) num *= w;
  return num;
}

bool ofun_is_zero(const OFun& a) { return poly_is_zero(a.num); }

} // namespace prolong
