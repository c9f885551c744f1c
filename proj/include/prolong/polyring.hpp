#ifndef PROLONG_POLYRING_HPP
#define PROLONG_POLYRING_HPP

#include <map>
#include <vector>

#include "prolong/rational.hpp"

namespace prolong {

/// Sparse multivariate polynomial over Q; only nonzero coefficients stored.
struct Poly {
  int n = 0;
  std::map<std::vector<int>, Rat> terms;
};

Poly poly_zero(int n);
Poly poly_const(int n, const Rat& c);
Poly poly_var(int n, int a);
void poly_add_term(Poly& p, const std::vector<int>& e, const Rat& c);

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly poly_scaled(const Poly& a, const Rat& c);
Poly poly_diff(const Poly& a, int v);
Rat poly_eval(const Poly& a, const std::vector<Rat>& x);
bool poly_is_zero(const Poly& a);

/// 1 + x_0^2 + ... + x_{n-1}^2, the denominator of the stereographic chart.
Poly omega_poly(int n);

/// Element of Q[x][omega^{-1}]: num * omega^{-mpow}; mpow may be negative,
/// which denotes a positive omega power.  Never reduced; zero iff num is.
struct OFun {
  int n = 0;
  Poly num;
  int mpow = 0;
};

OFun ofun(Poly num, int mpow = 0);
OFun ofun_const(int n, const Rat& c);
OFun ofun_zero(int n);

OFun operator+(const OFun& a, const OFun& b);
OFun operator-(const OFun& a, const OFun& b);
OFun operator*(const OFun& a, const OFun& b);
OFun ofun_scaled(const OFun& a, const Rat& c);
OFun ofun_diff(const OFun& a, int v);
Rat ofun_eval(const OFun& a, const std::vector<Rat>& x);
bool ofun_is_zero(const OFun& a);

} // namespace prolong

#endif
