#ifndef PROLONG_CURVED_HPP
#define PROLONG_CURVED_HPP

#include <random>
#include <string>
#include <vector>

#include "prolong/polyring.hpp"

namespace prolong {

enum class Chart { Flat, SphereStereographic };
enum class SystemId { Killing, ConformalKilling, Hessian, TracefreeHessian };

std::string system_name(SystemId s);
SystemId parse_system(const std::string& s);

/// Exact geometry of the chart: metric, Christoffel symbols and curvature as
/// rational functions of the coordinates; curvature convention
/// (nabla_a nabla_b - nabla_b nabla_a) V^c = R_ab^c_d V^d.
struct GeometryData {
  int n = 0;
  Chart chart = Chart::Flat;
  std::vector<OFun> metric;          // g_ab, row-major n x n
  std::vector<OFun> inverse_metric;  // g^ab
  std::vector<OFun> christoffel;     // Gamma^c_ab at (c*n + a)*n + b
  std::vector<OFun> riemann;         // R_ab^c_d at ((a*n + b)*n + c)*n + d
  std::vector<OFun> ricci;           // R_ab = R_ca^c_b
};

/// Flat chart on R^n, or the round unit sphere in stereographic coordinates
/// (g = 4 (1+|x|^2)^{-2} delta).  Curvature identities are verified
/// symbolically during assembly.
GeometryData make_geometry(int n, Chart chart);

/// All unknowns of one closed first-order system; which components are
/// populated depends on the system.
struct ClosedSystemState {
  SystemId system = SystemId::Killing;
  int n = 0;
  std::vector<OFun> sigma;  // size 1 (scalar systems) or n (one-form systems)
  std::vector<OFun> mu;     // size n (gradient) or n*n skew (derivative of a one-form)
  std::vector<OFun> nu;     // size 1, conformal_killing only
  std::vector<OFun> rho;    // size 1 (tracefree_hessian) or n (conformal_killing)
};

/// Populate the prolonged components from sigma alone by exact covariant
/// differentiation: mu as the (skew) derivative, nu as the metric trace part,
/// rho from the divergence of mu.
ClosedSystemState state_from_sigma(const GeometryData& g, SystemId system,
                                   std::vector<OFun> sigma);

/// Generator solutions: translations/rotations/dilation/special conformal in
/// the flat chart, ambient rotations for the sphere (killing only).
/// Throws config_error for unsupported chart/system combinations.
std::vector<ClosedSystemState> known_solutions(const GeometryData& g, SystemId system);

/// Left minus right side of every equation of the closed system, as exact
/// rational functions.
std::vector<OFun> residual_fields(const GeometryData& g, const ClosedSystemState& st);

/// The residual evaluated at a rational point.
std::vector<Rat> residual(const GeometryData& g, const ClosedSystemState& st,
                          const std::vector<Rat>& point);

std::vector<Rat> random_point(int n, std::mt19937_64& rng);

// Covariant derivatives with the chart's Levi-Civita connection; the result
// prepends the derivative index.
std::vector<OFun> covariant_scalar(const GeometryData& g, const OFun& f);
std::vector<OFun> covariant_oneform(const GeometryData& g, const std::vector<OFun>& s);
std::vector<OFun> covariant_rank2(const GeometryData& g, const std::vector<OFun>& t);
std::vector<OFun> covariant_rank3(const GeometryData& g, const std::vector<OFun>& t);

/// The curvature correction K_abc of the conformal Killing system.
std::vector<OFun> conformal_curvature_term(const GeometryData& g,
                                           const std::vector<OFun>& sigma);

} // namespace prolong

#endif
