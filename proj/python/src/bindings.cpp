// Python bindings for the exact prolongation library.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>
#include <string>
#include <vector>

#include "prolong/curved.hpp"
#include "prolong/errors.hpp"
#include "prolong/flatjet.hpp"
#include "prolong/hodge.hpp"
#include "prolong/kostant.hpp"
#include "prolong/tensorlab.hpp"

namespace py = pybind11;
using namespace prolong;

namespace {

StructureKind parse_kind(const std::string& s) {
  if (s == "affine") return StructureKind::Affine;
  if (s == "riemannian") return StructureKind::Riemannian;
  throw config_error("unknown structure '" + s + "' (want affine or riemannian)");
}

py::object big(const Int& v) {
  return py::module_::import("builtins").attr("int")(v.get_str());
}

py::dict profile_dict(const std::string& structure, int n, const std::string& e, int k) {
  StructureData sd = make_structure(parse_kind(structure), n);
  ESpec espec = ESpec::parse(e);
  validate_espec(sd.kind, n, espec);
  GradedProfile p = graded_profile(sd, espec_labels(sd, espec), k);
  py::dict d;
  d["labels"] = std::vector<int>(p.v_labels.begin(), p.v_labels.end());
  d["N"] = p.N;
  py::list lv;
  for (const auto& x : p.level_dims) lv.append(big(x));
  d["levels"] = lv;
  d["total"] = big(p.total);
  return d;
}

std::vector<long long> oracle_dims(const std::string& structure, int n,
                                   const std::string& e, int k, long long cap) {
  auto levels = classical_prolongations(n, parse_kind(structure), ESpec::parse(e), k, cap);
  std::vector<long long> out;
  for (const auto& lb : levels)
    if (lb.sym_basis.cols() > 0) out.push_back(lb.sym_basis.cols());
  return out;
}

long long flat_dim(const std::string& structure, int n, const std::string& e, int k) {
  return solution_space(n, parse_kind(structure), ESpec::parse(e), k).dim;
}

py::list identity_checks(const std::string& structure, int n, const std::string& e,
                         int k) {
  GradedModel gm = assemble_graded_module(n, parse_kind(structure), ESpec::parse(e), k);
  py::list out;
  for (const auto& c : verify_graded_structure(gm)) {
    py::dict d;
    d["name"] = c.name;
    d["pass"] = c.pass;
    d["detail"] = c.detail;
    out.append(d);
  }
  return out;
}

Chart parse_chart(const std::string& s) {
  if (s == "flat") return Chart::Flat;
  if (s == "sphere") return Chart::SphereStereographic;
  throw config_error("unknown chart '" + s + "' (want flat or sphere)");
}

py::dict curved_check(const std::string& chart, const std::string& system, int n,
                      std::uint64_t seed, int points) {
  GeometryData g = make_geometry(n, parse_chart(chart));
  SystemId sys = parse_system(system);
  auto sols = known_solutions(g, sys);
  std::mt19937_64 rng(seed);
  bool all_zero = true;
  for (const auto& st : sols) {
    auto fields = residual_fields(g, st);
    for (int t = 0; t < points; ++t) {
      auto x = random_point(n, rng);
      for (const auto& f : fields) all_zero = all_zero && sgn(ofun_eval(f, x)) == 0;
    }
  }
  py::dict d;
  d["generators"] = py::int_(sols.size());
  d["all_zero"] = all_zero;
  return d;
}

py::list catalog(int n) {
  py::list out;
  for (const auto& cc : catalog_cases(n)) {
    py::dict d;
    d["structure"] = cc.kind == StructureKind::Affine ? "affine" : "riemannian";
    d["e"] = cc.espec.name();
    d["k"] = cc.k;
    out.append(d);
  }
  return out;
}

} // namespace

PYBIND11_MODULE(_prolong, m) {
  m.doc() = "exact prolongation profiles and cross-checks for overdetermined "
            "geometric PDE systems";

  py::register_exception<config_error>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<resource_error>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<verification_error>(m, "VerificationError", PyExc_RuntimeError);

  m.def("profile", &profile_dict, py::arg("structure"), py::arg("n"), py::arg("e"),
        py::arg("k"),
        "Graded dimension profile of the prolongation bundle: labels, order N, "
        "per-level dimensions and their total.");
  m.def("oracle_dims", &oracle_dims, py::arg("structure"), py::arg("n"), py::arg("e"),
        py::arg("k"), py::arg("cap") = 200000,
        "Level dimensions computed by the brute-force tensor prolongation.");
  m.def("flat_solution_dim", &flat_dim, py::arg("structure"), py::arg("n"),
        py::arg("e"), py::arg("k"),
        "Dimension of the polynomial solution space of the flat constant-"
        "coefficient system.");
  m.def("identity_checks", &identity_checks, py::arg("structure"), py::arg("n"),
        py::arg("e"), py::arg("k"),
        "Run the graded-module identity battery; returns one record per check.");
  m.def("curved_check", &curved_check, py::arg("chart"), py::arg("system"),
        py::arg("n") = 3, py::arg("seed") = 0, py::arg("points") = 5,
        "Evaluate the closed-system residuals of all catalogued solutions at "
        "seeded rational points.");
  m.def("catalog", &catalog, py::arg("n") = 3,
        "The verification catalog of (structure, bundle, order) cases.");
}
