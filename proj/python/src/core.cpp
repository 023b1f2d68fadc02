#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thresholds/asymptotic.hpp"
#include "thresholds/errors.hpp"
#include "thresholds/frobenius.hpp"
#include "thresholds/lct0.hpp"
#include "thresholds/newton.hpp"
#include "thresholds/redmodp.hpp"
#include "thresholds/testideal.hpp"

namespace py = pybind11;
using namespace thresholds;

namespace {

// Rationals cross the boundary as "num/den" strings; the Python layer turns
// them into fractions.Fraction.
std::string frac(const Rational& q) { return to_fraction_string(q); }

PolyIdeal ideal_over(const std::string& text, std::uint64_t p) {
  Ring ring = infer_ring({text}, Field::prime(p));
  return parse_ideal(text, ring);
}

std::vector<std::string> generators(const PolyIdeal& a) {
  std::vector<std::string> out;
  for (const auto& g : a.generators()) out.push_back(render(g));
  return out;
}

std::string extended(const ExtendedRational& x) { return x.is_infinite() ? "inf" : frac(x.value()); }

py::dict threshold_dict(const ThresholdResult& t) {
  py::dict d;
  d["lo"] = frac(t.lo());
  d["hi"] = frac(t.hi());
  d["certified"] = t.certified();
  d["method"] = to_string(t.method());
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact singularity thresholds";

  static py::exception<BudgetExceeded> budget_error(m, "BudgetExceeded", PyExc_RuntimeError);
  static py::exception<NotStabilized> unstable_error(m, "NotStabilized", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const BudgetExceeded& e) {
      budget_error(e.what());
    } catch (const NotStabilized& e) {
      unstable_error(e.what());
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("lct_monomial", [](const std::string& ideal) { return extended(lct_monomial(parse_monomial_ideal(ideal))); },
        py::arg("ideal"));
  m.def("lct_diagonal", [](const std::vector<std::uint64_t>& a) { return frac(lct_closed_form(Diagonal{a}).value()); },
        py::arg("exponents"));
  m.def(
      "lct_polynomial",
      [](const std::string& poly) {
        Ring ring = infer_ring({poly}, Field::rationals());
        return extended(lct_of_polynomial(parse_polynomial(poly, ring)));
      },
      py::arg("poly"));
  m.def("arnold_multiplicity", [](const std::string& ideal) { return frac(diagonal_hit(parse_monomial_ideal(ideal))); },
        py::arg("ideal"));
  m.def(
      "multiplicity",
      [](const std::string& ideal) { return py::int_(py::str(multiplicity_monomial(parse_monomial_ideal(ideal)).get_str())); },
      py::arg("ideal"));
  m.def("check_amgm", [](const std::string& ideal) { return check_amgm(parse_monomial_ideal(ideal)); }, py::arg("ideal"));

  m.def("nu", [](const std::string& ideal, std::uint64_t p, unsigned e) { return nu(ideal_over(ideal, p), e); },
        py::arg("ideal"), py::arg("p"), py::arg("e") = 1);
  m.def(
      "nu_sequence",
      [](const std::string& ideal, std::uint64_t p, unsigned e_max) {
        return nu_sequence(ideal_over(ideal, p), e_max).values;
      },
      py::arg("ideal"), py::arg("p"), py::arg("e_max") = 3);
  m.def(
      "fpt",
      [](const std::string& ideal, std::uint64_t p, unsigned e_max) {
        PolyIdeal a = ideal_over(ideal, p);
        FptReport r = fpt_enclosure(a, FrobeniusContext{p, a.ring().nvars(), e_max});
        py::dict d = threshold_dict(r.threshold);
        d["family"] = r.family.empty() ? py::object(py::none()) : py::object(py::str(r.family));
        d["nu"] = r.nu.values;
        d["enclosure"] = py::make_tuple(frac(r.enclosure.lo), frac(r.enclosure.hi));
        return d;
      },
      py::arg("ideal"), py::arg("p"), py::arg("e_max") = 4);
  m.def("cusp_fpt", [](std::uint64_t p) { return frac(cusp_fpt(p)); }, py::arg("p"));
  m.def(
      "is_ordinary_cubic",
      [](const std::string& poly, std::uint64_t p) {
        return is_ordinary_cubic(parse_polynomial(poly, Ring(3, Field::prime(p), VariableNames::Letters)));
      },
      py::arg("poly"), py::arg("p"));

  m.def(
      "frobenius_root",
      [](const std::string& ideal, std::uint64_t p, unsigned e) { return generators(frobenius_root(ideal_over(ideal, p), e)); },
      py::arg("ideal"), py::arg("p"), py::arg("e") = 1);
  m.def(
      "tau",
      [](const std::string& ideal, std::uint64_t p, const std::string& lambda, unsigned e_max) {
        TauResult r = tau(ideal_over(ideal, p), parse_rational(lambda), e_max);
        py::dict d;
        d["generators"] = generators(r.ideal);
        d["stabilized"] = r.stabilized;
        d["stable_at"] = r.stabilized ? py::object(py::int_(r.stable_at)) : py::object(py::none());
        return d;
      },
      py::arg("ideal"), py::arg("p"), py::arg("exponent"), py::arg("e_max") = 5);
  m.def(
      "fjump",
      [](const std::string& ideal, std::uint64_t p, const std::string& lambda_max, std::optional<std::uint64_t> grid) {
        JumpingReport r = fjump_scan(ideal_over(ideal, p), parse_rational(lambda_max), grid.value_or(default_grid(p)));
        py::list jumps;
        for (const auto& j : r.jumps) {
          py::dict d;
          d["exponent"] = frac(j.lambda);
          d["pinned"] = j.pinned;
          jumps.append(d);
        }
        py::dict d;
        d["grid"] = r.grid;
        d["certified"] = r.exactness == JumpExactness::Certified;
        d["jumps"] = jumps;
        return d;
      },
      py::arg("ideal"), py::arg("p"), py::arg("lambda_max") = "1", py::arg("grid") = py::none());
  m.def("default_grid", &default_grid, py::arg("p"));

  m.def(
      "golden_ratio",
      [](std::uint64_t m_max) {
        GoldenRatioReport r = golden_ratio_demo(m_max);
        py::dict d;
        d["estimate"] = frac(r.estimate.estimate());
        d["tolerance"] = frac(r.tolerance);
        d["within_tolerance"] = r.within_tolerance;
        d["limit"] = py::make_tuple(frac(r.estimate.limit.lo), frac(r.estimate.limit.hi));
        return d;
      },
      py::arg("m_max") = 2048);
  m.def(
      "hyperbola_valuation",
      [](const std::vector<std::string>& weights, std::uint64_t m_max) {
        std::vector<Rational> v;
        for (const auto& w : weights) v.push_back(parse_rational(w));
        AsymptoticEstimate est = val_asym(HyperbolaQ{}, RationalPoint(v), m_max);
        py::dict d;
        d["estimate"] = frac(est.estimate());
        d["limit"] = py::make_tuple(frac(est.limit.lo), frac(est.limit.hi));
        return d;
      },
      py::arg("weights"), py::arg("m_max") = 2048);

  m.def(
      "compare_diagonal",
      [](const std::vector<std::uint64_t>& exponents, const std::vector<std::uint64_t>& primes, unsigned e_max) {
        py::list rows;
        for (const auto& r : compare_family(LctFamilyInput{Diagonal{exponents}}, primes, e_max)) {
          py::dict d;
          d["p"] = r.p;
          d["fpt"] = threshold_dict(r.fpt);
          d["lct0"] = frac(r.lct0);
          d["relation"] = to_string(r.relation);
          d["excluded"] = r.excluded;
          d["degenerate"] = r.degenerate;
          rows.append(d);
        }
        return rows;
      },
      py::arg("exponents"), py::arg("primes"), py::arg("e_max") = 3);
}
