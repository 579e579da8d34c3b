#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "relfreq/asymptotics.hpp"
#include "relfreq/description.hpp"
#include "relfreq/genfunc.hpp"
#include "relfreq/kofn.hpp"
#include "relfreq/ladder.hpp"
#include "relfreq/sweep.hpp"
#include "relfreq/verify.hpp"

namespace py = pybind11;
using namespace relfreq;

namespace {

// Reports cross the boundary as JSON text; the Python side decodes them.
std::string report_text(const ReliabilityReport& r) { return report_to_json(r).dump(); }

py::dict scalar_dict(const Scalar& s) {
  py::dict d;
  d["rational"] = s.is_exact() ? py::object(py::str(to_rational_string(s.rational()))) : py::none();
  d["decimal"] = s.decimal();
  return d;
}

std::string solve_json(const std::string& config, const std::string& mode) {
  return report_text(solve(parse_description_text(config), parse_mode(mode)));
}

std::string kofn_identical(int k, int n, const std::string& p, const std::string& lambda, const std::string& mode) {
  return report_text(kofn_g_identical(k, n, parse_rational(p), parse_rational(lambda), parse_mode(mode)));
}

LadderIdenticalParams ladder_params(const std::string& p, const std::string& rho, const std::string& lambda,
                                    const std::string& xi, std::size_t n) {
  return {parse_rational(p), parse_rational(rho), parse_rational(lambda), parse_rational(xi), n};
}

py::dict closed_form(const std::string& p, const std::string& rho, std::size_t n, const std::string& mode) {
  const auto r = ladder_closed_form(ladder_params(p, rho, "0", "0", n), parse_mode(mode));
  py::dict d;
  d["Sn"] = scalar_dict(r.s_n);
  d["Tn"] = scalar_dict(r.t_n);
  return d;
}

std::string ladder(const std::string& p, const std::string& rho, const std::string& lambda, const std::string& xi,
                   std::size_t n, const std::string& terminal, const std::string& mode) {
  return report_text(
      ladder_frequency(ladder_params(p, rho, lambda, xi, n), parse_terminal(terminal), parse_mode(mode)));
}

std::vector<std::vector<std::string>> coefficients(const std::string& family, unsigned k, std::size_t order,
                                                   const std::string& lambda) {
  RationalGF gf;
  if (family == "kofn-g")
    gf = gf_kofn_g(k);
  else if (family == "kofn-g-freq")
    gf = gf_kofn_g_freq(k, parse_rational(lambda));
  else if (family == "lincon-f")
    gf = gf_lincon_f(k);
  else
    throw ParseError("unknown generating function '" + family + "' (expected kofn-g|kofn-g-freq|lincon-f)");
  std::vector<std::vector<std::string>> out;
  for (const auto& c : series_coeffs(gf, order)) {
    std::vector<std::string> row;
    for (const auto& v : c.coeffs()) row.push_back(to_rational_string(v));
    out.push_back(std::move(row));
  }
  return out;
}

std::string rate_operator(const std::string& expression, const std::vector<std::pair<std::string, std::string>>& rates) {
  std::vector<std::string> labels;
  ComponentValues values;
  for (const auto& [label, rate] : rates) {
    values.set(ComponentId{static_cast<std::uint32_t>(labels.size())}, parse_rational(rate));
    labels.push_back(label);
  }
  return apply_rate_operator(parse_polynomial(expression, labels), values).to_string(labels);
}

py::dict verify(std::size_t max_components, std::size_t instances, std::uint64_t seed) {
  const auto r = run_verify({max_components, instances, seed, false});
  py::dict d;
  d["passed"] = r.passed;
  d["checked"] = r.checked;
  d["message"] = r.message;
  d["counterexample"] = r.counterexample;
  return d;
}

std::string sweep(const std::string& family, const std::string& parameter, const std::string& range, int k,
                  std::size_t n, const std::string& p, const std::string& rho, const std::string& lambda,
                  const std::string& xi, const std::string& terminal, const std::string& mode) {
  SweepRequest req;
  req.family = parse_family(family);
  req.parameter = parse_sweep_parameter(parameter);
  req.range = SweepRange::parse(range);
  req.k = k;
  req.n = n;
  req.p = parse_rational(p);
  req.rho = parse_rational(rho);
  req.lambda = parse_rational(lambda);
  req.xi = parse_rational(xi);
  req.terminal = parse_terminal(terminal);
  req.mode = parse_mode(mode);
  return run_sweep(req);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact availability and failure-frequency evaluation by transfer matrices";

  static py::exception<Error> base(m, "RelfreqError", PyExc_RuntimeError);
  static py::exception<ValidationError> validation(m, "ValidationError", base.ptr());
  static py::exception<ParseError> parse(m, "ParseError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse, e.what());
    } catch (const ValidationError& e) {
      py::set_error(validation, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def("solve_json", &solve_json, py::arg("config"), py::arg("mode") = "exact");
  m.def("kofn_g_identical", &kofn_identical, py::arg("k"), py::arg("n"), py::arg("p"), py::arg("lam"),
        py::arg("mode") = "exact");
  m.def("ladder_closed_form", &closed_form, py::arg("p"), py::arg("rho"), py::arg("n"), py::arg("mode") = "approx");
  m.def("ladder_frequency", &ladder, py::arg("p"), py::arg("rho"), py::arg("lam"), py::arg("xi"), py::arg("n"),
        py::arg("terminal") = "Tn", py::arg("mode") = "exact");
  m.def("series_coeffs", &coefficients, py::arg("family"), py::arg("k"), py::arg("order"), py::arg("lam") = "1");
  m.def("rate_operator", &rate_operator, py::arg("expression"), py::arg("rates"));
  m.def("verify", &verify, py::arg("max_components") = 10, py::arg("instances") = 200, py::arg("seed") = 2007);
  m.def("sweep", &sweep, py::arg("family"), py::arg("parameter"), py::arg("range"), py::arg("k") = 1,
        py::arg("n") = 1, py::arg("p") = "9/10", py::arg("rho") = "1", py::arg("lam") = "1", py::arg("xi") = "0",
        py::arg("terminal") = "Tn", py::arg("mode") = "approx");

  m.def("eigenvalues", [](double p, double rho) {
    const auto z = eigenvalues(p, rho);
    return py::make_tuple(z.zeta0, z.zeta_plus, z.zeta_minus);
  }, py::arg("p"), py::arg("rho") = 1.0);
  m.def("alpha_plus", &alpha_plus, py::arg("p"), py::arg("rho") = 1.0);
  m.def("log_derivatives", [](double p) {
    const auto d = log_derivatives(p);
    return py::make_tuple(d.d_ln_zeta, d.d_ln_alpha);
  }, py::arg("p"));
  m.def("asymptotic_rate", &asymptotic_rate, py::arg("p"), py::arg("n"), py::arg("lam") = 1.0);
  m.def("first_order_rate", &first_order_rate, py::arg("n"), py::arg("lam"), py::arg("q"));
}
