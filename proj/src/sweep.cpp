#include "relfreq/sweep.hpp"

#include <sstream>

#include "relfreq/asymptotics.hpp"
#include "relfreq/kofn.hpp"
#include "relfreq/ladder.hpp"

namespace relfreq {

SweepParameter parse_sweep_parameter(std::string_view text) {
  if (text == "p") return SweepParameter::p;
  if (text == "rho") return SweepParameter::rho;
  if (text == "n") return SweepParameter::n;
  throw ParseError("unknown sweep parameter '" + std::string(text) + "' (expected p|rho|n)");
}

SweepRange SweepRange::parse(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos) throw ParseError("range must look like a:b:step, got '" + std::string(text) + "'");
  SweepRange r{parse_rational(text.substr(0, first)), parse_rational(text.substr(first + 1, second - first - 1)),
               parse_rational(text.substr(second + 1))};
  if (sgn(r.step) <= 0) throw ParseError("range step must be positive");
  if (r.stop < r.start) throw ParseError("range end precedes its start");
  return r;
}

std::vector<Rational> SweepRange::values() const {
  std::vector<Rational> out;
  for (Rational v = start; v <= stop; v += step) out.push_back(v);
  return out;
}

namespace {

ReliabilityReport evaluate_point(const SweepRequest& req, const Rational& p, const Rational& rho, std::size_t n) {
  switch (req.family) {
    case Family::kofn_g:
      return kofn_g_identical(req.k, static_cast<int>(n), p, p == 1 ? Rational(0) : req.lambda, req.mode);
    case Family::lincon_f: {
      KofnSpec spec;
      spec.k = req.k;
      spec.family = KofnFamily::lincon_fail;
      for (std::size_t i = 0; i < n; ++i)
        spec.components.push_back(Component{"c" + std::to_string(i + 1), p, p == 1 ? Rational(0) : req.lambda, 0});
      ReportMeta meta;
      meta.family = "lincon-f";
      return evaluate(build_lincon_f(spec), req.mode, meta);
    }
    case Family::ladder: {
      LadderIdenticalParams params{p, rho, req.lambda, req.xi, n};
      return ladder_frequency(params, req.terminal, req.mode);
    }
    case Family::custom_matrices:
      break;
  }
  throw ValidationError("sweeps support kofn-g, lincon-f and ladder");
}

std::string format_parameter(const Rational& v) {
  std::string s = to_decimal_string(v, 12);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

std::string run_sweep(const SweepRequest& req) {
  if (req.family == Family::custom_matrices) throw ValidationError("sweeps support kofn-g, lincon-f and ladder");
  if (req.parameter == SweepParameter::rho && req.family != Family::ladder)
    throw ValidationError("rho is only a ladder parameter");
  const auto values = req.range.values();
  if (req.parameter == SweepParameter::n)
    for (const auto& v : values)
      if (v.get_den() != 1 || sgn(v) <= 0) throw ValidationError("n must take positive integer values");

  const bool ladder = req.family == Family::ladder;
  std::ostringstream csv;
  csv << (req.parameter == SweepParameter::p ? "p" : req.parameter == SweepParameter::rho ? "rho" : "n")
      << ",A,nu,lambda_bar" << (ladder ? ",d_ln_zeta,d_ln_alpha" : "") << "\n";
  for (const auto& v : values) {
    Rational p = req.p, rho = req.rho;
    std::size_t n = req.n;
    switch (req.parameter) {
      case SweepParameter::p: p = v; break;
      case SweepParameter::rho: rho = v; break;
      case SweepParameter::n: n = v.get_num().get_ui(); break;
    }
    const auto report = evaluate_point(req, p, rho, n);
    csv << (req.parameter == SweepParameter::n ? v.get_num().get_str() : format_parameter(v)) << ","
        << report.availability.decimal() << "," << report.frequency.decimal() << "," << report.rate.decimal();
    if (ladder) {
      csv << ",";
      if (sgn(p) > 0 && p < 1) {
        const auto d = log_derivatives(p.get_d());
        csv << to_decimal_string(d.d_ln_zeta) << "," << to_decimal_string(d.d_ln_alpha);
      } else {
        csv << ",";
      }
    }
    csv << "\n";
  }
  return csv.str();
}

}  // namespace relfreq
