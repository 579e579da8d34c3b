#include "relfreq/asymptotics.hpp"

#include <cmath>
#include <string>

#include "relfreq/ladder.hpp"
#include "relfreq/scalar.hpp"

namespace relfreq {

double ladder_discriminant(double p, double rho) {
  const double p2 = p * p;
  return 1.0 + 4.0 * p2 * rho - 8.0 * p2 * p * rho * rho + 4.0 * p2 * p2 * rho * rho;
}

LadderEigenvalues eigenvalues(double p, double rho) {
  if (p < 0.0 || p > 1.0 || rho < 0.0 || rho > 1.0) throw ValidationError("eigenvalues need p, rho in [0,1]");
  const double pr = p * rho;
  const double root = std::sqrt(ladder_discriminant(p, rho));
  const double base = 1.0 + 2.0 * p * (1.0 - p) * rho;
  return LadderEigenvalues{pr * (1.0 - pr), 0.5 * pr * (base + root), 0.5 * pr * (base - root)};
}

std::array<double, 9> identical_cell_matrix(double p, double rho) {
  const double a = p, b = p, c = p, S = rho, T = rho;
  return {a * S,          b * c * S * T,  a * b * c * S * T,
          a * b * S * T,  c * T,          a * b * c * S * T,
          -a * b * S * T, -b * c * S * T, a * (1.0 - 2.0 * b) * c * S * T};
}

double characteristic_residual(double p, double rho, double zeta) {
  auto m = identical_cell_matrix(p, rho);
  for (int i = 0; i < 3; ++i) m[4 * i] -= zeta;
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

double alpha_plus(double p, double rho) {
  const auto z = eigenvalues(p, rho);
  const double pr = p * rho;
  if (z.zeta_plus == z.zeta_minus) throw ValidationError("alpha_plus undefined when zeta_plus == zeta_minus");
  return (pr * (1.0 + pr) * z.zeta_plus - (1.0 - 2.0 * p + pr) * pr * pr * pr) /
         (2.0 * p * (z.zeta_plus - z.zeta_minus));
}

LogDerivatives log_derivatives(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw ValidationError("log-derivatives need 0 < p < 1 (got " + std::to_string(p) + ")");
  const double q = 1.0 - p;
  const double p2 = p * p, p3 = p2 * p, p4 = p3 * p, p5 = p4 * p;
  const double w = 1.0 + 4.0 * p2 * q * q;
  const double s = std::sqrt(w);
  LogDerivatives d;
  d.d_ln_zeta = (-1.0 + 4.0 * p - 6.0 * p2 + 4.0 * p3 + (3.0 - 4.0 * p) * s) / (2.0 * q * s);
  d.d_ln_alpha = (4.0 - 5.0 * p + 8.0 * p2 - 20.0 * p3 + 16.0 * p4 - 4.0 * p5 -
                  (4.0 - 7.0 * p + 4.0 * p2 - 2.0 * p3) * s) /
                 (2.0 * q * w);
  return d;
}

LadderAsymptotics analyze_ladder(double p) {
  const auto d = log_derivatives(p);
  return LadderAsymptotics{eigenvalues(p, 1.0), alpha_plus(p, 1.0), d.d_ln_zeta, d.d_ln_alpha};
}

double asymptotic_rate(double p, std::size_t n, double lambda) {
  const auto d = log_derivatives(p);
  return lambda * (d.d_ln_alpha + static_cast<double>(n) * d.d_ln_zeta);
}

double first_order_rate(std::size_t n, double lambda, double q) {
  return (2.0 * static_cast<double>(n) + 4.0) * lambda * q;
}

AmplitudeFit fit_dominant_mode(double p, double rho, std::size_t n) {
  LadderIdenticalParams params;
  params.p = Rational(p);
  params.rho = Rational(rho);
  params.n = n;
  const double r_n = ladder_frequency(params, LadderTerminal::t_n, Mode::approx).availability.to_double();
  params.n = n + 1;
  const double r_next = ladder_frequency(params, LadderTerminal::t_n, Mode::approx).availability.to_double();
  AmplitudeFit fit;
  fit.ratio = r_next / r_n;
  fit.amplitude = r_n / std::pow(fit.ratio, static_cast<double>(n));
  return fit;
}

Maximum locate_maximum(const std::function<double(double)>& f, double lo, double hi, double tolerance) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tolerance) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  const double x = 0.5 * (a + b);
  return Maximum{x, f(x)};
}

}  // namespace relfreq
