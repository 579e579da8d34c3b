#pragma once

#include <array>
#include <cstddef>
#include <functional>

namespace relfreq {

/// Eigenvalues of the identical-component ladder cell matrix.
struct LadderEigenvalues {
  double zeta0 = 0.0;
  double zeta_plus = 0.0;
  double zeta_minus = 0.0;
};

/// zeta0 = p rho (1 - p rho),
/// zeta_pm = (p rho / 2)(1 + 2 p (1-p) rho +- sqrt(B)),
/// B = 1 + 4 p^2 rho - 8 p^3 rho^2 + 4 p^4 rho^2.
LadderEigenvalues eigenvalues(double p, double rho);

double ladder_discriminant(double p, double rho);

/// Row-major cell matrix with a = b = c = p and S = T = rho.
std::array<double, 9> identical_cell_matrix(double p, double rho);

/// det(M - zeta I) for the identical cell matrix.
double characteristic_residual(double p, double rho, double zeta);

/// Amplitude of zeta_plus^n in R_Sn and R_Tn (both share it), isolated
/// from the closed-form availabilities.
double alpha_plus(double p, double rho);

/// d ln zeta_plus / d ln p and d ln alpha_plus / d ln p at rho = 1.
struct LogDerivatives {
  double d_ln_zeta = 0.0;
  double d_ln_alpha = 0.0;
};

/// Closed-form log-derivatives for perfect nodes; requires 0 < p < 1.
LogDerivatives log_derivatives(double p);

struct LadderAsymptotics {
  LadderEigenvalues zeta;
  double alpha_plus = 0.0;
  double d_ln_zeta = 0.0;
  double d_ln_alpha = 0.0;
};

/// Everything above for perfect nodes at edge availability p in (0, 1).
LadderAsymptotics analyze_ladder(double p);

/// lambda (d ln alpha / d ln p + n d ln zeta / d ln p).
double asymptotic_rate(double p, std::size_t n, double lambda);

/// (2n + 4) lambda q, the highly reliable limit.
double first_order_rate(std::size_t n, double lambda, double q);

/// Amplitude and growth ratio estimated from the transfer-matrix pass:
/// ratio = R(n+1)/R(n), amplitude = R(n) / ratio^n.
struct AmplitudeFit {
  double ratio = 0.0;
  double amplitude = 0.0;
};

AmplitudeFit fit_dominant_mode(double p, double rho, std::size_t n);

struct Maximum {
  double argument = 0.0;
  double value = 0.0;
};

/// Golden-section search for the maximum of a unimodal f on [lo, hi].
Maximum locate_maximum(const std::function<double(double)>& f, double lo, double hi, double tolerance = 1e-12);

}  // namespace relfreq
