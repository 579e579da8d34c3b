#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "relfreq/scalar.hpp"

namespace relfreq {

/// Polynomial in p with exact rational coefficients; coeffs()[i] multiplies p^i.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  /// The monomial p.
  static UniPoly p();
  /// 1 - p
  static UniPoly q();

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rational evaluate(const Rational& p) const;
  double evaluate(double p) const;
  UniPoly derivative() const;
  /// p * d/dp
  UniPoly euler() const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const Rational& factor);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Rational& f) { return a *= f; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

UniPoly pow(const UniPoly& base, unsigned e);

/// Polynomial in z whose coefficients are UniPoly in p; terms()[j] multiplies z^j.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<UniPoly> terms);

  static ZPoly constant(const UniPoly& c);
  /// c * z^j
  static ZPoly monomial(const UniPoly& c, std::size_t j);

  const std::vector<UniPoly>& terms() const { return terms_; }
  const UniPoly& at(std::size_t j) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Applies d/dp to every coefficient.
  ZPoly p_derivative() const;

  ZPoly& operator+=(const ZPoly& other);
  ZPoly& operator-=(const ZPoly& other);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(const ZPoly& a, const UniPoly& c);
  friend bool operator==(const ZPoly&, const ZPoly&) = default;

 private:
  void trim();
  std::vector<UniPoly> terms_;
};

ZPoly pow(const ZPoly& base, unsigned e);

/// numerator / denominator as a formal power series in z. The z^0
/// coefficient of the denominator must be a nonzero constant.
struct RationalGF {
  ZPoly numerator;
  ZPoly denominator;

  void validate() const;
};

/// Availability series of k-out-of-n:G: p^k z^k / ((1 - z)(1 - (1-p) z)^k).
/// k = 0 gives 1/(1 - z).
RationalGF gf_kofn_g(unsigned k);

/// Frequency series of k-out-of-n:G: lambda k p^k z^k / (1 - (1-p) z)^(k+1).
RationalGF gf_kofn_g_freq(unsigned k, const Rational& lambda);

/// Availability series of Lin/Con/k/n:F:
/// (1 - (1-p)^k z^k) / (1 - z + p (1-p)^k z^(k+1)).
RationalGF gf_lincon_f(unsigned k);

/// Coefficients of z^0 .. z^max_order, via the recurrence induced by the
/// denominator. Cost O(max_order * deg_z(denominator) * deg_p^2).
std::vector<UniPoly> series_coeffs(const RationalGF& gf, std::size_t max_order);

/// lambda p d/dp on every coefficient.
std::vector<UniPoly> series_operator(const std::vector<UniPoly>& coeffs, const Rational& lambda);

/// lambda p d/dp of N/D, i.e. lambda p (N' D - N D') / D^2.
RationalGF series_operator(const RationalGF& gf, const Rational& lambda);

/// N_a D_b == N_b D_a as polynomials.
bool same_rational_function(const RationalGF& a, const RationalGF& b);

/// A_{k,n} = sum_{l >= k} C(n,l) p^l (1-p)^(n-l); A_{0,n} = 1, A_{k,n} = 0 for k > n.
Rational kofn_binomial_availability(unsigned k, unsigned n, const Rational& p);

/// Checks A_{k,n+1} = (1-p) A_{k,n} + p A_{k-1,n} exactly.
bool kofn_recurrence_check(unsigned k, unsigned n, const Rational& p);

}  // namespace relfreq
