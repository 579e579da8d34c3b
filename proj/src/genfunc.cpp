#include "relfreq/genfunc.hpp"

#include <algorithm>
#include <sstream>

namespace relfreq {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }
UniPoly UniPoly::p() { return UniPoly({0, 1}); }
UniPoly UniPoly::q() { return UniPoly({1, -1}); }

void UniPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UniPoly::evaluate(const Rational& p) const {
  Rational r(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * p + *it;
  return r;
}

double UniPoly::evaluate(double p) const {
  double r = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * p + it->get_d();
  return r;
}

UniPoly UniPoly::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return UniPoly(std::move(out));
}

UniPoly UniPoly::euler() const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * static_cast<unsigned long>(i);
  return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& factor) {
  for (auto& c : coeffs_) c *= factor;
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    if (!first) os << (sgn(coeffs_[i]) < 0 ? " - " : " + ");
    else if (sgn(coeffs_[i]) < 0) os << "-";
    first = false;
    Rational mag = abs(coeffs_[i]);
    if (i == 0 || mag != 1) os << mag.get_str() << (i > 0 ? "*" : "");
    if (i == 1) os << "p";
    if (i > 1) os << "p^" << i;
  }
  return os.str();
}

UniPoly pow(const UniPoly& base, unsigned e) {
  UniPoly r = UniPoly::constant(1);
  for (unsigned i = 0; i < e; ++i) r = r * base;
  return r;
}

ZPoly::ZPoly(std::vector<UniPoly> terms) : terms_(std::move(terms)) { trim(); }

ZPoly ZPoly::constant(const UniPoly& c) { return ZPoly({c}); }

ZPoly ZPoly::monomial(const UniPoly& c, std::size_t j) {
  std::vector<UniPoly> t(j + 1);
  t[j] = c;
  return ZPoly(std::move(t));
}

void ZPoly::trim() {
  while (!terms_.empty() && terms_.back().is_zero()) terms_.pop_back();
}

const UniPoly& ZPoly::at(std::size_t j) const {
  static const UniPoly zero;
  return j < terms_.size() ? terms_[j] : zero;
}

ZPoly ZPoly::p_derivative() const {
  std::vector<UniPoly> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.derivative());
  return ZPoly(std::move(out));
}

ZPoly& ZPoly::operator+=(const ZPoly& other) {
  if (other.terms_.size() > terms_.size()) terms_.resize(other.terms_.size());
  for (std::size_t i = 0; i < other.terms_.size(); ++i) terms_[i] += other.terms_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& other) {
  if (other.terms_.size() > terms_.size()) terms_.resize(other.terms_.size());
  for (std::size_t i = 0; i < other.terms_.size(); ++i) terms_[i] -= other.terms_[i];
  trim();
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<UniPoly> out(a.terms_.size() + b.terms_.size() - 1);
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    for (std::size_t j = 0; j < b.terms_.size(); ++j) out[i + j] += a.terms_[i] * b.terms_[j];
  return ZPoly(std::move(out));
}

ZPoly operator*(const ZPoly& a, const UniPoly& c) { return a * ZPoly::constant(c); }

ZPoly pow(const ZPoly& base, unsigned e) {
  ZPoly r = ZPoly::constant(UniPoly::constant(1));
  for (unsigned i = 0; i < e; ++i) r = r * base;
  return r;
}

void RationalGF::validate() const {
  const UniPoly& lead = denominator.at(0);
  if (lead.degree() != 0)
    throw ValidationError("generating function denominator must have a nonzero constant z^0 coefficient");
}

namespace {

const UniPoly one = UniPoly::constant(1);

/// 1 - (1-p) z
ZPoly geometric_factor() { return ZPoly({one, UniPoly::q() * Rational(-1)}); }

}  // namespace

RationalGF gf_kofn_g(unsigned k) {
  RationalGF gf;
  gf.numerator = ZPoly::monomial(pow(UniPoly::p(), k), k);
  gf.denominator = ZPoly({one, UniPoly::constant(-1)}) * pow(geometric_factor(), k);
  return gf;
}

RationalGF gf_kofn_g_freq(unsigned k, const Rational& lambda) {
  RationalGF gf;
  gf.numerator = ZPoly::monomial(pow(UniPoly::p(), k) * Rational(lambda * k), k);
  gf.denominator = pow(geometric_factor(), k + 1);
  return gf;
}

RationalGF gf_lincon_f(unsigned k) {
  const UniPoly qk = pow(UniPoly::q(), k);
  RationalGF gf;
  gf.numerator = ZPoly::constant(one) - ZPoly::monomial(qk, k);
  gf.denominator = ZPoly::constant(one) - ZPoly::monomial(one, 1) + ZPoly::monomial(UniPoly::p() * qk, k + 1);
  return gf;
}

std::vector<UniPoly> series_coeffs(const RationalGF& gf, std::size_t max_order) {
  gf.validate();
  const Rational inv_lead = 1 / gf.denominator.at(0).coeffs()[0];
  const std::size_t dsize = gf.denominator.size();
  std::vector<UniPoly> c;
  c.reserve(max_order + 1);
  for (std::size_t n = 0; n <= max_order; ++n) {
    UniPoly acc = gf.numerator.at(n);
    for (std::size_t j = 1; j < dsize && j <= n; ++j) {
      const UniPoly& d = gf.denominator.at(j);
      if (!d.is_zero()) acc -= d * c[n - j];
    }
    c.push_back(acc * inv_lead);
  }
  return c;
}

std::vector<UniPoly> series_operator(const std::vector<UniPoly>& coeffs, const Rational& lambda) {
  std::vector<UniPoly> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(c.euler() * lambda);
  return out;
}

RationalGF series_operator(const RationalGF& gf, const Rational& lambda) {
  const ZPoly& n = gf.numerator;
  const ZPoly& d = gf.denominator;
  RationalGF out;
  out.numerator = (n.p_derivative() * d - n * d.p_derivative()) * (UniPoly::p() * lambda);
  out.denominator = d * d;
  return out;
}

bool same_rational_function(const RationalGF& a, const RationalGF& b) {
  return a.numerator * b.denominator == b.numerator * a.denominator;
}

Rational kofn_binomial_availability(unsigned k, unsigned n, const Rational& p) {
  if (k == 0) return 1;
  if (k > n) return 0;
  const Rational q = 1 - p;
  Rational sum(0);
  for (unsigned l = k; l <= n; ++l) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, l);
    Rational term(c);
    for (unsigned i = 0; i < l; ++i) term *= p;
    for (unsigned i = l; i < n; ++i) term *= q;
    sum += term;
  }
  return sum;
}

bool kofn_recurrence_check(unsigned k, unsigned n, const Rational& p) {
  if (k < 1 || k > n) throw ValidationError("recurrence check needs 1 <= k <= n");
  const Rational lhs = kofn_binomial_availability(k, n + 1, p);
  const Rational rhs = (1 - p) * kofn_binomial_availability(k, n, p) + p * kofn_binomial_availability(k - 1, n, p);
  return lhs == rhs;
}

}  // namespace relfreq
