#include "relfreq/scalar.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace relfreq {

Mode parse_mode(std::string_view text) {
  if (text == "exact") return Mode::exact;
  if (text == "approx") return Mode::approx;
  throw ParseError("unknown mode '" + std::string(text) + "' (expected exact|approx)");
}

std::string_view to_string(Mode mode) { return mode == Mode::exact ? "exact" : "approx"; }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

[[noreturn]] void bad(std::string_view text) {
  throw ParseError("cannot parse '" + std::string(text) + "' as a rational number");
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    s = s.substr(0, e);
    if (!exp_part.empty() && exp_part.front() == '+') exp_part.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(exp_part.data(), exp_part.data() + exp_part.size(), exponent);
    if (ec != std::errc() || ptr != exp_part.data() + exp_part.size() || exp_part.empty()) bad(text);
  }
  std::string digits;
  std::string_view int_part = s, frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) bad(text);
  if (!int_part.empty() && !all_digits(int_part)) bad(text);
  if (!frac_part.empty() && !all_digits(frac_part)) bad(text);
  digits.append(int_part);
  digits.append(frac_part);
  exponent -= static_cast<long>(frac_part.size());

  Rational r{mpz_class(digits.empty() ? "0" : digits, 10)};
  if (exponent > 0) r *= pow10(static_cast<unsigned long>(exponent));
  if (exponent < 0) r /= pow10(static_cast<unsigned long>(-exponent));
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) bad(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash), den = text.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
      negative = num.front() == '-';
      num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) bad(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r(mpz_class(std::string(num), 10), d);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }
  return parse_decimal(text);
}

std::string to_rational_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal_string(const Rational& value, int fraction_digits) {
  mpz_class scale = pow10(static_cast<unsigned long>(fraction_digits));
  mpz_class num = abs(value.get_num()) * scale;
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), value.get_den().get_mpz_t());
  if (2 * r >= value.get_den()) ++q;
  std::string digits = q.get_str();
  if (digits.size() <= static_cast<std::size_t>(fraction_digits))
    digits.insert(0, static_cast<std::size_t>(fraction_digits) + 1 - digits.size(), '0');
  std::string out = sgn(value) < 0 && q != 0 ? "-" : "";
  out += digits.substr(0, digits.size() - static_cast<std::size_t>(fraction_digits));
  if (fraction_digits > 0) {
    out += '.';
    out += digits.substr(digits.size() - static_cast<std::size_t>(fraction_digits));
  }
  return out;
}

std::string to_decimal_string(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

const Rational& Scalar::rational() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  throw ValidationError("scalar holds an approximate value; no exact rational available");
}

double Scalar::to_double() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->get_d();
  return std::get<double>(value_);
}

std::string Scalar::decimal() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return to_decimal_string(*r);
  return to_decimal_string(std::get<double>(value_));
}

}  // namespace relfreq
