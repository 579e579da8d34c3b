#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "relfreq/component.hpp"

namespace relfreq {

/// Polynomial in component availabilities where no variable appears with a
/// power above one. Zero coefficients are never stored.
class MultilinearPoly {
 public:
  /// Strictly increasing component ids; empty for the constant term.
  using Monomial = std::vector<ComponentId>;
  using TermMap = std::map<Monomial, Rational>;

  MultilinearPoly() = default;

  static MultilinearPoly constant(const Rational& c);
  static MultilinearPoly variable(ComponentId id);
  /// 1 - p_id
  static MultilinearPoly complement(ComponentId id);
  static MultilinearPoly monomial(Monomial ids, const Rational& coefficient = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::vector<ComponentId> ids() const;

  /// `values` is dense, indexed by ComponentId::value.
  template <class T>
  T evaluate(std::span<const T> values) const;

  /// Same as evaluate(), with `fixed` substituted for the variable `id`.
  Rational evaluate_with(std::span<const Rational> values, ComponentId id, const Rational& fixed) const;

  MultilinearPoly& operator+=(const MultilinearPoly& other);
  MultilinearPoly& operator-=(const MultilinearPoly& other);
  MultilinearPoly& operator*=(const Rational& factor);
  /// Throws ValidationError if the factors share a variable.
  friend MultilinearPoly operator*(const MultilinearPoly& a, const MultilinearPoly& b);
  friend MultilinearPoly operator+(MultilinearPoly a, const MultilinearPoly& b) { return a += b; }
  friend MultilinearPoly operator-(MultilinearPoly a, const MultilinearPoly& b) { return a -= b; }
  friend MultilinearPoly operator*(MultilinearPoly a, const Rational& f) { return a *= f; }
  friend MultilinearPoly operator*(const Rational& f, MultilinearPoly a) { return a *= f; }
  MultilinearPoly operator-() const { return *this * Rational(-1); }
  friend bool operator==(const MultilinearPoly&, const MultilinearPoly&) = default;

  /// Human-readable form, variables printed as p<id> unless labels are given.
  std::string to_string(const std::vector<std::string>& labels = {}) const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

/// Applies sum_i lambda_i p_i d/dp_i. Each term c * prod_{i in S} p_i maps to
/// (sum_{i in S} lambda_i) * c * prod_{i in S} p_i.
MultilinearPoly apply_rate_operator(const MultilinearPoly& poly, const ComponentValues& rates);

template <class T>
T MultilinearPoly::evaluate(std::span<const T> values) const {
  T sum(0);
  for (const auto& [mono, coeff] : terms_) {
    T term = from_rational<T>(coeff);
    for (ComponentId id : mono) {
      term *= values[id.value];
      if (relfreq::is_zero(term)) break;
    }
    sum += term;
  }
  return sum;
}

}  // namespace relfreq
