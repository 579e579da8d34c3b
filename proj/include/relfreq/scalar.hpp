#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

namespace relfreq {

using Rational = mpq_class;

/// Arithmetic used for a whole computation.
enum class Mode { exact, approx };

Mode parse_mode(std::string_view text);
std::string_view to_string(Mode mode);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (range, shape, missing data).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Text could not be read as a number.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Parses "a/b", integers, and decimal/scientific literals ("0.83", "-1e-8")
/// into an exact rational in lowest terms.
Rational parse_rational(std::string_view text);

/// Always "num/den" with positive denominator, lowest terms ("1/1" for one).
std::string to_rational_string(const Rational& value);

/// Fixed-point rendering, rounded half away from zero.
std::string to_decimal_string(const Rational& value, int fraction_digits = 20);

std::string to_decimal_string(double value);

/// A number in one of the two arithmetic variants.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(Rational value) : value_(std::move(value)) {}  // NOLINT
  Scalar(double value) : value_(value) {}               // NOLINT

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  Mode mode() const { return is_exact() ? Mode::exact : Mode::approx; }

  /// Throws ValidationError for an approximate value.
  const Rational& rational() const;
  double to_double() const;
  std::string decimal() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

 private:
  std::variant<Rational, double> value_;
};

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

template <class T>
T from_rational(const Rational& value) {
  if constexpr (is_exact_v<T>) {
    return value;
  } else {
    return value.get_d();
  }
}

template <class T>
bool is_zero(const T& value) {
  if constexpr (is_exact_v<T>) {
    return sgn(value) == 0;
  } else {
    return value == 0.0;
  }
}

template <class T>
Scalar to_scalar(const T& value) {
  return Scalar(value);
}

}  // namespace relfreq
