#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "relfreq/component.hpp"
#include "relfreq/multilinear.hpp"
#include "relfreq/transfer.hpp"

namespace relfreq::testing {

inline Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool close(double a, double b, double rel, double abs_tol = 0.0) {
  return std::fabs(a - b) <= std::max(abs_tol, rel * std::max(std::fabs(a), std::fabs(b)));
}

/// Random rationals with small denominators.
struct RationalSource {
  std::mt19937_64 engine;
  explicit RationalSource(std::uint64_t seed) : engine(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine); }
  Rational unit_open() {
    const long den = integer(2, 17);
    return q(integer(1, den - 1), den);
  }
  Rational signed_coefficient() { return q(integer(-9, 9), integer(1, 5)); }
  Rational rate() { return q(integer(0, 20), integer(1, 6)); }

  MultilinearPoly poly(std::uint32_t first_id, std::uint32_t count) {
    MultilinearPoly out;
    for (std::uint32_t mask = 0; mask < (1u << count); ++mask) {
      if (integer(0, 2) == 0) continue;
      MultilinearPoly::Monomial ids;
      for (std::uint32_t i = 0; i < count; ++i)
        if (mask & (1u << i)) ids.push_back(ComponentId{first_id + i});
      out += MultilinearPoly::monomial(ids, signed_coefficient());
    }
    return out;
  }
};

/// Multilinear interpolation from the 2^m vertex values of a function of m
/// availabilities: f(p) = sum_x f(x) prod (p_i or 1 - p_i).
inline Rational interpolate(const std::vector<Rational>& vertex, const std::vector<Rational>& p) {
  Rational total(0);
  for (std::size_t x = 0; x < vertex.size(); ++x) {
    Rational w = vertex[x];
    for (std::size_t i = 0; i < p.size(); ++i) w *= (x >> i) & 1u ? p[i] : Rational(1 - p[i]);
    total += w;
  }
  return total;
}

}  // namespace relfreq::testing
