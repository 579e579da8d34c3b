#pragma once

#include <vector>

#include "relfreq/component.hpp"
#include "relfreq/transfer.hpp"

namespace relfreq {

enum class KofnFamily {
  /// Works iff at least k of n components work.
  good,
  /// Linear consecutive: fails iff at least k adjacent components fail.
  lincon_fail,
};

struct KofnSpec {
  int k = 1;
  /// Physical line order; components[0] is adjacent to the right vector.
  std::vector<Component> components;
  KofnFamily family = KofnFamily::good;

  void validate() const;
};

/// k x k bidiagonal matrices (diagonal q_i, superdiagonal p_i) with
/// left = (1,0,...,0), right = (1,...,1) and affine form 1 - (...).
ComponentSystem build_kofn_g(const KofnSpec& spec);

/// k x k matrices with p_i down the first column and q_i on the
/// superdiagonal; left = (1,0,...,0), right = (1,...,1).
ComponentSystem build_lincon_f(const KofnSpec& spec);

/// Dispatches on spec.family.
ComponentSystem build_kofn(const KofnSpec& spec);

/// Identical components:
///   A  = sum_{l=k}^{n} C(n,l) p^l (1-p)^(n-l)
///   nu = lambda k C(n,k) p^k (1-p)^(n-k)
ReliabilityReport kofn_g_identical(int k, int n, const Rational& p, const Rational& lambda, Mode mode);

/// C(n, k) as an exact integer.
mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace relfreq
