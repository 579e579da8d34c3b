#include "relfreq/kofn.hpp"

namespace relfreq {

void KofnSpec::validate() const {
  const auto n = static_cast<int>(components.size());
  if (n < 1) throw ValidationError("k-out-of-n system needs at least one component");
  if (k < 1 || k > n)
    throw ValidationError("k = " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
  for (const auto& c : components) c.validate();
}

namespace {

ComponentSystem assemble(const KofnSpec& spec, PolyMatrix (*cell)(std::size_t, ComponentId), Affine affine) {
  spec.validate();
  const auto k = static_cast<std::size_t>(spec.k);
  const ComponentValues rates = failure_rates_of(spec.components);

  ComponentSystem out;
  out.components = spec.components;
  auto& sys = out.transfer;
  sys.left.assign(k, Rational(0));
  sys.left[0] = 1;
  sys.right.assign(k, Rational(1));
  sys.affine = std::move(affine);
  sys.matrices.reserve(spec.components.size());
  for (std::uint32_t i = 0; i < spec.components.size(); ++i)
    sys.matrices.push_back(MatrixPair::derive(cell(k, ComponentId{i}), rates));
  return out;
}

PolyMatrix good_cell(std::size_t k, ComponentId id) {
  PolyMatrix m(k);
  for (std::size_t r = 0; r < k; ++r) {
    m(r, r) = MultilinearPoly::complement(id);
    if (r + 1 < k) m(r, r + 1) = MultilinearPoly::variable(id);
  }
  return m;
}

PolyMatrix lincon_cell(std::size_t k, ComponentId id) {
  PolyMatrix m(k);
  for (std::size_t r = 0; r < k; ++r) {
    m(r, 0) = MultilinearPoly::variable(id);
    if (r + 1 < k) m(r, r + 1) += MultilinearPoly::complement(id);
  }
  return m;
}

}  // namespace

ComponentSystem build_kofn_g(const KofnSpec& spec) {
  if (spec.family != KofnFamily::good) throw ValidationError("build_kofn_g needs a k-out-of-n:G spec");
  return assemble(spec, good_cell, Affine{Rational(1), -1});
}

ComponentSystem build_lincon_f(const KofnSpec& spec) {
  if (spec.family != KofnFamily::lincon_fail)
    throw ValidationError("build_lincon_f needs a linear consecutive k-out-of-n:F spec");
  return assemble(spec, lincon_cell, Affine{});
}

ComponentSystem build_kofn(const KofnSpec& spec) {
  return spec.family == KofnFamily::good ? build_kofn_g(spec) : build_lincon_f(spec);
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

namespace {

template <class T>
T power(const T& base, int e) {
  T r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

template <class T>
ReliabilityReport identical(int k, int n, const Rational& p_in, const Rational& lambda_in) {
  const T p = from_rational<T>(p_in);
  const T q = T(1) - p;
  const T lambda = from_rational<T>(lambda_in);
  T availability(0);
  for (int l = k; l <= n; ++l)
    availability += from_rational<T>(Rational(binomial(n, l))) * power(p, l) * power(q, n - l);
  T frequency = lambda * T(k) * from_rational<T>(Rational(binomial(n, k))) * power(p, k) * power(q, n - k);

  ReliabilityReport report;
  report.availability = to_scalar(availability);
  report.unavailability = to_scalar(T(T(1) - availability));
  report.frequency = to_scalar(frequency);
  report.rate = to_scalar(is_zero(availability) ? T(0) : T(frequency / availability));
  report.n = static_cast<std::size_t>(n);
  report.family = "kofn-g";
  return report;
}

}  // namespace

ReliabilityReport kofn_g_identical(int k, int n, const Rational& p, const Rational& lambda, Mode mode) {
  if (n < 1 || k < 1 || k > n)
    throw ValidationError("k-out-of-n needs 1 <= k <= n (got k = " + std::to_string(k) +
                          ", n = " + std::to_string(n) + ")");
  if (sgn(p) < 0 || p > 1) throw ValidationError("availability outside [0,1]");
  if (sgn(lambda) < 0) throw ValidationError("negative failure rate");
  return mode == Mode::exact ? identical<Rational>(k, n, p, lambda) : identical<double>(k, n, p, lambda);
}

}  // namespace relfreq
