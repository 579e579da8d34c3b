#include "relfreq/transfer.hpp"

#include <algorithm>

namespace relfreq {

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("matrix product of different dimensions");
  const std::size_t d = a.dim();
  PolyMatrix out(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t k = 0; k < d; ++k)
        if (!a(r, k).is_zero() && !b(k, c).is_zero()) out(r, c) += a(r, k) * b(k, c);
  return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("matrix sum of different dimensions");
  PolyMatrix out = a;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) += b(r, c);
  return out;
}

PolyMatrix apply_rate_operator(const PolyMatrix& m, const ComponentValues& rates) {
  PolyMatrix out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out(r, c) = apply_rate_operator(m(r, c), rates);
  return out;
}

MatrixPair MatrixPair::derive(PolyMatrix m, const ComponentValues& rates) {
  PolyMatrix prime = apply_rate_operator(m, rates);
  return MatrixPair{std::move(m), std::move(prime)};
}

void TransferSystem::validate() const {
  const std::size_t d = right.size();
  if (d == 0) throw DimensionError("transfer system has an empty right vector");
  if (left.size() != d)
    throw DimensionError("left vector has dimension " + std::to_string(left.size()) +
                         ", right vector has " + std::to_string(d));
  if (affine.sign != 1 && affine.sign != -1) throw ValidationError("affine sign must be +1 or -1");
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    const auto& pair = matrices[i];
    if (pair.m.dim() != d || pair.m_prime.dim() != d)
      throw DimensionError("matrix " + std::to_string(i + 1) + " has dimension " +
                           std::to_string(pair.m.dim()) + ", expected " + std::to_string(d));
  }
}

std::vector<ComponentId> TransferSystem::referenced_ids() const {
  std::vector<ComponentId> out;
  for (const auto& pair : matrices) {
    for (const auto& e : pair.m.entries()) {
      auto ids = e.ids();
      out.insert(out.end(), ids.begin(), ids.end());
    }
    for (const auto& e : pair.m_prime.entries()) {
      auto ids = e.ids();
      out.insert(out.end(), ids.begin(), ids.end());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TransferSystem with_rates(const TransferSystem& system, const ComponentValues& rates) {
  TransferSystem out = system;
  for (auto& pair : out.matrices) pair.m_prime = apply_rate_operator(pair.m, rates);
  return out;
}

std::string_view to_string(RateUnit unit) { return unit == RateUnit::per_mu ? "mu" : "absolute"; }

namespace {

template <class T>
ReliabilityReport run_pass(const TransferSystem& system, const ComponentValues& availabilities,
                           const ReportMeta& meta) {
  const auto dense = availabilities.dense_as<T>();
  const std::span<const T> values(dense);
  auto state = PassState<T>::initial(system.right);
  for (const auto& pair : system.matrices) state = stream_step(state, evaluate_pair<T>(pair, values));
  return finish_pass(state, system.left, system.affine, meta);
}

}  // namespace

ReliabilityReport single_pass(const TransferSystem& system, const ComponentValues& availabilities,
                              Mode mode, const ReportMeta& meta) {
  system.validate();
  for (ComponentId id : system.referenced_ids()) {
    const Rational& p = availabilities.at(id);
    if (sgn(p) < 0 || p > 1)
      throw ValidationError("availability of component id " + std::to_string(id.value) +
                            " outside [0,1]");
  }
  return mode == Mode::exact ? run_pass<Rational>(system, availabilities, meta)
                             : run_pass<double>(system, availabilities, meta);
}

ReliabilityReport evaluate(const ComponentSystem& system, Mode mode, const ReportMeta& meta) {
  return single_pass(system.transfer, availabilities_of(system.components), mode, meta);
}

}  // namespace relfreq
