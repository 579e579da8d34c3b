#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "relfreq/component.hpp"
#include "relfreq/multilinear.hpp"
#include "relfreq/scalar.hpp"

namespace relfreq {

/// Square matrix of multilinear polynomials, row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  std::size_t dim() const { return dim_; }
  MultilinearPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const MultilinearPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  const std::vector<MultilinearPoly>& entries() const { return entries_; }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<MultilinearPoly> entries_;
};

PolyMatrix apply_rate_operator(const PolyMatrix& m, const ComponentValues& rates);

/// A transfer matrix together with its image under the rate operator.
struct MatrixPair {
  PolyMatrix m;
  PolyMatrix m_prime;

  static MatrixPair derive(PolyMatrix m, const ComponentValues& rates);
};

/// Reported availability is offset + sign * (left . M_n ... M_1 . right).
struct Affine {
  Rational offset{0};
  int sign = +1;
};

/// `matrices[0]` is the matrix adjacent to the right vector.
struct TransferSystem {
  std::vector<Rational> left;
  std::vector<MatrixPair> matrices;
  std::vector<Rational> right;
  Affine affine;

  std::size_t dim() const { return right.size(); }
  /// Throws DimensionError on any shape inconsistency.
  void validate() const;
  std::vector<ComponentId> referenced_ids() const;
};

/// Same system with every M' recomputed from M under new rates.
TransferSystem with_rates(const TransferSystem& system, const ComponentValues& rates);

/// A transfer system plus the components its ids index into.
struct ComponentSystem {
  TransferSystem transfer;
  std::vector<Component> components;
};

/// Matrix pair evaluated at concrete availabilities.
template <class T>
struct NumericPair {
  std::size_t dim = 0;
  std::vector<T> m;
  std::vector<T> m_prime;
};

template <class T>
NumericPair<T> evaluate_pair(const MatrixPair& pair, std::span<const T> availabilities);

/// (A_k, V_k) after `index` cells.
template <class T>
struct PassState {
  std::vector<T> a;
  std::vector<T> v;
  std::size_t index = 0;

  /// a = right, v = 0.
  static PassState initial(const std::vector<Rational>& right);
};

template <class T>
PassState<T> stream_step(const PassState<T>& state, const NumericPair<T>& pair);

template <class T>
PassState<T> stream_step(const PassState<T>& state, const MatrixPair& pair,
                         const ComponentValues& availabilities);

enum class RateUnit { absolute, per_mu };

std::string_view to_string(RateUnit unit);

struct ReliabilityReport {
  Scalar availability;
  Scalar unavailability;
  Scalar frequency;
  Scalar rate;
  RateUnit unit = RateUnit::absolute;
  std::size_t n = 0;
  std::string family;

  Mode mode() const { return availability.mode(); }
};

struct ReportMeta {
  RateUnit unit = RateUnit::absolute;
  std::string family = "custom";
  /// System size to report; defaults to the number of matrices consumed.
  std::optional<std::size_t> n;
};

/// Projects a final pass state onto the left vector and applies the affine form.
template <class T>
ReliabilityReport finish_pass(const PassState<T>& state, const std::vector<Rational>& left,
                              const Affine& affine, const ReportMeta& meta);

/// Availability and failure frequency in one sweep over the matrices.
ReliabilityReport single_pass(const TransferSystem& system, const ComponentValues& availabilities,
                              Mode mode, const ReportMeta& meta = {});

ReliabilityReport evaluate(const ComponentSystem& system, Mode mode, const ReportMeta& meta = {});

// ---------------------------------------------------------------------------

template <class T>
NumericPair<T> evaluate_pair(const MatrixPair& pair, std::span<const T> availabilities) {
  NumericPair<T> out;
  out.dim = pair.m.dim();
  out.m.reserve(out.dim * out.dim);
  out.m_prime.reserve(out.dim * out.dim);
  for (const auto& e : pair.m.entries()) out.m.push_back(e.template evaluate<T>(availabilities));
  for (const auto& e : pair.m_prime.entries()) out.m_prime.push_back(e.template evaluate<T>(availabilities));
  return out;
}

template <class T>
PassState<T> PassState<T>::initial(const std::vector<Rational>& right) {
  PassState s;
  s.a.reserve(right.size());
  for (const auto& r : right) s.a.push_back(from_rational<T>(r));
  s.v.assign(right.size(), T(0));
  return s;
}

template <class T>
PassState<T> stream_step(const PassState<T>& state, const NumericPair<T>& pair) {
  const std::size_t d = pair.dim;
  if (state.a.size() != d || state.v.size() != d)
    throw DimensionError("pass state has dimension " + std::to_string(state.a.size()) +
                         ", matrix has " + std::to_string(d));
  PassState<T> next;
  next.a.assign(d, T(0));
  next.v.assign(d, T(0));
  next.index = state.index + 1;
  for (std::size_t r = 0; r < d; ++r) {
    T& a = next.a[r];
    T& v = next.v[r];
    for (std::size_t c = 0; c < d; ++c) {
      const T& m = pair.m[r * d + c];
      const T& mp = pair.m_prime[r * d + c];
      if (!is_zero(m)) {
        a += m * state.a[c];
        v += m * state.v[c];
      }
      if (!is_zero(mp)) v += mp * state.a[c];
    }
  }
  return next;
}

template <class T>
PassState<T> stream_step(const PassState<T>& state, const MatrixPair& pair,
                         const ComponentValues& availabilities) {
  const auto dense = availabilities.dense_as<T>();
  for (const auto& e : pair.m.entries())
    for (ComponentId id : e.ids()) (void)availabilities.at(id);
  return stream_step(state, evaluate_pair<T>(pair, std::span<const T>(dense)));
}

template <class T>
ReliabilityReport finish_pass(const PassState<T>& state, const std::vector<Rational>& left,
                              const Affine& affine, const ReportMeta& meta) {
  if (left.size() != state.a.size())
    throw DimensionError("left vector has dimension " + std::to_string(left.size()) +
                         ", pass state has " + std::to_string(state.a.size()));
  T projected_a(0), projected_v(0);
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (sgn(left[i]) == 0) continue;
    const T l = from_rational<T>(left[i]);
    projected_a += l * state.a[i];
    projected_v += l * state.v[i];
  }
  const T sign(affine.sign);
  T availability = from_rational<T>(affine.offset) + sign * projected_a;
  // The operator annihilates the constant offset, so only the sign carries over.
  T frequency = sign * projected_v;
  T rate = is_zero(availability) ? T(0) : T(frequency / availability);

  ReliabilityReport report;
  report.unavailability = to_scalar(T(T(1) - availability));
  report.availability = to_scalar(availability);
  report.frequency = to_scalar(frequency);
  report.rate = to_scalar(rate);
  report.unit = meta.unit;
  report.family = meta.family;
  report.n = meta.n.value_or(state.index);
  return report;
}

}  // namespace relfreq
