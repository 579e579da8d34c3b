#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "relfreq/scalar.hpp"

namespace relfreq {

/// Index of a component inside one system. Builders number components
/// densely from zero in construction order.
struct ComponentId {
  std::uint32_t value = 0;
  friend auto operator<=>(ComponentId, ComponentId) = default;
};

/// One repairable element with steady-state availability p, failure rate
/// lambda and repair rate mu.
struct Component {
  std::string label;
  Rational p{1};
  Rational lambda{0};
  Rational mu{0};

  Rational q() const { return 1 - p; }

  static Component with_rates(std::string label, Rational p, Rational lambda, Rational mu = 0);

  /// Rates satisfying lambda * p = mu * (1 - p); requires p > 0.
  static Component steady_state(std::string label, Rational p, Rational mu = 1);

  /// Range checks, plus the rule that a perfect component (p = 1) cannot fail.
  void validate() const;
};

/// Per-component values (availabilities or rates) keyed by ComponentId.
class ComponentValues {
 public:
  ComponentValues() = default;
  explicit ComponentValues(std::vector<Rational> dense);

  void set(ComponentId id, Rational value);
  bool contains(ComponentId id) const;
  /// Throws ValidationError naming the id when absent.
  const Rational& at(ComponentId id) const;
  std::size_t extent() const { return values_.size(); }

  template <class T>
  std::vector<T> dense_as() const;

 private:
  std::vector<Rational> values_;
  std::vector<bool> present_;
};

ComponentValues availabilities_of(const std::vector<Component>& components);
ComponentValues failure_rates_of(const std::vector<Component>& components);

template <class T>
std::vector<T> ComponentValues::dense_as() const {
  std::vector<T> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(from_rational<T>(v));
  return out;
}

}  // namespace relfreq

template <>
struct std::hash<relfreq::ComponentId> {
  std::size_t operator()(relfreq::ComponentId id) const noexcept { return id.value; }
};
