#include "relfreq/component.hpp"

namespace relfreq {

Component Component::with_rates(std::string label, Rational p, Rational lambda, Rational mu) {
  Component c{std::move(label), std::move(p), std::move(lambda), std::move(mu)};
  c.validate();
  return c;
}

Component Component::steady_state(std::string label, Rational p, Rational mu) {
  if (sgn(p) <= 0)
    throw ValidationError("component '" + label + "': steady-state rates need p > 0");
  Rational lambda = mu * (1 - p) / p;
  Component c{std::move(label), std::move(p), std::move(lambda), std::move(mu)};
  c.validate();
  return c;
}

void Component::validate() const {
  const std::string who = "component '" + label + "': ";
  if (sgn(p) < 0 || p > 1) throw ValidationError(who + "availability outside [0,1]");
  if (sgn(lambda) < 0) throw ValidationError(who + "negative failure rate");
  if (sgn(mu) < 0) throw ValidationError(who + "negative repair rate");
  if (p == 1 && sgn(lambda) != 0)
    throw ValidationError(who + "a perfect component (p = 1) must have zero failure rate");
}

ComponentValues::ComponentValues(std::vector<Rational> dense)
    : values_(std::move(dense)), present_(values_.size(), true) {}

void ComponentValues::set(ComponentId id, Rational value) {
  if (id.value >= values_.size()) {
    values_.resize(id.value + 1);
    present_.resize(id.value + 1, false);
  }
  values_[id.value] = std::move(value);
  present_[id.value] = true;
}

bool ComponentValues::contains(ComponentId id) const {
  return id.value < present_.size() && present_[id.value];
}

const Rational& ComponentValues::at(ComponentId id) const {
  if (!contains(id))
    throw ValidationError("no value supplied for component id " + std::to_string(id.value));
  return values_[id.value];
}

ComponentValues availabilities_of(const std::vector<Component>& components) {
  std::vector<Rational> dense;
  dense.reserve(components.size());
  for (const auto& c : components) dense.push_back(c.p);
  return ComponentValues(std::move(dense));
}

ComponentValues failure_rates_of(const std::vector<Component>& components) {
  std::vector<Rational> dense;
  dense.reserve(components.size());
  for (const auto& c : components) dense.push_back(c.lambda);
  return ComponentValues(std::move(dense));
}

}  // namespace relfreq
