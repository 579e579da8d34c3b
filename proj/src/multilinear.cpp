#include "relfreq/multilinear.hpp"

#include <algorithm>
#include <sstream>

namespace relfreq {

MultilinearPoly MultilinearPoly::constant(const Rational& c) {
  MultilinearPoly p;
  p.add_term({}, c);
  return p;
}

MultilinearPoly MultilinearPoly::variable(ComponentId id) {
  MultilinearPoly p;
  p.add_term({id}, 1);
  return p;
}

MultilinearPoly MultilinearPoly::complement(ComponentId id) {
  MultilinearPoly p;
  p.add_term({}, 1);
  p.add_term({id}, -1);
  return p;
}

MultilinearPoly MultilinearPoly::monomial(Monomial ids, const Rational& coefficient) {
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw ValidationError("monomial repeats a component id");
  MultilinearPoly p;
  p.add_term(ids, coefficient);
  return p;
}

std::vector<ComponentId> MultilinearPoly::ids() const {
  std::vector<ComponentId> out;
  for (const auto& [mono, coeff] : terms_) out.insert(out.end(), mono.begin(), mono.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void MultilinearPoly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational MultilinearPoly::evaluate_with(std::span<const Rational> values, ComponentId id,
                                        const Rational& fixed) const {
  Rational sum(0);
  for (const auto& [mono, coeff] : terms_) {
    Rational term = coeff;
    for (ComponentId v : mono) term *= v == id ? fixed : values[v.value];
    sum += term;
  }
  return sum;
}

MultilinearPoly& MultilinearPoly::operator+=(const MultilinearPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultilinearPoly& MultilinearPoly::operator-=(const MultilinearPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultilinearPoly& MultilinearPoly::operator*=(const Rational& factor) {
  if (sgn(factor) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= factor;
  return *this;
}

MultilinearPoly operator*(const MultilinearPoly& a, const MultilinearPoly& b) {
  MultilinearPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      MultilinearPoly::Monomial merged;
      merged.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(merged));
      if (std::adjacent_find(merged.begin(), merged.end()) != merged.end())
        throw ValidationError("product of multilinear polynomials sharing a variable is not multilinear");
      out.add_term(merged, ca * cb);
    }
  }
  return out;
}

std::string MultilinearPoly::to_string(const std::vector<std::string>& labels) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    Rational mag = abs(coeff);
    if (first) {
      if (sgn(coeff) < 0) os << "-";
    } else {
      os << (sgn(coeff) < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || mono.empty()) {
      os << mag.get_str();
      wrote = true;
    }
    for (ComponentId id : mono) {
      if (wrote) os << "*";
      if (id.value < labels.size())
        os << labels[id.value];
      else
        os << "p" << id.value;
      wrote = true;
    }
  }
  return os.str();
}

MultilinearPoly apply_rate_operator(const MultilinearPoly& poly, const ComponentValues& rates) {
  MultilinearPoly out;
  for (const auto& [mono, coeff] : poly.terms()) {
    Rational total(0);
    for (ComponentId id : mono) total += rates.at(id);
    out += MultilinearPoly::monomial(mono, coeff * total);
  }
  return out;
}

}  // namespace relfreq
