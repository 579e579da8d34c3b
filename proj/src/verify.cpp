#include "relfreq/verify.hpp"

#include <random>

#include "relfreq/oracle.hpp"

namespace relfreq {

namespace {

struct Random {
  std::mt19937_64 engine;
  std::size_t integer(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine);
  }
  /// Rational in [0, 1] with small denominators; endpoints occur occasionally.
  Rational availability() {
    const auto roll = integer(0, 19);
    if (roll == 0) return 1;
    if (roll == 1) return 0;
    const auto den = integer(2, 20);
    Rational r(static_cast<unsigned long>(integer(1, den - 1)), static_cast<unsigned long>(den));
    r.canonicalize();
    return r;
  }
  Rational rate() {
    Rational r(static_cast<unsigned long>(integer(0, 30)), static_cast<unsigned long>(integer(1, 10)));
    r.canonicalize();
    return r;
  }
};

ComponentEntry random_component(Random& rng, const std::string& id) {
  ComponentEntry e;
  e.id = id;
  e.p = rng.availability();
  e.lambda = e.p == 1 ? Rational(0) : rng.rate();
  return e;
}

}  // namespace

SystemDescription random_instance(Family family, std::size_t max_components, std::uint64_t& state) {
  Random rng{std::mt19937_64(state)};
  state = rng.engine();
  SystemDescription d;
  d.family = family;
  d.rates = RateConvention::explicit_rates;
  switch (family) {
    case Family::kofn_g:
    case Family::lincon_f: {
      const std::size_t n = rng.integer(1, std::max<std::size_t>(1, max_components));
      d.k = static_cast<int>(rng.integer(1, n));
      d.n = n;
      for (std::size_t i = 0; i < n; ++i) d.components.push_back(random_component(rng, "c" + std::to_string(i + 1)));
      break;
    }
    case Family::ladder: {
      // Cell 0 contributes three fallible members, every further cell five.
      const std::size_t max_n = max_components >= 3 ? (max_components - 3) / 5 : 0;
      const std::size_t n = rng.integer(0, max_n);
      d.n = n;
      d.terminal = rng.integer(0, 1) ? LadderTerminal::t_n : LadderTerminal::s_n;
      for (std::size_t i = 0; i <= n; ++i) {
        for (const char* slot : {"a", "b", "c", "S", "T"}) {
          auto e = random_component(rng, std::string(slot) + std::to_string(i));
          if (i == 0 && slot[0] == 'a') {
            e.p = 1;
            e.lambda = Rational(0);
          }
          if (i == 0 && slot[0] == 'c') e.p = 0;
          d.components.push_back(std::move(e));
        }
      }
      break;
    }
    case Family::custom_matrices:
      throw ValidationError("no random generator for custom matrices");
  }
  return d;
}

std::string compare_with_oracle(const SystemDescription& d, bool corrupt) {
  PreparedSystem prepared = prepare(d);
  if (corrupt) {
    auto& entry = prepared.system.transfer.matrices.front().m(0, 0);
    entry += MultilinearPoly::constant(Rational(1, 7));
  }
  const auto report = evaluate(prepared.system, Mode::exact, prepared.meta);
  const auto& components = prepared.system.components;
  StructureFunction sf = [&] {
    switch (d.family) {
      case Family::kofn_g: return StructureFunction::threshold(static_cast<std::size_t>(*d.k), components.size());
      case Family::lincon_f:
        return StructureFunction::consecutive_failure(static_cast<std::size_t>(*d.k), components.size());
      case Family::ladder: return StructureFunction::ladder(components.size() / 5 - 1, d.terminal);
      case Family::custom_matrices: break;
    }
    throw ValidationError("no oracle structure function for custom matrices");
  }();
  const Rational a = oracle_availability(sf, components);
  const Rational nu = oracle_frequency(sf, components);
  std::string mismatch;
  if (report.availability.rational() != a)
    mismatch += "availability: transfer " + to_rational_string(report.availability.rational()) + " vs oracle " +
                to_rational_string(a) + "; ";
  if (report.frequency.rational() != nu)
    mismatch += "frequency: transfer " + to_rational_string(report.frequency.rational()) + " vs oracle " +
                to_rational_string(nu) + "; ";
  return mismatch;
}

VerifyResult run_verify(const VerifyOptions& options) {
  if (options.max_components < 1 || options.max_components > kOracleEnumerationCap)
    throw ValidationError("--max-components must be in [1, " + std::to_string(kOracleEnumerationCap) + "]");
  VerifyResult result;
  std::uint64_t state = options.seed;
  const Family families[] = {Family::kofn_g, Family::lincon_f, Family::ladder};
  for (std::size_t i = 0; i < options.instances; ++i) {
    const auto d = random_instance(families[i % 3], options.max_components, state);
    const std::string mismatch = compare_with_oracle(d, options.corrupt);
    ++result.checked;
    if (!mismatch.empty()) {
      result.passed = false;
      result.message = "instance " + std::to_string(i) + " (" + std::string(to_string(d.family)) + "): " + mismatch;
      result.counterexample = description_to_json(d).dump(2);
      return result;
    }
  }
  result.message = std::to_string(result.checked) + " instances agree with the oracle";
  return result;
}

}  // namespace relfreq
