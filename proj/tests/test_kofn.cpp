#include <doctest.h>

#include "relfreq/kofn.hpp"
#include "relfreq/oracle.hpp"
#include "test_helpers.hpp"

using namespace relfreq;
using relfreq::testing::q;

namespace {

std::vector<Component> steady_state_line(const std::vector<Rational>& ps) {
  std::vector<Component> out;
  for (std::size_t i = 0; i < ps.size(); ++i) out.push_back(Component::steady_state("c" + std::to_string(i + 1), ps[i]));
  return out;
}

std::vector<Component> random_line(relfreq::testing::RationalSource& src, std::size_t n) {
  std::vector<Component> out;
  for (std::size_t i = 0; i < n; ++i) {
    const long pick = src.integer(0, 9);
    if (pick == 0)
      out.push_back(Component::with_rates("c", 1, 0));
    else if (pick == 1)
      out.push_back(Component::with_rates("c", 0, src.rate()));
    else
      out.push_back(Component::with_rates("c", src.unit_open(), src.rate()));
  }
  return out;
}

ReliabilityReport run(const KofnSpec& spec) { return evaluate(build_kofn(spec), Mode::exact); }

}  // namespace

TEST_CASE("five-out-of-eight with steady-state rates") {
  std::vector<Rational> ps;
  for (int i = 0; i < 8; ++i) ps.push_back(q(90 - i, 100));
  const auto report = evaluate(build_kofn_g({5, steady_state_line(ps), KofnFamily::good}), Mode::exact,
                               {RateUnit::per_mu, "kofn-g", {}});
  CHECK(to_rational_string(report.availability.rational()) == "615925280183/625000000000");
  CHECK(to_rational_string(report.frequency.rational()) == "8012914359/156250000000");
  CHECK(report.rate.to_double() == doctest::Approx(0.0520382).epsilon(1e-6));
  CHECK(report.unit == RateUnit::per_mu);
  CHECK(report.n == 8);
}

TEST_CASE("linear consecutive four-out-of-eleven failure") {
  std::vector<Rational> ps;
  for (int i = 0; i < 11; ++i) ps.push_back(q(70 + 2 * i, 100));
  auto comps = steady_state_line(ps);
  const auto report = evaluate(build_lincon_f({4, comps, KofnFamily::lincon_fail}), Mode::exact);
  CHECK(to_rational_string(report.availability.rational()) == "30105385968617/30517578125000");
  // The decimals 0.050953 and 0.0516505 pin this fraction down.
  CHECK(to_rational_string(report.frequency.rational()) == "155495836041/3051757812500");
  CHECK(report.frequency.to_double() == doctest::Approx(0.050953).epsilon(1e-5));
  CHECK(report.rate.to_double() == doctest::Approx(0.0516505).epsilon(1e-6));

  SUBCASE("reversing the line leaves the result unchanged") {
    std::reverse(comps.begin(), comps.end());
    const auto reversed = evaluate(build_lincon_f({4, comps, KofnFamily::lincon_fail}), Mode::exact);
    CHECK(reversed.availability == report.availability);
    CHECK(reversed.frequency == report.frequency);
  }
}

TEST_CASE("series reductions") {
  const std::vector<Component> comps{Component::with_rates("a", q(1, 2), 1), Component::with_rates("b", q(2, 3), 2),
                                     Component::with_rates("c", q(3, 4), q(1, 3))};
  const Rational product = q(1, 4);
  const Rational total_rate = 1 + 2 + q(1, 3);

  const auto g = run({3, comps, KofnFamily::good});
  CHECK(g.availability.rational() == product);
  CHECK(g.frequency.rational() == total_rate * product);

  const auto f = run({1, comps, KofnFamily::lincon_fail});
  CHECK(f.availability.rational() == product);
  CHECK(f.frequency.rational() == total_rate * product);

  const auto nn = run({3, comps, KofnFamily::lincon_fail});
  CHECK(nn.availability.rational() == 1 - q(1, 2) * q(1, 3) * q(1, 4));
}

TEST_CASE("parallel system") {
  const std::vector<Component> comps{Component::with_rates("a", q(1, 2), 3), Component::with_rates("b", q(1, 5), 1),
                                     Component::with_rates("c", q(7, 9), q(2, 5))};
  const auto r = run({1, comps, KofnFamily::good});
  CHECK(r.availability.rational() == 1 - q(1, 2) * q(4, 5) * q(2, 9));
  CHECK(r.frequency.rational() == oracle_frequency(StructureFunction::threshold(1, 3), comps));
}

TEST_CASE("random k-out-of-n and consecutive systems agree with enumeration") {
  relfreq::testing::RationalSource src(31);
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      const auto comps = random_line(src, n);
      const auto g = run({static_cast<int>(k), comps, KofnFamily::good});
      const auto sf_g = StructureFunction::threshold(k, n);
      CHECK(g.availability.rational() == oracle_availability(sf_g, comps));
      CHECK(g.frequency.rational() == oracle_frequency(sf_g, comps));

      const auto f = run({static_cast<int>(k), comps, KofnFamily::lincon_fail});
      const auto sf_f = StructureFunction::consecutive_failure(k, n);
      CHECK(f.availability.rational() == oracle_availability(sf_f, comps));
      CHECK(f.frequency.rational() == oracle_frequency(sf_f, comps));
    }
}

TEST_CASE("monotonicity in k") {
  relfreq::testing::RationalSource src(37);
  for (int trial = 0; trial < 5; ++trial) {
    const auto comps = random_line(src, 7);
    Rational prev_g = 2, prev_f = -1;
    for (int k = 1; k <= 7; ++k) {
      const Rational g = run({k, comps, KofnFamily::good}).availability.rational();
      const Rational f = run({k, comps, KofnFamily::lincon_fail}).availability.rational();
      CHECK(g <= prev_g);
      CHECK(f >= prev_f);
      prev_g = g;
      prev_f = f;
    }
  }
}

TEST_CASE("an absent component's rate never reaches the output") {
  relfreq::testing::RationalSource src(41);
  for (int trial = 0; trial < 10; ++trial) {
    auto comps = random_line(src, 6);
    comps[2] = Component::with_rates("absent", 0, 1);
    for (auto family : {KofnFamily::good, KofnFamily::lincon_fail}) {
      const auto base = run({3, comps, family});
      auto changed = comps;
      changed[2].lambda = 1000;
      const auto other = run({3, changed, family});
      CHECK(base.frequency == other.frequency);
      CHECK(base.availability == other.availability);
    }
  }
}

TEST_CASE("identical components") {
  SUBCASE("closed form matches the transfer pass") {
    for (int n = 1; n <= 9; ++n)
      for (int k = 1; k <= n; ++k)
        for (const Rational& p : {q(0), q(1, 3), q(9, 10), q(1)}) {
          const Rational lambda = p == 1 ? q(0) : q(5, 2);
          std::vector<Component> comps(n, Component::with_rates("c", p, lambda));
          const auto direct = kofn_g_identical(k, n, p, lambda, Mode::exact);
          const auto pass = run({k, comps, KofnFamily::good});
          CHECK(direct.availability == pass.availability);
          CHECK(direct.frequency == pass.frequency);
        }
  }
  SUBCASE("one-out-of-two") {
    const Rational p = q(2, 7), lambda = q(3);
    const auto r = kofn_g_identical(1, 2, p, lambda, Mode::exact);
    CHECK(r.availability.rational() == 1 - (1 - p) * (1 - p));
    CHECK(r.frequency.rational() == 2 * lambda * p * (1 - p));
  }
  SUBCASE("series") {
    const auto r = kofn_g_identical(4, 4, q(1, 2), q(3), Mode::exact);
    CHECK(r.frequency.rational() == 4 * q(3) * q(1, 16));
  }
  SUBCASE("Example 7.2 size at p = 0.9") {
    std::vector<Component> comps(8, Component::with_rates("c", q(9, 10), 1));
    const auto a = kofn_g_identical(5, 8, q(9, 10), 1, Mode::exact);
    const auto b = run({5, comps, KofnFamily::good});
    CHECK(a.availability == b.availability);
    CHECK(a.frequency == b.frequency);
  }
  SUBCASE("approximate mode") {
    const auto a = kofn_g_identical(5, 8, q(9, 10), 1, Mode::approx);
    const auto e = kofn_g_identical(5, 8, q(9, 10), 1, Mode::exact);
    CHECK(a.availability.to_double() == doctest::Approx(e.availability.to_double()).epsilon(1e-12));
    CHECK(a.frequency.to_double() == doctest::Approx(e.frequency.to_double()).epsilon(1e-12));
  }
}

TEST_CASE("exact and approximate modes agree on the built-in examples") {
  std::vector<Rational> ps;
  for (int i = 0; i < 8; ++i) ps.push_back(q(90 - i, 100));
  const auto system = build_kofn_g({5, steady_state_line(ps), KofnFamily::good});
  const auto e = evaluate(system, Mode::exact);
  const auto a = evaluate(system, Mode::approx);
  CHECK(relfreq::testing::close(e.availability.to_double(), a.availability.to_double(), 1e-9));
  CHECK(relfreq::testing::close(e.frequency.to_double(), a.frequency.to_double(), 1e-9));
  CHECK(relfreq::testing::close(e.rate.to_double(), a.rate.to_double(), 1e-9));
}

TEST_CASE("validation") {
  const std::vector<Component> comps(3, Component::with_rates("c", q(1, 2), 1));
  CHECK_THROWS_AS(build_kofn_g({0, comps, KofnFamily::good}), ValidationError);
  CHECK_THROWS_AS(build_kofn_g({4, comps, KofnFamily::good}), ValidationError);
  CHECK_THROWS_AS(build_lincon_f({4, comps, KofnFamily::lincon_fail}), ValidationError);
  CHECK_THROWS_AS(build_kofn_g({1, {}, KofnFamily::good}), ValidationError);
  CHECK_THROWS_AS(kofn_g_identical(2, 3, q(3, 2), 1, Mode::exact), ValidationError);
  CHECK(binomial(8, 5) == 56);
}
