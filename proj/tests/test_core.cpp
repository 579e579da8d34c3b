#include <doctest.h>

#include "relfreq/multilinear.hpp"
#include "relfreq/scalar.hpp"
#include "relfreq/transfer.hpp"
#include "test_helpers.hpp"

using namespace relfreq;
using relfreq::testing::q;

namespace {

ComponentId id(std::uint32_t v) { return ComponentId{v}; }

MultilinearPoly var(std::uint32_t v) { return MultilinearPoly::variable(id(v)); }

}  // namespace

TEST_CASE("parse_rational accepts fractions, integers and decimals") {
  CHECK(parse_rational("3/4") == q(3, 4));
  CHECK(parse_rational("6/8") == q(3, 4));
  CHECK(parse_rational("-2/6") == q(-1, 3));
  CHECK(parse_rational("0.83") == q(83, 100));
  CHECK(parse_rational(".5") == q(1, 2));
  CHECK(parse_rational("1e-8") == q(1, 100000000));
  CHECK(parse_rational("2.5E+2") == q(250));
  CHECK(parse_rational(" 7 ") == q(7));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
}

TEST_CASE("rational and decimal rendering") {
  CHECK(to_rational_string(q(1)) == "1/1");
  CHECK(to_rational_string(q(-6, 8)) == "-3/4");
  CHECK(to_decimal_string(q(1, 3), 5) == "0.33333");
  CHECK(to_decimal_string(q(2, 3), 5) == "0.66667");
  CHECK(to_decimal_string(q(-1, 8), 2) == "-0.13");
  CHECK(to_decimal_string(q(12), 0) == "12");

  relfreq::testing::RationalSource src(7);
  for (int i = 0; i < 200; ++i) {
    const Rational r = src.signed_coefficient() * src.unit_open();
    CHECK(parse_rational(to_rational_string(r)) == r);
  }
}

TEST_CASE("rate operator on the textbook matrix element") {
  // p1 + p2 p3 - p1 p2 p3
  const MultilinearPoly element = var(1) + var(2) * var(3) - var(1) * var(2) * var(3);
  ComponentValues rates;
  const Rational l1 = q(1, 2), l2 = q(3), l3 = q(5, 7);
  rates.set(id(1), l1);
  rates.set(id(2), l2);
  rates.set(id(3), l3);

  const MultilinearPoly expected = var(1) * l1 + var(2) * var(3) * (l2 + l3) -
                                   var(1) * var(2) * var(3) * Rational(l1 + l2 + l3);
  CHECK(apply_rate_operator(element, rates) == expected);
}

TEST_CASE("rate operator trivial cases and errors") {
  ComponentValues rates;
  rates.set(id(0), 0);
  CHECK(apply_rate_operator(MultilinearPoly::constant(1), rates).is_zero());
  CHECK(apply_rate_operator(var(0), rates).is_zero());
  try {
    (void)apply_rate_operator(var(4), rates);
    FAIL("expected an error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("4") != std::string::npos);
  }
}

TEST_CASE("multilinear products reject repeated variables") {
  CHECK_THROWS_AS(var(1) * var(1), ValidationError);
  CHECK_THROWS_AS(MultilinearPoly::monomial({id(2), id(2)}), ValidationError);
  CHECK((var(1) - var(1)).is_zero());
}

TEST_CASE("multilinear evaluation at Boolean vertices") {
  // Two-out-of-three in multilinear form.
  const MultilinearPoly two_of_three = var(0) * var(1) + var(0) * var(2) + var(1) * var(2) -
                                       var(0) * var(1) * var(2) * Rational(2);
  for (unsigned x = 0; x < 8; ++x) {
    std::vector<Rational> v{x & 1u, (x >> 1) & 1u, (x >> 2) & 1u};
    const int ups = static_cast<int>((x & 1u) + ((x >> 1) & 1u) + ((x >> 2) & 1u));
    CHECK(two_of_three.evaluate<Rational>(v) == (ups >= 2 ? 1 : 0));
  }
}

TEST_CASE("rate operator is linear") {
  relfreq::testing::RationalSource src(11);
  ComponentValues rates;
  for (std::uint32_t i = 0; i < 4; ++i) rates.set(id(i), src.rate());
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = src.poly(0, 4), g = src.poly(0, 4);
    const Rational a = src.signed_coefficient(), b = src.signed_coefficient();
    CHECK(apply_rate_operator(f * a + g * b, rates) ==
          apply_rate_operator(f, rates) * a + apply_rate_operator(g, rates) * b);
  }
}

TEST_CASE("product rule at matrix level") {
  relfreq::testing::RationalSource src(13);
  ComponentValues rates;
  for (std::uint32_t i = 0; i < 6; ++i) rates.set(id(i), src.rate());
  for (int trial = 0; trial < 10; ++trial) {
    PolyMatrix m(2), n(2);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) {
        m(r, c) = src.poly(0, 3);
        n(r, c) = src.poly(3, 3);
      }
    const auto lhs = apply_rate_operator(m * n, rates);
    const auto rhs = apply_rate_operator(m, rates) * n + m * apply_rate_operator(n, rates);
    CHECK(lhs == rhs);
  }
}

namespace {

TransferSystem single_component(const Rational& lambda) {
  ComponentValues rates;
  rates.set(id(0), lambda);
  PolyMatrix m(1);
  m(0, 0) = var(0);
  TransferSystem sys;
  sys.left = {1};
  sys.right = {1};
  sys.matrices.push_back(MatrixPair::derive(m, rates));
  return sys;
}

/// Three components; matrix k is a random affine function of component k.
TransferSystem random_three_component_system(relfreq::testing::RationalSource& src, const ComponentValues& rates) {
  TransferSystem sys;
  const std::size_t d = 2;
  sys.left = {src.signed_coefficient(), src.signed_coefficient()};
  sys.right = {src.signed_coefficient(), src.signed_coefficient()};
  for (std::uint32_t k = 0; k < 3; ++k) {
    PolyMatrix m(d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) m(r, c) = src.poly(k, 1);
    sys.matrices.push_back(MatrixPair::derive(m, rates));
  }
  return sys;
}

}  // namespace

TEST_CASE("single component: A = p and nu = lambda p") {
  const auto sys = single_component(q(3, 2));
  ComponentValues p;
  p.set(id(0), q(9, 10));
  const auto report = single_pass(sys, p, Mode::exact);
  CHECK(report.availability.rational() == q(9, 10));
  CHECK(report.frequency.rational() == q(27, 20));
  CHECK(report.unavailability.rational() == q(1, 10));
  CHECK(report.rate.rational() == q(3, 2));
}

TEST_CASE("random three-component systems match multilinear interpolation of vertex values") {
  // Independent route: A is multilinear in (p1,p2,p3), so A(p) follows from
  // its 8 vertex values and nu = sum_i lambda_i p_i (A|p_i=1 - A|p_i=0).
  relfreq::testing::RationalSource src(17);
  for (int trial = 0; trial < 25; ++trial) {
    ComponentValues rates;
    std::vector<Rational> lambda(3), p(3);
    for (std::uint32_t i = 0; i < 3; ++i) {
      lambda[i] = src.rate();
      p[i] = src.unit_open();
      rates.set(id(i), lambda[i]);
    }
    const auto sys = random_three_component_system(src, rates);

    std::vector<Rational> vertex(8);
    for (unsigned x = 0; x < 8; ++x)
      vertex[x] = single_pass(sys, ComponentValues({x & 1u, (x >> 1) & 1u, (x >> 2) & 1u}), Mode::exact)
                      .availability.rational();

    const Rational a = relfreq::testing::interpolate(vertex, p);
    Rational nu(0);
    for (std::size_t i = 0; i < 3; ++i) {
      auto hi = p, lo = p;
      hi[i] = 1;
      lo[i] = 0;
      nu += lambda[i] * p[i] *
            (relfreq::testing::interpolate(vertex, hi) - relfreq::testing::interpolate(vertex, lo));
    }
    const auto report = single_pass(sys, ComponentValues(p), Mode::exact);
    CHECK(report.availability.rational() == a);
    CHECK(report.frequency.rational() == nu);
  }
}

TEST_CASE("stream_step") {
  relfreq::testing::RationalSource src(19);
  ComponentValues rates;
  for (std::uint32_t i = 0; i < 3; ++i) rates.set(id(i), src.rate());
  const auto sys = random_three_component_system(src, rates);
  const ComponentValues p({q(1, 2), q(2, 3), q(3, 4)});

  SUBCASE("one step from the initial state applies M and M' to the right vector") {
    const auto s0 = PassState<Rational>::initial(sys.right);
    CHECK(s0.index == 0);
    const auto s1 = stream_step(s0, sys.matrices[0], p);
    const auto numeric = evaluate_pair<Rational>(sys.matrices[0], std::span<const Rational>(p.dense_as<Rational>()));
    for (std::size_t r = 0; r < 2; ++r) {
      Rational a(0), v(0);
      for (std::size_t c = 0; c < 2; ++c) {
        a += numeric.m[r * 2 + c] * sys.right[c];
        v += numeric.m_prime[r * 2 + c] * sys.right[c];
      }
      CHECK(s1.a[r] == a);
      CHECK(s1.v[r] == v);
    }
    CHECK(s1.index == 1);
  }

  SUBCASE("folding every matrix reproduces single_pass") {
    auto s = PassState<Rational>::initial(sys.right);
    for (const auto& pair : sys.matrices) s = stream_step(s, pair, p);
    const auto streamed = finish_pass(s, sys.left, sys.affine, {});
    const auto direct = single_pass(sys, p, Mode::exact);
    CHECK(streamed.availability == direct.availability);
    CHECK(streamed.frequency == direct.frequency);
  }

  SUBCASE("zero pair annihilates") {
    const MatrixPair zero{PolyMatrix(2), PolyMatrix(2)};
    const auto s = stream_step(PassState<Rational>::initial(sys.right), zero, p);
    for (std::size_t r = 0; r < 2; ++r) {
      CHECK(sgn(s.a[r]) == 0);
      CHECK(sgn(s.v[r]) == 0);
    }
  }

  SUBCASE("dimension mismatch") {
    const auto s = PassState<Rational>::initial({1, 1, 1});
    CHECK_THROWS_AS(stream_step(s, sys.matrices[0], p), DimensionError);
  }
}

TEST_CASE("rate scaling and zero rates") {
  relfreq::testing::RationalSource src(23);
  ComponentValues rates, scaled, zero;
  const Rational c = q(7, 3);
  for (std::uint32_t i = 0; i < 3; ++i) {
    const Rational r = src.rate();
    rates.set(id(i), r);
    scaled.set(id(i), r * c);
    zero.set(id(i), 0);
  }
  const ComponentValues p({q(1, 3), q(4, 5), q(5, 7)});
  for (int trial = 0; trial < 10; ++trial) {
    const auto sys = random_three_component_system(src, rates);
    const auto base = single_pass(sys, p, Mode::exact);
    const auto more = single_pass(with_rates(sys, scaled), p, Mode::exact);
    CHECK(more.availability == base.availability);
    CHECK(more.frequency.rational() == c * base.frequency.rational());
    CHECK(sgn(single_pass(with_rates(sys, zero), p, Mode::exact).frequency.rational()) == 0);
  }
}

TEST_CASE("approximate mode tracks exact mode") {
  relfreq::testing::RationalSource src(29);
  ComponentValues rates;
  for (std::uint32_t i = 0; i < 3; ++i) rates.set(id(i), src.rate());
  const ComponentValues p({q(1, 3), q(4, 5), q(5, 7)});
  for (int trial = 0; trial < 10; ++trial) {
    const auto sys = random_three_component_system(src, rates);
    const auto exact = single_pass(sys, p, Mode::exact);
    const auto approx = single_pass(sys, p, Mode::approx);
    CHECK_FALSE(approx.availability.is_exact());
    CHECK(relfreq::testing::close(exact.availability.to_double(), approx.availability.to_double(), 1e-9, 1e-12));
    CHECK(relfreq::testing::close(exact.frequency.to_double(), approx.frequency.to_double(), 1e-9, 1e-12));
  }
}

TEST_CASE("single_pass validation") {
  auto sys = single_component(1);
  SUBCASE("availability out of range") {
    ComponentValues p;
    p.set(id(0), q(3, 2));
    CHECK_THROWS_AS(single_pass(sys, p, Mode::exact), ValidationError);
  }
  SUBCASE("missing availability") { CHECK_THROWS_AS(single_pass(sys, ComponentValues(), Mode::exact), ValidationError); }
  SUBCASE("dimension mismatch") {
    sys.left = {1, 0};
    CHECK_THROWS_AS(single_pass(sys, ComponentValues({q(1, 2)}), Mode::exact), DimensionError);
  }
}

TEST_CASE("affine form carries the sign into the frequency") {
  // 1 - (1 - p): availability p, frequency lambda p.
  ComponentValues rates;
  rates.set(id(0), q(2));
  PolyMatrix m(1);
  m(0, 0) = MultilinearPoly::complement(id(0));
  TransferSystem sys;
  sys.left = {1};
  sys.right = {1};
  sys.affine = Affine{1, -1};
  sys.matrices.push_back(MatrixPair::derive(m, rates));
  const auto report = single_pass(sys, ComponentValues({q(3, 4)}), Mode::exact);
  CHECK(report.availability.rational() == q(3, 4));
  CHECK(report.frequency.rational() == q(3, 2));
}

TEST_CASE("components") {
  const auto c = Component::steady_state("x", q(9, 10));
  CHECK(c.lambda * c.p == c.mu * c.q());
  CHECK(Component::steady_state("y", 1).lambda == 0);
  CHECK_THROWS_AS(Component::steady_state("z", 0), ValidationError);
  CHECK_THROWS_AS(Component::with_rates("w", 1, 1), ValidationError);
  CHECK_THROWS_AS(Component::with_rates("w", q(-1, 2), 0), ValidationError);
  CHECK_THROWS_AS(Component::with_rates("w", q(1, 2), -1), ValidationError);
}
