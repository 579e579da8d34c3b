#include "relfreq/ladder.hpp"

#include <cmath>

namespace relfreq {

LadderTerminal parse_terminal(std::string_view text) {
  if (text == "Sn" || text == "S") return LadderTerminal::s_n;
  if (text == "Tn" || text == "T") return LadderTerminal::t_n;
  throw ParseError("unknown ladder terminal '" + std::string(text) + "' (expected Sn|Tn)");
}

std::string_view to_string(LadderTerminal terminal) { return terminal == LadderTerminal::s_n ? "Sn" : "Tn"; }

void LadderSpec::validate() const {
  if (cells.empty()) throw ValidationError("ladder needs at least cell 0");
  const auto& first = cells.front();
  if (first.a.p != 1 || sgn(first.a.lambda) != 0)
    throw ValidationError("ladder cell 0: edge a must be perfect (p = 1, lambda = 0)");
  if (sgn(first.c.p) != 0) throw ValidationError("ladder cell 0: edge c must be absent (p = 0)");
  for (const auto& cell : cells)
    for (const Component* m : {&cell.a, &cell.b, &cell.c, &cell.S, &cell.T}) m->validate();
}

PolyMatrix ladder_cell_matrix(ComponentId a, ComponentId b, ComponentId c, ComponentId S, ComponentId T) {
  using P = MultilinearPoly;
  const P aS = P::monomial({a, S});
  const P bcST = P::monomial({b, c, S, T});
  const P abcST = P::monomial({a, b, c, S, T});
  const P abST = P::monomial({a, b, S, T});
  PolyMatrix m(3);
  m(0, 0) = aS;
  m(0, 1) = bcST;
  m(0, 2) = abcST;
  m(1, 0) = abST;
  m(1, 1) = P::monomial({c, T});
  m(1, 2) = abcST;
  m(2, 0) = -abST;
  m(2, 1) = -bcST;
  m(2, 2) = P::monomial({a, c, S, T}) - abcST * Rational(2);
  return m;
}

namespace {

std::vector<Rational> terminal_vector(LadderTerminal terminal) {
  return terminal == LadderTerminal::s_n ? std::vector<Rational>{1, 0, 0} : std::vector<Rational>{0, 1, 0};
}

}  // namespace

ComponentSystem build_ladder(const LadderSpec& spec) {
  spec.validate();
  ComponentSystem out;
  out.components.reserve(5 * spec.cells.size());
  for (const auto& cell : spec.cells)
    for (const Component* m : {&cell.a, &cell.b, &cell.c, &cell.S, &cell.T}) out.components.push_back(*m);

  const ComponentValues rates = failure_rates_of(out.components);
  auto& sys = out.transfer;
  sys.left = terminal_vector(spec.terminal);
  sys.right = {1, 0, 0};
  sys.matrices.reserve(spec.cells.size());
  for (std::size_t i = 0; i < spec.cells.size(); ++i) {
    sys.matrices.push_back(MatrixPair::derive(
        ladder_cell_matrix(ladder_id(i, LadderSlot::a), ladder_id(i, LadderSlot::b), ladder_id(i, LadderSlot::c),
                           ladder_id(i, LadderSlot::S), ladder_id(i, LadderSlot::T)),
        rates));
  }
  return out;
}

void LadderIdenticalParams::validate() const {
  if (sgn(p) < 0 || p > 1) throw ValidationError("edge availability p outside [0,1]");
  if (sgn(rho) < 0 || rho > 1) throw ValidationError("node availability rho outside [0,1]");
  if (sgn(lambda) < 0) throw ValidationError("negative edge failure rate");
  if (sgn(xi) < 0) throw ValidationError("negative node failure rate");
}

namespace {

Rational effective_rate(const Rational& availability, const Rational& rate) {
  return availability == 1 ? Rational(0) : rate;
}

LadderCell identical_cell(const LadderIdenticalParams& params, std::size_t index) {
  const Rational lambda = effective_rate(params.p, params.lambda);
  const Rational xi = effective_rate(params.rho, params.xi);
  const std::string suffix = std::to_string(index);
  LadderCell cell{
      Component{"a" + suffix, params.p, lambda, 0}, Component{"b" + suffix, params.p, lambda, 0},
      Component{"c" + suffix, params.p, lambda, 0}, Component{"S" + suffix, params.rho, xi, 0},
      Component{"T" + suffix, params.rho, xi, 0}};
  if (index == 0) {
    cell.a = Component{"a0", 1, 0, 0};
    cell.c = Component{"c0", 0, lambda, 0};
  }
  return cell;
}

}  // namespace

LadderSpec identical_ladder_spec(const LadderIdenticalParams& params, LadderTerminal terminal) {
  params.validate();
  LadderSpec spec;
  spec.terminal = terminal;
  spec.cells.reserve(params.n + 1);
  for (std::size_t i = 0; i <= params.n; ++i) spec.cells.push_back(identical_cell(params, i));
  return spec;
}

namespace {

/// (x^m - y^m) / (x - y), with the limit m x^(m-1) when x == y.
template <class T>
T divided_power(const T& x, const T& y, std::size_t m) {
  if (x == y) {
    if (m == 0) return T(0);
    T r = from_rational<T>(Rational(static_cast<unsigned long>(m)));
    for (std::size_t i = 1; i < m; ++i) r *= x;
    return r;
  }
  T xm(1), ym(1);
  for (std::size_t i = 0; i < m; ++i) {
    xm *= x;
    ym *= y;
  }
  return T((xm - ym) / (x - y));
}

template <class T>
T pow_n(const T& x, std::size_t m) {
  T r(1);
  for (std::size_t i = 0; i < m; ++i) r *= x;
  return r;
}

template <class T>
LadderAvailability closed_form(const T& p, const T& rho, const T& sqrt_b, std::size_t n) {
  const T pr = p * rho;
  const T zeta0 = pr * (T(1) - pr);
  const T base = T(1) + T(2) * p * (T(1) - p) * rho;
  const T zeta_plus = pr / T(2) * (base + sqrt_b);
  const T zeta_minus = pr / T(2) * (base - sqrt_b);
  const T common = pr * (T(1) + pr) * divided_power(zeta_plus, zeta_minus, n + 1) -
                   (T(1) - T(2) * p + pr) * pr * pr * pr * divided_power(zeta_plus, zeta_minus, n);
  const T z = pow_n(zeta0, n + 1);
  const T half_inv_p = T(1) / (T(2) * p);
  return LadderAvailability{to_scalar(T((z + common) * half_inv_p)), to_scalar(T((common - z) * half_inv_p))};
}

LadderAvailability via_pass(const LadderIdenticalParams& params, Mode mode) {
  auto s = ladder_frequency(params, LadderTerminal::s_n, mode);
  auto t = ladder_frequency(params, LadderTerminal::t_n, mode);
  return LadderAvailability{s.availability, t.availability};
}

bool rational_sqrt(const Rational& x, Rational& root) {
  if (sgn(x) < 0) return false;
  if (!mpz_perfect_square_p(x.get_num().get_mpz_t()) || !mpz_perfect_square_p(x.get_den().get_mpz_t()))
    return false;
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), x.get_num().get_mpz_t());
  mpz_sqrt(den.get_mpz_t(), x.get_den().get_mpz_t());
  root = Rational(num, den);
  root.canonicalize();
  return true;
}

}  // namespace

LadderAvailability ladder_closed_form(const LadderIdenticalParams& params, Mode mode) {
  params.validate();
  if (sgn(params.p) == 0) return via_pass(params, mode);
  const Rational& p = params.p;
  const Rational& rho = params.rho;
  const Rational discriminant = 1 + 4 * p * p * rho - 8 * p * p * p * rho * rho + 4 * p * p * p * p * rho * rho;
  if (mode == Mode::exact) {
    Rational root;
    if (!rational_sqrt(discriminant, root)) return via_pass(params, mode);
    return closed_form<Rational>(p, rho, root, params.n);
  }
  return closed_form<double>(p.get_d(), rho.get_d(), std::sqrt(discriminant.get_d()), params.n);
}

namespace {

template <class T>
ReliabilityReport stream_identical(const LadderIdenticalParams& params, LadderTerminal terminal) {
  const LadderCell first = identical_cell(params, 0);
  const LadderCell generic = identical_cell(params, 1);
  auto numeric = [](const LadderCell& cell) {
    const std::vector<Rational> p{cell.a.p, cell.b.p, cell.c.p, cell.S.p, cell.T.p};
    const ComponentValues rates(std::vector<Rational>{cell.a.lambda, cell.b.lambda, cell.c.lambda,
                                                      cell.S.lambda, cell.T.lambda});
    const auto pair = MatrixPair::derive(
        ladder_cell_matrix(ComponentId{0}, ComponentId{1}, ComponentId{2}, ComponentId{3}, ComponentId{4}),
        rates);
    std::vector<T> values;
    for (const auto& v : p) values.push_back(from_rational<T>(v));
    return evaluate_pair<T>(pair, std::span<const T>(values));
  };
  const NumericPair<T> first_pair = numeric(first);
  const NumericPair<T> cell_pair = numeric(generic);

  auto state = PassState<T>::initial({1, 0, 0});
  state = stream_step(state, first_pair);
  for (std::size_t i = 1; i <= params.n; ++i) state = stream_step(state, cell_pair);
  ReportMeta meta;
  meta.family = "ladder";
  meta.n = params.n;
  return finish_pass(state, terminal_vector(terminal), Affine{}, meta);
}

}  // namespace

ReliabilityReport ladder_frequency(const LadderIdenticalParams& params, LadderTerminal terminal, Mode mode) {
  params.validate();
  return mode == Mode::exact ? stream_identical<Rational>(params, terminal)
                             : stream_identical<double>(params, terminal);
}

}  // namespace relfreq
