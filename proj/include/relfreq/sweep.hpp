#pragma once

#include <string>
#include <vector>

#include "relfreq/description.hpp"

namespace relfreq {

enum class SweepParameter { p, rho, n };

SweepParameter parse_sweep_parameter(std::string_view text);

/// Inclusive grid start, start + step, ... not exceeding stop.
struct SweepRange {
  Rational start;
  Rational stop;
  Rational step;

  /// "a:b:step"; throws ParseError for malformed or empty ranges.
  static SweepRange parse(std::string_view text);
  std::vector<Rational> values() const;
};

/// Identical-component sweep over one parameter. The remaining parameters
/// are fixed at the values given here.
struct SweepRequest {
  Family family = Family::ladder;
  SweepParameter parameter = SweepParameter::p;
  SweepRange range;
  int k = 1;
  std::size_t n = 1;
  Rational p{9, 10};
  Rational rho{1};
  Rational lambda{1};
  Rational xi{0};
  LadderTerminal terminal = LadderTerminal::t_n;
  Mode mode = Mode::approx;
};

/// CSV with a header row: <parameter>,A,nu,lambda_bar and, for the ladder,
/// d_ln_zeta,d_ln_alpha (empty where p is outside (0,1)).
std::string run_sweep(const SweepRequest& request);

}  // namespace relfreq
