#pragma once

#include <cstddef>
#include <vector>

#include "relfreq/component.hpp"
#include "relfreq/transfer.hpp"

namespace relfreq {

/// One rung of the ladder. Edge a joins S_{i-1}-S_i, edge c joins
/// T_{i-1}-T_i, edge b joins S_i-T_i; S and T are the cell's nodes.
struct LadderCell {
  Component a, b, c, S, T;
};

enum class LadderTerminal { s_n, t_n };

LadderTerminal parse_terminal(std::string_view text);
std::string_view to_string(LadderTerminal terminal);

/// Cells 0..n; the source is S_0. Cell 0 must have a perfect a (p = 1,
/// lambda = 0) and an absent c (p = 0).
struct LadderSpec {
  std::vector<LadderCell> cells;
  LadderTerminal terminal = LadderTerminal::t_n;

  void validate() const;
};

/// Slot of each cell member in the component numbering: id = 5 * cell + slot.
enum class LadderSlot : std::uint32_t { a = 0, b = 1, c = 2, S = 3, T = 4 };

inline ComponentId ladder_id(std::size_t cell, LadderSlot slot) {
  return ComponentId{static_cast<std::uint32_t>(5 * cell + static_cast<std::uint32_t>(slot))};
}

/// The 3 x 3 cell matrix over the given ids.
PolyMatrix ladder_cell_matrix(ComponentId a, ComponentId b, ComponentId c, ComponentId S, ComponentId T);

ComponentSystem build_ladder(const LadderSpec& spec);

/// Identical edges (availability p, rate lambda) and nodes (rho, xi) over
/// cells 1..n. Cell 0 is a0 = 1, b0 = p, c0 = 0, S0 = T0 = rho.
/// A class with availability 1 is perfect and its rate is ignored.
struct LadderIdenticalParams {
  Rational p{1};
  Rational rho{1};
  Rational lambda{0};
  Rational xi{0};
  std::size_t n = 1;

  void validate() const;
};

LadderSpec identical_ladder_spec(const LadderIdenticalParams& params, LadderTerminal terminal);

struct LadderAvailability {
  Scalar s_n;
  Scalar t_n;
};

/// Two-terminal availabilities from the eigenvalue closed forms. Exact mode
/// stays exact: when the discriminant is not a rational square the values
/// come from the transfer-matrix pass instead.
LadderAvailability ladder_closed_form(const LadderIdenticalParams& params, Mode mode);

/// Availability, frequency (lambda p d/dp + xi rho d/drho) and rate for the
/// identical ladder, streamed cell by cell in constant memory.
ReliabilityReport ladder_frequency(const LadderIdenticalParams& params, LadderTerminal terminal, Mode mode);

}  // namespace relfreq
