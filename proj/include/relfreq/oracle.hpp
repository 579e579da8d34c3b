#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "relfreq/component.hpp"
#include "relfreq/ladder.hpp"

namespace relfreq {

/// Boolean system state as a function of component states. Bit i of a
/// State is set when component i is up.
class StructureFunction {
 public:
  using State = std::uint64_t;
  using Evaluator = std::function<bool(State)>;

  StructureFunction(std::size_t components, Evaluator evaluator, std::string name = "custom");

  /// Up iff at least k of n components are up.
  static StructureFunction threshold(std::size_t k, std::size_t n);
  /// Down iff some k consecutive components (in index order) are down.
  static StructureFunction consecutive_failure(std::size_t k, std::size_t n);
  /// Two-terminal connectivity S_0 -> S_n / T_n over cells 0..n, using the
  /// 5 * cell + slot numbering of build_ladder.
  static StructureFunction ladder(std::size_t n, LadderTerminal terminal);
  /// table[state] for all 2^components states.
  static StructureFunction truth_table(std::size_t components, std::vector<bool> table);

  std::size_t size() const { return components_; }
  const std::string& name() const { return name_; }
  bool operator()(State state) const { return evaluator_(state); }

 private:
  std::size_t components_;
  Evaluator evaluator_;
  std::string name_;
};

/// Largest number of non-degenerate components (0 < p < 1) enumerated.
inline constexpr std::size_t kOracleEnumerationCap = 24;

/// Exhaustive: sum over working states of prod p_i or q_i. Components with
/// p in {0, 1} are pinned rather than enumerated.
Rational oracle_availability(const StructureFunction& sf, const std::vector<Component>& components);

/// sum_i lambda_i p_i (A(p_i := 1) - A(p_i := 0)).
Rational oracle_frequency(const StructureFunction& sf, const std::vector<Component>& components);

/// sum_i mu_i q_i dU/dq_i, enumerated over failed states.
Rational oracle_frequency_dual(const StructureFunction& sf, const std::vector<Component>& components);

/// (A(p_i := 1), A(p_i := 0)).
std::pair<Rational, Rational> oracle_pivot(const StructureFunction& sf, const std::vector<Component>& components,
                                           std::size_t index);

/// Monotone in every component, checked over all single-bit flips.
bool is_coherent(const StructureFunction& sf);

/// Minimal cut sets of at most max_size fallible components (0 < p < 1),
/// with perfect components up and absent ones down.
std::vector<std::vector<std::size_t>> minimal_cuts(const StructureFunction& sf,
                                                   const std::vector<Component>& components,
                                                   std::size_t max_size);

}  // namespace relfreq
