#include "relfreq/oracle.hpp"

#include <bit>
#include <numeric>

namespace relfreq {

StructureFunction::StructureFunction(std::size_t components, Evaluator evaluator, std::string name)
    : components_(components), evaluator_(std::move(evaluator)), name_(std::move(name)) {
  if (components_ > 64) throw ValidationError("structure functions are limited to 64 components");
}

StructureFunction StructureFunction::threshold(std::size_t k, std::size_t n) {
  return StructureFunction(
      n, [k](State s) { return static_cast<std::size_t>(std::popcount(s)) >= k; }, "threshold");
}

StructureFunction StructureFunction::consecutive_failure(std::size_t k, std::size_t n) {
  return StructureFunction(
      n,
      [k, n](State s) {
        std::size_t run = 0;
        for (std::size_t i = 0; i < n; ++i) {
          run = (s >> i) & 1u ? 0 : run + 1;
          if (run >= k) return false;
        }
        return true;
      },
      "consecutive-run");
}

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

}  // namespace

StructureFunction StructureFunction::ladder(std::size_t n, LadderTerminal terminal) {
  const std::size_t cells = n + 1;
  return StructureFunction(
      5 * cells,
      [cells, terminal](State s) {
        auto up = [s](std::size_t cell, LadderSlot slot) { return ((s >> ladder_id(cell, slot).value) & 1u) != 0; };
        // Nodes: S_i = 2i, T_i = 2i + 1, external source = 2 * cells.
        const std::size_t source = 2 * cells;
        DisjointSets sets(source + 1);
        auto node_up = [&](std::size_t node) {
          if (node == source) return true;
          return up(node / 2, node % 2 == 0 ? LadderSlot::S : LadderSlot::T);
        };
        auto join = [&](std::size_t x, std::size_t y) {
          if (node_up(x) && node_up(y)) sets.unite(x, y);
        };
        for (std::size_t i = 0; i < cells; ++i) {
          if (up(i, LadderSlot::a)) join(i == 0 ? source : 2 * (i - 1), 2 * i);
          if (i > 0 && up(i, LadderSlot::c)) join(2 * (i - 1) + 1, 2 * i + 1);
          if (up(i, LadderSlot::b)) join(2 * i, 2 * i + 1);
        }
        const std::size_t target = 2 * (cells - 1) + (terminal == LadderTerminal::t_n ? 1 : 0);
        return node_up(target) && sets.find(target) == sets.find(source);
      },
      "ladder");
}

StructureFunction StructureFunction::truth_table(std::size_t components, std::vector<bool> table) {
  if (components > 24 || table.size() != (std::size_t{1} << components))
    throw ValidationError("truth table must list all 2^m states (m <= 24)");
  return StructureFunction(
      components, [table = std::move(table)](State s) { return static_cast<bool>(table[s]); }, "truth-table");
}

namespace {

struct Layout {
  std::vector<std::size_t> free;
  StructureFunction::State base = 0;
};

Layout layout_of(const StructureFunction& sf, const std::vector<Component>& components) {
  if (components.size() != sf.size())
    throw DimensionError("structure function has " + std::to_string(sf.size()) + " components, got " +
                         std::to_string(components.size()));
  Layout layout;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const Rational& p = components[i].p;
    if (sgn(p) < 0 || p > 1) throw ValidationError("component '" + components[i].label + "': p outside [0,1]");
    if (p == 1)
      layout.base |= StructureFunction::State{1} << i;
    else if (sgn(p) != 0)
      layout.free.push_back(i);
  }
  if (layout.free.size() > kOracleEnumerationCap)
    throw ValidationError("oracle enumeration limited to " + std::to_string(kOracleEnumerationCap) +
                          " non-degenerate components, got " + std::to_string(layout.free.size()));
  return layout;
}

/// Visits every state of the free components with its probability.
template <class Visit>
void enumerate(const std::vector<Component>& components, const Layout& layout, Visit&& visit) {
  const std::size_t f = layout.free.size();
  std::vector<Rational> q(f);
  for (std::size_t j = 0; j < f; ++j) q[j] = components[layout.free[j]].q();
  auto recurse = [&](auto&& self, std::size_t depth, StructureFunction::State state, const Rational& prob) -> void {
    if (depth == f) {
      visit(state, prob);
      return;
    }
    const std::size_t i = layout.free[depth];
    self(self, depth + 1, state | (StructureFunction::State{1} << i), Rational(prob * components[i].p));
    self(self, depth + 1, state, Rational(prob * q[depth]));
  };
  recurse(recurse, 0, layout.base, Rational(1));
}

}  // namespace

Rational oracle_availability(const StructureFunction& sf, const std::vector<Component>& components) {
  const Layout layout = layout_of(sf, components);
  Rational total(0);
  enumerate(components, layout, [&](StructureFunction::State s, const Rational& prob) {
    if (sf(s)) total += prob;
  });
  return total;
}

Rational oracle_frequency(const StructureFunction& sf, const std::vector<Component>& components) {
  const Layout layout = layout_of(sf, components);
  // For component i: sum over states with i up of Pr(x) (phi(x) - phi(x with i down)),
  // which is p_i (A(p_i := 1) - A(p_i := 0)).
  std::vector<Rational> weight(layout.free.size());
  enumerate(components, layout, [&](StructureFunction::State s, const Rational& prob) {
    const int phi = sf(s) ? 1 : 0;
    for (std::size_t j = 0; j < layout.free.size(); ++j) {
      const auto bit = StructureFunction::State{1} << layout.free[j];
      if (!(s & bit)) continue;
      const int delta = phi - (sf(s & ~bit) ? 1 : 0);
      if (delta > 0)
        weight[j] += prob;
      else if (delta < 0)
        weight[j] -= prob;
    }
  });
  Rational nu(0);
  for (std::size_t j = 0; j < layout.free.size(); ++j) nu += components[layout.free[j]].lambda * weight[j];
  return nu;
}

Rational oracle_frequency_dual(const StructureFunction& sf, const std::vector<Component>& components) {
  const Layout layout = layout_of(sf, components);
  // For component i: sum over states with i down of Pr(x) ((1 - phi(x)) - (1 - phi(x with i up))),
  // which is q_i dU/dq_i.
  std::vector<Rational> weight(layout.free.size());
  enumerate(components, layout, [&](StructureFunction::State s, const Rational& prob) {
    const int down = sf(s) ? 0 : 1;
    for (std::size_t j = 0; j < layout.free.size(); ++j) {
      const auto bit = StructureFunction::State{1} << layout.free[j];
      if (s & bit) continue;
      const int delta = down - (sf(s | bit) ? 0 : 1);
      if (delta > 0)
        weight[j] += prob;
      else if (delta < 0)
        weight[j] -= prob;
    }
  });
  Rational nu(0);
  for (std::size_t j = 0; j < layout.free.size(); ++j) nu += components[layout.free[j]].mu * weight[j];
  return nu;
}

std::pair<Rational, Rational> oracle_pivot(const StructureFunction& sf, const std::vector<Component>& components,
                                           std::size_t index) {
  if (index >= components.size()) throw ValidationError("pivot index out of range");
  auto pinned = components;
  pinned[index].p = 1;
  const Rational up = oracle_availability(sf, pinned);
  pinned[index].p = 0;
  const Rational down = oracle_availability(sf, pinned);
  return {up, down};
}

bool is_coherent(const StructureFunction& sf) {
  const std::size_t m = sf.size();
  if (m > kOracleEnumerationCap) throw ValidationError("coherence check limited to 24 components");
  const StructureFunction::State end = StructureFunction::State{1} << m;
  for (StructureFunction::State s = 0; s < end; ++s) {
    if (!sf(s)) continue;
    for (std::size_t i = 0; i < m; ++i) {
      const auto bit = StructureFunction::State{1} << i;
      if ((s & bit) == 0 && !sf(s | bit)) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::size_t>> minimal_cuts(const StructureFunction& sf,
                                                   const std::vector<Component>& components,
                                                   std::size_t max_size) {
  if (components.size() != sf.size()) throw DimensionError("component count does not match structure function");
  StructureFunction::State all_up = 0;
  std::vector<std::size_t> fallible;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (sgn(components[i].p) == 0) continue;
    all_up |= StructureFunction::State{1} << i;
    if (components[i].p != 1) fallible.push_back(i);
  }
  auto fails = [&](const std::vector<std::size_t>& set) {
    StructureFunction::State s = all_up;
    for (std::size_t i : set) s &= ~(StructureFunction::State{1} << i);
    return !sf(s);
  };

  std::vector<std::vector<std::size_t>> cuts;
  std::vector<std::size_t> chosen;
  auto recurse = [&](auto&& self, std::size_t start, std::size_t size) -> void {
    if (chosen.size() == size) {
      if (!fails(chosen)) return;
      for (std::size_t drop = 0; drop < chosen.size(); ++drop) {
        std::vector<std::size_t> smaller;
        for (std::size_t j = 0; j < chosen.size(); ++j)
          if (j != drop) smaller.push_back(chosen[j]);
        if (fails(smaller)) return;
      }
      cuts.push_back(chosen);
      return;
    }
    for (std::size_t j = start; j < fallible.size(); ++j) {
      chosen.push_back(fallible[j]);
      self(self, j + 1, size);
      chosen.pop_back();
    }
  };
  for (std::size_t size = 1; size <= max_size; ++size) recurse(recurse, 0, size);
  return cuts;
}

}  // namespace relfreq
