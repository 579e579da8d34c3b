#pragma once

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "relfreq/ladder.hpp"
#include "relfreq/transfer.hpp"

namespace relfreq {

enum class Family { kofn_g, lincon_f, ladder, custom_matrices };

Family parse_family(std::string_view text);
std::string_view to_string(Family family);

enum class RateConvention {
  explicit_rates,
  /// lambda_i = mu_i (1 - p_i) / p_i with mu_i in units of one reference mu.
  steady_state_mu,
};

struct ComponentEntry {
  std::string id;
  Rational p;
  std::optional<Rational> lambda;
  std::optional<Rational> mu;
};

/// Matrices are given as polynomial strings such as "1 - x1" or "2*x1*x2";
/// matrices[0] is adjacent to the right vector.
struct CustomMatrices {
  std::vector<Rational> left;
  std::vector<Rational> right;
  Affine affine;
  std::vector<std::vector<std::vector<std::string>>> matrices;
};

/// Parsed JSON system configuration.
struct SystemDescription {
  Family family = Family::kofn_g;
  std::optional<int> k;
  std::optional<std::size_t> n;
  LadderTerminal terminal = LadderTerminal::t_n;
  RateConvention rates = RateConvention::explicit_rates;
  std::vector<ComponentEntry> components;
  CustomMatrices custom;
};

/// Throws ParseError naming the offending field.
SystemDescription parse_description(const nlohmann::json& json);
SystemDescription parse_description_text(const std::string& text);
SystemDescription load_description(const std::filesystem::path& path);

nlohmann::ordered_json description_to_json(const SystemDescription& description);

struct PreparedSystem {
  ComponentSystem system;
  ReportMeta meta;
};

/// Builds the transfer system; throws ValidationError on invalid content.
PreparedSystem prepare(const SystemDescription& description);

ReliabilityReport solve(const SystemDescription& description, Mode mode);

/// Parses "c*x*y + d*z - ..." over the given component labels.
MultilinearPoly parse_polynomial(std::string_view text, const std::vector<std::string>& labels);

/// Each quantity as {"rational": "num/den" | null, "decimal": "...", "per": "mu" | "absolute"}.
nlohmann::ordered_json report_to_json(const ReliabilityReport& report);

/// Inverse of one report_to_json quantity; exact when the rational is present.
Scalar read_report_quantity(const nlohmann::json& quantity);

}  // namespace relfreq
