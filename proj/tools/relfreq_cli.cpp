#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "relfreq/description.hpp"
#include "relfreq/oracle.hpp"
#include "relfreq/sweep.hpp"
#include "relfreq/verify.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;

int write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return kExitValidation;
  }
  out << text;
  return 0;
}

std::string default_mode() {
  const char* env = std::getenv("RELFREQ_MODE");
  return env ? env : "exact";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact availability and failure frequency of transfer-matrix systems"};
  app.require_subcommand(1);

  std::string config_path, mode_text = default_mode(), out_path;
  auto* solve = app.add_subcommand("solve", "Evaluate a JSON system configuration");
  solve->add_option("config", config_path, "System configuration (JSON)")->required();
  solve->add_option("--mode", mode_text, "exact|approx (default: $RELFREQ_MODE or exact)");
  solve->add_option("--out", out_path, "Report path (default: stdout)");

  std::string family_text, param_text = "p", range_text, terminal_text = "Tn";
  std::string p_text = "9/10", rho_text = "1", lambda_text = "1", xi_text = "0";
  std::string sweep_mode = "approx";
  int k = 1;
  std::size_t n = 1;
  auto* sweep = app.add_subcommand("sweep", "Tabulate an identical-component family over one parameter");
  sweep->add_option("family", family_text, "kofn-g|lincon-f|ladder")->required();
  sweep->add_option("--param", param_text, "p|rho|n");
  sweep->add_option("--range", range_text, "a:b:step")->required();
  sweep->add_option("--out", out_path, "CSV path (default: stdout)");
  sweep->add_option("-k", k, "k for k-out-of-n families");
  sweep->add_option("-n", n, "Size when not swept");
  sweep->add_option("--p", p_text, "Edge/component availability when not swept");
  sweep->add_option("--rho", rho_text, "Node availability (ladder)");
  sweep->add_option("--lambda", lambda_text, "Edge/component failure rate");
  sweep->add_option("--xi", xi_text, "Node failure rate (ladder)");
  sweep->add_option("--terminal", terminal_text, "Sn|Tn (ladder)");
  sweep->add_option("--mode", sweep_mode, "exact|approx");

  relfreq::VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "Check transfer-matrix results against brute-force enumeration");
  verify->add_option("--max-components", verify_options.max_components, "At most 24");
  verify->add_option("--instances", verify_options.instances);
  verify->add_option("--seed", verify_options.seed);
  verify->add_flag("--corrupt-for-testing", verify_options.corrupt)->group("");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      const auto mode = relfreq::parse_mode(mode_text);
      const auto description = relfreq::load_description(config_path);
      const auto report = relfreq::solve(description, mode);
      return write_output(out_path, relfreq::report_to_json(report).dump(2) + "\n");
    }
    if (*sweep) {
      relfreq::SweepRequest req;
      req.family = relfreq::parse_family(family_text);
      req.parameter = relfreq::parse_sweep_parameter(param_text);
      req.range = relfreq::SweepRange::parse(range_text);
      req.k = k;
      req.n = n;
      req.p = relfreq::parse_rational(p_text);
      req.rho = relfreq::parse_rational(rho_text);
      req.lambda = relfreq::parse_rational(lambda_text);
      req.xi = relfreq::parse_rational(xi_text);
      req.terminal = relfreq::parse_terminal(terminal_text);
      req.mode = relfreq::parse_mode(sweep_mode);
      return write_output(out_path, relfreq::run_sweep(req));
    }
    if (*verify) {
      if (verify_options.max_components > relfreq::kOracleEnumerationCap) {
        std::cerr << "error: --max-components " << verify_options.max_components << " exceeds the enumeration cap of "
                  << relfreq::kOracleEnumerationCap << "\n";
        return kExitParse;
      }
      const auto result = relfreq::run_verify(verify_options);
      std::cout << (result.passed ? "PASS: " : "FAIL: ") << result.message << "\n";
      if (!result.passed) {
        std::cout << "counterexample:\n" << result.counterexample << "\n";
        return kExitMismatch;
      }
      return 0;
    }
  } catch (const relfreq::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const relfreq::Error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
