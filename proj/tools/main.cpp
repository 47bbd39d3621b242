#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "stwave/experiments.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNumeric = 1;
constexpr int kExitConfig = 2;

void parse_int_range(const std::string& text, int& lo, int& hi) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::domain_error("expected a range a:b, got '" + text + "'");
  }
  lo = std::stoi(text.substr(0, colon));
  hi = std::stoi(text.substr(colon + 1));
}

void parse_real_range(const std::string& text, double& lo, double& hi,
                      double& step) {
  auto first = text.find(':');
  if (first == std::string::npos) {
    throw std::domain_error("expected a range a:b[:step], got '" + text + "'");
  }
  auto second = text.find(':', first + 1);
  lo = std::stod(text.substr(0, first));
  if (second == std::string::npos) {
    hi = std::stod(text.substr(first + 1));
    step = 1.0;
  } else {
    hi = std::stod(text.substr(first + 1, second - first - 1));
    step = std::stod(text.substr(second + 1));
  }
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"space-time Galerkin boundary element solver for the 1d wave equation"};
  app.require_subcommand(1);

  std::string conv_case = "smooth";
  std::string conv_formulation = "ht";
  std::string conv_levels = "3:8";
  std::string conv_out = "-";
  double conv_length = 3.0;
  double conv_horizon = 6.0;
  CLI::App* conv = app.add_subcommand(
      "convergence", "uniform-refinement study against a manufactured solution");
  conv->add_option("--case", conv_case, "manufactured solution")
      ->check(CLI::IsMember({"smooth", "singular", "traveling"}));
  conv->add_option("--formulation", conv_formulation, "bilinear form")
      ->check(CLI::IsMember({"ht", "energetic"}));
  conv->add_option("--L", conv_length, "spatial length");
  conv->add_option("--T", conv_horizon, "time horizon");
  conv->add_option("--levels", conv_levels, "refinement levels a:b");
  conv->add_option("--out", conv_out, "output CSV path, - for stdout");

  std::string spec_horizons = "1:8";
  std::string spec_out = "-";
  double spec_length = 1.0;
  int spec_m = 2000;
  int spec_kmax_factor = 8;
  CLI::App* spectral = app.add_subcommand(
      "spectral", "sweep of the coupling-constant eigenvalue over the horizon");
  spectral->add_option("--L", spec_length, "spatial length");
  spectral->add_option("--T", spec_horizons, "horizon sweep a:b[:step]");
  spectral->add_option("--m", spec_m, "matrix cutoff");
  spectral->add_option("--kmax-factor", spec_kmax_factor,
                   "initial row cutoff as a multiple of m+1");
  spectral->add_option("--out", spec_out, "output CSV path, - for stdout");

  bool verify_fast = false;
  CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_flag("--fast", verify_fast, "reduced problem sizes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (conv->parsed()) {
      stwave::ConvergenceConfig cfg;
      cfg.case_name = conv_case;
      cfg.formulation = conv_formulation == "ht" ? stwave::Formulation::ht
                                                 : stwave::Formulation::energetic;
      cfg.length = conv_length;
      cfg.horizon = conv_horizon;
      parse_int_range(conv_levels, cfg.level_min, cfg.level_max);
      write_output(conv_out, stwave::convergence_csv(stwave::run_convergence(cfg)));
    } else if (spectral->parsed()) {
      stwave::SpectralConfig cfg;
      cfg.length = spec_length;
      cfg.m = spec_m;
      cfg.kmax_factor = spec_kmax_factor;
      parse_real_range(spec_horizons, cfg.horizon_min, cfg.horizon_max,
                       cfg.horizon_step);
      write_output(spec_out, stwave::spectral_csv(stwave::run_spectral(cfg)));
    } else if (verify->parsed()) {
      std::vector<stwave::CheckResult> results = stwave::run_verify(verify_fast);
      bool all_pass = true;
      for (const stwave::CheckResult& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": "
                  << r.detail << '\n';
        all_pass = all_pass && r.pass;
      }
      return all_pass ? kExitOk : kExitNumeric;
    }
  } catch (const std::domain_error& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitOk;
}
