#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "etalab/report/commands.hpp"

using namespace etalab;
using namespace etalab::report;

namespace {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
      return 2;
    case ErrorKind::kPrecision:
    case ErrorKind::kConfig:
      return 4;
    case ErrorKind::kNoZero:
      return 5;
    default:
      return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"High-precision Dirichlet eta tail laboratory"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file mirroring the flags; flags take precedence");

  RunConfig cfg;
  std::string format = "text";
  std::string out_path;
  app.add_option("--s", cfg.s_literal, "complex argument, e.g. \"0.1234+56.789i\"");
  app.add_option("--sigma", cfg.sigma_literal, "real part for uniform/exchange probes");
  app.add_option("--n", cfg.n_schedule, "n list: 1e8 | 1e3:1e6 | 100,1000");
  app.add_option("--prec", cfg.precision_bits, "binary precision in bits")->capture_default_str();
  app.add_option("--digits", cfg.digits, "truncated decimal places to print")->capture_default_str();
  app.add_option("--format", format, "text, csv or json")->capture_default_str();
  app.add_option("--zero-bracket", cfg.zero_bracket, "t range lo:hi");
  app.add_option("--offsets", cfg.offsets, "exchange offsets dt, comma separated");
  app.add_option("--method", cfg.method, "tail method: hurwitz-pair, direct-accel, brute")
      ->capture_default_str();
  app.add_option("--out", out_path, "write the report here instead of stdout");

  std::string probe_name;
  auto* eval = app.add_subcommand("eval", "eta(s), zeta(s) and partial sums");
  auto* digits = app.add_subcommand("digits", "R_n and T_n digit blocks");
  auto* table1 = app.add_subcommand("table1", "relative errors eps_r, eps_i per n");
  auto* probe = app.add_subcommand("probe", "limit probes");
  probe->add_option("which", probe_name, "lemma1, f-seq, eps-scaled, uniform or exchange")
      ->required();
  auto* zeros = app.add_subcommand("zeros", "critical-line zeros in --zero-bracket");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    cfg.output_format = parse_format(format);
    Report report;
    if (*eval) {
      report = cmd_eval(cfg);
    } else if (*digits) {
      report = cmd_digits(cfg);
    } else if (*table1) {
      report = cmd_table1(cfg);
    } else if (*probe) {
      report = cmd_probe(cfg, parse_probe(probe_name));
    } else if (*zeros) {
      report = cmd_zeros(cfg);
    }
    const std::string text = render(report, cfg.output_format);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(out_path);
      if (!file) {
        std::cerr << "error: cannot write " << out_path << '\n';
        return 3;
      }
      file << text;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return 0;
}
