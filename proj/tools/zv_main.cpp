// ============================================================================
// zv — command-line front end.
//
//   zv verify <check>... [--sigma F] [--s RE,IM] [--t-max F] [--x-max F]
//                        [--tol F] [--json|--csv] [--out PATH]
//   zv phi (--x F | --grid A:B:N:{linear|log}) [--csv] [--out PATH]
//   zv table
//
// Exit status: 0 when every report passes, 1 when any report fails,
// 2 for usage or configuration errors.
// ============================================================================

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zetaverify/phi.hpp"
#include "zetaverify/report.hpp"
#include "zetaverify/verify.hpp"

namespace {

struct EmitOptions {
  bool json = false;
  bool csv = false;
  std::string out_path;
};

// Renders reports in the chosen format, writes them to --out or stdout, and
// prints a one-line summary (to stderr when machine-readable rows go to
// stdout, so those streams stay parseable).  Returns the process exit code.
int emit_reports(const std::vector<zv::IdentityReport>& reports,
                 size_t n_checks, const EmitOptions& opt) {
  std::ostringstream body;
  if (opt.json) {
    for (const auto& r : reports) body << zv::to_json_line(r) << '\n';
  } else if (opt.csv) {
    body << zv::csv_header() << '\n';
    for (const auto& r : reports) body << zv::to_csv_row(r) << '\n';
  } else {
    body << zv::table_header() << '\n';
    for (const auto& r : reports) body << zv::to_table_row(r) << '\n';
  }

  if (!opt.out_path.empty()) {
    std::ofstream out(opt.out_path);
    if (!out) {
      std::cerr << "error: cannot write to " << opt.out_path << '\n';
      return 2;
    }
    out << body.str();
  } else {
    std::cout << body.str();
  }

  size_t failed = 0;
  for (const auto& r : reports)
    if (!r.pass) ++failed;
  std::ostringstream summary;
  summary << n_checks << " check(s), " << reports.size() << " report(s), "
          << failed << " failed";
  const bool machine_stdout = (opt.json || opt.csv) && opt.out_path.empty();
  (machine_stdout ? std::cerr : std::cout) << summary.str() << '\n';
  return failed == 0 ? 0 : 1;
}

bool parse_complex(const std::string& text, zv::Complex& value) {
  double re = 0.0, im = 0.0;
  char trailing = 0;
  if (std::sscanf(text.c_str(), "%lf,%lf%c", &re, &im, &trailing) == 2) {
    value = zv::Complex(re, im);
    return true;
  }
  if (std::sscanf(text.c_str(), "%lf%c", &re, &trailing) == 1) {
    value = zv::Complex(re, 0.0);
    return true;
  }
  return false;
}

int run_verify(const std::vector<std::string>& requested,
               const zv::CheckOverrides& overrides, const EmitOptions& emit) {
  const auto& known = zv::all_check_names();
  std::vector<std::string> names;
  for (const auto& name : requested) {
    if (name == "all") {
      names = known;
      break;
    }
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      std::cerr << "error: unknown check '" << name << "'; valid names:";
      for (const auto& k : known) std::cerr << ' ' << k;
      std::cerr << " all\n";
      return 2;
    }
    names.push_back(name);
  }

  std::vector<zv::IdentityReport> reports;
  for (const auto& name : names) {
    auto batch = zv::run_check(name, overrides);
    reports.insert(reports.end(), batch.begin(), batch.end());
  }
  return emit_reports(reports, names.size(), emit);
}

int run_phi_point(double x, bool csv, const std::string& out_path) {
  const zv::PhiEvaluation ev = zv::phi_evaluate(x);
  std::ostringstream body;
  char buf[512];
  if (csv) {
    body << "x,phi_exact,phi_asymptotic,phi_remainder\n";
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", ev.x, ev.exact,
                  ev.asymptotic, ev.remainder);
    body << buf;
  } else {
    std::snprintf(buf, sizeof buf,
                  "x               = %.17g\n"
                  "phi_exact       = %.17g\n"
                  "phi_asymptotic  = %.17g\n"
                  "phi_remainder   = %.17g\n",
                  ev.x, ev.exact, ev.asymptotic, ev.remainder);
    body << buf;
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write to " << out_path << '\n';
      return 2;
    }
    out << body.str();
  } else {
    std::cout << body.str();
  }
  return 0;
}

int run_phi_grid(const std::string& spec, const std::string& out_path) {
  // A:B:N:{linear|log} — N rows spanning [A, B] inclusive.
  std::vector<std::string> parts;
  std::string token;
  std::istringstream in(spec);
  while (std::getline(in, token, ':')) parts.push_back(token);
  double a = 0.0, b = 0.0;
  long n = 0;
  char trailing = 0;
  if (parts.size() != 4 ||
      std::sscanf(parts[0].c_str(), "%lf%c", &a, &trailing) != 1 ||
      std::sscanf(parts[1].c_str(), "%lf%c", &b, &trailing) != 1 ||
      std::sscanf(parts[2].c_str(), "%ld%c", &n, &trailing) != 1 ||
      (parts[3] != "linear" && parts[3] != "log")) {
    std::cerr << "error: --grid expects A:B:N:{linear|log}\n";
    return 2;
  }
  if (!(a >= 1.0) || !(b > a) || n < 2) {
    std::cerr << "error: --grid needs 1 <= A < B and N >= 2\n";
    return 2;
  }
  const bool log_spaced = parts[3] == "log";

  std::ostringstream body;
  body << "x,phi_exact,phi_asymptotic,phi_remainder\n";
  char buf[512];
  for (long i = 0; i < n; ++i) {
    const double frac = static_cast<double>(i) / static_cast<double>(n - 1);
    const double x = log_spaced ? a * std::pow(b / a, frac) : a + (b - a) * frac;
    const zv::PhiEvaluation ev = zv::phi_evaluate(x);
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", ev.x, ev.exact,
                  ev.asymptotic, ev.remainder);
    body << buf;
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write to " << out_path << '\n';
      return 2;
    }
    out << body.str();
  } else {
    std::cout << body.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "numerical verification of weighted mean-value and Mellin-transform "
      "identities for the alternating zeta factor"};
  app.require_subcommand(1);

  // --- verify -----------------------------------------------------------
  auto* verify_cmd =
      app.add_subcommand("verify", "run named identity checks");
  std::vector<std::string> checks;
  verify_cmd->add_option("checks", checks, "check names, or 'all'")
      ->required()
      ->expected(-1);
  std::optional<double> sigma, t_max, x_max, tol;
  std::string s_text;
  EmitOptions emit;
  verify_cmd->add_option("--sigma", sigma, "line position override");
  verify_cmd->add_option("--s", s_text, "transform point override, RE,IM");
  verify_cmd->add_option("--t-max", t_max, "line truncation override")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--x-max", x_max, "window truncation override")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--tol", tol, "tolerance override")
      ->check(CLI::PositiveNumber);
  auto* json_flag =
      verify_cmd->add_flag("--json", emit.json, "line-delimited JSON rows");
  verify_cmd->add_flag("--csv", emit.csv, "CSV rows")->excludes(json_flag);
  verify_cmd->add_option("--out", emit.out_path, "write rows to PATH");

  // --- phi ---------------------------------------------------------------
  auto* phi_cmd = app.add_subcommand("phi", "evaluate the convolution phi");
  std::optional<double> phi_x;
  std::string grid_spec;
  bool phi_csv = false;
  std::string phi_out;
  phi_cmd->add_option("--x", phi_x, "single evaluation point");
  phi_cmd->add_option("--grid", grid_spec, "A:B:N:{linear|log} grid (CSV out)");
  phi_cmd->add_flag("--csv", phi_csv, "CSV output for --x");
  phi_cmd->add_option("--out", phi_out, "write output to PATH");

  // --- table -------------------------------------------------------------
  auto* table_cmd =
      app.add_subcommand("table", "run every check and print the table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify_cmd) {
      zv::CheckOverrides overrides;
      overrides.sigma = sigma;
      overrides.t_max = t_max;
      overrides.x_max = x_max;
      overrides.tol = tol;
      if (!s_text.empty()) {
        zv::Complex s;
        if (!parse_complex(s_text, s)) {
          std::cerr << "error: --s expects RE or RE,IM\n";
          return 2;
        }
        overrides.s = s;
      }
      return run_verify(checks, overrides, emit);
    }
    if (*phi_cmd) {
      if (phi_x.has_value() == !grid_spec.empty()) {
        std::cerr << "error: phi needs exactly one of --x or --grid\n";
        return 2;
      }
      if (phi_x) return run_phi_point(*phi_x, phi_csv, phi_out);
      return run_phi_grid(grid_spec, phi_out);
    }
    if (*table_cmd) {
      const auto reports = zv::run_all();
      return emit_reports(reports, zv::all_check_names().size(), EmitOptions{});
    }
  } catch (const zv::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
