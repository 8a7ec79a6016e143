#include "cli/app.hpp"

#include <CLI11.hpp>

#include <sstream>

#include "cli/figure.hpp"
#include "cli/report.hpp"
#include "cli/sweep.hpp"
#include "cli/table.hpp"
#include "cli/verify.hpp"

namespace qcat::cli {

namespace {

struct Options {
  double q = 1.0;
  double alpha_re = 0.0;
  double alpha_im = 0.0;
  std::string kind = "coherent";
  std::string format;
  std::string out;

  std::string var = "alpha";
  double from = 0.0;
  double to = 1.0;
  int steps = 100;
  std::vector<std::string> outputs;

  std::string preset;
  std::vector<double> q_list = default_q_list();

  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  std::string grid;
};

void emit(const std::string& content, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_atomic(path, content);
  }
}

StateSpec state_from(const Options& o) {
  return StateSpec{Complex(o.alpha_re, o.alpha_im), DeformationParameter(o.q), parse_state_kind(o.kind)};
}

int cmd_report(const Options& o, std::ostream& out) {
  const Format f = parse_format(o.format.empty() ? "text" : o.format);
  out << render_report(state_from(o), f);
  return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  SweepSpec s;
  s.variable = parse_sweep_variable(o.var);
  s.from = o.from;
  s.to = o.to;
  s.steps = o.steps;
  s.fixed_q = o.q;
  s.fixed_alpha = o.alpha_re;
  s.kind = parse_state_kind(o.kind);
  s.outputs = o.outputs;
  const Format f = parse_format(o.format.empty() ? "csv" : o.format);
  emit(render(run_sweep(s), f), o.out, out);
  return kExitOk;
}

int cmd_figure(const Options& o, std::ostream& out) {
  const Format f = parse_format(o.format.empty() ? "csv" : o.format);
  emit(render(figure_table(o.preset, o.q_list), f), o.out, out);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  OracleConfig cfg = default_oracle_config();
  cfg.rel_tol = o.rel_tol;
  cfg.abs_tol = o.abs_tol;
  if (!o.grid.empty()) cfg.grid = parse_grid(o.grid);
  const VerifyResult result = run_verify(cfg);
  emit(render_verify(result), o.out, out);
  return result.ok() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"q-deformed coherent and cat state calculator"};
  app.set_config("--config", "", "TOML/INI file with option defaults");
  app.require_subcommand(1);

  auto add_state = [&](CLI::App* cmd) {
    cmd->add_option("--q", o.q, "deformation parameter in (0, 1]");
    cmd->add_option("--alpha-re", o.alpha_re, "real part of alpha");
    cmd->add_option("--alpha-im", o.alpha_im, "imaginary part of alpha");
    cmd->add_option("--kind", o.kind, "coherent | cat-even | cat-odd");
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "csv | json | text");
    cmd->add_option("--out", o.out, "output file (stdout if omitted)");
  };

  CLI::App* report = app.add_subcommand("report", "closed-form report for one state");
  add_state(report);
  report->add_option("--format", o.format, "csv | json | text");

  CLI::App* sweep = app.add_subcommand("sweep", "sweep alpha or q and emit a table");
  add_state(sweep);
  add_output(sweep);
  sweep->add_option("--var", o.var, "alpha | q");
  sweep->add_option("--from", o.from);
  sweep->add_option("--to", o.to);
  sweep->add_option("--steps", o.steps);
  sweep->add_option("--outputs", o.outputs, "quantities to emit")->delimiter(',');

  CLI::App* figure = app.add_subcommand("figure", "emit the data behind a figure preset");
  add_output(figure);
  figure->add_option("--preset", o.preset, "fig1a ... fig5b")->required();
  figure->add_option("--q-list", o.q_list, "comma-separated q values")->delimiter(',');

  CLI::App* verify = app.add_subcommand("verify", "closed forms against the brute-force oracle");
  verify->add_option("--rel-tol", o.rel_tol);
  verify->add_option("--abs-tol", o.abs_tol);
  verify->add_option("--grid", o.grid, "e.g. q=0.9,1;alpha=0.3,0.8;kind=cat-even");
  verify->add_option("--out", o.out, "report file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (report->parsed()) return cmd_report(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
    if (figure->parsed()) return cmd_figure(o, out);
    return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.code() << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace qcat::cli
