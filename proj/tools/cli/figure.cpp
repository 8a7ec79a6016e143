#include "cli/figure.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cli/sweep.hpp"
#include "qcat/observables.hpp"

namespace qcat::cli {

namespace {

// Alpha sweeps stop just short of the smallest radius among the curves.
double alpha_limit(const std::vector<double>& q_list) {
  const double q_min = *std::min_element(q_list.begin(), q_list.end());
  return 0.99 * std::sqrt(std::min(DeformationParameter(q_min).radius(), 9.0));
}

Table gur_sweep(SweepVariable var, double from, double to, double fixed, int steps,
                std::vector<std::string> outputs) {
  SweepSpec s;
  s.variable = var;
  s.from = from;
  s.to = to;
  s.steps = steps;
  s.fixed_q = var == SweepVariable::alpha ? fixed : 0.9;
  s.fixed_alpha = var == SweepVariable::q ? fixed : 0.8;
  s.kind = StateKind::cat_even;
  s.outputs = std::move(outputs);
  return run_sweep(s);
}

std::string q_suffix(double q) { return fmt::format("q{:g}", q); }

Table per_q_sweep(const std::vector<double>& q_list, int steps, StateKind kind,
                  const std::vector<std::string>& outputs, bool ordinary_mandel_column) {
  Table t;
  t.columns.push_back("alpha");
  for (double q : q_list) {
    for (const auto& o : outputs) t.columns.push_back(o + "_" + q_suffix(q));
  }
  if (ordinary_mandel_column) t.columns.push_back("mandel_ordinary");

  const Parity parity = kind == StateKind::cat_odd ? Parity::odd : Parity::even;
  for (double a : sweep_points(0.01, alpha_limit(q_list), steps)) {
    std::vector<Cell> row{a};
    for (double q : q_list) {
      const StateSpec spec{Complex(a, 0.0), DeformationParameter(q), kind};
      for (const auto& o : outputs) row.push_back(evaluate_output(spec, o));
    }
    if (ordinary_mandel_column) row.push_back(ordinary_mandel(Complex(a, 0.0), parity));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table photon_figure(double alpha) {
  const DeformationParameter q(0.9);
  const StateSpec coherent{Complex(alpha, 0.0), q, StateKind::coherent};
  const StateSpec cat{Complex(alpha, 0.0), q, StateKind::cat_even};
  const std::size_t n = std::max(choose_truncation(coherent, 1e-14, 0), choose_truncation(cat, 1e-14, 0));
  const std::vector<double> pc = photon_distribution(make_state(coherent, n));
  const std::vector<double> pe = photon_distribution(make_state(cat, n));

  Table t;
  t.columns = {"n", "p_coherent", "p_cat_even"};
  for (std::size_t k = 0; k <= n; ++k) {
    t.rows.push_back({static_cast<double>(k), pc[k], pe[k]});
  }
  return t;
}

}  // namespace

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids = {"fig1a", "fig1b", "fig2",  "fig3",
                                               "fig4a", "fig4b", "fig5a", "fig5b"};
  return ids;
}

std::vector<double> default_q_list() { return {0.8, 0.9, 0.99}; }

Table figure_table(const std::string& id, const std::vector<double>& q_list, int steps) {
  if (q_list.empty()) throw std::invalid_argument("--q-list must not be empty");
  const std::vector<std::string> gur = {"gur_lhs_sq", "gur_rhs_sq", "var_x", "var_y"};
  if (id == "fig1a") {
    return gur_sweep(SweepVariable::alpha, 0.01, alpha_limit({0.8}), 0.8, steps, gur);
  }
  if (id == "fig1b") return gur_sweep(SweepVariable::q, 0.5, 1.0, 0.8, steps, gur);
  if (id == "fig2") {
    return per_q_sweep(q_list, steps, StateKind::cat_even, {"var_y", "var_x", "g_q"}, false);
  }
  if (id == "fig3") {
    return gur_sweep(SweepVariable::q, 0.5, 1.0, 0.9, steps, {"var_y", "g_q", "gur_rhs_sq"});
  }
  if (id == "fig4a") return photon_figure(2.1);
  if (id == "fig4b") return photon_figure(1.8);
  if (id == "fig5a" || id == "fig5b") {
    const StateKind kind = id == "fig5a" ? StateKind::cat_even : StateKind::cat_odd;
    return per_q_sweep(q_list, steps, kind, {"mandel_paper", "mandel_derived"}, true);
  }
  throw std::invalid_argument("unknown preset '" + id + "'");
}

}  // namespace qcat::cli
