#include "cli/sweep.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <stdexcept>

namespace qcat::cli {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::optional<std::size_t> photon_level(const std::string& name) {
  if (name.size() < 3 || name.compare(0, 2, "p_") != 0) return std::nullopt;
  std::size_t n = 0;
  const char* first = name.data() + 2;
  const char* last = name.data() + name.size();
  const auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return n;
}

// Everything a row needs, computed once per state.
struct PointValues {
  StateSpec spec;
  ClosedFormReport report;
};

Cell number_field(const PointValues& p, double NumberReport::*field) {
  if (!p.report.number) return std::string("UndefinedAtVacuum");
  return (*p.report.number).*field;
}

Cell flag(bool b) { return b ? 1.0 : 0.0; }

Cell photon_probability(const StateSpec& spec, std::size_t n) {
  const std::size_t truncation = std::max(choose_truncation(spec, 1e-14, 0), n);
  const std::vector<double> p = photon_distribution(make_state(spec, truncation));
  return p[n];
}

Cell lookup(const PointValues& p, const std::string& name) {
  const MomentSet& m = p.report.moments;
  const QuadratureReport& r = p.report.quadratures;
  if (name == "var_x") return r.var_X;
  if (name == "var_y") return r.var_Y;
  if (name == "g_q") return r.G_q;
  if (name == "gur_lhs_sq") return r.gur_lhs_sq;
  if (name == "gur_rhs_sq") return r.gur_rhs_sq;
  if (name == "y_squeezed") return flag(r.y_squeezed);
  if (name == "gur_satisfied") return flag(r.gur_satisfied);
  if (name == "mean_adag_a") return m.mean_AdagA;
  if (name == "mean_a_adag") return m.mean_AAdag;
  if (name == "fourth_moment_derived") return m.mean_AdagAAdagA;
  if (name == "fourth_moment_paper") {
    if (!p.report.fourth_moment_paper) return std::string("NotApplicable");
    return *p.report.fourth_moment_paper;
  }
  if (name == "mean_n") return number_field(p, &NumberReport::mean_n);
  if (name == "var_n_paper") return number_field(p, &NumberReport::var_n_paper);
  if (name == "var_n_derived") return number_field(p, &NumberReport::var_n_derived);
  if (name == "mandel_paper") return number_field(p, &NumberReport::mandel_paper);
  if (name == "mandel_derived") return number_field(p, &NumberReport::mandel_derived);
  if (name == "cat_weight") return number_field(p, &NumberReport::F);
  if (name == "overlap_ratio") return overlap_ratio(p.spec.abs_alpha_squared(), p.spec.q);
  if (const auto n = photon_level(name)) return photon_probability(p.spec, *n);
  throw std::invalid_argument("unknown output '" + name + "'");
}

}  // namespace

SweepVariable parse_sweep_variable(const std::string& text) {
  if (text == "alpha") return SweepVariable::alpha;
  if (text == "q") return SweepVariable::q;
  throw std::invalid_argument("--var must be alpha or q, got '" + text + "'");
}

const std::vector<std::string>& known_outputs() {
  static const std::vector<std::string> names = {
      "var_x",         "var_y",         "g_q",
      "gur_lhs_sq",    "gur_rhs_sq",    "y_squeezed",
      "gur_satisfied", "mean_adag_a",   "mean_a_adag",
      "fourth_moment_derived", "fourth_moment_paper", "mean_n",
      "var_n_paper",   "var_n_derived", "mandel_paper",
      "mandel_derived", "cat_weight",   "overlap_ratio"};
  return names;
}

const std::vector<std::string>& default_outputs() {
  static const std::vector<std::string> names = {"var_x",      "var_y",        "g_q",
                                                 "gur_lhs_sq", "gur_rhs_sq",   "mandel_paper",
                                                 "mandel_derived"};
  return names;
}

std::string canonical_output(const std::string& name) {
  static const std::map<std::string, std::string> aliases = {
      {"gur_lhs", "gur_lhs_sq"}, {"gur_rhs", "gur_rhs_sq"}, {"g", "g_q"}, {"f", "cat_weight"},
      {"r", "overlap_ratio"}};
  std::string s = lower(name);
  if (const auto it = aliases.find(s); it != aliases.end()) s = it->second;
  const auto& known = known_outputs();
  if (std::find(known.begin(), known.end(), s) == known.end() && !photon_level(s)) {
    throw std::invalid_argument("unknown output '" + name + "'");
  }
  return s;
}

void check_sweep(const SweepSpec& spec) {
  if (spec.steps < 2) throw std::invalid_argument("--steps must be at least 2");
  if (!(spec.from < spec.to)) throw std::invalid_argument("--from must be below --to");
  if (spec.variable == SweepVariable::q) {
    if (!(spec.from > 0.0) || !(spec.to <= 1.0)) {
      throw std::invalid_argument("a q sweep must stay inside (0, 1]");
    }
  } else {
    DeformationParameter{spec.fixed_q};  // throws on a bad q
  }
  for (const auto& o : spec.outputs) canonical_output(o);
}

std::vector<double> sweep_points(double from, double to, int steps) {
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    out[static_cast<std::size_t>(i)] = from + (to - from) * i / (steps - 1);
  }
  out.back() = to;
  return out;
}

Cell evaluate_output(const StateSpec& spec, const std::string& output) {
  try {
    validate(spec);
    return lookup(PointValues{spec, closed_form_report(spec)}, canonical_output(output));
  } catch (const Error& e) {
    return std::string(e.code());
  }
}

Table run_sweep(const SweepSpec& spec) {
  check_sweep(spec);
  std::vector<std::string> outputs;
  for (const auto& o : spec.outputs.empty() ? default_outputs() : spec.outputs) {
    outputs.push_back(canonical_output(o));
  }

  Table table;
  table.columns.push_back(spec.variable == SweepVariable::alpha ? "alpha" : "q");
  table.columns.insert(table.columns.end(), outputs.begin(), outputs.end());

  for (double v : sweep_points(spec.from, spec.to, spec.steps)) {
    const double qv = spec.variable == SweepVariable::q ? v : spec.fixed_q;
    const double av = spec.variable == SweepVariable::alpha ? v : spec.fixed_alpha;
    const StateSpec state{Complex(av, 0.0), DeformationParameter(qv), spec.kind};
    std::vector<Cell> row{v};
    std::optional<PointValues> values;
    std::string reason;
    try {
      validate(state);
      values.emplace(PointValues{state, closed_form_report(state)});
    } catch (const Error& e) {
      reason = std::string(e.code());
    }
    for (const auto& o : outputs) {
      if (!values) {
        row.emplace_back(reason);
        continue;
      }
      try {
        row.push_back(lookup(*values, o));
      } catch (const Error& e) {
        row.emplace_back(std::string(e.code()));
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace qcat::cli
