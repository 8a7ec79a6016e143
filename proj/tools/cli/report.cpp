#include "cli/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <json.hpp>

#include "qcat/observables.hpp"

namespace qcat::cli {

namespace {

using nlohmann::ordered_json;

ordered_json complex_json(Complex z) { return ordered_json{{"re", z.real()}, {"im", z.imag()}}; }

ordered_json build(const StateSpec& spec) {
  validate(spec);
  const ClosedFormReport r = closed_form_report(spec);
  const TruncatedState state = make_state(spec, choose_truncation(spec, 1e-14, 0));
  std::vector<double> p = photon_distribution(state);
  p.resize(std::min(p.size(), kReportLevels));

  ordered_json doc;
  doc["state"] = {{"q", spec.q.q()},
                  {"alpha", complex_json(spec.alpha)},
                  {"kind", std::string(to_string(spec.kind))},
                  {"truncation", state.truncation()},
                  {"tail_residual", state.tail_residual()}};
  const MomentSet& m = r.moments;
  doc["moments"] = {{"mean_A", complex_json(m.mean_A)},
                    {"mean_Adag", complex_json(m.mean_Adag)},
                    {"mean_AA", complex_json(m.mean_AA)},
                    {"mean_AdagAdag", complex_json(m.mean_AdagAdag)},
                    {"mean_AdagA", m.mean_AdagA},
                    {"mean_AAdag", m.mean_AAdag},
                    {"mean_AdagAAdagA", m.mean_AdagAAdagA}};
  if (r.fourth_moment_paper) doc["moments"]["mean_AdagAAdagA_paper"] = *r.fourth_moment_paper;
  const QuadratureReport& qr = r.quadratures;
  doc["quadratures"] = {{"var_x", qr.var_X},           {"var_y", qr.var_Y},
                        {"g_q", qr.G_q},               {"gur_lhs_sq", qr.gur_lhs_sq},
                        {"gur_rhs_sq", qr.gur_rhs_sq}};
  if (r.number) {
    const NumberReport& n = *r.number;
    doc["number"] = {{"mean_n", n.mean_n},
                     {"var_n_paper", n.var_n_paper},
                     {"var_n_derived", n.var_n_derived},
                     {"mandel_paper", n.mandel_paper},
                     {"mandel_derived", n.mandel_derived},
                     {"cat_weight", n.F},
                     {"overlap_ratio", n.R}};
  } else {
    doc["number"] = {{"reason", "UndefinedAtVacuum"}};
  }
  doc["photon_distribution"] = p;
  ordered_json flags = {{"y_squeezed", qr.y_squeezed}, {"gur_satisfied", qr.gur_satisfied}};
  if (r.number) flags["sub_poissonian"] = r.number->mandel_derived < 0.0;
  if (spec.kind == StateKind::cat_even) {
    flags["y_squeezing_condition_printed"] = y_squeezing_condition(spec.alpha, spec.q);
  }
  doc["flags"] = flags;
  return doc;
}

std::string scalar_text(const ordered_json& v) {
  if (v.is_number_float()) return format_number(v.get<double>());
  if (v.is_object() && v.contains("re")) {
    return fmt::format("{}{:+.17g}i", format_number(v["re"].get<double>()), v["im"].get<double>());
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Flattens the document into (section.key, value) pairs.
Table as_table(const ordered_json& doc) {
  Table t;
  t.columns = {"field", "value"};
  for (const auto& [section, body] : doc.items()) {
    if (section == "photon_distribution") {
      for (std::size_t n = 0; n < body.size(); ++n) {
        t.rows.push_back({fmt::format("p_{}", n), body[n].get<double>()});
      }
      continue;
    }
    for (const auto& [key, value] : body.items()) {
      t.rows.push_back({section + "." + key, scalar_text(value)});
    }
  }
  return t;
}

}  // namespace

std::string render_report(const StateSpec& spec, Format format) {
  const ordered_json doc = build(spec);
  switch (format) {
    case Format::json:
      return doc.dump(2) + "\n";
    case Format::csv:
      return to_csv(as_table(doc));
    case Format::text: {
      std::string out;
      const Table t = as_table(doc);
      std::size_t width = 0;
      for (const auto& row : t.rows) width = std::max(width, format_cell(row[0]).size());
      for (const auto& row : t.rows) {
        out += fmt::format("{:<{}}  {}\n", format_cell(row[0]), width, format_cell(row[1]));
      }
      return out;
    }
  }
  return {};
}

}  // namespace qcat::cli
