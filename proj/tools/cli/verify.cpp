#include "cli/verify.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qcat/observables.hpp"

namespace qcat::cli {

namespace {

// Pass iff |value - target| <= limit.
DiscrepancyRecord bound_record(std::string name, double value, double target, double limit) {
  DiscrepancyRecord r;
  r.quantity_name = std::move(name);
  r.closed_form = value;
  r.oracle = target;
  r.abs_gap = std::abs(value - target);
  r.rel_gap = target != 0.0 ? r.abs_gap / std::abs(target) : r.abs_gap;
  r.variant = Variant::derived;
  r.pass = r.abs_gap <= limit;
  r.note = fmt::format("|gap| <= {:g}", limit);
  return r;
}

void append(std::vector<DiscrepancyRecord>& out, std::vector<DiscrepancyRecord> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

void check_point(const GridPoint& p, const OracleConfig& cfg, std::vector<DiscrepancyRecord>& out) {
  const StateSpec spec = p.spec();
  const std::string tag = label(p);
  const TruncatedState state = oracle_state(spec, cfg.tol);
  const LadderSet ladders = build_ladder_set(spec.q, state.truncation());
  const ClosedFormReport closed = closed_form_report(spec);
  const MomentSet oracle_m = oracle_moments(state, ladders);

  append(out, compare(closed.moments, oracle_m, cfg, tag));
  append(out, compare(closed.quadratures, oracle_quadratures(state, ladders), cfg, tag));
  if (closed.number) {
    auto number = compare(*closed.number, oracle_number_report(state, ladders, spec.alpha), cfg, tag);
    for (auto& r : number) {
      if (r.variant == Variant::paper) r.note = kFourthMomentFamily;
    }
    append(out, std::move(number));
  }
  if (closed.fourth_moment_paper) {
    auto r = make_record(tag + ".mean_AdagAAdagA_paper", *closed.fourth_moment_paper,
                         oracle_m.mean_AdagAAdagA, Variant::paper, cfg.rel_tol, cfg.abs_tol);
    r.note = kFourthMomentFamily;
    out.push_back(std::move(r));
  }
  const double x = spec.abs_alpha_squared();
  if (spec.kind != StateKind::coherent && x > 0.0) {
    const double overlap = oracle_overlap(spec.alpha, spec.q, state.truncation());
    const auto literal = literal_overlap_series(x, spec.q);
    DiscrepancyRecord r;
    if (literal) {
      r = make_record(tag + ".overlap_literal", *literal, overlap, Variant::paper, cfg.rel_tol,
                      cfg.abs_tol);
      r.note = kOverlapSubstitution;
    } else {
      r.quantity_name = tag + ".overlap_literal";
      r.closed_form = std::nan("");
      r.oracle = overlap;
      r.abs_gap = r.rel_gap = std::numeric_limits<double>::infinity();
      r.variant = Variant::paper;
      r.pass = false;
      r.note = std::string(kOverlapSubstitution) + " (series diverges at -2|alpha|^2)";
    }
    out.push_back(std::move(r));
  }
}

void algebra_checks(std::vector<DiscrepancyRecord>& out) {
  for (double qv : {0.5, 0.9, 1.0}) {
    const DeformationParameter q(qv);
    const LadderSet l = build_ladder_set(q, 64);
    const std::string suffix = fmt::format("[q={:g},N=64]", qv);
    out.push_back(bound_record("algebra.q_relation" + suffix, q_algebra_residual(l), 0.0, 1e-12));
    out.push_back(bound_record("algebra.conjugate_pair" + suffix, conjugate_pair_residual(l), 0.0, 1e-12));
    out.push_back(bound_record("algebra.nonlinear_commutator" + suffix,
                               nonlinear_commutator_residual(q, 64), 0.0, 1e-12));
  }
}

void displacement_checks(std::vector<DiscrepancyRecord>& out) {
  for (double qv : {0.8, 0.95}) {
    for (double a : {0.5, 1.2}) {
      const DeformationParameter q(qv);
      const StateSpec spec{Complex(a, 0.0), q, StateKind::coherent};
      const std::size_t n = choose_truncation(spec, 1e-14, 8);
      const TruncatedState d = displacement_vacuum(spec.alpha, q, n);
      const TruncatedState c = coherent_coefficients(spec, n);
      double err2 = 0.0;
      for (std::size_t k = 0; k < d.dim(); ++k) err2 += std::norm(d[k] - c[k]);
      out.push_back(bound_record(fmt::format("displacement[q={:g},alpha={:g}]", qv, a),
                                 std::sqrt(err2), 0.0, 1e-8));
    }
  }
}

void ordinary_limit_checks(std::vector<DiscrepancyRecord>& out) {
  const DeformationParameter one(1.0);
  double worst = 0.0;
  for (std::size_t n = 0; n <= 1000; ++n) {
    worst = std::max(worst, std::abs(q_integer(n, one) - static_cast<double>(n)));
  }
  out.push_back(bound_record("q1.q_integer_is_n[n<=1000]", worst, 0.0, 0.0));

  for (double x = 0.0; x <= 4.0; x += 0.5) {
    const double e = std::exp(x);
    out.push_back(bound_record(fmt::format("q1.E_q_is_exp[x={:g}]", x),
                               q_exponential(x, one).value, e, 1e-12 * e));
  }
  for (double a : {0.3, 1.0, 2.5}) {
    out.push_back(bound_record(fmt::format("q1.coherent_mandel[alpha={:g}]", a),
                               coherent_mandel(Complex(a, 0.0), one), 0.0, 0.0));
  }
  for (Parity parity : {Parity::even, Parity::odd}) {
    double gap = 0.0;
    for (int i = 1; i <= 200; ++i) {
      const Complex alpha(0.01 * i, 0.0);
      gap = std::max(gap, std::abs(cat_number_report(alpha, one, parity).mandel_paper -
                                   ordinary_mandel(alpha, parity)));
    }
    out.push_back(bound_record(
        fmt::format("q1.cat_mandel_vs_ordinary[{},alpha<=2]", parity == Parity::even ? "even" : "odd"),
        gap, 0.0, 1e-10));
  }
}

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw std::invalid_argument("bad number '" + item + "' in --grid");
    }
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty axis in --grid");
  return out;
}

std::string cell(double v) {
  if (std::isnan(v)) return "diverges";
  return fmt::format("{:.10g}", v);
}

void render_rows(std::string& out, const std::vector<DiscrepancyRecord>& rows) {
  std::size_t width = 8;
  for (const auto& r : rows) width = std::max(width, r.quantity_name.size());
  out += fmt::format("{:<{}}  {:>17}  {:>17}  {:>10}  {:>10}  {}\n", "quantity", width,
                     "closed_form", "oracle", "abs_gap", "rel_gap", "status");
  for (const auto& r : rows) {
    out += fmt::format("{:<{}}  {:>17}  {:>17}  {:>10.3g}  {:>10.3g}  {}\n", r.quantity_name,
                       width, cell(r.closed_form), cell(r.oracle), r.abs_gap, r.rel_gap,
                       r.pass ? "pass" : "FAIL");
  }
}

}  // namespace

bool VerifyResult::ok() const {
  return std::all_of(records.begin(), records.end(),
                     [](const auto& r) { return r.variant == Variant::paper || r.pass; });
}

std::vector<DiscrepancyRecord> VerifyResult::derived() const {
  std::vector<DiscrepancyRecord> out;
  std::copy_if(records.begin(), records.end(), std::back_inserter(out),
               [](const auto& r) { return r.variant == Variant::derived; });
  return out;
}

std::vector<DiscrepancyRecord> VerifyResult::paper_discrepancies() const {
  std::vector<DiscrepancyRecord> out;
  std::copy_if(records.begin(), records.end(), std::back_inserter(out),
               [](const auto& r) { return r.variant == Variant::paper && !r.pass; });
  return out;
}

std::vector<GridPoint> parse_grid(const std::string& text) {
  std::vector<double> qs = {0.5, 0.8, 0.9, 0.99, 1.0};
  std::vector<double> alphas = {0.3, 0.8, 1.5, 2.1};
  std::vector<StateKind> kinds = {StateKind::coherent, StateKind::cat_even, StateKind::cat_odd};

  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--grid entries look like key=v1,v2");
    const std::string key = part.substr(0, eq);
    const std::string values = part.substr(eq + 1);
    if (key == "q") {
      qs = parse_numbers(values);
      for (double q : qs) DeformationParameter{q};
    } else if (key == "alpha") {
      alphas = parse_numbers(values);
    } else if (key == "kind") {
      kinds.clear();
      std::stringstream ks(values);
      std::string k;
      while (std::getline(ks, k, ',')) kinds.push_back(parse_state_kind(k));
    } else {
      throw std::invalid_argument("unknown --grid axis '" + key + "'");
    }
  }
  auto grid = make_grid(qs, alphas, kinds);
  if (grid.empty()) throw std::invalid_argument("--grid selects no valid points");
  return grid;
}

VerifyResult run_verify(const OracleConfig& cfg) {
  if (!(cfg.tol > 0.0) || !(cfg.rel_tol >= cfg.tol) || !(cfg.abs_tol > 0.0)) {
    throw std::invalid_argument("need tol > 0, rel_tol >= tol and abs_tol > 0");
  }
  VerifyResult result;
  for (const GridPoint& p : cfg.grid) check_point(p, cfg, result.records);
  algebra_checks(result.records);
  displacement_checks(result.records);
  ordinary_limit_checks(result.records);
  return result;
}

std::string render_verify(const VerifyResult& result) {
  std::string out;
  const auto derived = result.derived();
  const auto failed = std::count_if(derived.begin(), derived.end(), [](const auto& r) { return !r.pass; });
  out += fmt::format("derived checks ({} records, {} failed)\n", derived.size(), failed);
  render_rows(out, derived);

  const auto paper = result.paper_discrepancies();
  out += fmt::format("\npaper discrepancies ({} records)\n", paper.size());
  std::map<std::string, std::vector<DiscrepancyRecord>> families;
  for (const auto& r : paper) families[r.note].push_back(r);
  for (const auto& [family, rows] : families) {
    out += fmt::format("-- {} ({} records)\n", family, rows.size());
    render_rows(out, rows);
  }
  out += fmt::format("\nverify: {}\n", result.ok() ? "PASS" : "FAIL");
  return out;
}

}  // namespace qcat::cli
