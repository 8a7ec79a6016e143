#include "qcat/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

namespace qcat {

namespace {

Eigen::Map<const Eigen::VectorXcd> as_vector(std::span<const Complex> v) {
  return Eigen::Map<const Eigen::VectorXcd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

void require_dim(const TruncatedState& state, const OperatorMatrix& m) {
  if (state.dim() != m.dim()) {
    throw DimensionMismatch(m.dim(), state.dim());
  }
}

std::string format_double(double v) {
  std::string s = std::to_string(v);
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') {
    s.pop_back();
  }
  return s;
}

}  // namespace

std::vector<GridPoint> make_grid(const std::vector<double>& qs, const std::vector<double>& alphas,
                                 const std::vector<StateKind>& kinds) {
  std::vector<GridPoint> grid;
  for (double q : qs) {
    const DeformationParameter deformation(q);
    for (double a : alphas) {
      for (StateKind kind : kinds) {
        if (!deformation.inside_radius(a * a)) continue;
        if (kind == StateKind::cat_odd && a == 0.0) continue;
        grid.push_back(GridPoint{q, Complex(a, 0.0), kind});
      }
    }
  }
  return grid;
}

std::vector<GridPoint> default_grid() {
  return make_grid({0.5, 0.8, 0.9, 0.99, 1.0}, {0.3, 0.8, 1.5, 2.1},
                   {StateKind::coherent, StateKind::cat_even, StateKind::cat_odd});
}

OracleConfig default_oracle_config() {
  OracleConfig cfg;
  cfg.grid = default_grid();
  return cfg;
}

Complex expectation(const TruncatedState& state, const OperatorMatrix& m) {
  require_dim(state, m);
  const auto psi = as_vector(state.coeffs());
  return psi.dot(m.entries() * psi);  // dot() conjugates the left operand
}

MomentSet oracle_moments(const TruncatedState& state, const LadderSet& ladders) {
  require_dim(state, ladders.A);
  const auto psi = as_vector(state.coeffs());
  const Eigen::VectorXcd a_psi = ladders.A.entries() * psi;
  const Eigen::VectorXcd adag_psi = ladders.A_dag.entries() * psi;
  const Eigen::VectorXcd aa_psi = ladders.A.entries() * a_psi;
  const Eigen::VectorXcd adag_a_psi = ladders.A_dag.entries() * a_psi;

  MomentSet m;
  m.mean_A = psi.dot(a_psi);
  m.mean_Adag = psi.dot(adag_psi);
  m.mean_AA = psi.dot(aa_psi);
  m.mean_AdagAdag = std::conj(m.mean_AA);
  m.mean_AdagA = a_psi.squaredNorm();
  m.mean_AAdag = adag_psi.squaredNorm();
  m.mean_AdagAAdagA = adag_a_psi.squaredNorm();
  return m;
}

QuadratureReport oracle_quadratures(const TruncatedState& state, const LadderSet& ladders) {
  require_dim(state, ladders.X);
  const auto psi = as_vector(state.coeffs());
  const Eigen::VectorXcd x_psi = ladders.X.entries() * psi;
  const Eigen::VectorXcd y_psi = ladders.Y.entries() * psi;
  const double mean_x = psi.dot(x_psi).real();
  const double mean_y = psi.dot(y_psi).real();
  // <[X,Y]> = <X psi|Y psi> - <Y psi|X psi>
  const Complex comm = x_psi.dot(y_psi) - y_psi.dot(x_psi);

  QuadratureReport r;
  r.var_X = x_psi.squaredNorm() - mean_x * mean_x;
  r.var_Y = y_psi.squaredNorm() - mean_y * mean_y;
  r.G_q = 0.5 * std::abs(comm);
  r.gur_lhs_sq = r.var_X * r.var_Y;
  r.gur_rhs_sq = r.G_q * r.G_q;
  r.y_squeezed = r.var_Y < r.G_q;
  r.gur_satisfied = r.gur_lhs_sq >= r.gur_rhs_sq - kIdentityTol;
  return r;
}

NumberReport oracle_number_report(const TruncatedState& state, const LadderSet& ladders,
                                  Complex alpha) {
  const MomentSet m = oracle_moments(state, ladders);
  if (m.mean_AdagA == 0.0) {
    throw UndefinedAtVacuum("oracle Mandel parameter is 0/0 for the vacuum");
  }
  NumberReport r;
  r.mean_n = m.mean_AdagA;
  r.var_n_derived = m.mean_AdagAAdagA - m.mean_AdagA * m.mean_AdagA;
  r.var_n_paper = r.var_n_derived;
  r.mandel_derived = r.var_n_derived / r.mean_n - 1.0;
  r.mandel_paper = r.mandel_derived;
  r.F = m.mean_AdagA / std::norm(alpha);
  r.R = oracle_overlap(alpha, ladders.q, ladders.truncation());
  return r;
}

double oracle_overlap(Complex alpha, const DeformationParameter& q, std::size_t truncation) {
  const TruncatedState plus =
      coherent_coefficients(StateSpec{alpha, q, StateKind::coherent}, truncation);
  const TruncatedState minus =
      coherent_coefficients(StateSpec{-alpha, q, StateKind::coherent}, truncation);
  return as_vector(plus.coeffs()).dot(as_vector(minus.coeffs())).real();
}

double bare_number_mandel(const TruncatedState& state) {
  const std::vector<double> p = photon_distribution(state);
  double mean = 0.0;
  double second = 0.0;
  for (std::size_t n = 0; n < p.size(); ++n) {
    const double level = static_cast<double>(n);
    mean += level * p[n];
    second += level * level * p[n];
  }
  if (mean == 0.0) {
    throw UndefinedAtVacuum("bare-number Mandel parameter is 0/0 for the vacuum");
  }
  return (second - mean * mean) / mean - 1.0;
}

TruncatedState oracle_state(const StateSpec& spec, double tol) {
  return make_state(spec, choose_truncation(spec, tol, 4));
}

std::string_view to_string(Variant variant) noexcept {
  return variant == Variant::paper ? "paper" : "derived";
}

DiscrepancyRecord make_record(std::string name, double closed_form, double oracle,
                              Variant variant, double rel_tol, double abs_tol) {
  DiscrepancyRecord r;
  r.quantity_name = std::move(name);
  r.closed_form = closed_form;
  r.oracle = oracle;
  r.variant = variant;
  r.abs_gap = std::abs(closed_form - oracle);
  const double scale = std::abs(oracle);
  r.rel_gap = scale > 0.0 ? r.abs_gap / scale : (r.abs_gap == 0.0 ? 0.0 : INFINITY);
  const bool near_zero = std::max(std::abs(closed_form), scale) < kNearZero;
  r.pass = r.rel_gap <= rel_tol || (near_zero && r.abs_gap <= abs_tol);
  return r;
}

namespace {

std::string field_name(std::string_view prefix, std::string_view field) {
  if (prefix.empty()) {
    return std::string(field);
  }
  return std::string(prefix) + "." + std::string(field);
}

// Complex fields compare by modulus of the difference.
DiscrepancyRecord complex_record(std::string name, Complex closed, Complex oracle,
                                 const OracleConfig& cfg) {
  DiscrepancyRecord r = make_record(std::move(name), std::abs(closed), std::abs(oracle),
                                    Variant::derived, cfg.rel_tol, cfg.abs_tol);
  r.abs_gap = std::abs(closed - oracle);
  const double scale = std::abs(oracle);
  r.rel_gap = scale > 0.0 ? r.abs_gap / scale : (r.abs_gap == 0.0 ? 0.0 : INFINITY);
  const bool near_zero = std::max(std::abs(closed), scale) < kNearZero;
  r.pass = r.rel_gap <= cfg.rel_tol || (near_zero && r.abs_gap <= cfg.abs_tol);
  return r;
}

}  // namespace

std::vector<DiscrepancyRecord> compare(const MomentSet& closed, const MomentSet& oracle,
                                       const OracleConfig& cfg, std::string_view prefix) {
  auto real = [&](std::string_view field, double c, double o) {
    return make_record(field_name(prefix, field), c, o, Variant::derived, cfg.rel_tol,
                       cfg.abs_tol);
  };
  return {
      complex_record(field_name(prefix, "mean_A"), closed.mean_A, oracle.mean_A, cfg),
      complex_record(field_name(prefix, "mean_Adag"), closed.mean_Adag, oracle.mean_Adag, cfg),
      complex_record(field_name(prefix, "mean_AA"), closed.mean_AA, oracle.mean_AA, cfg),
      complex_record(field_name(prefix, "mean_AdagAdag"), closed.mean_AdagAdag,
                     oracle.mean_AdagAdag, cfg),
      real("mean_AdagA", closed.mean_AdagA, oracle.mean_AdagA),
      real("mean_AAdag", closed.mean_AAdag, oracle.mean_AAdag),
      real("mean_AdagAAdagA", closed.mean_AdagAAdagA, oracle.mean_AdagAAdagA),
  };
}

std::vector<DiscrepancyRecord> compare(const QuadratureReport& closed,
                                       const QuadratureReport& oracle, const OracleConfig& cfg,
                                       std::string_view prefix) {
  auto real = [&](std::string_view field, double c, double o) {
    return make_record(field_name(prefix, field), c, o, Variant::derived, cfg.rel_tol,
                       cfg.abs_tol);
  };
  return {
      real("var_x", closed.var_X, oracle.var_X),
      real("var_y", closed.var_Y, oracle.var_Y),
      real("g_q", closed.G_q, oracle.G_q),
      real("gur_lhs_sq", closed.gur_lhs_sq, oracle.gur_lhs_sq),
      real("gur_rhs_sq", closed.gur_rhs_sq, oracle.gur_rhs_sq),
      // Margins instead of the flags: a flag can flip on rounding when a
      // variance sits exactly on its bound (coherent states).
      real("y_margin", closed.var_Y - std::sqrt(closed.gur_rhs_sq),
           oracle.var_Y - std::sqrt(oracle.gur_rhs_sq)),
      real("gur_margin", closed.gur_lhs_sq - closed.gur_rhs_sq,
           oracle.gur_lhs_sq - oracle.gur_rhs_sq),
  };
}

std::vector<DiscrepancyRecord> compare(const NumberReport& closed, const NumberReport& oracle,
                                       const OracleConfig& cfg, std::string_view prefix) {
  auto rec = [&](std::string_view field, double c, double o, Variant v) {
    return make_record(field_name(prefix, field), c, o, v, cfg.rel_tol, cfg.abs_tol);
  };
  return {
      rec("mean_n", closed.mean_n, oracle.mean_n, Variant::derived),
      rec("var_n_derived", closed.var_n_derived, oracle.var_n_derived, Variant::derived),
      rec("mandel_derived", closed.mandel_derived, oracle.mandel_derived, Variant::derived),
      rec("F", closed.F, oracle.F, Variant::derived),
      rec("R", closed.R, oracle.R, Variant::derived),
      rec("var_n_paper", closed.var_n_paper, oracle.var_n_derived, Variant::paper),
      rec("mandel_paper", closed.mandel_paper, oracle.mandel_derived, Variant::paper),
  };
}

std::string label(const GridPoint& point) {
  std::string alpha = format_double(point.alpha.real());
  if (point.alpha.imag() != 0.0) {
    alpha += (point.alpha.imag() < 0 ? "-" : "+") + format_double(std::abs(point.alpha.imag())) +
             "i";
  }
  return std::string(to_string(point.kind)) + "[q=" + format_double(point.q) +
         ",alpha=" + alpha + "]";
}

}  // namespace qcat
