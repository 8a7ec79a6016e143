#include "qcat/observables.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qcat {

namespace {

Parity to_parity(StateKind kind) {
  return kind == StateKind::cat_odd ? Parity::odd : Parity::even;
}

StateKind to_kind(Parity parity) {
  return parity == Parity::even ? StateKind::cat_even : StateKind::cat_odd;
}

void require_normalizable(Complex alpha, const DeformationParameter& q, StateKind kind) {
  validate(StateSpec{alpha, q, kind});
}

// x * F for a cat state; 0 for the even vacuum.
struct CatWeights {
  double x;
  double F;
  double R;
};

CatWeights cat_weights(Complex alpha, const DeformationParameter& q, Parity parity) {
  require_normalizable(alpha, q, to_kind(parity));
  const double x = std::norm(alpha);
  if (x == 0.0) {
    return {0.0, 0.0, 1.0};
  }
  return {x, cat_weight(x, q, parity), overlap_ratio(x, q)};
}

QuadratureReport assemble_quadratures(double re_alpha_sq2, double number_mean,
                                      const DeformationParameter& q) {
  // re_alpha_sq2 = alpha^2 + conj(alpha)^2, number_mean = <A^dag A>.
  QuadratureReport r;
  r.G_q = 0.25 * (1.0 + (q.q_squared() - 1.0) * number_mean);
  r.var_X = r.G_q + 0.25 * (re_alpha_sq2 + 2.0 * number_mean);
  r.var_Y = r.G_q - 0.25 * (re_alpha_sq2 - 2.0 * number_mean);
  r.gur_lhs_sq = r.var_X * r.var_Y;
  r.gur_rhs_sq = r.G_q * r.G_q;
  r.y_squeezed = r.var_Y < std::sqrt(r.gur_rhs_sq);
  r.gur_satisfied = r.gur_lhs_sq >= r.gur_rhs_sq - kIdentityTol;
  return r;
}

}  // namespace

double cat_weight(double x, const DeformationParameter& q, Parity parity) {
  if (!(x >= 0.0)) {
    throw std::invalid_argument("cat weight needs x >= 0");
  }
  if (x == 0.0) {
    if (parity == Parity::odd) {
      throw NullState("odd cat weight undefined at alpha = 0");
    }
    return 0.0;
  }
  // (1 - R)/(1 + R) = odd/even part of E_q(x): no cancellation for small x.
  // The odd part is at least x, so the tail tolerance is scaled by it to keep
  // the ratio accurate in the relative sense.
  const ParitySums sums = q_exponential_parity(x, q, 1e-17 * std::min(1.0, x));
  if (!sums.converged) {
    throw ConvergenceFailure("E_q parity series did not converge at x = " + std::to_string(x));
  }
  return parity == Parity::even ? sums.odd / sums.even : sums.even / sums.odd;
}

MomentSet coherent_moments(Complex alpha, const DeformationParameter& q) {
  require_normalizable(alpha, q, StateKind::coherent);
  const double x = std::norm(alpha);
  const double q2 = q.q_squared();
  MomentSet m;
  m.mean_A = alpha;
  m.mean_Adag = std::conj(alpha);
  m.mean_AA = alpha * alpha;
  m.mean_AdagAdag = std::conj(alpha * alpha);
  m.mean_AdagA = x;
  m.mean_AAdag = 1.0 + q2 * x;
  m.mean_AdagAAdagA = x + q2 * x * x;
  return m;
}

QuadratureReport coherent_quadratures(Complex alpha, const DeformationParameter& q) {
  require_normalizable(alpha, q, StateKind::coherent);
  // Both variances equal G = {1 + (q^2 - 1)|alpha|^2}/4; computing them from
  // the same expression keeps the saturation identity exact.
  QuadratureReport r;
  const double x = std::norm(alpha);
  r.G_q = 0.25 * (1.0 + (q.q_squared() - 1.0) * x);
  r.var_X = r.G_q;
  r.var_Y = r.G_q;
  r.gur_lhs_sq = r.var_X * r.var_Y;
  r.gur_rhs_sq = r.G_q * r.G_q;
  r.y_squeezed = r.var_Y < std::sqrt(r.gur_rhs_sq);
  r.gur_satisfied = r.gur_lhs_sq >= r.gur_rhs_sq - kIdentityTol;
  return r;
}

double coherent_mandel(Complex alpha, const DeformationParameter& q) {
  require_normalizable(alpha, q, StateKind::coherent);
  const double x = std::norm(alpha);
  if (x == 0.0) {
    throw UndefinedAtVacuum("Mandel parameter is 0/0 for the vacuum");
  }
  return (q.q_squared() - 1.0) * x;
}

NumberReport coherent_number_report(Complex alpha, const DeformationParameter& q) {
  const double mandel = coherent_mandel(alpha, q);
  const double x = std::norm(alpha);
  NumberReport r;
  r.mean_n = x;
  r.var_n_derived = x + (q.q_squared() - 1.0) * x * x;
  r.var_n_paper = r.var_n_derived;
  r.mandel_derived = mandel;
  r.mandel_paper = mandel;
  r.F = 1.0;
  r.R = overlap_ratio(x, q);
  return r;
}

CatMoments cat_moments(Complex alpha, const DeformationParameter& q, Parity parity) {
  const CatWeights w = cat_weights(alpha, q, parity);
  const double q2 = q.q_squared();
  CatMoments out;
  MomentSet& m = out.derived;
  m.mean_A = Complex(0.0, 0.0);
  m.mean_Adag = Complex(0.0, 0.0);
  m.mean_AA = alpha * alpha;
  m.mean_AdagAdag = std::conj(alpha * alpha);
  m.mean_AdagA = w.x * w.F;
  m.mean_AAdag = 1.0 + q2 * w.x * w.F;
  // A|+-> is proportional to the opposite-parity cat, whose weight is 1/F.
  m.mean_AdagAAdagA = w.x * w.F + q2 * w.x * w.x;
  out.fourth_moment_paper = w.x + q2 * w.x * w.x * w.F;
  return out;
}

QuadratureReport cat_quadratures(Complex alpha, const DeformationParameter& q, Parity parity) {
  const CatWeights w = cat_weights(alpha, q, parity);
  const double re_alpha_sq2 = 2.0 * (alpha * alpha).real();
  return assemble_quadratures(re_alpha_sq2, w.x * w.F, q);
}

bool gur_condition(Complex alpha, const DeformationParameter& q, Parity parity) {
  const CatWeights w = cat_weights(alpha, q, parity);
  const double xf = w.x * w.F;
  const double g = 0.25 * (1.0 + (q.q_squared() - 1.0) * xf);
  const double a = 2.0 * (alpha * alpha).real();
  return g * xf + 0.25 * xf * xf >= a * a / 16.0 - kIdentityTol;
}

bool y_squeezing_condition(Complex alpha, const DeformationParameter& q) {
  const CatWeights w = cat_weights(alpha, q, Parity::even);
  const double re = alpha.real();
  const double im = alpha.imag();
  const double a = 2.0 * (alpha * alpha).real();
  const double prefactor = (w.R * re * re - im * im) / (4.0 * (1.0 + w.R));
  const double bracket = a - 2.0 * (1.0 + q.q_squared() * w.x * w.F);
  return prefactor * bracket < 0.0;
}

NumberReport cat_number_report(Complex alpha, const DeformationParameter& q, Parity parity) {
  const CatWeights w = cat_weights(alpha, q, parity);
  if (w.x == 0.0) {
    throw UndefinedAtVacuum("Mandel parameter is 0/0 for the even cat at alpha = 0");
  }
  const double q2 = q.q_squared();
  const double x = w.x;
  const double f = w.F;
  NumberReport r;
  r.F = f;
  r.R = w.R;
  r.mean_n = x * f;
  r.var_n_paper = x * (1.0 + x * f * (q2 - f));
  r.var_n_derived = x * f + q2 * x * x - x * x * f * f;
  r.mandel_paper = 1.0 / f - 1.0 + (q2 - f) * x;
  r.mandel_derived = x * (q2 - f * f) / f;
  return r;
}

double ordinary_mandel(Complex alpha, Parity parity) {
  const double x = std::norm(alpha);
  if (x == 0.0) {
    throw UndefinedAtVacuum("Mandel parameter is 0/0 for the vacuum");
  }
  // 2{x - 1 -+ e^{2x}(1 + x)}/(1 - e^{4x}), multiplied through by u^2 = e^{-4x}.
  const double u = std::exp(-2.0 * x);
  const double sign = parity == Parity::even ? -1.0 : 1.0;
  const double numerator = (x - 1.0) * u * u + sign * u * (1.0 + x);
  return 2.0 * numerator / std::expm1(-4.0 * x);
}

std::optional<double> literal_overlap_series(double x, const DeformationParameter& q) {
  const double argument = -2.0 * x;
  if (!q.inside_radius(argument)) {
    return std::nullopt;
  }
  const QSeriesValue v = q_exponential(argument, q);
  if (!v.converged) {
    return std::nullopt;
  }
  return v.value;
}

IntelligentState intelligent_state_alpha(const DeformationParameter& q, double lo, double hi) {
  if (!(lo > 0.0 && lo < hi) || !q.inside_radius(hi * hi)) {
    throw std::invalid_argument("bracket must satisfy 0 < lo < hi < sqrt(radius(q))");
  }
  auto gap = [&](double a) {
    const QuadratureReport r = cat_quadratures(Complex(a, 0.0), q, Parity::even);
    return r.gur_lhs_sq - r.gur_rhs_sq;
  };

  constexpr int kScanCells = 512;
  double left = lo;
  double g_left = gap(left);
  std::optional<std::pair<double, double>> bracket;
  if (g_left == 0.0) {
    bracket = std::pair{left, left};
  }
  for (int i = 1; i <= kScanCells && !bracket; ++i) {
    const double right = lo + (hi - lo) * i / kScanCells;
    const double g_right = gap(right);
    if (g_right == 0.0 || std::signbit(g_right) != std::signbit(g_left)) {
      bracket = std::pair{left, right};
    }
    left = right;
    g_left = g_right;
  }
  if (!bracket) {
    throw NoRoot("gur_lhs_sq - gur_rhs_sq keeps one sign on [" + std::to_string(lo) + ", " +
                 std::to_string(hi) + "] at q = " + std::to_string(q.q()));
  }

  auto [a, b] = *bracket;
  double g_a = gap(a);
  while (b - a > 1e-10) {
    const double mid = 0.5 * (a + b);
    const double g_mid = gap(mid);
    if (g_mid == 0.0) {
      a = b = mid;
      break;
    }
    if (std::signbit(g_mid) == std::signbit(g_a)) {
      a = mid;
      g_a = g_mid;
    } else {
      b = mid;
    }
  }
  const double root = 0.5 * (a + b);
  return {root, y_squeezing_condition(Complex(root, 0.0), q)};
}

ClosedFormReport closed_form_report(const StateSpec& spec) {
  validate(spec);
  ClosedFormReport report;
  const bool vacuum = spec.abs_alpha_squared() == 0.0;
  if (spec.kind == StateKind::coherent) {
    report.moments = coherent_moments(spec.alpha, spec.q);
    report.quadratures = coherent_quadratures(spec.alpha, spec.q);
    if (!vacuum) {
      report.number = coherent_number_report(spec.alpha, spec.q);
    }
    return report;
  }
  const Parity parity = to_parity(spec.kind);
  const CatMoments cat = cat_moments(spec.alpha, spec.q, parity);
  report.moments = cat.derived;
  report.fourth_moment_paper = cat.fourth_moment_paper;
  report.quadratures = cat_quadratures(spec.alpha, spec.q, parity);
  if (!vacuum) {
    report.number = cat_number_report(spec.alpha, spec.q, parity);
  }
  return report;
}

}  // namespace qcat
