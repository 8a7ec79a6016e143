#pragma once

#include <optional>

#include "qcat/qmath.hpp"
#include "qcat/states.hpp"

namespace qcat {

enum class Parity { even, odd };

/// The expectation values needed for quadrature and photon-number statistics.
struct MomentSet {
  Complex mean_A;
  Complex mean_Adag;
  Complex mean_AA;
  Complex mean_AdagAdag;
  double mean_AdagA = 0.0;
  double mean_AAdag = 0.0;
  double mean_AdagAAdagA = 0.0;
};

/// Cat-state moments. `derived` is the first-principles set (fourth moment
/// |a|^2 F + q^2 |a|^4); `fourth_moment_paper` is the printed
/// |a|^2 + q^2 |a|^4 F, kept for the discrepancy report.
struct CatMoments {
  MomentSet derived;
  double fourth_moment_paper = 0.0;
};

struct QuadratureReport {
  double var_X = 0.0;
  double var_Y = 0.0;
  double G_q = 0.0;
  double gur_lhs_sq = 0.0;
  double gur_rhs_sq = 0.0;
  bool y_squeezed = false;
  bool gur_satisfied = false;
};

struct NumberReport {
  double mean_n = 0.0;
  double var_n_paper = 0.0;
  double var_n_derived = 0.0;
  double mandel_paper = 0.0;
  double mandel_derived = 0.0;
  double F = 1.0;  ///< F_{q,+-}; 1 for coherent states
  double R = 1.0;  ///< overlap ratio <alpha,f|-alpha,f>
};

/// Slack allowed in the GUR and squeezing predicates.
inline constexpr double kIdentityTol = 1e-12;

/// Cat weight F_{q,+} = (1-R)/(1+R) or F_{q,-} = (1+R)/(1-R), evaluated from
/// the even/odd halves of the E_q series. Requires x > 0 for odd parity.
double cat_weight(double x, const DeformationParameter& q, Parity parity);

MomentSet coherent_moments(Complex alpha, const DeformationParameter& q);
QuadratureReport coherent_quadratures(Complex alpha, const DeformationParameter& q);
/// Q_q = (q^2 - 1)|alpha|^2. Throws UndefinedAtVacuum at alpha = 0.
double coherent_mandel(Complex alpha, const DeformationParameter& q);
/// Number statistics of |alpha,f>; both variants coincide. Throws
/// UndefinedAtVacuum at alpha = 0.
NumberReport coherent_number_report(Complex alpha, const DeformationParameter& q);

CatMoments cat_moments(Complex alpha, const DeformationParameter& q, Parity parity);
QuadratureReport cat_quadratures(Complex alpha, const DeformationParameter& q, Parity parity);

/// G |a|^2 F + |a|^4 F^2 / 4 >= (a^2 + conj(a)^2)^2 / 16, evaluated as printed.
bool gur_condition(Complex alpha, const DeformationParameter& q, Parity parity);

/// Printed Y-squeezing inequality for even cats, with R in place of
/// E_q(-2|alpha|^2).
bool y_squeezing_condition(Complex alpha, const DeformationParameter& q);

/// Photon-number statistics of A^dag A for a cat state. Paper variant:
/// (dn)^2 = |a|^2 {1 + |a|^2 F (q^2 - F)}, Q = 1/F - 1 + (q^2 - F)|a|^2.
/// Derived variant: Q = |a|^2 (q^2 - F^2) / F. Throws UndefinedAtVacuum.
NumberReport cat_number_report(Complex alpha, const DeformationParameter& q, Parity parity);

/// Mandel parameter of ordinary (q = 1) cat states in the printed closed form,
/// evaluated without overflow for large |alpha|.
double ordinary_mandel(Complex alpha, Parity parity);

/// The literal series E_q(-2|alpha|^2), when it converges.
std::optional<double> literal_overlap_series(double x, const DeformationParameter& q);

struct IntelligentState {
  double alpha = 0.0;
  bool y_squeezed = false;
};

/// Root in [lo, hi] of gur_lhs_sq - gur_rhs_sq for real-alpha even cats,
/// located by a sign scan and bisection to 1e-10. Throws NoRoot.
IntelligentState intelligent_state_alpha(const DeformationParameter& q, double lo, double hi);

/// Closed-form summary of one state, as surfaced by the CLI.
struct ClosedFormReport {
  MomentSet moments;
  std::optional<double> fourth_moment_paper;  ///< cats only
  QuadratureReport quadratures;
  std::optional<NumberReport> number;  ///< absent at the vacuum
};

ClosedFormReport closed_form_report(const StateSpec& spec);

}  // namespace qcat
