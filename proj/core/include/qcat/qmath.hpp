#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

#include "qcat/errors.hpp"

namespace qcat {

/// Default absolute tolerance for every q-series evaluation.
inline constexpr double kDefaultTol = 1e-14;

/// Hard cap on the number of summed terms; reached only extremely close to the
/// radius of convergence.
inline constexpr std::size_t kMaxSeriesTerms = 50'000'000;

/// Deformation parameter q in (0, 1], with tau = ln q and the radius of
/// convergence 1/(1 - q^2) of the q-exponential (infinite at q = 1).
class DeformationParameter {
 public:
  /// Throws std::invalid_argument unless 0 < q <= 1.
  explicit DeformationParameter(double q);

  double q() const noexcept { return q_; }
  double q_squared() const noexcept { return q_ * q_; }
  double tau() const noexcept { return tau_; }
  double radius() const noexcept { return radius_; }
  bool undeformed() const noexcept { return q_ == 1.0; }

  /// True when |x| lies strictly inside the radius of convergence.
  bool inside_radius(double x) const noexcept { return std::abs(x) < radius_; }

  friend bool operator==(const DeformationParameter&, const DeformationParameter&) = default;

 private:
  double q_;
  double tau_;
  double radius_;
};

/// Result of a truncated series summation with its rigorous tail bound.
struct QSeriesValue {
  double value = 0.0;
  std::size_t terms_used = 0;
  double tail_bound = 0.0;
  bool converged = false;
};

/// Sums of the even and odd index terms of E_q(x), i.e. the q-analogues of
/// cosh and sinh. E_q(x) = even + odd and E_q(-x) = even - odd.
struct ParitySums {
  double even = 0.0;
  double odd = 0.0;
  std::size_t terms_used = 0;
  double tail_bound = 0.0;
  bool converged = false;
};

/// [n]_q = sum_{k<n} q^{2k}, evaluated by the recurrence [n+1] = 1 + q^2 [n]
/// (exactly n at q = 1; no 0/0 as q -> 1).
double q_integer(std::size_t n, const DeformationParameter& q);

/// [n]_q! = prod_{k=1..n} [k]_q. Values come from a process-wide memo table
/// keyed by q, safe for concurrent readers. Throws FactorialOverflow.
double q_factorial(std::size_t n, const DeformationParameter& q);

/// Visits the terms x^n/[n]_q! in order and stops once the geometric tail bound
/// term_N * r_N / (1 - r_N), r_N = |x|/[N+1]_q, is at most `tol`. The visitor
/// receives (n, term) with the term in extended precision.
///
/// Throws DivergentSeries when q < 1 and |x| >= radius(q). Returns
/// converged = false only if kMaxSeriesTerms is exhausted.
template <class Visit>
QSeriesValue walk_q_series(double x, const DeformationParameter& q, double tol, Visit&& visit);

/// E_q(x) = sum_n x^n / [n]_q!.
QSeriesValue q_exponential(double x, const DeformationParameter& q, double tol = kDefaultTol);

/// Even/odd split of the E_q(x) series. Used for the cat-state weights
/// F_{q,+-} without forming 1 -+ R by subtraction.
ParitySums q_exponential_parity(double x, const DeformationParameter& q,
                                double tol = kDefaultTol);

/// R(x) = E_q(-x)/E_q(x) = <alpha,f|-alpha,f> for x = |alpha|^2. R(0) = 1 and
/// R = exp(-2x) at q = 1. Throws DivergentSeries outside the radius and
/// ConvergenceFailure if the series cap is hit.
double overlap_ratio(double x, const DeformationParameter& q, double tol = kDefaultTol);

// ---------------------------------------------------------------------------

template <class Visit>
QSeriesValue walk_q_series(double x, const DeformationParameter& q, double tol, Visit&& visit) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("series tolerance must be positive");
  }
  if (!std::isfinite(x)) {
    throw std::invalid_argument("series argument must be finite");
  }
  if (!q.inside_radius(x)) {
    throw DivergentSeries("|x| = " + std::to_string(std::abs(x)) +
                          " is outside the radius of convergence " +
                          std::to_string(q.radius()) + " for q = " + std::to_string(q.q()));
  }

  const long double q2 = q.q_squared();
  const long double ax = std::abs(x);
  long double term = 1.0L;
  long double sum = 0.0L;
  long double next_qint = 1.0L;  // [n+1]_q for the current n

  QSeriesValue out;
  out.tail_bound = std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n < kMaxSeriesTerms; ++n) {
    visit(n, term);
    sum += term;
    const long double ratio = ax / next_qint;
    if (ratio < 1.0L) {
      const long double tail = std::abs(term) * ratio / (1.0L - ratio);
      if (tail <= tol) {
        out.value = static_cast<double>(sum);
        out.terms_used = n + 1;
        out.tail_bound = static_cast<double>(tail);
        out.converged = true;
        return out;
      }
      out.tail_bound = static_cast<double>(tail);
    }
    term = term * x / next_qint;
    next_qint = 1.0L + q2 * next_qint;
  }
  out.value = static_cast<double>(sum);
  out.terms_used = kMaxSeriesTerms;
  return out;
}

}  // namespace qcat
