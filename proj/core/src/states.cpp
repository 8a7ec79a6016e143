#include "qcat/states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qcat {

namespace {

// Terms beyond this are far below double resolution of any partial sum >= 1.
constexpr double kTailSumTol = 1e-30;

bool parity_allowed(StateKind kind, std::size_t n) {
  switch (kind) {
    case StateKind::coherent:
      return true;
    case StateKind::cat_even:
      return n % 2 == 0;
    case StateKind::cat_odd:
      return n % 2 == 1;
  }
  return true;
}

// Mass of the exact (infinite) state above level N, relative to its total:
// sum_{n>N, allowed} t_n / sum_{allowed} t_n with t_n = x^n/[n]_q!.
double exact_tail_mass(const StateSpec& spec, std::size_t truncation) {
  long double total = 0.0L;
  long double tail = 0.0L;
  walk_q_series(spec.abs_alpha_squared(), spec.q, kTailSumTol,
                [&](std::size_t n, long double term) {
                  if (!parity_allowed(spec.kind, n)) {
                    return;
                  }
                  total += term;
                  if (n > truncation) {
                    tail += term;
                  }
                });
  return total > 0.0L ? static_cast<double>(tail / total) : 0.0;
}

// alpha^n / sqrt([n]_q!) by recurrence, for allowed parities; zero otherwise.
std::vector<Complex> raw_coefficients(const StateSpec& spec, std::size_t truncation) {
  std::vector<Complex> coeffs(truncation + 1, Complex(0.0, 0.0));
  const double q2 = spec.q.q_squared();
  Complex current(1.0, 0.0);
  double qint = 0.0;
  for (std::size_t n = 0; n <= truncation; ++n) {
    if (n > 0) {
      qint = spec.q.undeformed() ? static_cast<double>(n) : 1.0 + q2 * qint;
      current *= spec.alpha / std::sqrt(qint);
    }
    if (parity_allowed(spec.kind, n)) {
      coeffs[n] = current;
    }
  }
  return coeffs;
}

void normalize(std::vector<Complex>& coeffs) {
  double norm2 = 0.0;
  for (const Complex& c : coeffs) {
    norm2 += std::norm(c);
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (Complex& c : coeffs) {
    c *= scale;
  }
}

}  // namespace

std::string_view to_string(StateKind kind) noexcept {
  switch (kind) {
    case StateKind::coherent:
      return "coherent";
    case StateKind::cat_even:
      return "cat-even";
    case StateKind::cat_odd:
      return "cat-odd";
  }
  return "unknown";
}

StateKind parse_state_kind(std::string_view text) {
  if (text == "coherent") return StateKind::coherent;
  if (text == "cat-even") return StateKind::cat_even;
  if (text == "cat-odd") return StateKind::cat_odd;
  throw std::invalid_argument("unknown state kind '" + std::string(text) +
                              "' (expected coherent, cat-even or cat-odd)");
}

void validate(const StateSpec& spec) {
  const double x = spec.abs_alpha_squared();
  if (!std::isfinite(x) || !spec.q.inside_radius(x)) {
    throw NonNormalizable("|alpha|^2 = " + std::to_string(x) +
                          " is not below the radius 1/(1-q^2) = " +
                          std::to_string(spec.q.radius()) + " for q = " +
                          std::to_string(spec.q.q()));
  }
  if (spec.kind == StateKind::cat_odd && x == 0.0) {
    throw NullState("odd cat state with alpha = 0 vanishes identically");
  }
}

TruncatedState::TruncatedState(std::vector<Complex> coeffs, double tail_residual)
    : coeffs_(std::move(coeffs)), tail_residual_(tail_residual) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("truncated state needs at least one level");
  }
}

double TruncatedState::norm_squared() const noexcept {
  double sum = 0.0;
  for (const Complex& c : coeffs_) {
    sum += std::norm(c);
  }
  return sum;
}

std::size_t choose_truncation(const StateSpec& spec, double tol, int moment_order) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("truncation tolerance must be positive");
  }
  if (moment_order < 0) {
    throw std::invalid_argument("moment order must be non-negative");
  }
  validate(spec);

  const double x = spec.abs_alpha_squared();
  const double q2 = spec.q.q_squared();
  double term = 1.0;
  double next_qint = 1.0;
  double allowed_sum = 0.0;
  for (std::size_t n = 0; n < kMaxSeriesTerms; ++n) {
    if (parity_allowed(spec.kind, n)) {
      allowed_sum += term;
    }
    const double ratio = x / next_qint;
    // Tail of the full series bounds the tail of either parity; dividing by
    // the partial normalization sum keeps the bound conservative.
    if (ratio < 1.0 && allowed_sum > 0.0) {
      const double bound = term * ratio / (1.0 - ratio) / allowed_sum;
      if (bound <= tol) {
        return std::max(kMinTruncation, n + static_cast<std::size_t>(moment_order) + 4);
      }
    }
    term = term * x / next_qint;
    next_qint = spec.q.undeformed() ? static_cast<double>(n + 2) : 1.0 + q2 * next_qint;
  }
  throw ConvergenceFailure("no truncation meets tolerance within the series term cap");
}

TruncatedState coherent_coefficients(const StateSpec& spec, std::size_t truncation) {
  if (spec.kind != StateKind::coherent) {
    throw std::invalid_argument("coherent_coefficients needs a coherent StateSpec");
  }
  validate(spec);
  std::vector<Complex> coeffs = raw_coefficients(spec, truncation);
  const QSeriesValue norm2 = q_exponential(spec.abs_alpha_squared(), spec.q);
  const double prefactor = 1.0 / std::sqrt(norm2.value);
  for (Complex& c : coeffs) {
    c *= prefactor;
  }
  normalize(coeffs);
  return TruncatedState(std::move(coeffs), exact_tail_mass(spec, truncation));
}

TruncatedState cat_coefficients(const StateSpec& spec, std::size_t truncation) {
  if (spec.kind == StateKind::coherent) {
    throw std::invalid_argument("cat_coefficients needs a cat-even or cat-odd StateSpec");
  }
  validate(spec);
  std::vector<Complex> coeffs = raw_coefficients(spec, truncation);
  // N_cat^2 N_q^2 = 4 * (parity-restricted part of E_q), so the analytic
  // prefactor is 1/sqrt of that part.
  const ParitySums sums = q_exponential_parity(spec.abs_alpha_squared(), spec.q);
  const double part = spec.kind == StateKind::cat_even ? sums.even : sums.odd;
  const double prefactor = 1.0 / std::sqrt(part);
  for (Complex& c : coeffs) {
    c *= prefactor;
  }
  normalize(coeffs);
  return TruncatedState(std::move(coeffs), exact_tail_mass(spec, truncation));
}

TruncatedState make_state(const StateSpec& spec, std::size_t truncation) {
  return spec.kind == StateKind::coherent ? coherent_coefficients(spec, truncation)
                                          : cat_coefficients(spec, truncation);
}

std::vector<double> photon_distribution(const TruncatedState& state) {
  std::vector<double> probabilities;
  probabilities.reserve(state.dim());
  for (const Complex& c : state.coeffs()) {
    probabilities.push_back(std::norm(c));
  }
  return probabilities;
}

}  // namespace qcat
