#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "qcat/qmath.hpp"

namespace qcat {

using Complex = std::complex<double>;

enum class StateKind { coherent, cat_even, cat_odd };

std::string_view to_string(StateKind kind) noexcept;

/// Parses "coherent", "cat-even" or "cat-odd"; throws std::invalid_argument.
StateKind parse_state_kind(std::string_view text);

struct StateSpec {
  Complex alpha;
  DeformationParameter q;
  StateKind kind = StateKind::coherent;

  double abs_alpha_squared() const noexcept { return std::norm(alpha); }
};

/// Throws NonNormalizable if |alpha|^2 >= radius(q) and NullState for an odd
/// cat with alpha = 0.
void validate(const StateSpec& spec);

/// Normalized coefficient vector over Fock levels 0..N. `tail_residual` bounds
/// the probability mass of the exact state above level N.
class TruncatedState {
 public:
  TruncatedState(std::vector<Complex> coeffs, double tail_residual);

  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  const Complex& operator[](std::size_t n) const { return coeffs_[n]; }
  std::size_t dim() const noexcept { return coeffs_.size(); }
  std::size_t truncation() const noexcept { return coeffs_.size() - 1; }
  double tail_residual() const noexcept { return tail_residual_; }
  double norm_squared() const noexcept;

 private:
  std::vector<Complex> coeffs_;
  double tail_residual_;
};

/// Minimum truncation floor returned by choose_truncation.
inline constexpr std::size_t kMinTruncation = 16;

/// Smallest N whose geometric tail bound on sum_{n>N} P_n is <= tol, plus
/// moment_order + 4 padding levels, and never below kMinTruncation.
std::size_t choose_truncation(const StateSpec& spec, double tol, int moment_order);

/// |alpha,f>_q truncated to levels 0..N. `spec.kind` must be coherent.
TruncatedState coherent_coefficients(const StateSpec& spec, std::size_t truncation);

/// Even or odd cat state truncated to levels 0..N. Forbidden-parity
/// coefficients are exactly zero.
TruncatedState cat_coefficients(const StateSpec& spec, std::size_t truncation);

/// Dispatches on spec.kind.
TruncatedState make_state(const StateSpec& spec, std::size_t truncation);

/// P_n = |c_n|^2.
std::vector<double> photon_distribution(const TruncatedState& state);

}  // namespace qcat
