#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qcat/qmath.hpp"
#include "qcat/states.hpp"

namespace qcat {

/// Dense square operator on the truncated Fock space. Entry (row, col) maps
/// input level `col` to output level `row`.
class OperatorMatrix {
 public:
  using Storage = Eigen::MatrixXcd;

  explicit OperatorMatrix(std::size_t dim);
  explicit OperatorMatrix(Storage entries);

  static OperatorMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  const Storage& entries() const noexcept { return entries_; }

  Complex operator()(std::size_t row, std::size_t col) const { return entries_(row, col); }
  Complex& operator()(std::size_t row, std::size_t col) { return entries_(row, col); }

  OperatorMatrix adjoint() const;
  /// Maximum absolute column sum.
  double norm1() const;

  /// Matrix-vector product; throws DimensionMismatch.
  std::vector<Complex> apply(std::span<const Complex> vec) const;

  friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator*(Complex s, const OperatorMatrix& m);

 private:
  Storage entries_;
};

/// Commutator ab - ba.
OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

/// Deformed ladder operators, their canonical conjugates and the quadratures
/// on levels 0..N, with f(n) = sqrt([n+1]_q / (n+1)).
struct LadderSet {
  DeformationParameter q;
  OperatorMatrix A;
  OperatorMatrix A_dag;
  OperatorMatrix B;
  OperatorMatrix B_dag;
  OperatorMatrix number;
  OperatorMatrix X;
  OperatorMatrix Y;

  std::size_t truncation() const noexcept { return A.dim() - 1; }
};

/// Requires N >= 1.
LadderSet build_ladder_set(const DeformationParameter& q, std::size_t truncation);

/// Largest |entry| of `m - target` over rows/cols 0..N-1 (the last level is
/// where truncation breaks the infinite-dimensional identities).
double interior_residual(const OperatorMatrix& m, const OperatorMatrix& target);

/// max interior |A A^dag - q^2 A^dag A - I|.
double q_algebra_residual(const LadderSet& ladders);

/// max interior |[A, B^dag] - I|.
double conjugate_pair_residual(const LadderSet& ladders);

/// max interior deviation of [A, A^dag] from diag((n+1) f^2(n) - n f^2(n-1)).
/// Requires N >= 2.
double nonlinear_commutator_residual(const DeformationParameter& q, std::size_t truncation);

/// Largest norm1 accepted by matrix_exponential.
inline constexpr double kMaxExponentialNorm = 50.0;
inline constexpr std::size_t kMaxExponentialDim = 512;

/// exp(M) by scaling and squaring around a Taylor kernel. Throws
/// ConvergenceFailure if ||M||_1 > kMaxExponentialNorm or the kernel does not
/// reach `tol`; std::invalid_argument if dim > kMaxExponentialDim.
OperatorMatrix matrix_exponential(const OperatorMatrix& m, double tol = kDefaultTol);

/// exp(alpha B^dag - conj(alpha) A)|0>, renormalized; an independent route
/// to the coherent state.
TruncatedState displacement_vacuum(Complex alpha, const DeformationParameter& q,
                                   std::size_t truncation);

}  // namespace qcat
