#include "qcat/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qcat {

OperatorMatrix::OperatorMatrix(std::size_t dim) : entries_(Storage::Zero(dim, dim)) {
  if (dim == 0) {
    throw std::invalid_argument("operator dimension must be at least 1");
  }
}

OperatorMatrix::OperatorMatrix(Storage entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
    throw std::invalid_argument("operator matrix must be square and non-empty");
  }
}

OperatorMatrix OperatorMatrix::identity(std::size_t dim) {
  return OperatorMatrix(Storage::Identity(dim, dim));
}

OperatorMatrix OperatorMatrix::adjoint() const { return OperatorMatrix(Storage(entries_.adjoint())); }

double OperatorMatrix::norm1() const { return entries_.cwiseAbs().colwise().sum().maxCoeff(); }

std::vector<Complex> OperatorMatrix::apply(std::span<const Complex> vec) const {
  if (vec.size() != dim()) {
    throw DimensionMismatch(dim(), vec.size());
  }
  const Eigen::Map<const Eigen::VectorXcd> in(vec.data(), static_cast<Eigen::Index>(vec.size()));
  std::vector<Complex> out(vec.size());
  Eigen::Map<Eigen::VectorXcd>(out.data(), static_cast<Eigen::Index>(out.size())) = entries_ * in;
  return out;
}

namespace {

void require_same_dim(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(a.dim(), b.dim());
  }
}

}  // namespace

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b);
  return OperatorMatrix(OperatorMatrix::Storage(a.entries_ + b.entries_));
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b);
  return OperatorMatrix(OperatorMatrix::Storage(a.entries_ - b.entries_));
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b);
  return OperatorMatrix(OperatorMatrix::Storage(a.entries_ * b.entries_));
}

OperatorMatrix operator*(Complex s, const OperatorMatrix& m) {
  return OperatorMatrix(OperatorMatrix::Storage(s * m.entries_));
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  return a * b - b * a;
}

LadderSet build_ladder_set(const DeformationParameter& q, std::size_t truncation) {
  if (truncation < 1) {
    throw std::invalid_argument("ladder set needs truncation N >= 1");
  }
  const std::size_t dim = truncation + 1;
  OperatorMatrix a(dim), a_dag(dim), b(dim), b_dag(dim), number(dim);

  const double q2 = q.q_squared();
  double qint = 0.0;  // [n]_q
  for (std::size_t n = 1; n <= truncation; ++n) {
    qint = q.undeformed() ? static_cast<double>(n) : 1.0 + q2 * qint;
    const double root = std::sqrt(qint);
    const double level = static_cast<double>(n);
    a(n - 1, n) = root;
    a_dag(n, n - 1) = root;
    b(n - 1, n) = level / root;
    b_dag(n, n - 1) = level / root;
  }
  for (std::size_t n = 0; n < dim; ++n) {
    number(n, n) = static_cast<double>(n);
  }

  const Complex half(0.5, 0.0);
  const Complex minus_half_i(0.0, -0.5);  // 1/(2i)
  OperatorMatrix x = half * (a + a_dag);
  OperatorMatrix y = minus_half_i * (a - a_dag);
  return LadderSet{q, std::move(a), std::move(a_dag), std::move(b), std::move(b_dag),
                   std::move(number), std::move(x), std::move(y)};
}

double interior_residual(const OperatorMatrix& m, const OperatorMatrix& target) {
  require_same_dim(m, target);
  const Eigen::Index n = static_cast<Eigen::Index>(m.dim()) - 1;
  if (n <= 0) {
    return 0.0;
  }
  return (m.entries() - target.entries()).topLeftCorner(n, n).cwiseAbs().maxCoeff();
}

double q_algebra_residual(const LadderSet& ladders) {
  const OperatorMatrix lhs = ladders.A * ladders.A_dag -
                             Complex(ladders.q.q_squared(), 0.0) * (ladders.A_dag * ladders.A);
  return interior_residual(lhs, OperatorMatrix::identity(ladders.A.dim()));
}

double conjugate_pair_residual(const LadderSet& ladders) {
  return interior_residual(commutator(ladders.A, ladders.B_dag),
                           OperatorMatrix::identity(ladders.A.dim()));
}

double nonlinear_commutator_residual(const DeformationParameter& q, std::size_t truncation) {
  if (truncation < 2) {
    throw std::invalid_argument("nonlinear commutator check needs N >= 2");
  }
  const LadderSet ladders = build_ladder_set(q, truncation);
  // f^2(n) = [n+1]_q / (n+1), so (n+1) f^2(n) - n f^2(n-1) = [n+1]_q - [n]_q.
  auto f_squared = [&](std::size_t n) {
    return q_integer(n + 1, q) / static_cast<double>(n + 1);
  };
  OperatorMatrix expected(truncation + 1);
  for (std::size_t n = 0; n <= truncation; ++n) {
    const double upper = static_cast<double>(n + 1) * f_squared(n);
    const double lower = n == 0 ? 0.0 : static_cast<double>(n) * f_squared(n - 1);
    expected(n, n) = upper - lower;
  }
  return interior_residual(commutator(ladders.A, ladders.A_dag), expected);
}

OperatorMatrix matrix_exponential(const OperatorMatrix& m, double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("matrix exponential tolerance must be positive");
  }
  if (m.dim() > kMaxExponentialDim) {
    throw std::invalid_argument("matrix exponential supports dim <= " +
                                std::to_string(kMaxExponentialDim));
  }
  const double norm = m.norm1();
  if (!std::isfinite(norm) || norm > kMaxExponentialNorm) {
    throw ConvergenceFailure("matrix norm " + std::to_string(norm) + " exceeds the cap " +
                             std::to_string(kMaxExponentialNorm));
  }

  // Scale so the kernel argument has norm <= 1/2, where the Taylor remainder
  // after term k is bounded by 2 * |term_k|.
  int squarings = 0;
  double scaled_norm = norm;
  while (scaled_norm > 0.5) {
    scaled_norm *= 0.5;
    ++squarings;
  }
  const OperatorMatrix::Storage scaled = m.entries() * std::ldexp(1.0, -squarings);

  using Storage = OperatorMatrix::Storage;
  const Eigen::Index dim = static_cast<Eigen::Index>(m.dim());
  Storage sum = Storage::Identity(dim, dim);
  Storage term = Storage::Identity(dim, dim);
  constexpr int kMaxTerms = 60;
  bool converged = scaled_norm == 0.0;
  for (int k = 1; k <= kMaxTerms && !converged; ++k) {
    term = (term * scaled) / static_cast<double>(k);
    sum += term;
    const double term_norm = term.cwiseAbs().colwise().sum().maxCoeff();
    converged = 2.0 * term_norm <= tol * std::max(1.0, sum.cwiseAbs().colwise().sum().maxCoeff());
  }
  if (!converged) {
    throw ConvergenceFailure("Taylor kernel did not reach tolerance");
  }
  for (int i = 0; i < squarings; ++i) {
    sum = (sum * sum).eval();
  }
  return OperatorMatrix(std::move(sum));
}

TruncatedState displacement_vacuum(Complex alpha, const DeformationParameter& q,
                                   std::size_t truncation) {
  const StateSpec spec{alpha, q, StateKind::coherent};
  validate(spec);
  const LadderSet ladders = build_ladder_set(q, truncation);
  const OperatorMatrix generator = alpha * ladders.B_dag - std::conj(alpha) * ladders.A;
  const OperatorMatrix displacement = matrix_exponential(generator);

  std::vector<Complex> coeffs(truncation + 1);
  double norm2 = 0.0;
  for (std::size_t n = 0; n <= truncation; ++n) {
    coeffs[n] = displacement(n, 0);
    norm2 += std::norm(coeffs[n]);
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (Complex& c : coeffs) {
    c *= scale;
  }
  // The displacement route carries no analytic tail information; report the
  // mass of the exact coherent state beyond N.
  return TruncatedState(std::move(coeffs), coherent_coefficients(spec, truncation).tail_residual());
}

}  // namespace qcat
