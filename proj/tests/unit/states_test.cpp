#include <gtest/gtest.h>

#include <cmath>

#include "qcat/operators.hpp"
#include "qcat/states.hpp"

namespace qcat {
namespace {

// 1/sqrt([2]_q! E_q(1)) at q = 0.9, from tests/reference/compute_reference.py.
constexpr double kCoherentC2At09 = 0.43793851468286824679;

StateSpec spec(double alpha, double q, StateKind kind) {
  return StateSpec{Complex(alpha, 0.0), DeformationParameter(q), kind};
}

// Exact tail mass beyond N by brute-force summation of the series, used to
// check the truncation bound independently of choose_truncation.
double brute_force_tail(double x, double q, std::size_t truncation) {
  double term = 1.0;
  double total = 0.0;
  double tail = 0.0;
  double qint = 0.0;
  for (std::size_t n = 0; n < 20000; ++n) {
    if (n > 0) {
      qint = 1.0 + q * q * qint;
      term *= x / qint;
    }
    total += term;
    if (n > truncation) tail += term;
  }
  return tail / total;
}

TEST(StateKind, ParseRoundTrip) {
  for (StateKind k : {StateKind::coherent, StateKind::cat_even, StateKind::cat_odd}) {
    EXPECT_EQ(parse_state_kind(to_string(k)), k);
  }
  EXPECT_THROW(parse_state_kind("cat"), std::invalid_argument);
}

TEST(ChooseTruncation, VacuumHitsFloor) {
  EXPECT_EQ(choose_truncation(spec(0.0, 1.0, StateKind::coherent), 1e-12, 0), 16u);
  EXPECT_EQ(choose_truncation(spec(0.0, 0.5, StateKind::cat_even), 1e-12, 4), 16u);
}

TEST(ChooseTruncation, TailBoundVerifiedByBruteForce) {
  const StateSpec s = spec(2.1, 0.9, StateKind::coherent);
  const std::size_t n = choose_truncation(s, 1e-12, 4);
  // Undo the padding: the unpadded level must already meet the tolerance.
  EXPECT_LE(brute_force_tail(4.41, 0.9, n - 8), 1e-12);
  const TruncatedState state = coherent_coefficients(s, n);
  EXPECT_LE(state.tail_residual(), 1e-12);
  EXPECT_NEAR(state.tail_residual(), brute_force_tail(4.41, 0.9, n), 1e-20);
}

TEST(ChooseTruncation, Errors) {
  const DeformationParameter q(0.9);
  const StateSpec boundary{Complex(std::sqrt(q.radius()), 0.0), q, StateKind::coherent};
  EXPECT_THROW(choose_truncation(boundary, 1e-12, 0), NonNormalizable);
  EXPECT_THROW(choose_truncation(spec(0.0, 0.9, StateKind::cat_odd), 1e-12, 0), NullState);
  EXPECT_THROW(choose_truncation(spec(1.0, 0.9, StateKind::coherent), 0.0, 0), std::invalid_argument);
}

TEST(CoherentCoefficients, Vacuum) {
  const TruncatedState s = coherent_coefficients(spec(0.0, 0.7, StateKind::coherent), 16);
  EXPECT_EQ(s[0], Complex(1.0, 0.0));
  for (std::size_t n = 1; n < s.dim(); ++n) EXPECT_EQ(s[n], Complex(0.0, 0.0));
  EXPECT_EQ(s.tail_residual(), 0.0);
}

TEST(CoherentCoefficients, GlauberState) {
  const TruncatedState s = coherent_coefficients(spec(1.0, 1.0, StateKind::coherent), 40);
  double factorial = 1.0;
  for (std::size_t n = 0; n < s.dim(); ++n) {
    if (n > 0) factorial *= static_cast<double>(n);
    EXPECT_NEAR(s[n].real(), std::exp(-0.5) / std::sqrt(factorial), 1e-15) << n;
  }
}

TEST(CoherentCoefficients, DeformedFrozenValue) {
  const TruncatedState s = coherent_coefficients(spec(1.0, 0.9, StateKind::coherent), 80);
  EXPECT_NEAR(s[2].real(), kCoherentC2At09, 1e-14);
  EXPECT_NEAR(s[2].real(), 0.4380, 1e-4);
}

TEST(CoherentCoefficients, EigenvectorOfLadder) {
  for (const Complex alpha : {Complex(0.7, 0.0), Complex(1.1, -0.6), Complex(0.0, 1.9)}) {
    const StateSpec s{alpha, DeformationParameter(0.9), StateKind::coherent};
    const std::size_t n = choose_truncation(s, 1e-14, 4);
    const TruncatedState state = coherent_coefficients(s, n);
    const LadderSet ladders = build_ladder_set(s.q, n);
    const std::vector<Complex> a_psi = ladders.A.apply(state.coeffs());
    double err2 = 0.0;
    for (std::size_t k = 0; k < n; ++k) err2 += std::norm(a_psi[k] - alpha * state[k]);
    EXPECT_LE(std::sqrt(err2), 1e-10);
  }
}

TEST(CatCoefficients, EvenVacuum) {
  const TruncatedState s = cat_coefficients(spec(0.0, 0.9, StateKind::cat_even), 16);
  EXPECT_EQ(s[0], Complex(1.0, 0.0));
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-15);
}

TEST(CatCoefficients, OddRatioIndependentOfNormalization) {
  const TruncatedState s = cat_coefficients(spec(0.8, 1.0, StateKind::cat_odd), 32);
  EXPECT_NEAR(s[1].real() / s[3].real(), std::sqrt(6.0) / 0.64, 1e-13);
}

TEST(CatCoefficients, EvenParityAndNorm) {
  const StateSpec s = spec(1.8, 0.9, StateKind::cat_even);
  const TruncatedState state = cat_coefficients(s, choose_truncation(s, 1e-14, 4));
  EXPECT_NEAR(state.norm_squared(), 1.0, 1e-12);
  for (std::size_t n = 1; n < state.dim(); n += 2) {
    EXPECT_EQ(state[n].real(), 0.0);
    EXPECT_EQ(state[n].imag(), 0.0);
  }
}

TEST(CatCoefficients, OddParityExactZeros) {
  const StateSpec s{Complex(0.4, 1.3), DeformationParameter(0.95), StateKind::cat_odd};
  const TruncatedState state = cat_coefficients(s, choose_truncation(s, 1e-14, 4));
  for (std::size_t n = 0; n < state.dim(); n += 2) {
    EXPECT_EQ(state[n], Complex(0.0, 0.0));
  }
}

TEST(CatCoefficients, NullOddState) {
  EXPECT_THROW(cat_coefficients(spec(0.0, 0.9, StateKind::cat_odd), 16), NullState);
}

TEST(CatCoefficients, NonNormalizable) {
  EXPECT_THROW(cat_coefficients(spec(2.4, 0.9, StateKind::cat_even), 16), NonNormalizable);
  EXPECT_THROW(coherent_coefficients(spec(2.4, 0.9, StateKind::coherent), 16), NonNormalizable);
}

TEST(CatCoefficients, EigenstateOfLadderSquared) {
  for (StateKind kind : {StateKind::cat_even, StateKind::cat_odd}) {
    const StateSpec s{Complex(1.2, 0.4), DeformationParameter(0.85), kind};
    const std::size_t n = choose_truncation(s, 1e-14, 4);
    const TruncatedState state = cat_coefficients(s, n);
    const LadderSet ladders = build_ladder_set(s.q, n);
    const std::vector<Complex> a2 = ladders.A.apply(ladders.A.apply(state.coeffs()));
    const Complex alpha2 = s.alpha * s.alpha;
    double err2 = 0.0;
    for (std::size_t k = 0; k + 1 < n; ++k) err2 += std::norm(a2[k] - alpha2 * state[k]);
    EXPECT_LE(std::sqrt(err2), 1e-9);
  }
}

TEST(CatCoefficients, OverlapMatchesRatio) {
  for (double qv : {0.6, 0.9, 1.0}) {
    const DeformationParameter q(qv);
    const double alpha = 0.9;
    const StateSpec plus{Complex(alpha, 0.0), q, StateKind::coherent};
    const StateSpec minus{Complex(-alpha, 0.0), q, StateKind::coherent};
    const std::size_t n = choose_truncation(plus, 1e-16, 0);
    const TruncatedState a = coherent_coefficients(plus, n);
    const TruncatedState b = coherent_coefficients(minus, n);
    Complex inner(0.0, 0.0);
    for (std::size_t k = 0; k < a.dim(); ++k) inner += std::conj(a[k]) * b[k];
    EXPECT_NEAR(inner.real(), overlap_ratio(alpha * alpha, q), 1e-10);
  }
}

TEST(PhotonDistribution, VacuumAndPoisson) {
  const std::vector<double> vac =
      photon_distribution(coherent_coefficients(spec(0.0, 1.0, StateKind::coherent), 16));
  EXPECT_EQ(vac[0], 1.0);
  for (std::size_t n = 1; n < vac.size(); ++n) EXPECT_EQ(vac[n], 0.0);

  const std::vector<double> p =
      photon_distribution(coherent_coefficients(spec(1.0, 1.0, StateKind::coherent), 40));
  double factorial = 1.0;
  for (std::size_t n = 0; n < p.size(); ++n) {
    if (n > 0) factorial *= static_cast<double>(n);
    EXPECT_NEAR(p[n], std::exp(-1.0) / factorial, 1e-15);
  }
}

TEST(PhotonDistribution, EvenCatOscillates) {
  const StateSpec s = spec(2.1, 0.9, StateKind::cat_even);
  const TruncatedState state = cat_coefficients(s, choose_truncation(s, 1e-12, 0));
  const std::vector<double> p = photon_distribution(state);
  double total = 0.0;
  for (std::size_t n = 0; n < p.size(); ++n) {
    total += p[n];
    if (n % 2 == 1) EXPECT_EQ(p[n], 0.0);
  }
  EXPECT_GE(total, 1.0 - state.tail_residual());
  EXPECT_GT(p[4], 0.0);
}

TEST(TruncatedState, NormInvariant) {
  for (double qv : {0.5, 0.9, 1.0}) {
    const DeformationParameter q(qv);
    for (StateKind kind : {StateKind::coherent, StateKind::cat_even, StateKind::cat_odd}) {
      const StateSpec s{Complex(0.7, 0.2), q, kind};
      const TruncatedState state = make_state(s, choose_truncation(s, 1e-12, 0));
      const double norm2 = state.norm_squared();
      EXPECT_GE(norm2, 1.0 - state.tail_residual() - 1e-15);
      EXPECT_LE(norm2, 1.0 + 1e-12);
    }
  }
}

}  // namespace
}  // namespace qcat
