// Randomized invariants over the valid (alpha, q) domain.
#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qcat/observables.hpp"
#include "qcat/oracle.hpp"

namespace qcat {
namespace {

struct Sampler {
  std::mt19937_64 rng;
  std::uniform_real_distribution<double> unit{0.0, 1.0};

  explicit Sampler(std::uint64_t seed) : rng(seed) {}

  DeformationParameter q(double lo = 0.3) { return DeformationParameter(lo + (1.0 - lo) * unit(rng)); }

  // |alpha|^2 uniformly below min(radius, cap) * fill, random phase.
  Complex alpha(const DeformationParameter& q, double cap = 6.0, double fill = 0.95) {
    const double x = fill * std::min(q.radius(), cap) * unit(rng);
    const double phase = 2.0 * M_PI * unit(rng);
    return std::polar(std::sqrt(x), phase);
  }
};

TEST(Properties, CoherentStatesSaturateTheGur) {
  Sampler s(2024);
  for (int i = 0; i < 1000; ++i) {
    const DeformationParameter q = s.q(0.05);
    const Complex alpha = s.alpha(q, 50.0, 0.999);
    const QuadratureReport r = coherent_quadratures(alpha, q);
    EXPECT_LE(std::abs(r.gur_lhs_sq - r.gur_rhs_sq), 1e-14);
    EXPECT_LE(std::abs(r.var_X - r.var_Y), 1e-14);
  }
}

TEST(Properties, GurConditionMatchesRobertson) {
  // The printed condition and the variance form lhs^2 >= rhs^2 agree.
  Sampler s(99);
  for (int i = 0; i < 10000; ++i) {
    const DeformationParameter q = s.q();
    const Parity p = i % 2 == 0 ? Parity::even : Parity::odd;
    Complex alpha = s.alpha(q);
    if (std::norm(alpha) < 1e-6) alpha = Complex(1e-3, 0.0);
    const QuadratureReport r = cat_quadratures(alpha, q, p);
    EXPECT_TRUE(gur_condition(alpha, q, p));
    EXPECT_GE(r.gur_lhs_sq, r.gur_rhs_sq - 1e-12);
    EXPECT_TRUE(r.gur_satisfied);
  }
}

TEST(Properties, OverlapAndWeightsInRange) {
  Sampler s(5);
  for (int i = 0; i < 2000; ++i) {
    const DeformationParameter q = s.q();
    const double x = std::norm(s.alpha(q));
    if (x == 0.0) continue;
    const double r = overlap_ratio(x, q);
    EXPECT_GT(r, 0.0);
    EXPECT_LT(r, 1.0);
    const double fe = cat_weight(x, q, Parity::even);
    const double fo = cat_weight(x, q, Parity::odd);
    EXPECT_LT(fe, 1.0);
    EXPECT_GT(fo, 1.0);
    EXPECT_NEAR(fe * fo, 1.0, 1e-12);
  }
}

TEST(Properties, GCoincidesWithAlgebraForm) {
  Sampler s(77);
  for (int i = 0; i < 2000; ++i) {
    const DeformationParameter q = s.q();
    const Complex alpha = s.alpha(q);
    const Parity p = i % 2 == 0 ? Parity::even : Parity::odd;
    if (p == Parity::odd && std::norm(alpha) < 1e-6) continue;
    const CatMoments m = cat_moments(alpha, q, p);
    const QuadratureReport r = cat_quadratures(alpha, q, p);
    EXPECT_NEAR(r.G_q, 0.25 * (1.0 + (q.q_squared() - 1.0) * m.derived.mean_AdagA), 1e-14);
    EXPECT_NEAR(m.derived.mean_AAdag - q.q_squared() * m.derived.mean_AdagA, 1.0, 1e-12);
    EXPECT_GE(m.derived.mean_AdagAAdagA, m.derived.mean_AdagA * m.derived.mean_AdagA - 1e-12);
  }
}

TEST(Properties, CoherentMandelIsSubPoissonianWhenDeformed) {
  Sampler s(3);
  for (int i = 0; i < 1000; ++i) {
    const DeformationParameter q(0.05 + 0.9499 * s.unit(s.rng));
    Complex alpha = s.alpha(q);
    if (std::norm(alpha) == 0.0) continue;
    EXPECT_LT(coherent_mandel(alpha, q), 0.0);
  }
}

TEST(Properties, OddCatMandelNegative) {
  Sampler s(11);
  for (int i = 0; i < 2000; ++i) {
    const DeformationParameter q = s.q();
    const Complex alpha = s.alpha(q);
    if (std::norm(alpha) < 1e-8) continue;
    EXPECT_LT(cat_number_report(alpha, q, Parity::odd).mandel_derived, 0.0);
  }
}

TEST(Properties, OracleAgreesOnRandomPoints) {
  Sampler s(123);
  for (int i = 0; i < 40; ++i) {
    const DeformationParameter q = s.q(0.5);
    const Complex alpha = s.alpha(q, 4.0, 0.9);
    const StateKind kind = static_cast<StateKind>(i % 3);
    if (kind == StateKind::cat_odd && std::norm(alpha) < 1e-4) continue;
    const StateSpec spec{alpha, q, kind};
    const TruncatedState state = oracle_state(spec, 1e-16);
    const LadderSet l = build_ladder_set(q, state.truncation());
    const ClosedFormReport closed = closed_form_report(spec);
    for (const auto& rec : compare(closed.moments, oracle_moments(state, l), OracleConfig{})) {
      EXPECT_TRUE(rec.pass) << rec.quantity_name << " q=" << q.q() << " alpha=" << alpha;
    }
  }
}

TEST(Properties, SqueezingFlagMatchesVarianceDefinition) {
  Sampler s(8);
  for (int i = 0; i < 2000; ++i) {
    const DeformationParameter q = s.q();
    const Complex alpha = s.alpha(q);
    const QuadratureReport r = cat_quadratures(alpha, q, Parity::even);
    if (std::abs(r.var_Y - r.G_q) > 1e-12) EXPECT_EQ(r.y_squeezed, r.var_Y < r.G_q);
  }
}

}  // namespace
}  // namespace qcat
