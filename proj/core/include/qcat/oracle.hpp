#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qcat/observables.hpp"
#include "qcat/operators.hpp"
#include "qcat/states.hpp"

namespace qcat {

/// One validation point. Points outside the normalizable domain are skipped
/// when a grid is built.
struct GridPoint {
  double q = 1.0;
  Complex alpha;
  StateKind kind = StateKind::coherent;

  StateSpec spec() const { return StateSpec{alpha, DeformationParameter(q), kind}; }
};

struct OracleConfig {
  double tol = 1e-16;  ///< truncation tail tolerance for oracle states
  std::vector<GridPoint> grid;
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
};

/// q x alpha x kind product, dropping |alpha|^2 >= radius(q) and the odd cat at
/// alpha = 0.
std::vector<GridPoint> make_grid(const std::vector<double>& qs, const std::vector<double>& alphas,
                                 const std::vector<StateKind>& kinds);

/// q in {0.5, 0.8, 0.9, 0.99, 1} x alpha in {0.3, 0.8, 1.5, 2.1} x all kinds.
std::vector<GridPoint> default_grid();

OracleConfig default_oracle_config();

/// <psi|M|psi>. Throws DimensionMismatch.
Complex expectation(const TruncatedState& state, const OperatorMatrix& m);

/// All seven moments by matrix application only. The fourth moment is
/// ||A^dag (A psi)||^2 so no more than two ladder steps touch the raw state.
MomentSet oracle_moments(const TruncatedState& state, const LadderSet& ladders);

/// Variances from the X and Y matrices; G_q = |<[X,Y]>| / 2.
QuadratureReport oracle_quadratures(const TruncatedState& state, const LadderSet& ladders);

/// Statistics of A^dag A. Both variants hold the oracle value; F is
/// <A^dag A>/|alpha|^2 and R the coefficient overlap <alpha|-alpha>.
NumberReport oracle_number_report(const TruncatedState& state, const LadderSet& ladders,
                                  Complex alpha);

/// <alpha,f|-alpha,f> as an inner product of truncated coherent vectors.
double oracle_overlap(Complex alpha, const DeformationParameter& q, std::size_t truncation);

/// Mandel parameter of the bare number operator from P_n.
double bare_number_mandel(const TruncatedState& state);

/// Oracle-grade truncated state: choose_truncation(spec, cfg.tol, 4).
TruncatedState oracle_state(const StateSpec& spec, double tol);

enum class Variant { paper, derived };

std::string_view to_string(Variant variant) noexcept;

struct DiscrepancyRecord {
  std::string quantity_name;
  double closed_form = 0.0;
  double oracle = 0.0;
  double abs_gap = 0.0;
  double rel_gap = 0.0;
  Variant variant = Variant::derived;
  bool pass = false;
  std::string note;
};

/// Builds one record. pass <=> rel_gap <= rel_tol, or abs_gap <= abs_tol when
/// both magnitudes are below kNearZero.
DiscrepancyRecord make_record(std::string name, double closed_form, double oracle,
                              Variant variant, double rel_tol, double abs_tol);

inline constexpr double kNearZero = 1e-6;

std::vector<DiscrepancyRecord> compare(const MomentSet& closed, const MomentSet& oracle,
                                       const OracleConfig& cfg, std::string_view prefix = {});
std::vector<DiscrepancyRecord> compare(const QuadratureReport& closed,
                                       const QuadratureReport& oracle, const OracleConfig& cfg,
                                       std::string_view prefix = {});
/// Paper-variant fields (var_n_paper, mandel_paper) are compared against the
/// oracle and flagged Variant::paper.
std::vector<DiscrepancyRecord> compare(const NumberReport& closed, const NumberReport& oracle,
                                       const OracleConfig& cfg, std::string_view prefix = {});

/// Human-readable label of a grid point, e.g. "cat-even[q=0.9,alpha=1.5]".
std::string label(const GridPoint& point);

}  // namespace qcat
