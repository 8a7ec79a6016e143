#pragma once

#include <string>
#include <vector>

#include "cli/table.hpp"
#include "qcat/observables.hpp"

namespace qcat::cli {

enum class SweepVariable { alpha, q };

SweepVariable parse_sweep_variable(const std::string& text);

struct SweepSpec {
  SweepVariable variable = SweepVariable::alpha;
  double from = 0.0;
  double to = 1.0;
  int steps = 2;
  double fixed_q = 0.9;      ///< used when sweeping alpha
  double fixed_alpha = 0.8;  ///< real alpha, used when sweeping q
  StateKind kind = StateKind::cat_even;
  std::vector<std::string> outputs;
};

/// Quantity names accepted in SweepSpec::outputs, in canonical order. `p_<n>`
/// (photon probability at level n) is accepted in addition.
const std::vector<std::string>& known_outputs();
const std::vector<std::string>& default_outputs();

/// Lower-cases and resolves aliases (gur_lhs -> gur_lhs_sq, ...). Throws
/// std::invalid_argument for unknown names.
std::string canonical_output(const std::string& name);

/// Throws std::invalid_argument for steps < 2, from >= to, or q outside (0, 1].
void check_sweep(const SweepSpec& spec);

/// from + (to - from) i / (steps - 1), with the last point exactly `to`.
std::vector<double> sweep_points(double from, double to, int steps);

/// Evaluates one quantity at one state. Domain problems come back as a reason
/// code (NonNormalizable, NullState, UndefinedAtVacuum, NotApplicable).
Cell evaluate_output(const StateSpec& spec, const std::string& output);

/// One row per step; the first column is the swept variable.
Table run_sweep(const SweepSpec& spec);

}  // namespace qcat::cli
