#pragma once

#include <string>
#include <vector>

#include "qcat/oracle.hpp"

namespace qcat::cli {

struct VerifyResult {
  std::vector<DiscrepancyRecord> records;

  bool ok() const;  ///< every derived-variant record passes
  std::vector<DiscrepancyRecord> derived() const;
  /// Failing paper-variant records.
  std::vector<DiscrepancyRecord> paper_discrepancies() const;
};

/// Paper-discrepancy families; each failing paper record carries one of these
/// in its `note`.
inline constexpr const char* kFourthMomentFamily = "cat fourth-moment family";
inline constexpr const char* kOverlapSubstitution = "E_q(-2|alpha|^2) substitution";

/// Parses a grid override such as "q=0.9,1;alpha=0.3,0.8;kind=cat-even".
/// Axes left out keep the default grid's values. Throws std::invalid_argument.
std::vector<GridPoint> parse_grid(const std::string& text);

/// Oracle grid comparison, algebra residuals, displacement cross-check and the
/// q = 1 reduction suite.
VerifyResult run_verify(const OracleConfig& cfg);

std::string render_verify(const VerifyResult& result);

}  // namespace qcat::cli
