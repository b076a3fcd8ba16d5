#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tmsv/gaussian_lens.hpp"

namespace tmsv {

enum class VerifyLevel { fast, full };

VerifyLevel parse_level(std::string_view text);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Truncation used wherever a truncated state is compared against an
/// untruncated reference at 1e-9; the default 1e-10 tail alone shifts first
/// moments by a few 1e-9.
inline constexpr double kComparisonEpsilon = 1e-14;

using SpectrumFn = std::function<SymplecticSpectrum(const CovarianceNormalForm&)>;

CheckResult check_normalization(VerifyLevel level);
CheckResult check_symmetric_equality(VerifyLevel level);
CheckResult check_monotonicity(VerifyLevel level);
CheckResult check_closed_sums(VerifyLevel level);
CheckResult check_oracle_equivalence(VerifyLevel level);
CheckResult check_one_mode_schemes(VerifyLevel level);
/// Symplectic identities over vacuum, TMSV, and add/sub grids, using
/// `spectrum` for the eigenvalues so an alternative formula can be audited.
CheckResult check_symplectic_identities(VerifyLevel level,
                                        const SpectrumFn& spectrum = symplectic_eigenvalues);
CheckResult check_subtraction_anomaly(VerifyLevel level);

/// Runs every check above in a fixed order.
std::vector<CheckResult> run_verification(VerifyLevel level);

}  // namespace tmsv
