#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "tmsv/verify.hpp"

namespace tmsv {
namespace {

TEST(Verify, ParseLevel) {
  EXPECT_EQ(parse_level("fast"), VerifyLevel::fast);
  EXPECT_EQ(parse_level("full"), VerifyLevel::full);
  EXPECT_THROW(parse_level("slow"), std::invalid_argument);
}

TEST(Verify, FastBatteryPasses) {
  const std::vector<CheckResult> results = run_verification(VerifyLevel::fast);
  EXPECT_EQ(results.size(), 8u);
  for (const CheckResult& r : results) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
}

TEST(Verify, FullBatteryPasses) {
  for (const CheckResult& r : run_verification(VerifyLevel::full)) {
    EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
  }
}

TEST(Verify, SymplecticCheckCatchesQuarteredAsymmetry) {
  // Using |alpha - beta| / 4 instead of / 2 mislabels nu_pm whenever
  // alpha != beta; the identity checks have to notice.
  const SpectrumFn quartered = [](const CovarianceNormalForm& c) {
    const double mean = 0.5 * (c.alpha + c.beta);
    const double root = std::sqrt(mean * mean - c.gamma * c.gamma);
    const double d = 0.25 * std::abs(c.alpha - c.beta);
    return SymplecticSpectrum{root + d, root - d};
  };
  EXPECT_FALSE(check_symplectic_identities(VerifyLevel::fast, quartered).passed);
  EXPECT_TRUE(check_symplectic_identities(VerifyLevel::fast).passed);
}

TEST(Verify, SymplecticCheckCatchesSwappedSign) {
  const SpectrumFn swapped = [](const CovarianceNormalForm& c) {
    const SymplecticSpectrum s = symplectic_eigenvalues(c);
    return SymplecticSpectrum{s.nu_minus, s.nu_plus};
  };
  EXPECT_FALSE(check_symplectic_identities(VerifyLevel::fast, swapped).passed);
}

TEST(Verify, DetailsAreFilled) {
  const CheckResult r = check_normalization(VerifyLevel::fast);
  EXPECT_FALSE(r.name.empty());
  EXPECT_NE(r.detail.find("max dev"), std::string::npos);
}

}  // namespace
}  // namespace tmsv
