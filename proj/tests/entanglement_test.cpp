#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tmsv/entanglement.hpp"

namespace tmsv {
namespace {

const BuildOptions kTight{1e-14, LogBase::two, false};

double plain_entropy(const SchmidtState& s) {
  double h = 0.0;
  for (double w : s.weights()) {
    if (w > 0.0) h -= w * std::log2(w);
  }
  return h;
}

TEST(SchmidtEntropy, ProductStateHasNone) {
  EXPECT_EQ(schmidt_entropy(build_tmsv(0.0)), 0.0);
  EXPECT_EQ(schmidt_entropy(build_added(0.0, 3, 2)), 0.0);
  EXPECT_EQ(schmidt_entropy(build_subtracted(0.0, 3, 2)), 0.0);
}

TEST(SchmidtEntropy, TmsvMatchesClosedForm) {
  EXPECT_EQ(tmsv_entropy_closed(0.0, LogBase::two), 0.0);
  EXPECT_NEAR(tmsv_entropy_closed(0.4, LogBase::e), 0.523416523096837, 1e-14);
  EXPECT_NEAR(tmsv_entropy_closed(0.4, LogBase::two), 0.523416523096837 / std::numbers::ln2, 1e-14);
  for (double lam : {0.05, 0.22, 0.4, 0.6, 0.8, 0.9}) {
    const SchmidtState s = build_tmsv(lam, kTight);
    EXPECT_NEAR(schmidt_entropy(s), tmsv_entropy_closed(lam, LogBase::two), 1e-11) << lam;
  }
}

TEST(SchmidtEntropy, BaseConversion) {
  const SchmidtState bits = build_added(0.4, 2, 1);
  const SchmidtState nats = build_added(0.4, 2, 1, {kDefaultEpsilon, LogBase::e});
  EXPECT_NEAR(schmidt_entropy(nats), schmidt_entropy(bits) * std::numbers::ln2, 1e-14);
}

TEST(SchmidtEntropy, AgreesWithDirectSum) {
  for (double lam : {0.22, 0.4, 0.7}) {
    for (int k = 0; k <= 6; k += 2) {
      for (int l = 0; l <= 6; l += 3) {
        const SchmidtState s = build_added(lam, k, l);
        EXPECT_NEAR(schmidt_entropy(s), plain_entropy(s), 1e-12);
      }
    }
  }
}

TEST(SchmidtEntropy, TruncationBoundCoversTighterEpsilon) {
  for (double lam : {0.22, 0.4, 0.8}) {
    for (OpKind op : {OpKind::add, OpKind::sub}) {
      const SchmidtState coarse = build_state(op, lam, 4, 2);
      const SchmidtState fine = build_state(op, lam, 4, 2, {kDefaultEpsilon / 2});
      const double diff = std::abs(schmidt_entropy(coarse) - schmidt_entropy(fine));
      EXPECT_LT(diff, 1e-8) << lam;
      EXPECT_LE(diff, entropy_truncation_bound(coarse) + 1e-15) << lam;
    }
  }
}

TEST(SchmidtEntropy, SymmetricAdditionRaisesEntanglement) {
  for (double lam : {0.22, 0.4, 0.7}) {
    double previous = schmidt_entropy(build_tmsv(lam));
    for (int k = 1; k <= 8; ++k) {
      const double e = schmidt_entropy(build_added(lam, k, k));
      EXPECT_GT(e, previous) << lam << " " << k;
      previous = e;
    }
  }
}

TEST(SchmidtEntropy, OneModeSubtractionEqualsOneModeAddition) {
  // b^l |TMSV> is proportional to (a^dag)^l |TMSV>, so with no operation on
  // the other mode, subtraction and addition give the same entanglement.
  for (double lam : {0.22, 0.4}) {
    for (int l = 1; l <= 8; ++l) {
      const double sub = schmidt_entropy(build_subtracted(lam, 0, l));
      EXPECT_NEAR(sub, schmidt_entropy(build_added(lam, 0, l)), 1e-13);
      EXPECT_NEAR(sub, schmidt_entropy(build_added(lam, l, 0)), 1e-13);
    }
  }
}

TEST(SchmidtEntropy, AdditionBeatsSubtractionOffTheEdge) {
  for (double lam : {0.22, 0.4}) {
    for (int k = 1; k <= 8; ++k) {
      for (int l = 1; l <= 8; ++l) {
        if (k == l) continue;
        EXPECT_GT(schmidt_entropy(build_added(lam, k, l)), schmidt_entropy(build_subtracted(lam, k, l)))
            << lam << " " << k << " " << l;
      }
    }
  }
}

TEST(SchmidtEntropy, OneModeAdditionRaisesEntanglement) {
  for (double lam : {0.1, 0.5, 0.9}) {
    double previous = schmidt_entropy(build_tmsv(lam));
    for (int k = 1; k <= 10; ++k) {
      const double e = schmidt_entropy(build_added(lam, k, 0));
      EXPECT_GT(e, previous) << lam << " " << k;
      previous = e;
    }
  }
}

TEST(MeanPhotonNumber, TmsvIsTwiceThermal) {
  for (double lam : {0.0, 0.22, 0.4, 0.8}) {
    const double z = lam * lam;
    EXPECT_NEAR(mean_photon_number(build_tmsv(lam, kTight)), 2 * z / (1 - z), 1e-12 * std::max(1.0, 2 * z / (1 - z)));
    EXPECT_NEAR(mean_photon_number_closed(lam, 0, 0, OpKind::tmsv), 2 * z / (1 - z), 1e-13);
  }
}

TEST(MeanPhotonNumber, ProductStatesCountOperations) {
  EXPECT_NEAR(mean_photon_number(build_added(0.0, 3, 2)), 5.0, 1e-15);
  EXPECT_NEAR(mean_photon_number(build_subtracted(0.0, 3, 2)), 1.0, 1e-15);
  EXPECT_NEAR(mean_photon_number_closed(0.0, 3, 2, OpKind::add), 5.0, 1e-15);
  EXPECT_NEAR(mean_photon_number_closed(0.0, 3, 2, OpKind::sub), 1.0, 1e-15);
}

TEST(MeanPhotonNumber, ClosedSumsAgreeWithWeights) {
  for (double lam : {0.22, 0.4, 0.6, 0.8}) {
    for (int k = 0; k <= 10; ++k) {
      for (int l = 0; l <= 10; ++l) {
        for (OpKind op : {OpKind::add, OpKind::sub}) {
          const SchmidtState s = build_state(op, lam, k, l, kTight);
          const double direct = mean_photon_number(s);
          const double closed = mean_photon_number_closed(lam, k, l, op);
          EXPECT_NEAR(direct, closed, 1e-9 * std::max(1.0, closed))
              << to_string(op) << " " << lam << " " << k << " " << l;
        }
      }
    }
  }
}

TEST(MeanPhotonNumber, SubtractionIsDetailedBySingleAnnihilation) {
  // a|TMSV> has weights proportional to n z^n on |n-1, n>, so the total is
  // sum (2n - 1) n z^n / sum n z^n = 2 <n^2>/<n> - 1 over the thermal law.
  for (double lam : {0.22, 0.4, 0.7}) {
    const double x = lam * lam / (1 - lam * lam);
    const double second = x * (2 * x + 1);
    const double expected = 2 * second / x - 1;
    EXPECT_NEAR(mean_photon_number(build_subtracted(lam, 1, 0, kTight)), expected, 1e-10) << lam;
  }
}

TEST(EnergyEfficiency, TmsvIsOptimal) {
  for (double lam : {0.1, 0.4, 0.8}) {
    EXPECT_NEAR(energy_efficiency(build_tmsv(lam, kTight)), 1.0, 1e-10) << lam;
  }
}

TEST(EnergyEfficiency, NeverExceedsOne) {
  for (double lam : {0.22, 0.4, 0.7}) {
    for (int k = 0; k <= 8; ++k) {
      for (int l = 0; l <= 8; ++l) {
        for (OpKind op : {OpKind::add, OpKind::sub}) {
          const SchmidtState s = build_state(op, lam, k, l);
          if (mean_photon_number(s) == 0.0) continue;
          EXPECT_LE(energy_efficiency(s), 1.0 + 1e-9) << to_string(op) << " " << lam << " " << k << " " << l;
        }
      }
    }
  }
}

TEST(EnergyEfficiency, VacuumHasNoDefinedRatio) {
  EXPECT_THROW(energy_efficiency(build_tmsv(0.0)), std::domain_error);
  EXPECT_THROW(energy_efficiency(build_subtracted(0.0, 2, 2)), std::domain_error);
}

TEST(EntanglementReport, FieldsAreConsistent) {
  const SchmidtState s = build_added(0.4, 4, 4);
  const EntanglementReport r = entanglement_report(s);
  EXPECT_EQ(r.base, LogBase::two);
  EXPECT_EQ(r.entropy, schmidt_entropy(s));
  EXPECT_NEAR(r.entropy_tmsv_same_lambda, tmsv_entropy_closed(0.4, LogBase::two), 1e-15);
  EXPECT_NEAR(r.enhancement, r.entropy / r.entropy_tmsv_same_lambda, 1e-15);
  EXPECT_NEAR(r.mean_photons, mean_photon_number(s), 1e-15);
  EXPECT_FALSE(r.efficiency_by_continuity);
  EXPECT_GT(r.enhancement, 1.0);
}

TEST(EntanglementReport, VacuumUsesContinuity) {
  const EntanglementReport r = entanglement_report(build_tmsv(0.0));
  EXPECT_TRUE(r.efficiency_by_continuity);
  EXPECT_EQ(r.efficiency, 1.0);
  EXPECT_TRUE(std::isnan(r.enhancement));
  EXPECT_EQ(r.entropy, 0.0);
}

}  // namespace
}  // namespace tmsv
