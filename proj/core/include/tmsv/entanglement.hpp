#pragma once

#include "tmsv/schmidt_states.hpp"

namespace tmsv {

/// Shannon entropy -sum w log w of the Schmidt weights, in the state's base.
double schmidt_entropy(const SchmidtState& state);

/// Worst-case entropy contribution of the unsummed tail,
/// tail * (1 + |log tail|), in the state's base.
double entropy_truncation_bound(const SchmidtState& state);

/// Entanglement entropy of the TMSV:
///   lambda^2/(1-lambda^2) log(1/lambda^2) + log(1/(1-lambda^2)),  0 at lambda = 0.
double tmsv_entropy_closed(double lambda, LogBase base);

/// <a^dag a + b^dag b> summed over the stored weights.
double mean_photon_number(const SchmidtState& state);

/// Closed-form sum over the original (untruncated) weight index:
///   add:        sum_n n p_n = (1+k)(1+l) z 2F1(k+2, l+2; 2; z) / 2F1(k+1, l+1; 1; z)
///   sub, k>=l:  sum_n n q_n = k + (1+k) z C(1+k, l)/C(k, l)
///                                 * 2F1(k+2, k+2; k-l+2; z) / 2F1(k+1, k+1; k-l+1; z)
/// with z = lambda^2 and the subtraction index n running from max(k, l).
/// For sub with k < l, k and l are exchanged. tmsv behaves as add(0, 0).
double photon_sum_closed(double lambda, double k, double l, OpKind op);

/// Mean photon number from photon_sum_closed, without building the state.
double mean_photon_number_closed(double lambda, double k, double l, OpKind op);

/// E / g(N/2): entanglement relative to a TMSV of equal mean photon number.
/// Throws std::domain_error when N = 0.
double energy_efficiency(const SchmidtState& state);

struct EntanglementReport {
  double entropy = 0.0;
  double entropy_error_bound = 0.0;
  double entropy_tmsv_same_lambda = 0.0;
  /// entropy / entropy_tmsv_same_lambda; NaN when lambda = 0 (0/0).
  double enhancement = 0.0;
  double mean_photons = 0.0;
  double efficiency = 1.0;
  /// Set when N = 0 and the efficiency is the continuity value 1.
  bool efficiency_by_continuity = false;
  LogBase base = LogBase::two;
};

EntanglementReport entanglement_report(const SchmidtState& state);

}  // namespace tmsv
