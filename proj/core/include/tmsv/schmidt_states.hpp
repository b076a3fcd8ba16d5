#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "tmsv/special_functions.hpp"

namespace tmsv {

enum class OpKind { tmsv, add, sub };

std::string_view to_string(OpKind op);

inline constexpr double kDefaultEpsilon = 1e-10;

struct BuildOptions {
  double epsilon = kDefaultEpsilon;
  LogBase base = LogBase::two;
  /// Accept real-valued (k, l) via Gamma-function binomials. Such states are
  /// a plotting device, not physical states, and are flagged as such.
  bool continuous = false;
};

/// Two-mode pure state in Schmidt form,
///   sum_m sqrt(w_m) |m + offset_a, m + offset_b>,
/// stored as the truncated weight sequence w_0..w_N plus a rigorous bound on
/// the mass left out. Weights are never renormalized.
class SchmidtState {
 public:
  SchmidtState(double lambda, OpKind op, double k, double l, double offset_a, double offset_b,
               std::vector<double> weights, double tail_bound, LogBase base, bool continuous);

  double lambda() const { return lambda_; }
  OpKind op() const { return op_; }
  double k() const { return k_; }
  double l() const { return l_; }
  double offset_a() const { return offset_a_; }
  double offset_b() const { return offset_b_; }
  std::span<const double> weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  double tail_bound() const { return tail_bound_; }
  LogBase base() const { return base_; }
  bool continuous() const { return continuous_; }

  /// Sum of the stored weights (1 - tail, up to rounding).
  double total_weight() const;

 private:
  double lambda_;
  OpKind op_;
  double k_;
  double l_;
  double offset_a_;
  double offset_b_;
  std::vector<double> weights_;
  double tail_bound_;
  LogBase base_;
  bool continuous_;
};

/// w_n = (1 - lambda^2) lambda^{2n}.
SchmidtState build_tmsv(double lambda, const BuildOptions& opts = {});

/// k photons added on mode A and l on mode B:
///   w_n = lambda^{2n} C(n+k, k) C(n+l, l) / 2F1(k+1, l+1; 1; lambda^2),
/// terms |n+k, n+l>.
SchmidtState build_added(double lambda, double k, double l, const BuildOptions& opts = {});

/// k photons subtracted on mode A and l on mode B. For k >= l, with m = n - k,
///   w_m = lambda^{2m} C(m+k, k) C(m+k, l) / C(k, l) / 2F1(k+1, k+1; 1+k-l; lambda^2),
/// terms |m, m+k-l>. For k < l the roles of the modes are exchanged.
SchmidtState build_subtracted(double lambda, double k, double l, const BuildOptions& opts = {});

SchmidtState build_state(OpKind op, double lambda, double k, double l,
                         const BuildOptions& opts = {});

/// Weight of the one-mode state (k photons added on A, or subtracted on B):
///   p_n^{(k)} = (1 - lambda^2)^{k+1} lambda^{2n} C(n+k, n),  p_{-1} = 0.
/// Evaluated directly in the log domain, independent of the builders.
double one_mode_weight(double lambda, int k, int n);

/// p_n^{(k+1)} - lambda^2 p_{n-1}^{(k+1)} - (1 - lambda^2) p_n^{(k)}; zero by
/// Pascal's rule.
double pascal_recursion_residual(double lambda, int k, int n);

}  // namespace tmsv
