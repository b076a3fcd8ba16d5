#include "tmsv/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tmsv {

namespace {

double in_base(double nats, LogBase base) {
  return base == LogBase::two ? nats / std::numbers::ln2 : nats;
}

double series(double a, double b, double c, double z) {
  const SeriesResult f = gauss_2f1(a, b, c, z);
  if (!f.converged) throw std::runtime_error("hypergeometric moment sum did not converge");
  return f.value;
}

}  // namespace

double schmidt_entropy(const SchmidtState& state) {
  double nats = 0.0;
  for (double w : state.weights()) {
    if (w > 0.0) nats -= w * std::log(w);
  }
  return in_base(nats, state.base());
}

double entropy_truncation_bound(const SchmidtState& state) {
  const double t = state.tail_bound();
  if (t <= 0.0) return 0.0;
  return in_base(t * (1.0 + std::abs(std::log(t))), state.base());
}

double tmsv_entropy_closed(double lambda, LogBase base) {
  if (!(lambda >= 0.0) || !(lambda < 1.0)) {
    throw std::domain_error("tmsv_entropy_closed: lambda must lie in [0, 1), got " +
                            std::to_string(lambda));
  }
  if (lambda == 0.0) return 0.0;
  const double z = lambda * lambda;
  const double nats = -z / (1.0 - z) * std::log(z) - std::log1p(-z);
  return in_base(nats, base);
}

double mean_photon_number(const SchmidtState& state) {
  const auto w = state.weights();
  const double shift = state.offset_a() + state.offset_b();
  double n = 0.0;
  for (std::size_t m = 0; m < w.size(); ++m) {
    n += w[m] * (2.0 * static_cast<double>(m) + shift);
  }
  return n;
}

double photon_sum_closed(double lambda, double k, double l, OpKind op) {
  if (!(lambda >= 0.0) || !(lambda < 1.0)) {
    throw std::domain_error("photon_sum_closed: lambda must lie in [0, 1)");
  }
  if (!(k >= 0.0) || !(l >= 0.0)) throw std::domain_error("photon_sum_closed: k, l must be >= 0");
  const double z = lambda * lambda;
  if (op == OpKind::tmsv) k = l = 0.0;
  if (op != OpKind::sub) {
    return (1.0 + k) * (1.0 + l) * z * series(k + 2.0, l + 2.0, 2.0, z) /
           series(k + 1.0, l + 1.0, 1.0, z);
  }
  const double hi = std::max(k, l);
  const double lo = std::min(k, l);
  const double binomial_ratio = std::exp(log_binomial(1.0 + hi, lo) - log_binomial(hi, lo));
  return hi + (1.0 + hi) * z * binomial_ratio * series(hi + 2.0, hi + 2.0, hi - lo + 2.0, z) /
                  series(hi + 1.0, hi + 1.0, hi - lo + 1.0, z);
}

double mean_photon_number_closed(double lambda, double k, double l, OpKind op) {
  const double s = photon_sum_closed(lambda, k, l, op);
  switch (op) {
    case OpKind::tmsv: return 2.0 * s;
    case OpKind::add: return k + l + 2.0 * s;
    case OpKind::sub: return 2.0 * s - k - l;
  }
  throw std::invalid_argument("unknown operation kind");
}

double energy_efficiency(const SchmidtState& state) {
  const double n = mean_photon_number(state);
  if (!(n > 0.0)) {
    throw std::domain_error("energy efficiency undefined for a state with zero mean photon number");
  }
  return schmidt_entropy(state) / thermal_entropy(n / 2.0, state.base());
}

EntanglementReport entanglement_report(const SchmidtState& state) {
  EntanglementReport r;
  r.base = state.base();
  r.entropy = schmidt_entropy(state);
  r.entropy_error_bound = entropy_truncation_bound(state);
  r.entropy_tmsv_same_lambda = tmsv_entropy_closed(state.lambda(), state.base());
  r.enhancement = r.entropy_tmsv_same_lambda > 0.0 ? r.entropy / r.entropy_tmsv_same_lambda
                                                   : std::numeric_limits<double>::quiet_NaN();
  r.mean_photons = mean_photon_number(state);
  if (r.mean_photons > 0.0) {
    r.efficiency = r.entropy / thermal_entropy(r.mean_photons / 2.0, state.base());
  } else {
    r.efficiency = 1.0;
    r.efficiency_by_continuity = true;
  }
  return r;
}

}  // namespace tmsv
