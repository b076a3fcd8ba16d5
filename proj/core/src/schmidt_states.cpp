#include "tmsv/schmidt_states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace tmsv {

namespace {

constexpr std::size_t kMaxSchmidtTerms = 10'000'000;

void check_lambda(double lambda) {
  if (!(lambda >= 0.0) || !(lambda < 1.0)) {
    throw std::domain_error("lambda must lie in [0, 1), got " + std::to_string(lambda));
  }
}

void check_counts(double k, double l, const BuildOptions& opts) {
  if (!(k >= 0.0) || !(l >= 0.0) || !std::isfinite(k) || !std::isfinite(l)) {
    throw std::domain_error("operation counts must be finite and >= 0");
  }
  if (!opts.continuous && (k != std::floor(k) || l != std::floor(l))) {
    throw std::domain_error("non-integer operation counts require continuous mode");
  }
  if (!(opts.epsilon > 0.0) || !(opts.epsilon < 1.0)) {
    throw std::domain_error("truncation tolerance must lie in (0, 1)");
  }
}

double normalization(double a, double b, double c, double z) {
  const SeriesResult f = gauss_2f1(a, b, c, z);
  if (!f.converged) {
    throw std::runtime_error("hypergeometric normalization did not converge (lambda too close to 1)");
  }
  return f.value;
}

// Extends w_0 by w_{n+1} = w_n * ratio(n) until the geometric tail bound
// w_N r_N / (1 - r_N) drops to eps. Requires ratio(n) non-increasing in n.
template <typename Ratio>
std::pair<std::vector<double>, double> extend_weights(double w0, Ratio ratio, double eps) {
  std::vector<double> w{w0};
  for (std::size_t n = 0;; ++n) {
    const double r = ratio(static_cast<double>(n));
    if (r < 1.0) {
      const double tail = w.back() * r / (1.0 - r);
      if (tail <= eps) return {std::move(w), tail};
    }
    if (w.size() >= kMaxSchmidtTerms) {
      throw std::runtime_error("Schmidt weight sequence exceeded the term cap");
    }
    w.push_back(w.back() * r);
  }
}

}  // namespace

std::string_view to_string(OpKind op) {
  switch (op) {
    case OpKind::tmsv: return "tmsv";
    case OpKind::add: return "add";
    case OpKind::sub: return "sub";
  }
  return "?";
}

SchmidtState::SchmidtState(double lambda, OpKind op, double k, double l, double offset_a,
                           double offset_b, std::vector<double> weights, double tail_bound,
                           LogBase base, bool continuous)
    : lambda_(lambda),
      op_(op),
      k_(k),
      l_(l),
      offset_a_(offset_a),
      offset_b_(offset_b),
      weights_(std::move(weights)),
      tail_bound_(tail_bound),
      base_(base),
      continuous_(continuous) {}

double SchmidtState::total_weight() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

SchmidtState build_tmsv(double lambda, const BuildOptions& opts) {
  check_lambda(lambda);
  check_counts(0.0, 0.0, opts);
  const double z = lambda * lambda;
  auto [w, tail] = extend_weights(1.0 - z, [z](double) { return z; }, opts.epsilon);
  return SchmidtState(lambda, OpKind::tmsv, 0.0, 0.0, 0.0, 0.0, std::move(w), tail, opts.base,
                      false);
}

SchmidtState build_added(double lambda, double k, double l, const BuildOptions& opts) {
  check_lambda(lambda);
  check_counts(k, l, opts);
  const double z = lambda * lambda;
  const double w0 = 1.0 / normalization(k + 1.0, l + 1.0, 1.0, z);
  auto ratio = [=](double n) { return z * (n + k + 1.0) * (n + l + 1.0) / ((n + 1.0) * (n + 1.0)); };
  auto [w, tail] = extend_weights(w0, ratio, opts.epsilon);
  return SchmidtState(lambda, OpKind::add, k, l, k, l, std::move(w), tail, opts.base,
                      opts.continuous);
}

SchmidtState build_subtracted(double lambda, double k, double l, const BuildOptions& opts) {
  check_lambda(lambda);
  check_counts(k, l, opts);
  const double z = lambda * lambda;
  // Work with hi >= lo; the lagging mode carries the offset hi - lo.
  const double hi = std::max(k, l);
  const double lo = std::min(k, l);
  const double w0 = 1.0 / normalization(hi + 1.0, hi + 1.0, 1.0 + hi - lo, z);
  auto ratio = [=](double m) {
    return z * (m + hi + 1.0) * (m + hi + 1.0) / ((m + 1.0) * (m + hi - lo + 1.0));
  };
  auto [w, tail] = extend_weights(w0, ratio, opts.epsilon);
  const double offset_a = k >= l ? 0.0 : l - k;
  const double offset_b = k >= l ? k - l : 0.0;
  return SchmidtState(lambda, OpKind::sub, k, l, offset_a, offset_b, std::move(w), tail,
                      opts.base, opts.continuous);
}

SchmidtState build_state(OpKind op, double lambda, double k, double l, const BuildOptions& opts) {
  switch (op) {
    case OpKind::tmsv: return build_tmsv(lambda, opts);
    case OpKind::add: return build_added(lambda, k, l, opts);
    case OpKind::sub: return build_subtracted(lambda, k, l, opts);
  }
  throw std::invalid_argument("unknown operation kind");
}

double one_mode_weight(double lambda, int k, int n) {
  check_lambda(lambda);
  if (k < 0) throw std::domain_error("one_mode_weight: k must be >= 0");
  if (n < 0) return 0.0;
  if (lambda == 0.0) return n == 0 ? 1.0 : 0.0;
  const double z = lambda * lambda;
  const double log_w = (k + 1.0) * std::log1p(-z) + n * std::log(z) +
                       log_binomial(static_cast<double>(n + k), static_cast<double>(n));
  return std::exp(log_w);
}

double pascal_recursion_residual(double lambda, int k, int n) {
  const double z = lambda * lambda;
  return one_mode_weight(lambda, k + 1, n) - z * one_mode_weight(lambda, k + 1, n - 1) -
         (1.0 - z) * one_mode_weight(lambda, k, n);
}

}  // namespace tmsv
