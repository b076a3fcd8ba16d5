#include "tmsv/special_functions.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tmsv {

std::string_view to_string(LogBase base) {
  return base == LogBase::two ? "2" : "e";
}

double log_in(double x, LogBase base) {
  const double ln = std::log(x);
  return base == LogBase::two ? ln / std::numbers::ln2 : ln;
}

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("log_gamma: argument must be positive and finite, got " +
                            std::to_string(x));
  }
  return boost::math::lgamma(x);
}

double log_binomial(double x, double y) {
  if (!(y >= 0.0) || !(y <= x)) {
    throw std::domain_error("log_binomial: need 0 <= y <= x, got x=" + std::to_string(x) +
                            " y=" + std::to_string(y));
  }
  if (y == 0.0 || y == x) return 0.0;
  return log_gamma(x + 1.0) - log_gamma(y + 1.0) - log_gamma(x - y + 1.0);
}

SeriesResult gauss_2f1(double a, double b, double c, double z, std::size_t term_cap) {
  if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0)) {
    throw std::domain_error("gauss_2f1: parameters a, b, c must be positive");
  }
  if (!(z >= 0.0) || !(z < 1.0)) {
    throw std::domain_error("gauss_2f1: z must lie in [0, 1), got " + std::to_string(z));
  }

  SeriesResult out;
  if (z == 0.0) return out;

  double term = 1.0;
  double sum = 1.0;
  int small_in_a_row = 0;
  std::size_t m = 0;
  while (true) {
    if (out.terms_used >= term_cap) {
      out.converged = false;
      break;
    }
    const double md = static_cast<double>(m);
    term *= (a + md) * (b + md) * z / ((c + md) * (md + 1.0));
    sum += term;
    ++out.terms_used;
    ++m;
    if (term / sum < 1e-16) {
      if (++small_in_a_row == 2) break;
    } else {
      small_in_a_row = 0;
    }
  }
  out.value = sum;
  return out;
}

double thermal_entropy(double x, LogBase base) {
  if (!(x >= 0.0)) {
    throw std::domain_error("thermal_entropy: occupation must be >= 0, got " + std::to_string(x));
  }
  if (x == 0.0) return 0.0;
  const double nats = (x + 1.0) * std::log1p(x) - x * std::log(x);
  return base == LogBase::two ? nats / std::numbers::ln2 : nats;
}

double symplectic_entropy(double nu, LogBase base) {
  if (!(nu >= 1.0 - kSymplecticTolerance)) {
    throw std::domain_error("symplectic_entropy: eigenvalue " + std::to_string(nu) +
                            " below 1 (unphysical covariance)");
  }
  if (nu <= 1.0) return 0.0;
  return thermal_entropy((nu - 1.0) / 2.0, base);
}

}  // namespace tmsv
