#pragma once

#include <cstddef>
#include <string_view>

namespace tmsv {

/// Logarithm base used for every entropy-like quantity. Base 2 gives ebits.
/// Ratios such as E/E_TMSV and the energy efficiency do not depend on it.
enum class LogBase { two, e };

std::string_view to_string(LogBase base);

/// Natural log of x converted to `base`.
double log_in(double x, LogBase base);

struct SeriesResult {
  double value = 1.0;
  std::size_t terms_used = 1;
  bool converged = true;
};

inline constexpr std::size_t kDefaultSeriesTermCap = 10'000'000;

/// ln Gamma(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

/// Generalized ln C(x, y) = lnG(x+1) - lnG(y+1) - lnG(x-y+1), 0 <= y <= x.
double log_binomial(double x, double y);

/// Gauss hypergeometric 2F1(a, b; c; z) by direct power series, for positive
/// parameters and z in [0, 1). Terms follow
///   t_{m+1} = t_m (a+m)(b+m) z / ((c+m)(m+1))
/// and summation stops once two consecutive terms fall below 1e-16 of the
/// partial sum. Hitting `term_cap` returns converged = false.
SeriesResult gauss_2f1(double a, double b, double c, double z,
                       std::size_t term_cap = kDefaultSeriesTermCap);

/// Entropy of a thermal mode with mean occupation x:
///   g(x) = (x+1) log(x+1) - x log x,   g(0) = 0.
/// This is also the entanglement entropy of a TMSV carrying 2x photons.
double thermal_entropy(double x, LogBase base);

/// Entropy of a Gaussian mode with symplectic eigenvalue nu (vacuum nu = 1):
///   g(nu) = (nu+1)/2 log((nu+1)/2) - (nu-1)/2 log((nu-1)/2).
/// Same kernel as thermal_entropy under nu = 2x + 1; the two "g" functions in
/// the literature share a name but not an argument. nu in [1 - 1e-9, 1] is
/// clamped to 1; anything lower throws std::domain_error.
double symplectic_entropy(double nu, LogBase base);

inline constexpr double kSymplecticTolerance = 1e-9;

}  // namespace tmsv
