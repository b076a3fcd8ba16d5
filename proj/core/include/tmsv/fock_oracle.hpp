#pragma once

#include <cstddef>
#include <vector>

#include "tmsv/gaussian_lens.hpp"
#include "tmsv/schmidt_states.hpp"

namespace tmsv::oracle {

inline constexpr std::size_t kDefaultCutoff = 100;
inline constexpr std::size_t kLeakageBand = 5;
inline constexpr double kLeakageThreshold = 1e-12;

enum class Mode { a, b };
enum class Ladder { create, annihilate };

/// Real amplitudes c[m][n] of |m, n> on a cutoff x cutoff Fock grid, row m for
/// mode A. Everything outside the grid is implicitly zero.
class DenseState {
 public:
  explicit DenseState(std::size_t cutoff);
  DenseState(std::size_t cutoff, std::vector<double> amps);

  std::size_t cutoff() const { return cutoff_; }
  double operator()(std::size_t m, std::size_t n) const { return amps_[m * cutoff_ + n]; }
  double& operator()(std::size_t m, std::size_t n) { return amps_[m * cutoff_ + n]; }
  const std::vector<double>& amplitudes() const { return amps_; }

  double norm() const;
  /// Fraction of the squared norm sitting in the top kLeakageBand rows or
  /// columns. 1 for the zero vector.
  double boundary_mass() const;
  /// Boundary mass above kLeakageThreshold, or the state vanished.
  bool flagged() const { return boundary_mass() > kLeakageThreshold; }

 private:
  std::size_t cutoff_;
  std::vector<double> amps_;
};

DenseState dense_vacuum(std::size_t cutoff = kDefaultCutoff);

/// sqrt(1 - lambda^2) lambda^n on the diagonal, filled up to the cutoff.
DenseState dense_tmsv(double lambda, std::size_t cutoff = kDefaultCutoff);

/// c[m + offset_a][m + offset_b] = sqrt(w_m). Throws std::length_error when
/// the state does not fit and std::domain_error for continuous states.
DenseState dense_from_schmidt(const SchmidtState& state, std::size_t cutoff = kDefaultCutoff);

/// a, a^dag, b or b^dag with the sqrt(n) factors. Not renormalized.
DenseState apply_ladder(const DenseState& state, Mode mode, Ladder kind);

/// Unit-norm copy. Throws std::domain_error for the zero vector.
DenseState normalized(const DenseState& state);

/// exp[zeta (a^dag b^dag - a b)] with tanh(zeta) = lambda, so the vacuum maps
/// to the TMSV with positive amplitudes. Evolves the vector by stepped Taylor
/// series, doubling the step count until two refinements agree to 1e-12.
/// Output is unit-normalized. lambda must lie in [0, 0.8].
DenseState apply_squeezer(const DenseState& state, double lambda);

/// Squared Schmidt coefficients: eigenvalues of c c^T by cyclic Jacobi
/// rotations, sorted descending, padded with zeros to `cutoff` entries.
std::vector<double> schmidt_spectrum(const DenseState& state);

struct MomentCovariance {
  CovarianceNormalForm normal_form;
  Matrix4 full{};
};

/// Symmetrized second moments of (x_a, p_a, x_b, p_b) minus the means, from
/// ladder-operator expectation values. Throws std::domain_error if the matrix
/// departs from the alpha/beta/gamma block pattern by more than 1e-10.
MomentCovariance covariance_from_moments(const DenseState& state);

/// |<a|b>| / (|a| |b|). Throws std::invalid_argument on cutoff mismatch.
double fidelity(const DenseState& a, const DenseState& b);

/// TMSV with k ladder operations on mode A and l on mode B (creations for
/// add, annihilations for sub), normalized. Retries with doubled cutoff, up
/// to max_cutoff, while leakage is flagged.
DenseState oracle_state(OpKind op, double lambda, int k, int l,
                        std::size_t cutoff = kDefaultCutoff, std::size_t max_cutoff = 800);

}  // namespace tmsv::oracle
