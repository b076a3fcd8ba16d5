#pragma once

#include <array>
#include <utility>

#include "tmsv/schmidt_states.hpp"

namespace tmsv {

using Matrix4 = std::array<std::array<double, 4>, 4>;

/// Covariance matrix of the block form
///   [ alpha*I        gamma*sigma_z ]
///   [ gamma*sigma_z  beta*I        ]
/// in quadrature order (x_a, p_a, x_b, p_b) with x = a + a^dag, so the vacuum
/// is the identity.
struct CovarianceNormalForm {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 0.0;

  Matrix4 matrix() const;
};

struct SymplecticSpectrum {
  double nu_plus = 1.0;
  double nu_minus = 1.0;
};

/// alpha = 1 + 2<n_a>, beta = 1 + 2<n_b>,
/// gamma = 2 sum_m sqrt((m+off_a+1)(m+off_b+1) w_m w_{m+1}).
CovarianceNormalForm covariance_direct(const SchmidtState& state);

/// (alpha, beta) from the hypergeometric photon sums. There is no closed form
/// for gamma.
std::pair<double, double> covariance_closed_diag(double lambda, double k, double l, OpKind op);

/// nu_pm = sqrt(((alpha+beta)/2)^2 - gamma^2) +- (alpha-beta)/2.
/// Throws std::domain_error for an unphysical matrix (negative radicand or
/// nu_minus < 1 - 1e-9).
SymplecticSpectrum symplectic_eigenvalues(const CovarianceNormalForm& cov);

/// Symplectic eigenvalues of an arbitrary positive-definite 4x4 covariance
/// matrix, i.e. the moduli of the eigenvalues of i*Omega*C, with
/// Omega = diag(J, J). Computed as square roots of the eigenvalues of the
/// symmetric matrix C^{1/2} Omega^T C Omega C^{1/2}, which stays well
/// conditioned when nu_+ = nu_-. No block structure is assumed.
SymplecticSpectrum symplectic_eigenvalues_general(const Matrix4& cov);

/// Relative-entropy non-Gaussianity of a pure state: the entropy of the
/// Gaussian state with the same covariance, g(nu_+) + g(nu_-).
double non_gaussianity(const SchmidtState& state);

struct GaussianReport {
  CovarianceNormalForm covariance;
  SymplecticSpectrum spectrum;
  double non_gaussianity = 0.0;
};

GaussianReport gaussian_report(const SchmidtState& state);

}  // namespace tmsv
