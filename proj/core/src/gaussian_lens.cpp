#include "tmsv/gaussian_lens.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "tmsv/entanglement.hpp"

namespace tmsv {

Matrix4 CovarianceNormalForm::matrix() const {
  Matrix4 c{};
  c[0][0] = c[1][1] = alpha;
  c[2][2] = c[3][3] = beta;
  c[0][2] = c[2][0] = gamma;
  c[1][3] = c[3][1] = -gamma;
  return c;
}

CovarianceNormalForm covariance_direct(const SchmidtState& state) {
  const auto w = state.weights();
  const double oa = state.offset_a();
  const double ob = state.offset_b();
  double na = 0.0;
  double nb = 0.0;
  double g = 0.0;
  for (std::size_t m = 0; m < w.size(); ++m) {
    const double md = static_cast<double>(m);
    na += w[m] * (md + oa);
    nb += w[m] * (md + ob);
    if (m + 1 < w.size()) {
      g += std::sqrt((md + oa + 1.0) * (md + ob + 1.0) * w[m] * w[m + 1]);
    }
  }
  return {1.0 + 2.0 * na, 1.0 + 2.0 * nb, 2.0 * g};
}

std::pair<double, double> covariance_closed_diag(double lambda, double k, double l, OpKind op) {
  const double s = photon_sum_closed(lambda, k, l, op);
  switch (op) {
    case OpKind::tmsv: return {1.0 + 2.0 * s, 1.0 + 2.0 * s};
    case OpKind::add: return {1.0 + 2.0 * k + 2.0 * s, 1.0 + 2.0 * l + 2.0 * s};
    case OpKind::sub: return {1.0 - 2.0 * k + 2.0 * s, 1.0 - 2.0 * l + 2.0 * s};
  }
  throw std::invalid_argument("unknown operation kind");
}

SymplecticSpectrum symplectic_eigenvalues(const CovarianceNormalForm& cov) {
  const double mean = 0.5 * (cov.alpha + cov.beta);
  const double radicand = mean * mean - cov.gamma * cov.gamma;
  if (!(radicand >= 0.0)) {
    throw std::domain_error("unphysical covariance: ((alpha+beta)/2)^2 < gamma^2");
  }
  const double root = std::sqrt(radicand);
  const double half_diff = 0.5 * (cov.alpha - cov.beta);
  SymplecticSpectrum s{root + std::abs(half_diff), root - std::abs(half_diff)};
  if (!(s.nu_minus >= 1.0 - kSymplecticTolerance)) {
    throw std::domain_error("unphysical covariance: symplectic eigenvalue " +
                            std::to_string(s.nu_minus) + " < 1");
  }
  return s;
}

namespace {

Matrix4 multiply(const Matrix4& a, const Matrix4& b) {
  Matrix4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int q = 0; q < 4; ++q) r[i][j] += a[i][q] * b[q][j];
  return r;
}

// Cyclic Jacobi on a symmetric 4x4; returns eigenvalues, eigenvectors in
// the columns of `vectors`.
std::array<double, 4> symmetric_eigen(Matrix4 a, Matrix4& vectors) {
  vectors = Matrix4{};
  for (int i = 0; i < 4; ++i) vectors[i][i] = 1.0;
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    double diag = 0.0;
    for (int p = 0; p < 4; ++p) {
      diag += a[p][p] * a[p][p];
      for (int q = p + 1; q < 4; ++q) off += a[p][q] * a[p][q];
    }
    if (off <= 1e-34 * diag) break;
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int r = 0; r < 4; ++r) {
          const double arp = a[r][p];
          const double arq = a[r][q];
          a[r][p] = c * arp - s * arq;
          a[r][q] = s * arp + c * arq;
        }
        for (int r = 0; r < 4; ++r) {
          const double apr = a[p][r];
          const double aqr = a[q][r];
          a[p][r] = c * apr - s * aqr;
          a[q][r] = s * apr + c * aqr;
        }
        for (int r = 0; r < 4; ++r) {
          const double vrp = vectors[r][p];
          const double vrq = vectors[r][q];
          vectors[r][p] = c * vrp - s * vrq;
          vectors[r][q] = s * vrp + c * vrq;
        }
      }
    }
  }
  return {a[0][0], a[1][1], a[2][2], a[3][3]};
}

}  // namespace

SymplecticSpectrum symplectic_eigenvalues_general(const Matrix4& cov) {
  Matrix4 vectors;
  const std::array<double, 4> eig = symmetric_eigen(cov, vectors);
  for (double e : eig) {
    if (!(e > 0.0)) throw std::domain_error("unphysical covariance: matrix is not positive definite");
  }
  // C^{1/2} = V diag(sqrt(e)) V^T
  Matrix4 root{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int q = 0; q < 4; ++q) root[i][j] += vectors[i][q] * std::sqrt(eig[q]) * vectors[j][q];

  // Omega = diag(J, J), J = [[0, 1], [-1, 0]].
  Matrix4 omega{};
  omega[0][1] = omega[2][3] = 1.0;
  omega[1][0] = omega[3][2] = -1.0;
  Matrix4 omega_t{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) omega_t[i][j] = omega[j][i];

  // -(Omega C)^2 is similar to the symmetric C^{1/2} Omega^T C Omega C^{1/2};
  // its spectrum is {nu_+^2, nu_+^2, nu_-^2, nu_-^2}.
  Matrix4 m = multiply(root, multiply(omega_t, multiply(cov, multiply(omega, root))));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) m[i][j] = m[j][i] = 0.5 * (m[i][j] + m[j][i]);
  std::array<double, 4> nu_sq = symmetric_eigen(m, vectors);
  std::sort(nu_sq.begin(), nu_sq.end(), std::greater<>());
  return {std::sqrt(0.5 * (nu_sq[0] + nu_sq[1])), std::sqrt(0.5 * (nu_sq[2] + nu_sq[3]))};
}

double non_gaussianity(const SchmidtState& state) {
  const SymplecticSpectrum s = symplectic_eigenvalues(covariance_direct(state));
  return symplectic_entropy(s.nu_plus, state.base()) + symplectic_entropy(s.nu_minus, state.base());
}

GaussianReport gaussian_report(const SchmidtState& state) {
  GaussianReport r;
  r.covariance = covariance_direct(state);
  r.spectrum = symplectic_eigenvalues(r.covariance);
  r.non_gaussianity = symplectic_entropy(r.spectrum.nu_plus, state.base()) +
                      symplectic_entropy(r.spectrum.nu_minus, state.base());
  return r;
}

}  // namespace tmsv
