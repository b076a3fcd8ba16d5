#include "tmsv/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tmsv::oracle {

namespace {

double dot(const std::vector<double>& x, const std::vector<double>& y) {
  return std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
}

// (a^dag b^dag - a b) psi on the truncated grid.
std::vector<double> apply_pair_generator(const std::vector<double>& psi, std::size_t d) {
  std::vector<double> out(psi.size(), 0.0);
  for (std::size_t m = 0; m < d; ++m) {
    for (std::size_t n = 0; n < d; ++n) {
      const double c = psi[m * d + n];
      if (c == 0.0) continue;
      if (m + 1 < d && n + 1 < d) {
        out[(m + 1) * d + n + 1] += std::sqrt(static_cast<double>((m + 1) * (n + 1))) * c;
      }
      if (m > 0 && n > 0) {
        out[(m - 1) * d + n - 1] -= std::sqrt(static_cast<double>(m * n)) * c;
      }
    }
  }
  return out;
}

std::vector<double> evolve(std::vector<double> psi, std::size_t d, double zeta, std::size_t steps) {
  const double h = zeta / static_cast<double>(steps);
  const double scale = std::sqrt(dot(psi, psi));
  for (std::size_t s = 0; s < steps; ++s) {
    std::vector<double> term = psi;
    for (int j = 1; j <= 400; ++j) {
      term = apply_pair_generator(term, d);
      const double f = h / j;
      for (double& t : term) t *= f;
      for (std::size_t i = 0; i < psi.size(); ++i) psi[i] += term[i];
      if (std::sqrt(dot(term, term)) <= 1e-18 * scale) break;
      if (j == 400) throw std::runtime_error("apply_squeezer: Taylor series did not converge");
    }
  }
  return psi;
}

// Symmetric eigenvalues by cyclic Jacobi rotations; `a` is n x n row-major.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n) {
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) s += 2.0 * a[p * n + q] * a[p * n + q];
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (off_norm() > 1e-14) {
    if (++sweep > kMaxSweeps) {
      throw std::runtime_error("schmidt_spectrum: Jacobi iteration did not converge");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t r = 0; r < n; ++r) {
          const double arp = a[r * n + p];
          const double arq = a[r * n + q];
          a[r * n + p] = c * arp - s * arq;
          a[r * n + q] = s * arp + c * arq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const double apr = a[p * n + r];
          const double aqr = a[q * n + r];
          a[p * n + r] = c * apr - s * aqr;
          a[q * n + r] = s * apr + c * aqr;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
  return eig;
}

}  // namespace

DenseState::DenseState(std::size_t cutoff) : cutoff_(cutoff), amps_(cutoff * cutoff, 0.0) {
  if (cutoff == 0) throw std::invalid_argument("DenseState: cutoff must be positive");
}

DenseState::DenseState(std::size_t cutoff, std::vector<double> amps)
    : cutoff_(cutoff), amps_(std::move(amps)) {
  if (cutoff == 0 || amps_.size() != cutoff * cutoff) {
    throw std::invalid_argument("DenseState: amplitude count does not match cutoff^2");
  }
}

double DenseState::norm() const { return std::sqrt(dot(amps_, amps_)); }

double DenseState::boundary_mass() const {
  const double total = dot(amps_, amps_);
  if (total == 0.0) return 1.0;
  const std::size_t edge = cutoff_ > kLeakageBand ? cutoff_ - kLeakageBand : 0;
  double band = 0.0;
  for (std::size_t m = 0; m < cutoff_; ++m) {
    for (std::size_t n = 0; n < cutoff_; ++n) {
      if (m >= edge || n >= edge) band += amps_[m * cutoff_ + n] * amps_[m * cutoff_ + n];
    }
  }
  return band / total;
}

DenseState dense_vacuum(std::size_t cutoff) {
  DenseState s(cutoff);
  s(0, 0) = 1.0;
  return s;
}

DenseState dense_tmsv(double lambda, std::size_t cutoff) {
  if (!(lambda >= 0.0) || !(lambda < 1.0)) {
    throw std::domain_error("dense_tmsv: lambda must lie in [0, 1)");
  }
  DenseState s(cutoff);
  double amp = std::sqrt(1.0 - lambda * lambda);
  for (std::size_t n = 0; n < cutoff && amp != 0.0; ++n) {
    s(n, n) = amp;
    amp *= lambda;
  }
  return s;
}

DenseState dense_from_schmidt(const SchmidtState& state, std::size_t cutoff) {
  if (state.continuous() && (state.offset_a() != std::floor(state.offset_a()) ||
                             state.offset_b() != std::floor(state.offset_b()))) {
    throw std::domain_error("dense_from_schmidt: non-integer Fock offsets");
  }
  const auto oa = static_cast<std::size_t>(state.offset_a());
  const auto ob = static_cast<std::size_t>(state.offset_b());
  const auto w = state.weights();
  if (std::max(oa, ob) + w.size() > cutoff) {
    throw std::length_error("dense_from_schmidt: state needs cutoff " +
                            std::to_string(std::max(oa, ob) + w.size()) + " > " +
                            std::to_string(cutoff));
  }
  DenseState s(cutoff);
  for (std::size_t m = 0; m < w.size(); ++m) s(m + oa, m + ob) = std::sqrt(w[m]);
  return s;
}

DenseState apply_ladder(const DenseState& state, Mode mode, Ladder kind) {
  const std::size_t d = state.cutoff();
  DenseState out(d);
  for (std::size_t m = 0; m < d; ++m) {
    for (std::size_t n = 0; n < d; ++n) {
      const double c = state(m, n);
      if (c == 0.0) continue;
      const std::size_t idx = mode == Mode::a ? m : n;
      if (kind == Ladder::create) {
        if (idx + 1 >= d) continue;
        const double f = std::sqrt(static_cast<double>(idx + 1));
        if (mode == Mode::a) out(m + 1, n) += f * c;
        else out(m, n + 1) += f * c;
      } else {
        if (idx == 0) continue;
        const double f = std::sqrt(static_cast<double>(idx));
        if (mode == Mode::a) out(m - 1, n) += f * c;
        else out(m, n - 1) += f * c;
      }
    }
  }
  return out;
}

DenseState normalized(const DenseState& state) {
  const double nrm = state.norm();
  if (!(nrm > 0.0)) throw std::domain_error("normalized: zero vector");
  std::vector<double> amps = state.amplitudes();
  for (double& c : amps) c /= nrm;
  return DenseState(state.cutoff(), std::move(amps));
}

DenseState apply_squeezer(const DenseState& state, double lambda) {
  if (!(lambda >= 0.0) || !(lambda <= 0.8)) {
    throw std::domain_error("apply_squeezer: lambda must lie in [0, 0.8]");
  }
  if (lambda == 0.0) return normalized(state);
  const std::size_t d = state.cutoff();
  const double zeta = std::atanh(lambda);

  std::size_t steps = static_cast<std::size_t>(std::ceil(zeta * static_cast<double>(d) / 4.0)) + 1;
  std::vector<double> coarse = evolve(state.amplitudes(), d, zeta, steps);
  for (int refinement = 0; refinement < 8; ++refinement) {
    steps *= 2;
    std::vector<double> fine = evolve(state.amplitudes(), d, zeta, steps);
    double diff = 0.0;
    for (std::size_t i = 0; i < fine.size(); ++i) diff = std::max(diff, std::abs(fine[i] - coarse[i]));
    if (diff <= 1e-12) return normalized(DenseState(d, std::move(fine)));
    coarse = std::move(fine);
  }
  throw std::runtime_error("apply_squeezer: step refinement did not converge");
}

std::vector<double> schmidt_spectrum(const DenseState& state) {
  const std::size_t d = state.cutoff();
  // Zero rows contribute exact zero eigenvalues; drop them before rotating.
  std::vector<std::size_t> rows;
  for (std::size_t m = 0; m < d; ++m) {
    for (std::size_t n = 0; n < d; ++n) {
      if (state(m, n) != 0.0) {
        rows.push_back(m);
        break;
      }
    }
  }
  const std::size_t r = rows.size();
  std::vector<double> gram(r * r, 0.0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      double g = 0.0;
      for (std::size_t n = 0; n < d; ++n) g += state(rows[i], n) * state(rows[j], n);
      gram[i * r + j] = gram[j * r + i] = g;
    }
  }
  std::vector<double> eig = r > 0 ? jacobi_eigenvalues(std::move(gram), r) : std::vector<double>{};
  eig.resize(d, 0.0);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

MomentCovariance covariance_from_moments(const DenseState& state) {
  const DenseState psi = normalized(state);
  const DenseState a_psi = apply_ladder(psi, Mode::a, Ladder::annihilate);
  const DenseState b_psi = apply_ladder(psi, Mode::b, Ladder::annihilate);
  const DenseState aa_psi = apply_ladder(a_psi, Mode::a, Ladder::annihilate);
  const DenseState bb_psi = apply_ladder(b_psi, Mode::b, Ladder::annihilate);
  const DenseState ab_psi = apply_ladder(a_psi, Mode::b, Ladder::annihilate);

  const auto& v = psi.amplitudes();
  const double ea = dot(v, a_psi.amplitudes());
  const double eb = dot(v, b_psi.amplitudes());
  const double eaa = dot(v, aa_psi.amplitudes());
  const double ebb = dot(v, bb_psi.amplitudes());
  const double eab = dot(v, ab_psi.amplitudes());
  const double na = dot(a_psi.amplitudes(), a_psi.amplitudes());
  const double nb = dot(b_psi.amplitudes(), b_psi.amplitudes());
  const double eadag_b = dot(a_psi.amplitudes(), b_psi.amplitudes());

  // Real amplitudes make every ladder expectation real, so <p> and all
  // symmetrized x-p products, which pick up only imaginary parts, vanish.
  const double mean_xa = 2.0 * ea;
  const double mean_xb = 2.0 * eb;

  Matrix4 c{};
  c[0][0] = 2.0 * eaa + 2.0 * na + 1.0 - mean_xa * mean_xa;
  c[1][1] = -2.0 * eaa + 2.0 * na + 1.0;
  c[2][2] = 2.0 * ebb + 2.0 * nb + 1.0 - mean_xb * mean_xb;
  c[3][3] = -2.0 * ebb + 2.0 * nb + 1.0;
  c[0][2] = c[2][0] = 2.0 * eab + 2.0 * eadag_b - mean_xa * mean_xb;
  c[1][3] = c[3][1] = -2.0 * eab + 2.0 * eadag_b;

  const double violation =
      std::max({std::abs(c[0][0] - c[1][1]), std::abs(c[2][2] - c[3][3]), std::abs(c[0][2] + c[1][3]),
                std::abs(c[0][1]), std::abs(c[0][3]), std::abs(c[1][2]), std::abs(c[2][3]),
                std::abs(mean_xa), std::abs(mean_xb)});
  if (violation > 1e-10) {
    throw std::domain_error("covariance_from_moments: matrix is not of the alpha/beta/gamma form (deviation " +
                            std::to_string(violation) + ")");
  }

  MomentCovariance out;
  out.full = c;
  out.normal_form = {0.5 * (c[0][0] + c[1][1]), 0.5 * (c[2][2] + c[3][3]), 0.5 * (c[0][2] - c[1][3])};
  return out;
}

double fidelity(const DenseState& a, const DenseState& b) {
  if (a.cutoff() != b.cutoff()) throw std::invalid_argument("fidelity: cutoff mismatch");
  const double na = a.norm();
  const double nb = b.norm();
  if (!(na > 0.0) || !(nb > 0.0)) throw std::domain_error("fidelity: zero vector");
  return std::min(1.0, std::abs(dot(a.amplitudes(), b.amplitudes())) / (na * nb));
}

DenseState oracle_state(OpKind op, double lambda, int k, int l, std::size_t cutoff,
                        std::size_t max_cutoff) {
  if (k < 0 || l < 0) throw std::domain_error("oracle_state: k, l must be >= 0");
  const Ladder kind = op == OpKind::sub ? Ladder::annihilate : Ladder::create;
  for (std::size_t d = cutoff;; d *= 2) {
    DenseState s = dense_tmsv(lambda, d);
    bool leaked = false;
    for (int i = 0; i < k; ++i) {
      s = apply_ladder(s, Mode::a, kind);
      leaked = leaked || s.flagged();
    }
    for (int i = 0; i < l; ++i) {
      s = apply_ladder(s, Mode::b, kind);
      leaked = leaked || s.flagged();
    }
    if (s.norm() == 0.0) throw std::domain_error("oracle_state: operations annihilate the state");
    if (!leaked) return normalized(s);
    if (d * 2 > max_cutoff) {
      throw std::runtime_error("oracle_state: leakage persists at cutoff " + std::to_string(d));
    }
  }
}

}  // namespace tmsv::oracle
