// Acceptance battery: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances are fixed here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "tmsv/entanglement.hpp"
#include "tmsv/gaussian_lens.hpp"
#include "tmsv/sweep.hpp"
#include "tmsv/verify.hpp"

namespace {

using namespace tmsv;

constexpr double kRatioTolerance = 0.1;
constexpr double kRatioRuntimeSeconds = 1.0;
constexpr double kGaussianTolerance = 1e-9;
constexpr double kLandscapeSlack = 1e-12;

struct Outcome {
  bool passed = false;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.passed) ++failures;
  std::printf("%s  %2d  %-28s %s\n", o.passed ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str());
  std::fflush(stdout);
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

Outcome from_check(const CheckResult& r) { return {r.passed, r.name + ": " + r.detail}; }

Outcome all_of(std::initializer_list<CheckResult> checks) {
  Outcome o{true, {}};
  for (const CheckResult& r : checks) {
    o.passed = o.passed && r.passed;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += r.name + ": " + r.detail;
  }
  return o;
}

double ratio(OpKind op, double lambda, int k, int l) {
  return schmidt_entropy(build_state(op, lambda, k, l)) / tmsv_entropy_closed(lambda, LogBase::two);
}

Outcome enhancement(double lambda, double target) {
  const auto start = std::chrono::steady_clock::now();
  const double add = ratio(OpKind::add, lambda, 4, 4);
  const double sub = ratio(OpKind::sub, lambda, 4, 4);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = std::abs(add - target) <= kRatioTolerance && std::abs(sub - target) <= kRatioTolerance &&
                  secs < kRatioRuntimeSeconds;
  return {ok, "add " + num(add) + ", sub " + num(sub) + ", target " + num(target) + " +- " + num(kRatioTolerance) +
                  ", " + num(secs) + " s"};
}

Outcome addition_dominance() {
  int violations = 0, edge_violations = 0;
  double worst_interior = INFINITY, worst_equal_gap = 0.0;
  std::string first;
  for (double lam : {0.22, 0.4}) {
    for (int k = 0; k <= 8; ++k) {
      for (int l = 0; l <= 8; ++l) {
        const double add = schmidt_entropy(build_added(lam, k, l));
        const double sub = schmidt_entropy(build_subtracted(lam, k, l));
        const bool ok = k == l ? add >= sub - kLandscapeSlack : add > sub;
        if (k == l) worst_equal_gap = std::max(worst_equal_gap, std::abs(add - sub));
        if (k != l && std::min(k, l) > 0) worst_interior = std::min(worst_interior, add - sub);
        if (!ok) {
          ++violations;
          if (std::min(k, l) == 0) ++edge_violations;
          if (first.empty()) first = "lambda=" + num(lam) + " k=" + std::to_string(k) + " l=" + std::to_string(l);
        }
      }
    }
  }
  std::string detail = std::to_string(violations) + " violations (" + std::to_string(edge_violations) +
                       " with min(k,l)=0)";
  if (!first.empty()) detail += ", first at " + first;
  detail += "; smallest margin with k != l, min(k,l) > 0: " + num(worst_interior) +
            "; max |E_add - E_sub| at k = l: " + num(worst_equal_gap);
  return {violations == 0, detail};
}

Outcome gaussian_sanity() {
  const BuildOptions tight{kComparisonEpsilon, LogBase::two, false};
  double worst_g = 0.0, worst_nu = 0.0, worst_eta = 0.0;
  for (double lam : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7}) {
    const SchmidtState s = build_tmsv(lam, tight);
    const GaussianReport g = gaussian_report(s);
    worst_g = std::max(worst_g, g.non_gaussianity);
    worst_nu = std::max({worst_nu, std::abs(g.spectrum.nu_plus - 1.0), std::abs(g.spectrum.nu_minus - 1.0)});
    worst_eta = std::max(worst_eta, std::abs(energy_efficiency(s) - 1.0));
  }
  const CheckResult identities = check_symplectic_identities(VerifyLevel::full);
  const bool ok = worst_g <= kGaussianTolerance && worst_nu <= kGaussianTolerance &&
                  worst_eta <= kGaussianTolerance && identities.passed;
  return {ok, "G(TMSV) " + num(worst_g) + ", |nu-1| " + num(worst_nu) + ", |eta-1| " + num(worst_eta) + "; " +
                  identities.name + ": " + identities.detail};
}

Outcome landscape() {
  std::string detail;
  for (double lam : {0.22, 0.4}) {
    int add_arg = -1, sub_arg = -1;
    double add_best = -1.0, sub_best = INFINITY;
    for (int k = 0; k <= 10; ++k) {
      const double ga = non_gaussianity(build_added(lam, k, 10 - k));
      const double gs = non_gaussianity(build_subtracted(lam, k, 10 - k));
      if (ga > add_best) add_best = ga, add_arg = k;
      if (gs < sub_best) sub_best = gs, sub_arg = k;
    }
    detail += "lambda=" + num(lam) + " argmax G_add=" + std::to_string(add_arg) +
              " argmin G_sub=" + std::to_string(sub_arg) + "; ";
    if (add_arg != 5 || sub_arg != 5) return {false, detail};
    for (int k = 0; k <= 8; ++k) {
      for (int l = 0; l <= 8; ++l) {
        const double ga = non_gaussianity(build_added(lam, k, l));
        const double gs = non_gaussianity(build_subtracted(lam, k, l));
        if (ga < gs - kLandscapeSlack) {
          return {false, detail + "G_add < G_sub at k=" + std::to_string(k) + " l=" + std::to_string(l)};
        }
      }
    }
  }
  return {true, detail + "G_add >= G_sub on k,l <= 8"};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  SweepConfig c;
  c.lambdas = {0.22, 0.4};
  c.op = SweepOp::both;
  c.k_range = parse_range("0:8");
  c.l_range = parse_range("0:8");
  const auto dir = std::filesystem::temp_directory_path() / "tmsv_acceptance";
  std::filesystem::create_directories(dir);
  const auto first = dir / "first.csv";
  const auto second = dir / "second.csv";
  write_file_atomically(first.string(), run_sweep(c));
  write_file_atomically(second.string(), run_sweep(c));
  const std::string a = slurp(first);
  const std::string b = slurp(second);
  std::filesystem::remove_all(dir);
  return {!a.empty() && a == b, std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "DIFFERENT")};
}

}  // namespace

int main() {
  report(1, "enhancement lambda=0.4", [] { return enhancement(0.4, 3.7); });
  report(2, "enhancement lambda=0.22", [] { return enhancement(0.22, 6.7); });
  std::printf("info    (5,5) ratios: lambda=0.4 add %s, lambda=0.22 add %s\n",
              num(ratio(OpKind::add, 0.4, 5, 5)).c_str(), num(ratio(OpKind::add, 0.22, 5, 5)).c_str());
  report(3, "symmetric equality", [] { return from_check(check_symmetric_equality(VerifyLevel::full)); });
  report(4, "one-mode monotonicity", [] { return from_check(check_monotonicity(VerifyLevel::full)); });
  report(5, "addition dominance", addition_dominance);
  report(6, "subtraction anomaly", [] { return from_check(check_subtraction_anomaly(VerifyLevel::full)); });
  report(7, "oracle equivalence", [] {
    return all_of({check_oracle_equivalence(VerifyLevel::full), check_one_mode_schemes(VerifyLevel::full)});
  });
  report(8, "normalization", [] { return from_check(check_normalization(VerifyLevel::full)); });
  report(9, "gaussian sanity", gaussian_sanity);
  report(10, "non-gaussianity landscape", landscape);
  report(11, "closed photon sums", [] { return from_check(check_closed_sums(VerifyLevel::full)); });
  report(12, "sweep determinism", determinism);
  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
