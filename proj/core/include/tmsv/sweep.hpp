#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tmsv/schmidt_states.hpp"

namespace tmsv {

/// Inclusive range first:last with a positive step.
struct Range {
  double first = 0.0;
  double last = 10.0;
  double step = 1.0;

  std::vector<double> values() const;
};

/// Parses "A:B" or "A:B:S".
Range parse_range(std::string_view text);

struct Constraint {
  enum class Kind { none, k_eq_l, k_plus_l, l_fixed };
  Kind kind = Kind::none;
  double value = 0.0;
};

/// Parses "k=l", "k+l=T" or "l=L0".
Constraint parse_constraint(std::string_view text);

enum class SweepOp { add, sub, both };

SweepOp parse_sweep_op(std::string_view text);
LogBase parse_base(std::string_view text);

struct SweepConfig {
  std::vector<double> lambdas;
  SweepOp op = SweepOp::both;
  Range k_range;
  Range l_range;
  Constraint constraint;
  LogBase base = LogBase::two;
  double epsilon = kDefaultEpsilon;
  bool continuous = false;
  std::optional<std::string> output_path;
};

struct GridPoint {
  double lambda = 0.0;
  OpKind op = OpKind::add;
  double k = 0.0;
  double l = 0.0;
};

/// All grid points of the config, validated and sorted by (lambda, op, k, l).
std::vector<GridPoint> expand_grid(const SweepConfig& config);

/// One CSV row worth of observables for a single state.
struct PointRecord {
  double lambda = 0.0;
  double k = 0.0;
  double l = 0.0;
  OpKind op = OpKind::add;
  double entropy = 0.0;
  double entropy_norm = 0.0;
  double mean_photons = 0.0;
  double efficiency = 1.0;
  double non_gaussianity = 0.0;
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 0.0;
  double nu_plus = 1.0;
  double nu_minus = 1.0;
  bool continuous = false;
};

PointRecord evaluate_point(OpKind op, double lambda, double k, double l,
                           const BuildOptions& opts = {});

/// 12 significant digits, locale independent.
std::string format_number(double value);

/// `lambda,k,l,op,E,E_norm,N,eta,G,alpha,beta,gamma,nu_plus,nu_minus`, plus
/// `,continuous` when the run is in continuous mode. No trailing newline.
std::string csv_header(bool continuous);
std::string csv_row(const PointRecord& record);

/// Evaluates every grid point (in parallel when workers != 1) and returns the
/// complete CSV text, header first, LF line endings. Throws on the first
/// failing point in canonical order; nothing partial is returned.
std::string run_sweep(const SweepConfig& config, unsigned workers = 0);

/// Writes `contents` to `path` through a temporary sibling and a rename, so
/// the target either holds the full text or is left untouched.
void write_file_atomically(const std::string& path, const std::string& contents);

}  // namespace tmsv
