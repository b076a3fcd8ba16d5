// tmsv-ent: entanglement and non-Gaussianity of photon-added and
// photon-subtracted two-mode squeezed vacua.
//
//   tmsv-ent point  --lambda 0.4 --op add --k 4 --l 4
//   tmsv-ent sweep  --lambda 0.22,0.4 --constraint k+l=10 --out fig.csv
//   tmsv-ent verify --level fast

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "tmsv/sweep.hpp"
#include "tmsv/verify.hpp"

namespace {

constexpr int kExitUsage = 2;

struct CommonFlags {
  std::string base = "2";
  double epsilon = tmsv::kDefaultEpsilon;
  bool continuous = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--base", flags.base, "Logarithm base: 2 or e")->check(CLI::IsMember({"2", "e"}));
  cmd->add_option("--epsilon", flags.epsilon, "Truncation tolerance on the Schmidt weights");
  cmd->add_flag("--continuous", flags.continuous, "Allow real-valued k and l (Gamma-function binomials)");
}

int cmd_point(double lambda, const std::string& op, double k, double l, const CommonFlags& flags) {
  const tmsv::SweepOp sweep_op = tmsv::parse_sweep_op(op);
  if (sweep_op == tmsv::SweepOp::both) throw std::invalid_argument("point takes --op add or --op sub");
  const tmsv::OpKind kind = sweep_op == tmsv::SweepOp::add ? tmsv::OpKind::add : tmsv::OpKind::sub;
  const tmsv::BuildOptions opts{flags.epsilon, tmsv::parse_base(flags.base), flags.continuous};
  const tmsv::PointRecord r = tmsv::evaluate_point(kind, lambda, k, l, opts);
  std::cout << tmsv::csv_header(flags.continuous) << '\n' << tmsv::csv_row(r) << '\n';
  return 0;
}

int cmd_sweep(tmsv::SweepConfig config, const std::string& op, const std::string& k_range,
              const std::string& l_range, const std::string& constraint, const CommonFlags& flags) {
  config.op = tmsv::parse_sweep_op(op);
  config.k_range = tmsv::parse_range(k_range);
  config.l_range = tmsv::parse_range(l_range);
  if (!constraint.empty()) config.constraint = tmsv::parse_constraint(constraint);
  config.base = tmsv::parse_base(flags.base);
  config.epsilon = flags.epsilon;
  config.continuous = flags.continuous;

  const std::string csv = tmsv::run_sweep(config);
  if (config.output_path) {
    tmsv::write_file_atomically(*config.output_path, csv);
  } else {
    std::cout << csv;
  }
  return 0;
}

int cmd_verify(const std::string& level_name) {
  const tmsv::VerifyLevel level = tmsv::parse_level(level_name);
  bool all = true;
  for (const tmsv::CheckResult& r : tmsv::run_verification(level)) {
    std::printf("[%s] %-24s %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
    all = all && r.passed;
  }
  std::printf("%s\n", all ? "all checks passed" : "verification FAILED");
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement of photon-added and photon-subtracted two-mode squeezed vacua"};
  app.require_subcommand(1);

  CommonFlags point_flags;
  double point_lambda = 0.0;
  std::string point_op = "add";
  double point_k = 0.0;
  double point_l = 0.0;
  CLI::App* point = app.add_subcommand("point", "Evaluate one state and print a CSV record");
  point->add_option("--lambda", point_lambda, "Squeezing parameter in [0, 1)")->required();
  point->add_option("--op", point_op, "add or sub")->check(CLI::IsMember({"add", "sub"}));
  point->add_option("--k", point_k, "Operations on mode A");
  point->add_option("--l", point_l, "Operations on mode B");
  add_common(point, point_flags);

  CommonFlags sweep_flags;
  tmsv::SweepConfig sweep_config;
  std::string sweep_op = "both";
  std::string k_range = "0:10";
  std::string l_range = "0:10";
  std::string constraint;
  std::string out_path;
  CLI::App* sweep = app.add_subcommand("sweep", "Evaluate a (lambda, k, l) grid and write CSV");
  sweep->add_option("--lambda", sweep_config.lambdas, "Comma-separated squeezing parameters")
      ->required()
      ->delimiter(',');
  sweep->add_option("--op", sweep_op, "add, sub or both")->check(CLI::IsMember({"add", "sub", "both"}));
  sweep->add_option("--k-range", k_range, "A:B[:S]");
  sweep->add_option("--l-range", l_range, "A:B[:S]");
  sweep->add_option("--constraint", constraint, "k=l, k+l=T or l=L0");
  sweep->add_option("--out", out_path, "Output CSV path (stdout when absent)");
  add_common(sweep, sweep_flags);

  std::string level = "fast";
  CLI::App* verify = app.add_subcommand("verify", "Run the invariant and oracle checks");
  verify->add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (point->parsed()) return cmd_point(point_lambda, point_op, point_k, point_l, point_flags);
    if (sweep->parsed()) {
      if (!out_path.empty()) sweep_config.output_path = out_path;
      return cmd_sweep(sweep_config, sweep_op, k_range, l_range, constraint, sweep_flags);
    }
    if (verify->parsed()) return cmd_verify(level);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
