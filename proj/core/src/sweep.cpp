#include "tmsv/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "tmsv/entanglement.hpp"
#include "tmsv/gaussian_lens.hpp"

namespace tmsv {

namespace {

double parse_double(std::string_view text, std::string_view what) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v)) {
    throw std::invalid_argument("cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
  }
  return v;
}

bool is_integer(double v) { return v == std::floor(v); }

}  // namespace

std::vector<double> Range::values() const {
  if (!(step > 0.0)) throw std::invalid_argument("range step must be positive");
  if (!(last >= first)) throw std::invalid_argument("range is empty (last < first)");
  const auto count = static_cast<std::size_t>(std::floor((last - first) / step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(first + static_cast<double>(i) * step);
  return out;
}

Range parse_range(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = text.find(':', start);
    parts.push_back(text.substr(start, colon == std::string_view::npos ? colon : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() < 2 || parts.size() > 3) {
    throw std::invalid_argument("range must look like A:B or A:B:S, got '" + std::string(text) + "'");
  }
  Range r;
  r.first = parse_double(parts[0], "range start");
  r.last = parse_double(parts[1], "range end");
  r.step = parts.size() == 3 ? parse_double(parts[2], "range step") : 1.0;
  r.values();
  return r;
}

Constraint parse_constraint(std::string_view text) {
  if (text == "k=l") return {Constraint::Kind::k_eq_l, 0.0};
  if (text.starts_with("k+l=")) {
    return {Constraint::Kind::k_plus_l, parse_double(text.substr(4), "k+l total")};
  }
  if (text.starts_with("l=")) return {Constraint::Kind::l_fixed, parse_double(text.substr(2), "l value")};
  throw std::invalid_argument("constraint must be k=l, k+l=T or l=L0, got '" + std::string(text) + "'");
}

SweepOp parse_sweep_op(std::string_view text) {
  if (text == "add") return SweepOp::add;
  if (text == "sub") return SweepOp::sub;
  if (text == "both") return SweepOp::both;
  throw std::invalid_argument("op must be add, sub or both, got '" + std::string(text) + "'");
}

LogBase parse_base(std::string_view text) {
  if (text == "2") return LogBase::two;
  if (text == "e") return LogBase::e;
  throw std::invalid_argument("base must be 2 or e, got '" + std::string(text) + "'");
}

std::vector<GridPoint> expand_grid(const SweepConfig& config) {
  if (config.lambdas.empty()) throw std::invalid_argument("sweep needs at least one lambda");
  for (double lam : config.lambdas) {
    if (!(lam >= 0.0) || !(lam < 1.0)) throw std::domain_error("lambda must lie in [0, 1)");
  }

  std::vector<std::pair<double, double>> kl;
  const std::vector<double> ks = config.k_range.values();
  switch (config.constraint.kind) {
    case Constraint::Kind::none:
      for (double k : ks)
        for (double l : config.l_range.values()) kl.emplace_back(k, l);
      break;
    case Constraint::Kind::k_eq_l:
      for (double k : ks) kl.emplace_back(k, k);
      break;
    case Constraint::Kind::k_plus_l:
      for (double k : ks) {
        const double l = config.constraint.value - k;
        if (l >= -1e-12) kl.emplace_back(k, std::max(l, 0.0));
      }
      break;
    case Constraint::Kind::l_fixed:
      for (double k : ks) kl.emplace_back(k, config.constraint.value);
      break;
  }
  if (kl.empty()) throw std::invalid_argument("constraint leaves no grid points in the k range");
  for (const auto& [k, l] : kl) {
    if (k < 0.0 || l < 0.0) throw std::domain_error("operation counts must be >= 0");
    if (!config.continuous && (!is_integer(k) || !is_integer(l))) {
      throw std::domain_error("non-integer k or l requires --continuous");
    }
  }

  std::vector<OpKind> ops;
  if (config.op != SweepOp::sub) ops.push_back(OpKind::add);
  if (config.op != SweepOp::add) ops.push_back(OpKind::sub);

  std::vector<GridPoint> grid;
  for (double lam : config.lambdas)
    for (OpKind op : ops)
      for (const auto& [k, l] : kl) grid.push_back({lam, op, k, l});

  auto key = [](const GridPoint& p) { return std::tuple(p.lambda, static_cast<int>(p.op), p.k, p.l); };
  std::sort(grid.begin(), grid.end(), [&](const GridPoint& a, const GridPoint& b) { return key(a) < key(b); });
  grid.erase(std::unique(grid.begin(), grid.end(),
                         [&](const GridPoint& a, const GridPoint& b) { return key(a) == key(b); }),
             grid.end());
  return grid;
}

PointRecord evaluate_point(OpKind op, double lambda, double k, double l, const BuildOptions& opts) {
  const SchmidtState state = build_state(op, lambda, k, l, opts);
  const EntanglementReport ent = entanglement_report(state);
  const GaussianReport gauss = gaussian_report(state);

  PointRecord r;
  r.lambda = lambda;
  r.k = k;
  r.l = l;
  r.op = op;
  r.entropy = ent.entropy;
  r.entropy_norm = ent.enhancement;
  r.mean_photons = ent.mean_photons;
  r.efficiency = ent.efficiency;
  r.non_gaussianity = gauss.non_gaussianity;
  r.alpha = gauss.covariance.alpha;
  r.beta = gauss.covariance.beta;
  r.gamma = gauss.covariance.gamma;
  r.nu_plus = gauss.spectrum.nu_plus;
  r.nu_minus = gauss.spectrum.nu_minus;
  r.continuous = opts.continuous;
  return r;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

std::string csv_header(bool continuous) {
  std::string h = "lambda,k,l,op,E,E_norm,N,eta,G,alpha,beta,gamma,nu_plus,nu_minus";
  if (continuous) h += ",continuous";
  return h;
}

std::string csv_row(const PointRecord& r) {
  std::string row;
  for (double v : {r.lambda, r.k, r.l}) {
    row += format_number(v);
    row += ',';
  }
  row += to_string(r.op);
  for (double v : {r.entropy, r.entropy_norm, r.mean_photons, r.efficiency, r.non_gaussianity, r.alpha,
                   r.beta, r.gamma, r.nu_plus, r.nu_minus}) {
    row += ',';
    row += format_number(v);
  }
  if (r.continuous) row += ",1";
  return row;
}

std::string run_sweep(const SweepConfig& config, unsigned workers) {
  const std::vector<GridPoint> grid = expand_grid(config);
  const BuildOptions opts{config.epsilon, config.base, config.continuous};

  std::vector<std::string> rows(grid.size());
  std::vector<std::string> errors(grid.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      const GridPoint& p = grid[i];
      try {
        rows[i] = csv_row(evaluate_point(p.op, p.lambda, p.k, p.l, opts));
      } catch (const std::exception& e) {
        errors[i] = "lambda=" + format_number(p.lambda) + " op=" + std::string(to_string(p.op)) +
                    " k=" + format_number(p.k) + " l=" + format_number(p.l) + ": " + e.what();
      }
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, grid.size()));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }

  for (const std::string& e : errors) {
    if (!e.empty()) throw std::runtime_error(e);
  }
  std::string out = csv_header(config.continuous);
  out += '\n';
  for (const std::string& row : rows) {
    out += row;
    out += '\n';
  }
  return out;
}

void write_file_atomically(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) {
      out.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  fs::rename(tmp, target);
}

}  // namespace tmsv
