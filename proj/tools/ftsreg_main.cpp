// ftsreg: simulate, estimate, and study function-on-function time series
// regression in the frequency domain.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ftsreg/ftsreg.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ftsreg::IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ftsreg::IoError("cannot write " + path.string());
  out << bytes;
  if (!out) throw ftsreg::IoError("write failed for " + path.string());
}

void apply_threads(int threads) {
  if (threads <= 0) {
    if (const char* env = std::getenv("FTSREG_THREADS")) {
      threads = std::atoi(env);
    }
  }
  ftsreg::set_max_threads(threads > 0 ? threads : 0);
}

int cmd_simulate(const std::string& spec_path, int T, std::uint64_t seed, int m_flag,
                 const std::string& out_dir) {
  ftsreg::ProcessSpec spec;
  int m = 32;
  if (!spec_path.empty()) {
    const std::string text = read_file(spec_path);
    spec = ftsreg::process_spec_from_json(text);
    const json j = json::parse(text, nullptr, false);
    if (j.is_object() && j.contains("m")) m = j.at("m").get<int>();
  }
  if (m_flag > 0) m = m_flag;

  const ftsreg::GridContext grid(m);
  ftsreg::SimulatedPair pair = ftsreg::simulate_pair(spec, grid, T, seed);

  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  pair.x.write_csv(dir / "X.csv");
  pair.y.write_csv(dir / "Y.csv");

  json truth;
  truth["spec"] = json::parse(ftsreg::to_json(spec));
  truth["m"] = m;
  truth["T"] = T;
  truth["seed"] = seed;
  truth["checksums"] = {{"X.csv", ftsreg::fnv1a_hex(read_file(dir / "X.csv"))},
                        {"Y.csv", ftsreg::fnv1a_hex(read_file(dir / "Y.csv"))}};
  write_file(dir / "truth.json", truth.dump(2) + "\n");
  std::cout << "wrote " << (dir / "X.csv").string() << ", " << (dir / "Y.csv").string() << ", "
            << (dir / "truth.json").string() << "\n";
  return kExitOk;
}

int cmd_estimate(const std::string& x_path, const std::string& y_path, double alpha, double beta,
                 double gamma, int lags, const std::string& kernel_name,
                 const std::string& out_path) {
  const ftsreg::FuncSeries x = ftsreg::FuncSeries::read_csv(x_path);
  const ftsreg::FuncSeries y = ftsreg::FuncSeries::read_csv(y_path);
  if (x.length() != y.length())
    throw ftsreg::DimensionError("X and Y series have different lengths (" +
                                 std::to_string(x.length()) + " vs " +
                                 std::to_string(y.length()) + ")");
  if (x.grid() != y.grid())
    throw ftsreg::DimensionError("X and Y series have different grid resolutions");

  const ftsreg::SmoothingKernel kern = ftsreg::SmoothingKernel::by_name(kernel_name);
  const ftsreg::TuningSchedule sched = ftsreg::schedule(alpha, beta, gamma, x.length());
  const ftsreg::FilterEstimate est = ftsreg::estimate_filter(x, y, kern, sched, lags);

  // frequency/lag Parseval diagnostic on the estimated curve
  const int T = est.q_curve.length();
  const auto zero_truth = std::vector<Eigen::MatrixXcd>(
      T, Eigen::MatrixXcd::Zero(x.grid().m(), x.grid().m()));
  const ftsreg::MseMetrics mass = ftsreg::mse_metrics(est.q_curve, zero_truth);
  const double parseval_rel =
      mass.freq == 0.0 ? 0.0 : std::abs(mass.freq - 2.0 * std::numbers::pi * mass.lag) / mass.freq;

  json out = json::parse(ftsreg::to_json(est.bank));
  out["diagnostics"] = {{"T", T},
                       {"m", x.grid().m()},
                       {"kernel", kern.name()},
                       {"bandwidth", sched.B_T},
                       {"zeta", sched.zeta_T},
                       {"guard", "ok"},
                       {"hs_summability", est.bank.hs_summability()},
                       {"imag_mass", est.bank.imag_mass()},
                       {"parseval_freq_mass", mass.freq},
                       {"parseval_lag_mass", mass.lag},
                       {"parseval_rel_error", parseval_rel}};
  write_file(out_path, out.dump(2) + "\n");
  std::cout << "wrote " << out_path << "\n";
  return kExitOk;
}

int cmd_study(const std::string& config_path, const std::string& out_dir, bool plot) {
  const ftsreg::StudyConfig cfg = ftsreg::study_config_from_json(read_file(config_path));
  const ftsreg::StudyResult result = ftsreg::run_study(cfg);

  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  const std::string csv = ftsreg::emit(result, "csv");
  const std::string js = ftsreg::emit(result, "json");
  write_file(dir / "study.csv", csv);
  write_file(dir / "study.json", js + "\n");
  json manifest;
  manifest["config"] = json::parse(ftsreg::to_json(cfg));
  json files = json::array();
  files.push_back({{"name", "study.csv"}, {"fnv64", ftsreg::fnv1a_hex(csv)}});
  files.push_back({{"name", "study.json"}, {"fnv64", ftsreg::fnv1a_hex(js + "\n")}});
  if (plot) {
    const std::string svg = ftsreg::emit(result, "svg");
    write_file(dir / "study.svg", svg);
    files.push_back({{"name", "study.svg"}, {"fnv64", ftsreg::fnv1a_hex(svg)}});
  }
  manifest["files"] = std::move(files);
  write_file(dir / "manifest.json", manifest.dump(2) + "\n");

  std::printf("fitted slope %.6f (se %.6f), predicted %.6f\n", result.fitted_slope,
              result.slope_se, result.predicted_exponent);
  std::cout << "wrote outputs to " << dir.string() << "\n";
  return kExitOk;
}

int cmd_check_kernel(const std::string& name, int order) {
  const ftsreg::SmoothingKernel kern = ftsreg::SmoothingKernel::by_name(name);
  const int p = order > 0 ? order : kern.order();
  const ftsreg::KernelMomentReport rep = ftsreg::kernel_moment_check(kern, p);
  std::printf("kernel %s (declared order %d)\n", rep.kernel.c_str(), rep.order);
  for (std::size_t j = 0; j < rep.moments.size(); ++j)
    std::printf("  moment %zu = %.12g\n", j, rep.moments[j]);
  std::printf("%s\n", rep.pass ? "PASS" : "FAIL");
  return rep.pass ? kExitOk : kExitNumeric;
}

int cmd_verify(std::uint64_t seed) {
  int failures = 0;
  auto report = [&](const std::string& name, bool ok, const std::string& detail) {
    std::printf("%s %s (%s)\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    if (!ok) ++failures;
  };
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;

  { // DFT Parseval on a random series
    const int T = 128, m = 8;
    Eigen::MatrixXd data(T, m);
    for (int t = 0; t < T; ++t)
      for (int k = 0; k < m; ++k) data(t, k) = gauss(rng);
    const ftsreg::FuncSeries series(ftsreg::GridContext(m), data);
    const ftsreg::DftStack stack = ftsreg::fdft(series);
    const double lhs = stack.coeffs().squaredNorm();
    const double rhs = data.squaredNorm();
    const double rel = std::abs(lhs - rhs) / rhs;
    report("dft-parseval", rel <= 1e-10, "relative error " + std::to_string(rel));
  }

  { // filter <-> transfer round trip
    const int m = 16, L = 3, T = 64;
    const ftsreg::GridContext grid(m);
    ftsreg::FilterBank bank(grid, L);
    for (int lag = -L; lag <= L; ++lag) {
      Eigen::MatrixXcd a(m, m);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) a(i, j) = ftsreg::Complex(gauss(rng), gauss(rng));
      bank.set(lag, ftsreg::LinOp(grid, std::move(a)));
    }
    const double disc = ftsreg::roundtrip_check(bank, T);
    report("filter-roundtrip", disc <= 1e-10, "max discrepancy " + std::to_string(disc));
  }

  { // factorization oracle for the default process
    const ftsreg::GridContext grid(32);
    const ftsreg::GroundTruth truth(ftsreg::ProcessSpec{}, grid);
    std::uniform_real_distribution<double> uw(0.0, 2.0 * std::numbers::pi);
    double worst = 0.0;
    for (int i = 0; i < 32; ++i) {
      const double omega = uw(rng);
      const ftsreg::LinOp lhs = truth.cross_spectral_density(omega);
      const ftsreg::LinOp rhs = ftsreg::compose(truth.transfer(omega), truth.spectral_density(omega));
      worst = std::max(worst, ftsreg::hs_norm(lhs - rhs) / ftsreg::hs_norm(lhs));
    }
    report("factorization-oracle", worst <= 1e-10, "max relative error " + std::to_string(worst));
  }

  { // kernel moments
    bool ok = true;
    for (const auto& name : ftsreg::SmoothingKernel::known_names()) {
      const ftsreg::SmoothingKernel kern = ftsreg::SmoothingKernel::by_name(name);
      ok = ok && ftsreg::kernel_moment_check(kern, kern.order()).pass;
    }
    report("kernel-moments", ok, "epanechnikov and quartic");
  }

  { // Tikhonov residual on random self-adjoint positive operators
    const int m = 16;
    const ftsreg::GridContext grid(m);
    double worst = 0.0;
    for (double zeta : {1e-4, 1e-2, 1.0}) {
      Eigen::MatrixXcd b(m, m);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) b(i, j) = ftsreg::Complex(gauss(rng), gauss(rng));
      const Eigen::MatrixXcd psd = b * b.adjoint() / static_cast<double>(m);
      const ftsreg::LinOp a(grid, psd);
      const ftsreg::LinOp inv = ftsreg::tikhonov_inverse(a, zeta);
      const Eigen::MatrixXcd resid =
          (psd + zeta * Eigen::MatrixXcd::Identity(m, m)) * inv.action() -
          Eigen::MatrixXcd::Identity(m, m);
      worst = std::max(worst, resid.norm());
    }
    report("tikhonov-residual", worst <= 1e-10, "max residual " + std::to_string(worst));
  }

  return failures == 0 ? kExitOk : kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"functional time series regression toolkit"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "cap worker threads (default: cores, env FTSREG_THREADS)");

  auto* sim = app.add_subcommand("simulate", "draw a coupled (X, Y) pair with known truth");
  std::string spec_path, out_dir = ".";
  int T = 256, m_flag = 0;
  std::uint64_t seed = 1;
  sim->add_option("--spec", spec_path, "process spec JSON (defaults when omitted)");
  sim->add_option("--T", T, "series length")->required();
  sim->add_option("--seed", seed, "simulation seed");
  sim->add_option("--m", m_flag, "grid resolution override (default 32 or spec's m)");
  sim->add_option("--out-dir", out_dir, "output directory");

  auto* est = app.add_subcommand("estimate", "smoothed Fourier-Tikhonov filter estimate");
  std::string x_path, y_path, out_path = "bank.json", kernel_name = "epanechnikov";
  double alpha = 2.0, beta = 2.0, gamma = 0.25;
  int lags = 3;
  est->add_option("--x", x_path, "covariate series CSV")->required();
  est->add_option("--y", y_path, "response series CSV")->required();
  est->add_option("--alpha", alpha, "eigenvalue decay exponent");
  est->add_option("--beta", beta, "filter decay exponent");
  est->add_option("--gamma", gamma, "bandwidth exponent");
  est->add_option("--lags", lags, "output lag radius L");
  est->add_option("--kernel", kernel_name, "smoothing kernel (epanechnikov, quartic)");
  est->add_option("--out", out_path, "output bank JSON path");

  auto* study = app.add_subcommand("study", "Monte Carlo convergence study");
  std::string config_path, study_dir = ".";
  bool plot = false;
  study->add_option("--config", config_path, "study config JSON")->required();
  study->add_option("--out-dir", study_dir, "output directory");
  study->add_flag("--plot", plot, "also write a log-log SVG plot");

  auto* ck = app.add_subcommand("check-kernel", "print the kernel moment report");
  std::string ck_name;
  int ck_order = 0;
  ck->add_option("--name", ck_name, "kernel name")->required();
  ck->add_option("--order", ck_order, "report moments up to this order");

  auto* verify = app.add_subcommand("verify", "run the fast invariant suite");
  std::uint64_t verify_seed = 20240901;
  verify->add_option("--seed", verify_seed, "seed for the randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    apply_threads(threads);
    if (*sim) return cmd_simulate(spec_path, T, seed, m_flag, out_dir);
    if (*est) return cmd_estimate(x_path, y_path, alpha, beta, gamma, lags, kernel_name, out_path);
    if (*study) return cmd_study(config_path, study_dir, plot);
    if (*ck) return cmd_check_kernel(ck_name, ck_order);
    if (*verify) return cmd_verify(verify_seed);
  } catch (const ftsreg::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const ftsreg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
