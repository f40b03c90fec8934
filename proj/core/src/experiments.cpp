#include "ftsreg/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include <unsupported/Eigen/FFT>

#include "ftsreg/parallel.hpp"
#include "ftsreg/serialize.hpp"

namespace ftsreg {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

std::string format_double(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

bool is_power_of_two(long v) { return v > 0 && (v & (v - 1)) == 0; }

int truncation_rank(const StudyConfig& cfg, long T) {
  const double k = cfg.truncation_coeff *
                   std::pow(static_cast<double>(T), 1.0 / (cfg.alpha + 2.0 * cfg.beta));
  return std::clamp(static_cast<int>(std::lround(k)), 1, cfg.m);
}

} // namespace

void StudyConfig::validate() const {
  process.validate(GridContext(m));
  if (T_list.empty()) throw ConfigError("study needs at least one sample size");
  for (std::size_t i = 0; i < T_list.size(); ++i) {
    if (!is_power_of_two(T_list[i])) throw ConfigError("sample sizes must be powers of two");
    if (i > 0 && T_list[i] <= T_list[i - 1])
      throw ConfigError("sample sizes must be strictly increasing");
  }
  if (replicates < 2) throw ConfigError("study needs at least 2 replicates");
  if (lag_radius < 0) throw ConfigError("lag radius must be nonnegative");
  SmoothingKernel::by_name(kernel);
  for (long T : T_list) schedule(alpha, beta, gamma, T); // surface violations up front
}

std::vector<Eigen::MatrixXcd> truth_transfer_actions(const GroundTruth& truth, int T) {
  std::vector<Eigen::MatrixXcd> out(T);
  const int half = T / 2;
  for (int s = 0; s <= half; ++s) out[s] = truth.transfer(two_pi * s / T).action();
  for (int s = half + 1; s < T; ++s) out[s] = out[T - s].conjugate();
  return out;
}

MseMetrics mse_metrics(const SpectralCurve& qhat,
                       const std::vector<Eigen::MatrixXcd>& truth_actions) {
  const int T = qhat.length();
  if (static_cast<int>(truth_actions.size()) != T)
    throw DimensionError("truth curve length does not match the estimate");
  const int m = qhat.op(0).grid().m();

  MseMetrics out;
  for (int s = 0; s < T; ++s)
    out.freq += (qhat.op(s).action() - truth_actions[s]).squaredNorm();
  out.freq *= two_pi / T;

  // lag route: per matrix entry, inverse DFT of the difference sequence
  Eigen::FFT<double> fft;
  Eigen::VectorXcd diff(T), lagged(T);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int s = 0; s < T; ++s) diff[s] = qhat.op(s).action()(i, j) - truth_actions[s](i, j);
      fft.inv(lagged, diff); // (1/T) sum_s e^{+i nu_s l}
      out.lag += lagged.squaredNorm();
    }
  }
  return out;
}

double mse_frequency(const SpectralCurve& qhat, const GroundTruth& truth) {
  return mse_metrics(qhat, truth_transfer_actions(truth, qhat.length())).freq;
}

double mse_lag(const SpectralCurve& qhat, const GroundTruth& truth) {
  return mse_metrics(qhat, truth_transfer_actions(truth, qhat.length())).lag;
}

StudyResult run_study(const StudyConfig& cfg) {
  cfg.validate();
  const GridContext grid(cfg.m);
  const SmoothingKernel kern = SmoothingKernel::by_name(cfg.kernel);

  StudyResult result;
  for (long T : cfg.T_list) {
    const TuningSchedule sched = schedule(cfg.alpha, cfg.beta, cfg.gamma, T);
    const GroundTruth truth(cfg.process, grid);
    const auto truth_curve = truth_transfer_actions(truth, static_cast<int>(T));
    const int K = truncation_rank(cfg, T);

    std::vector<MseMetrics> metrics(cfg.replicates);
    std::vector<char> failed(cfg.replicates, 0);
    parallel_for(cfg.replicates, [&](int r) {
      const std::uint64_t seed = derive_seed(cfg.master_seed, static_cast<std::uint64_t>(T),
                                             static_cast<std::uint64_t>(r));
      SimulatedPair pair = simulate_pair(cfg.process, grid, static_cast<int>(T), seed);
      try {
        FilterEstimate est =
            cfg.estimator == EstimatorKind::Tikhonov
                ? estimate_filter(pair.x, pair.y, kern, sched, cfg.lag_radius)
                : estimate_filter_truncated(pair.x, pair.y, kern, sched.B_T, K, cfg.lag_radius);
        metrics[r] = mse_metrics(est.q_curve, truth_curve);
      } catch (const RidgeNotPositiveError&) {
        failed[r] = 1;
      } catch (const RankError&) {
        failed[r] = 1;
      }
    });

    StudyRow row;
    row.T = T;
    row.B_T = sched.B_T;
    row.zeta_T = sched.zeta_T;
    std::vector<double> freq_vals;
    double lag_sum = 0.0;
    for (int r = 0; r < cfg.replicates; ++r) {
      if (failed[r]) {
        ++row.guard_failures;
        continue;
      }
      freq_vals.push_back(metrics[r].freq);
      lag_sum += metrics[r].lag;
    }
    const std::size_t n = freq_vals.size();
    if (n > 0) {
      double mean = 0.0;
      for (double v : freq_vals) mean += v;
      mean /= static_cast<double>(n);
      double var = 0.0;
      for (double v : freq_vals) var += (v - mean) * (v - mean);
      var = n > 1 ? var / static_cast<double>(n - 1) : 0.0;
      row.mse_freq_mean = mean;
      row.mse_freq_se = std::sqrt(var / static_cast<double>(n));
      row.mse_lag_mean = lag_sum / static_cast<double>(n);
    }
    result.rows.push_back(row);
  }

  std::vector<double> lx, ly;
  for (const auto& row : result.rows) {
    if (row.mse_freq_mean > 0.0) {
      lx.push_back(std::log(static_cast<double>(row.T)));
      ly.push_back(std::log(row.mse_freq_mean));
    }
  }
  if (lx.size() >= 2) {
    const SlopeFit fit = fit_line(lx, ly);
    result.fitted_slope = fit.slope;
    result.slope_se = fit.se;
  }
  result.predicted_exponent =
      cfg.gamma - (2.0 * cfg.beta - 1.0) / (cfg.alpha + 2.0 * cfg.beta);
  return result;
}

SlopeFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw ParameterError("slope fit needs at least two matched points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw ParameterError("slope fit needs distinct abscissae");
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double rss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - fit.intercept - fit.slope * x[i];
    rss += r * r;
  }
  fit.se = x.size() > 2 ? std::sqrt(rss / (n - 2.0) / sxx) : 0.0;
  return fit;
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw ParameterError("rank correlation needs at least two matched points");
  auto ranks = [](const std::vector<double>& v) {
    std::vector<std::size_t> idx(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    for (std::size_t pos = 0; pos < idx.size(); ++pos) r[idx[pos]] = static_cast<double>(pos);
    return r;
  };
  const std::vector<double> rx = ranks(x), ry = ranks(y);
  double acc = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    const double d = rx[i] - ry[i];
    acc += d * d;
  }
  const double n = static_cast<double>(x.size());
  return 1.0 - 6.0 * acc / (n * (n * n - 1.0));
}

namespace {
const char* kCsvHeader = "T,B_T,zeta_T,mse_freq_mean,mse_freq_se,mse_lag_mean,guard_failures";
}

std::string emit(const StudyResult& result, const std::string& format) {
  if (format == "csv") {
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& r : result.rows) {
      out += std::to_string(r.T);
      out += ',';
      out += format_double(r.B_T);
      out += ',';
      out += format_double(r.zeta_T);
      out += ',';
      out += format_double(r.mse_freq_mean);
      out += ',';
      out += format_double(r.mse_freq_se);
      out += ',';
      out += format_double(r.mse_lag_mean);
      out += ',';
      out += std::to_string(r.guard_failures);
      out += '\n';
    }
    return out;
  }
  if (format == "json") return emit_study_json(result);
  if (format == "svg") return emit_study_svg(result);
  throw ParameterError("unsupported emit format '" + format + "' (csv, json, svg)");
}

StudyResult parse_study_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw ConfigError("unexpected study CSV header");
  StudyResult result;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string tok;
    std::vector<std::string> fields;
    while (std::getline(row, tok, ',')) fields.push_back(tok);
    if (fields.size() != 7) throw ConfigError("bad study CSV row: " + line);
    StudyRow r;
    r.T = std::stol(fields[0]);
    r.B_T = std::stod(fields[1]);
    r.zeta_T = std::stod(fields[2]);
    r.mse_freq_mean = std::stod(fields[3]);
    r.mse_freq_se = std::stod(fields[4]);
    r.mse_lag_mean = std::stod(fields[5]);
    r.guard_failures = std::stol(fields[6]);
    result.rows.push_back(r);
  }
  return result;
}

} // namespace ftsreg
