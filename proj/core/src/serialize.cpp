#include "ftsreg/serialize.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace ftsreg {

using nlohmann::json;

namespace {

json matrix_to_json(const Eigen::MatrixXd& mat) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < mat.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < mat.cols(); ++j) row.push_back(mat(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const json& rows, int m, const char* what) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != m)
    throw ConfigError(std::string("bad ") + what + " matrix in JSON");
  Eigen::MatrixXd mat(m, m);
  for (int i = 0; i < m; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != m)
      throw ConfigError(std::string("bad ") + what + " row in JSON");
    for (int j = 0; j < m; ++j) mat(i, j) = row[j].get<double>();
  }
  return mat;
}

json linop_to_value(const LinOp& op) {
  json j;
  j["m"] = op.grid().m();
  j["action_re"] = matrix_to_json(op.action().real());
  j["action_im"] = matrix_to_json(op.action().imag());
  return j;
}

LinOp linop_from_value(const json& j) {
  const int m = j.at("m").get<int>();
  if (m < 1) throw ConfigError("bad operator dimension in JSON");
  Eigen::MatrixXd re = matrix_from_json(j.at("action_re"), m, "action_re");
  Eigen::MatrixXd im = matrix_from_json(j.at("action_im"), m, "action_im");
  Eigen::MatrixXcd action = re.cast<Complex>() + Complex(0.0, 1.0) * im.cast<Complex>();
  return LinOp(GridContext(m), std::move(action));
}

json parse_or_throw(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ConfigError("malformed JSON");
  return j;
}

} // namespace

std::string to_json(const LinOp& op) { return linop_to_value(op).dump(); }

LinOp linop_from_json(const std::string& text) { return linop_from_value(parse_or_throw(text)); }

std::string to_json(const GridFunc& f) {
  json j;
  j["m"] = f.grid().m();
  json re = json::array(), im = json::array();
  for (Eigen::Index k = 0; k < f.values().size(); ++k) {
    re.push_back(f.values()[k].real());
    im.push_back(f.values()[k].imag());
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j.dump();
}

GridFunc gridfunc_from_json(const std::string& text) {
  const json j = parse_or_throw(text);
  const int m = j.at("m").get<int>();
  const json& re = j.at("re");
  const json& im = j.at("im");
  if (static_cast<int>(re.size()) != m || static_cast<int>(im.size()) != m)
    throw ConfigError("bad grid function arrays in JSON");
  Eigen::VectorXcd v(m);
  for (int k = 0; k < m; ++k) v[k] = Complex(re[k].get<double>(), im[k].get<double>());
  return GridFunc(GridContext(m), std::move(v));
}

std::string to_json(const FilterBank& bank) {
  json j;
  j["L"] = bank.radius();
  j["lags"] = bank.lags();
  json ops = json::array();
  for (int lag : bank.lags()) ops.push_back(linop_to_value(bank.op(lag)));
  j["ops"] = std::move(ops);
  j["imag_mass"] = bank.imag_mass();
  return j.dump(2);
}

FilterBank filterbank_from_json(const std::string& text) {
  const json j = parse_or_throw(text);
  const int L = j.at("L").get<int>();
  const auto& lags = j.at("lags");
  const auto& ops = j.at("ops");
  if (lags.size() != ops.size()) throw ConfigError("filter bank lags/ops length mismatch");
  if (lags.empty()) throw ConfigError("filter bank JSON has no operators");
  LinOp first = linop_from_value(ops[0]);
  FilterBank bank(first.grid(), L);
  for (std::size_t i = 0; i < lags.size(); ++i)
    bank.set(lags[i].get<int>(), linop_from_value(ops[i]));
  return bank;
}

std::string to_json(const SpectralCurve& curve) {
  json j;
  j["bandwidth"] = curve.bandwidth();
  j["kind"] = curve.kind() == CurveKind::Auto ? "auto" : "cross";
  json ops = json::array();
  for (int s = 0; s < curve.length(); ++s) ops.push_back(linop_to_value(curve.op(s)));
  j["ops"] = std::move(ops);
  return j.dump();
}

SpectralCurve curve_from_json(const std::string& text) {
  const json j = parse_or_throw(text);
  const std::string kind = j.at("kind").get<std::string>();
  if (kind != "auto" && kind != "cross") throw ConfigError("bad spectral curve kind");
  std::vector<LinOp> ops;
  for (const auto& item : j.at("ops")) ops.push_back(linop_from_value(item));
  return SpectralCurve(kind == "auto" ? CurveKind::Auto : CurveKind::Cross,
                       j.at("bandwidth").get<double>(), std::move(ops));
}

std::string to_json(const ProcessSpec& spec) {
  json j;
  j["modes"] = spec.modes;
  j["alpha"] = spec.alpha;
  j["rho"] = spec.rho;
  j["beta"] = spec.beta;
  j["filter_lags"] = {spec.filter_weights[0], spec.filter_weights[1], spec.filter_weights[2]};
  j["noise_alpha"] = spec.noise_alpha;
  j["noise_scale"] = spec.noise_scale;
  return j.dump(2);
}

namespace {
ProcessSpec process_spec_from_value(const json& j) {
  ProcessSpec spec;
  spec.modes = j.value("modes", spec.modes);
  spec.alpha = j.value("alpha", spec.alpha);
  spec.rho = j.value("rho", spec.rho);
  spec.beta = j.value("beta", spec.beta);
  spec.noise_alpha = j.value("noise_alpha", spec.noise_alpha);
  spec.noise_scale = j.value("noise_scale", spec.noise_scale);
  if (j.contains("filter_lags")) {
    const auto& w = j.at("filter_lags");
    if (!w.is_array() || w.size() != 3)
      throw ConfigError("filter_lags must be an array [w_-1, w_0, w_+1]");
    for (int i = 0; i < 3; ++i) spec.filter_weights[i] = w[i].get<double>();
  }
  return spec;
}
} // namespace

ProcessSpec process_spec_from_json(const std::string& text) {
  return process_spec_from_value(parse_or_throw(text));
}

std::string to_json(const StudyConfig& cfg) {
  json j;
  j["process"] = json::parse(to_json(cfg.process));
  j["m"] = cfg.m;
  j["T_list"] = cfg.T_list;
  j["replicates"] = cfg.replicates;
  j["alpha"] = cfg.alpha;
  j["beta"] = cfg.beta;
  j["gamma"] = cfg.gamma;
  j["lag_radius"] = cfg.lag_radius;
  j["master_seed"] = cfg.master_seed;
  j["estimator"] = cfg.estimator == EstimatorKind::Tikhonov ? "tikhonov" : "truncation";
  j["kernel"] = cfg.kernel;
  j["truncation_coeff"] = cfg.truncation_coeff;
  return j.dump(2);
}

StudyConfig study_config_from_json(const std::string& text) {
  const json j = parse_or_throw(text);
  StudyConfig cfg;
  if (j.contains("process")) cfg.process = process_spec_from_value(j.at("process"));
  cfg.m = j.value("m", cfg.m);
  if (j.contains("T_list")) cfg.T_list = j.at("T_list").get<std::vector<long>>();
  cfg.replicates = j.value("replicates", cfg.replicates);
  cfg.alpha = j.value("alpha", cfg.alpha);
  cfg.beta = j.value("beta", cfg.beta);
  cfg.gamma = j.value("gamma", cfg.gamma);
  cfg.lag_radius = j.value("lag_radius", cfg.lag_radius);
  cfg.master_seed = j.value("master_seed", cfg.master_seed);
  cfg.truncation_coeff = j.value("truncation_coeff", cfg.truncation_coeff);
  cfg.kernel = j.value("kernel", cfg.kernel);
  if (j.contains("estimator")) {
    const std::string kind = j.at("estimator").get<std::string>();
    if (kind == "tikhonov")
      cfg.estimator = EstimatorKind::Tikhonov;
    else if (kind == "truncation")
      cfg.estimator = EstimatorKind::Truncation;
    else
      throw ConfigError("unknown estimator '" + kind + "' (tikhonov, truncation)");
  }
  return cfg;
}

std::string emit_study_json(const StudyResult& result) {
  json j;
  j["schema"] = "ftsreg-study-result/1";
  json rows = json::array();
  for (const auto& r : result.rows) {
    json row;
    row["T"] = r.T;
    row["B_T"] = r.B_T;
    row["zeta_T"] = r.zeta_T;
    row["mse_freq_mean"] = r.mse_freq_mean;
    row["mse_freq_se"] = r.mse_freq_se;
    row["mse_lag_mean"] = r.mse_lag_mean;
    row["guard_failures"] = r.guard_failures;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  j["fit"] = {{"slope", result.fitted_slope},
              {"slope_se", result.slope_se},
              {"predicted_exponent", result.predicted_exponent}};
  return j.dump(2);
}

namespace {

std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string svg_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

} // namespace

std::string emit_study_svg(const StudyResult& result) {
  const double width = 640, height = 480;
  const double x0 = 70, x1 = width - 30, y0 = height - 50, y1 = 30;

  std::vector<double> lx, ly;
  for (const auto& r : result.rows) {
    if (r.T > 0 && r.mse_freq_mean > 0.0) {
      lx.push_back(std::log10(static_cast<double>(r.T)));
      ly.push_back(std::log10(r.mse_freq_mean));
    }
  }

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
         "viewBox=\"0 0 640 480\">\n";
  svg += "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
  svg += "<line x1=\"" + svg_num(x0) + "\" y1=\"" + svg_num(y0) + "\" x2=\"" + svg_num(x1) +
         "\" y2=\"" + svg_num(y0) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + svg_num(x0) + "\" y1=\"" + svg_num(y0) + "\" x2=\"" + svg_num(x0) +
         "\" y2=\"" + svg_num(y1) + "\" stroke=\"black\"/>\n";
  svg += "<text x=\"" + svg_num((x0 + x1) / 2) + "\" y=\"" + svg_num(height - 12) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">log10 T</text>\n";
  svg += "<text x=\"18\" y=\"" + svg_num((y0 + y1) / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
         "transform=\"rotate(-90 18 " +
         svg_num((y0 + y1) / 2) + ")\">log10 mse_freq_mean</text>\n";

  if (lx.size() >= 2) {
    double xmin = lx.front(), xmax = lx.front(), ymin = ly.front(), ymax = ly.front();
    for (double v : lx) {
      xmin = std::min(xmin, v);
      xmax = std::max(xmax, v);
    }
    for (double v : ly) {
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
    if (xmax == xmin) xmax = xmin + 1.0;
    const double pad = 0.15 * (ymax - ymin == 0.0 ? 1.0 : ymax - ymin);
    ymin -= pad;
    ymax += pad;
    auto px = [&](double v) { return x0 + (v - xmin) / (xmax - xmin) * (x1 - x0); };
    auto py = [&](double v) { return y0 - (v - ymin) / (ymax - ymin) * (y0 - y1); };

    // axis tick labels at the data abscissae
    for (std::size_t i = 0; i < lx.size(); ++i) {
      svg += "<text x=\"" + svg_num(px(lx[i])) + "\" y=\"" + svg_num(y0 + 18) +
             "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
             svg_label(std::pow(10.0, lx[i])) + "</text>\n";
    }
    svg += "<text x=\"" + svg_num(x0 - 6) + "\" y=\"" + svg_num(py(ymin) + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
           svg_label(std::pow(10.0, ymin)) + "</text>\n";
    svg += "<text x=\"" + svg_num(x0 - 6) + "\" y=\"" + svg_num(py(ymax) + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
           svg_label(std::pow(10.0, ymax)) + "</text>\n";

    // fitted line (slope in natural log equals slope in log10 coordinates)
    const SlopeFit fit = fit_line(lx, ly);
    svg += "<line x1=\"" + svg_num(px(xmin)) + "\" y1=\"" +
           svg_num(py(fit.intercept + fit.slope * xmin)) + "\" x2=\"" + svg_num(px(xmax)) +
           "\" y2=\"" + svg_num(py(fit.intercept + fit.slope * xmax)) +
           "\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";

    // reference line with the predicted slope through the first point
    const double ref_b = ly.front() - result.predicted_exponent * lx.front();
    svg += "<line x1=\"" + svg_num(px(xmin)) + "\" y1=\"" +
           svg_num(py(ref_b + result.predicted_exponent * xmin)) + "\" x2=\"" + svg_num(px(xmax)) +
           "\" y2=\"" + svg_num(py(ref_b + result.predicted_exponent * xmax)) +
           "\" stroke=\"#d62728\" stroke-dasharray=\"6 4\" stroke-width=\"1.5\"/>\n";

    for (std::size_t i = 0; i < lx.size(); ++i) {
      svg += "<circle cx=\"" + svg_num(px(lx[i])) + "\" cy=\"" + svg_num(py(ly[i])) +
             "\" r=\"4\" fill=\"#1f77b4\"/>\n";
    }
    svg += "<text x=\"" + svg_num(x1 - 8) + "\" y=\"" + svg_num(y1 + 14) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">fitted slope " +
           svg_label(result.fitted_slope) + ", predicted " +
           svg_label(result.predicted_exponent) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

} // namespace ftsreg
