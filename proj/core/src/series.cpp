#include "ftsreg/series.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <system_error>

#include <unsupported/Eigen/FFT>

namespace ftsreg {

namespace {

std::string format_double(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view tok, const std::filesystem::path& path) {
  double v = 0.0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
    throw IoError("malformed numeric field '" + std::string(tok) + "' in " + path.string());
  return v;
}

} // namespace

FuncSeries::FuncSeries(GridContext grid, Eigen::MatrixXd data)
    : grid_(grid), data_(std::move(data)) {
  if (data_.cols() != grid_.m())
    throw DimensionError("series width does not match grid resolution");
  if (data_.rows() < 2) throw ParameterError("series length must be at least 2");
  if (!data_.allFinite()) throw NumericError("series contains non-finite entries");
}

FuncSeries FuncSeries::read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::string header;
  if (!std::getline(in, header)) throw IoError("empty file " + path.string());
  int m = 0, T = 0;
  if (std::sscanf(header.c_str(), "m=%d,T=%d", &m, &T) != 2)
    throw IoError("bad series header (expected m=<int>,T=<int>) in " + path.string());
  if (m < 1 || T < 2) throw IoError("bad series dimensions in header of " + path.string());

  Eigen::MatrixXd data(T, m);
  std::string line;
  for (int t = 0; t < T; ++t) {
    if (!std::getline(in, line))
      throw IoError("truncated series file " + path.string());
    std::string_view rest(line);
    for (int k = 0; k < m; ++k) {
      const auto comma = rest.find(',');
      std::string_view tok = comma == std::string_view::npos ? rest : rest.substr(0, comma);
      if (tok.empty()) throw IoError("missing field in row of " + path.string());
      data(t, k) = parse_double(tok, path);
      if (comma == std::string_view::npos) {
        if (k != m - 1) throw IoError("short row in " + path.string());
        rest = {};
      } else {
        rest = rest.substr(comma + 1);
      }
    }
    if (!rest.empty()) throw IoError("trailing fields in row of " + path.string());
  }
  return FuncSeries(GridContext(m), std::move(data));
}

void FuncSeries::write_csv(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << "m=" << grid_.m() << ",T=" << length() << "\n";
  for (int t = 0; t < length(); ++t) {
    for (int k = 0; k < grid_.m(); ++k) {
      if (k) out << ',';
      out << format_double(data_(t, k));
    }
    out << "\n";
  }
  if (!out) throw IoError("write failed for " + path.string());
}

DftStack::DftStack(GridContext grid, Eigen::MatrixXcd coeffs)
    : grid_(grid), coeffs_(std::move(coeffs)) {
  if (coeffs_.cols() != grid_.m())
    throw DimensionError("DFT stack width does not match grid resolution");
}

double DftStack::freq(int s) const {
  if (s < 0 || s >= length()) throw ParameterError("frequency index out of range");
  return 2.0 * std::numbers::pi * s / length();
}

Eigen::VectorXcd DftStack::coeff(int s) const {
  if (s < 0 || s >= length()) throw ParameterError("frequency index out of range");
  return coeffs_.row(s).transpose();
}

DftStack fdft(const FuncSeries& series) {
  const int T = series.length();
  const int m = series.grid().m();
  const double scale = 1.0 / std::sqrt(static_cast<double>(T));

  Eigen::MatrixXcd coeffs(T, m);
  Eigen::FFT<double> fft;
  Eigen::VectorXcd in(T), out(T);
  for (int k = 0; k < m; ++k) {
    for (int t = 0; t < T; ++t) in[t] = Complex(series.data()(t, k), 0.0);
    fft.fwd(out, in);
    coeffs.col(k) = scale * out;
  }
  return DftStack(series.grid(), std::move(coeffs));
}

} // namespace ftsreg
