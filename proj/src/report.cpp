// SPDX-License-Identifier: Apache-2.0
#include "bpl/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "bpl/errors.hpp"

namespace bpl {
namespace {

std::string fmt15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

}  // namespace

Json num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return std::strtod(fmt15(v).c_str(), nullptr);
}

Json num_array(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(num(x));
  return a;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::ConfigError, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error(ErrorKind::ConfigError, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void write_json(const std::filesystem::path& path, const Json& j) { write_atomic(path, j.dump(2) + "\n"); }

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns, const std::string& comment) {
  if (header.size() != columns.size()) {
    throw Error(ErrorKind::InvalidArgument, "csv header and columns differ in size");
  }
  std::ostringstream s;
  if (!comment.empty()) s << "# " << comment << "\n";
  for (std::size_t c = 0; c < header.size(); ++c) s << (c ? "," : "") << header[c];
  s << "\n";
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      s << (c ? "," : "") << (r < columns[c].size() ? fmt15(columns[c][r]) : "");
    }
    s << "\n";
  }
  write_atomic(path, s.str());
}

void write_svg(const std::filesystem::path& path, const std::string& title,
               const std::vector<SvgSeries>& series) {
  constexpr double W = 640, H = 400, pad = 50;
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& s : series) {
    for (double v : s.x) x0 = std::min(x0, v), x1 = std::max(x1, v);
    for (double v : s.y) y0 = std::min(y0, v), y1 = std::max(y1, v);
  }
  if (!(x1 > x0)) x1 = x0 + 1.0;
  if (!(y1 > y0)) y1 = y0 + 1.0;
  const auto px = [&](double x) { return pad + (x - x0) / (x1 - x0) * (W - 2 * pad); };
  const auto py = [&](double y) { return H - pad - (y - y0) / (y1 - y0) * (H - 2 * pad); };
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<text x=\"" << pad << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">" << title
    << "</text>\n"
    << "<rect x=\"" << pad << "\" y=\"" << pad << "\" width=\"" << W - 2 * pad << "\" height=\""
    << H - 2 * pad << "\" fill=\"none\" stroke=\"#888\"/>\n";
  s << "<text x=\"" << pad << "\" y=\"" << H - pad + 16 << "\" font-size=\"10\">" << fmt15(x0)
    << "</text><text x=\"" << W - pad << "\" y=\"" << H - pad + 16
    << "\" font-size=\"10\" text-anchor=\"end\">" << fmt15(x1) << "</text>\n";
  s << "<text x=\"" << pad - 4 << "\" y=\"" << H - pad << "\" font-size=\"10\" text-anchor=\"end\">"
    << fmt15(y0) << "</text><text x=\"" << pad - 4 << "\" y=\"" << pad + 8
    << "\" font-size=\"10\" text-anchor=\"end\">" << fmt15(y1) << "</text>\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& ser = series[i];
    const char* col = colors[i % 4];
    s << "<polyline fill=\"none\" stroke=\"" << col << "\" stroke-width=\"1.5\""
      << (ser.dashed ? " stroke-dasharray=\"5,4\"" : "") << " points=\"";
    for (std::size_t k = 0; k < std::min(ser.x.size(), ser.y.size()); ++k) {
      s << px(ser.x[k]) << "," << py(ser.y[k]) << " ";
    }
    s << "\"/>\n<text x=\"" << W - pad - 4 << "\" y=\"" << pad + 16 + 14 * i
      << "\" font-size=\"11\" text-anchor=\"end\" fill=\"" << col << "\">" << ser.label
      << "</text>\n";
  }
  s << "</svg>\n";
  write_atomic(path, s.str());
}

}  // namespace bpl
