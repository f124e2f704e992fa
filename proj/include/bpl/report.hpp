// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace bpl {

using Json = nlohmann::ordered_json;

/// Value rounded to 15 significant digits; non-finite values become
/// the strings "inf", "-inf", "nan".
Json num(double v);
Json num_array(const std::vector<double>& v);

/// Writes to a sibling temp file, then renames over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& content);
void write_json(const std::filesystem::path& path, const Json& j);

/// CSV with a header row; numbers printed with %.15g. A non-empty `comment`
/// becomes a leading `# ...` line.
void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns, const std::string& comment = "");

struct SvgSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  bool dashed = false;
};
/// Minimal line chart.
void write_svg(const std::filesystem::path& path, const std::string& title,
               const std::vector<SvgSeries>& series);

}  // namespace bpl
