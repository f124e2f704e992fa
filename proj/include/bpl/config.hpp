// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bpl/fields.hpp"
#include "bpl/geometry.hpp"
#include "bpl/measure.hpp"
#include "bpl/quad.hpp"

namespace bpl {

/// Flat `dotted.key = value` text; `#` starts a comment. Keys outside the
/// known set are rejected with ConfigError.
class Config {
 public:
  static Config parse(std::string_view text, const std::string& source = "<string>");
  static Config load(const std::filesystem::path& path);

  [[nodiscard]] bool has(const std::string& key) const { return entries_.count(key) != 0; }
  [[nodiscard]] std::string str(const std::string& key, const std::string& fallback) const;
  [[nodiscard]] double real(const std::string& key, double fallback) const;
  [[nodiscard]] int integer(const std::string& key, int fallback) const;
  [[nodiscard]] std::uint64_t seed(std::uint64_t fallback) const;
  [[nodiscard]] bool boolean(const std::string& key, bool fallback) const;
  [[nodiscard]] std::vector<double> list(const std::string& key,
                                         const std::vector<double>& fallback) const;
  [[nodiscard]] std::vector<Vec2> points(const std::string& key) const;
  [[nodiscard]] const std::map<std::string, std::string>& entries() const noexcept { return entries_; }

  /// Overrides (CLI flags); the key must be known.
  void set(const std::string& key, const std::string& value);

  [[nodiscard]] static bool is_known_key(const std::string& key);

 private:
  std::map<std::string, std::string> entries_;
};

BodyDescriptor body_from_config(const Config& c, const std::string& prefix = "body");
PotentialDescriptor potential_from_config(const Config& c, const std::string& prefix = "potential");
QuadratureConfig quadrature_from_config(const Config& c);
/// flow.f.cos / flow.f.sin plus flow.f.support · h.
BoundaryField flow_direction_from_config(const Config& c, const SupportFunction& h);
Psi psi_from_config(const Config& c, const Potential& u);

}  // namespace bpl
