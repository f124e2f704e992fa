// SPDX-License-Identifier: Apache-2.0
#include "bpl/config.hpp"

#include <algorithm>
#include <array>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "bpl/errors.hpp"

namespace bpl {
namespace {

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = [] {
    std::set<std::string> k = {
        "seed",          "quad.M",          "quad.Q",         "basis.N",
        "potential.kind", "potential.A",    "potential.epsilon", "potential.shift",
        "potential.offset", "potential.k1", "potential.k2",   "forms.pairs",
        "forms.order",   "flow.f.cos",      "flow.f.sin",     "flow.f.support",
        "flow.psi.kind", "flow.psi.alpha",  "flow.psi.B",     "flow.psi.b",
        "flow.psi.c",    "flow.epsilon",    "flow.points",    "spectral.samples",
        "spectral.deltas", "bm.p",          "bm.nodes",       "bm.probe",
        "scan.radii",
    };
    for (const char* prefix : {"body.", "body2."}) {
      for (const char* f :
           {"kind", "radius", "a", "b", "cos", "sin", "points", "smoothing", "translate"}) {
        k.insert(std::string(prefix) + f);
      }
    }
    return k;
  }();
  return keys;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double to_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE) {
    throw Error(ErrorKind::ConfigError, "key '" + key + "': '" + text + "' is not a number");
  }
  return v;
}

std::vector<double> split_numbers(const std::string& key, const std::string& text, char sep) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (trim(item).empty()) continue;
    out.push_back(to_double(key, item));
  }
  return out;
}

Vec2 vec2(const Config& c, const std::string& key) {
  const auto v = c.list(key, {0.0, 0.0});
  if (v.size() != 2) throw Error(ErrorKind::ConfigError, "key '" + key + "' needs two entries");
  return {v[0], v[1]};
}

Mat2 mat2(const Config& c, const std::string& key, const Mat2& fallback) {
  if (!c.has(key)) return fallback;
  const auto v = c.list(key, {});
  if (v.size() != 4) {
    throw Error(ErrorKind::ConfigError, "key '" + key + "' needs four row-major entries");
  }
  Mat2 m;
  m << v[0], v[1], v[2], v[3];
  return m;
}

}  // namespace

bool Config::is_known_key(const std::string& key) { return known_keys().count(key) != 0; }

Config Config::parse(std::string_view text, const std::string& source) {
  Config c;
  std::stringstream ss{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    const std::string where = source + ":" + std::to_string(lineno);
    if (eq == std::string::npos) throw Error(ErrorKind::ConfigError, where + ": expected 'key = value'");
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (!is_known_key(key)) throw Error(ErrorKind::ConfigError, where + ": unknown key '" + key + "'");
    if (c.entries_.count(key)) throw Error(ErrorKind::ConfigError, where + ": duplicate key '" + key + "'");
    c.entries_[key] = value;
  }
  return c;
}

Config Config::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ConfigError, "cannot read config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

void Config::set(const std::string& key, const std::string& value) {
  if (!is_known_key(key)) throw Error(ErrorKind::ConfigError, "unknown key '" + key + "'");
  entries_[key] = value;
}

std::string Config::str(const std::string& key, const std::string& fallback) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? fallback : it->second;
}

double Config::real(const std::string& key, double fallback) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? fallback : to_double(key, it->second);
}

int Config::integer(const std::string& key, int fallback) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  const double v = to_double(key, it->second);
  if (v != std::floor(v) || std::abs(v) > 1e9) {
    throw Error(ErrorKind::ConfigError, "key '" + key + "' must be an integer");
  }
  return static_cast<int>(v);
}

std::uint64_t Config::seed(std::uint64_t fallback) const {
  const auto it = entries_.find("seed");
  if (it == entries_.end()) return fallback;
  const std::string t = trim(it->second);
  char* end = nullptr;
  const auto v = std::strtoull(t.c_str(), &end, 10);
  if (t.empty() || end != t.c_str() + t.size()) {
    throw Error(ErrorKind::ConfigError, "seed must be a non-negative integer");
  }
  return v;
}

bool Config::boolean(const std::string& key, bool fallback) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  if (it->second == "true" || it->second == "1") return true;
  if (it->second == "false" || it->second == "0") return false;
  throw Error(ErrorKind::ConfigError, "key '" + key + "' must be true or false");
}

std::vector<double> Config::list(const std::string& key, const std::vector<double>& fallback) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? fallback : split_numbers(key, it->second, ',');
}

std::vector<Vec2> Config::points(const std::string& key) const {
  std::vector<Vec2> out;
  std::stringstream ss(str(key, ""));
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (trim(item).empty()) continue;
    const auto v = split_numbers(key, item, ',');
    if (v.size() != 2) throw Error(ErrorKind::ConfigError, "key '" + key + "': points are 'x,y; x,y; ...'");
    out.emplace_back(v[0], v[1]);
  }
  return out;
}

BodyDescriptor body_from_config(const Config& c, const std::string& prefix) {
  BodyDescriptor d;
  const auto k = [&](const char* f) { return prefix + "." + f; };
  d.kind = c.str(k("kind"), "disk");
  d.radius = c.real(k("radius"), 1.0);
  d.a = c.real(k("a"), 1.0);
  d.b = c.real(k("b"), 1.0);
  d.cos_coeffs = c.list(k("cos"), {1.0});
  d.sin_coeffs = c.list(k("sin"), {});
  d.points = c.points(k("points"));
  d.smoothing = c.real(k("smoothing"), 0.05);
  if (c.has(k("translate"))) d.translate = vec2(c, k("translate"));
  return d;
}

PotentialDescriptor potential_from_config(const Config& c, const std::string& prefix) {
  PotentialDescriptor d;
  const auto k = [&](const char* f) { return prefix + "." + f; };
  d.kind = c.str(k("kind"), "gaussian");
  d.A = mat2(c, k("A"), Mat2::Identity());
  d.epsilon = c.real(k("epsilon"), 0.0);
  if (c.has(k("shift"))) d.shift = vec2(c, k("shift"));
  d.offset = c.real(k("offset"), 0.0);
  if (c.has(k("k1")) || c.has(k("k2"))) {
    if (!(c.has(k("k1")) && c.has(k("k2")))) {
      throw Error(ErrorKind::ConfigError, "declare both potential.k1 and potential.k2");
    }
    d.pinching = Pinching{c.real(k("k1"), 1.0), c.real(k("k2"), 1.0)};
  }
  return d;
}

QuadratureConfig quadrature_from_config(const Config& c) {
  QuadratureConfig q{c.integer("quad.M", kDefaultGridSize), c.integer("quad.Q", 32)};
  try {
    q.validate();
  } catch (const Error& e) {
    throw Error(ErrorKind::ConfigError, e.what());
  }
  return q;
}

BoundaryField flow_direction_from_config(const Config& c, const SupportFunction& h) {
  const auto cc = c.list("flow.f.cos", {0.0, 0.0, 1.0});
  auto ss = c.list("flow.f.sin", {});
  ss.insert(ss.begin(), 0.0);
  TrigSeries f(cc, ss);
  const double support = c.real("flow.f.support", 0.0);
  if (support != 0.0) f += h.series() * support;
  return BoundaryField(std::move(f));
}

Psi psi_from_config(const Config& c, const Potential& u) {
  const std::string kind = c.str("flow.psi.kind", "quadratic");
  if (kind == "zero") return Psi::zero();
  if (kind == "conjugate") return Psi::scaled_conjugate(u, c.real("flow.psi.alpha", 1.0));
  const Vec2 b = c.has("flow.psi.b") ? vec2(c, "flow.psi.b") : Vec2::Zero().eval();
  const double k0 = c.real("flow.psi.c", 0.0);
  if (kind == "affine") return Psi::affine(b, k0);
  if (kind == "quadratic") return Psi::quadratic(mat2(c, "flow.psi.B", 0.3 * Mat2::Identity()), b, k0);
  throw Error(ErrorKind::ConfigError, "flow.psi.kind must be zero, affine, quadratic or conjugate");
}

}  // namespace bpl
