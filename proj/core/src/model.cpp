// Copyright 2026 The gaitdyn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gaitdyn/model.hpp"

#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "gaitdyn/error.hpp"
#include "gaitdyn/text_format.hpp"

namespace gaitdyn {
namespace {

constexpr const char* kModule = "model-core";

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(kModule, std::string("coefficient ") + name +
                                   " must be finite and > 0 (got " +
                                   text::format_number(v) + ")");
  }
}

void check_positive(ValidationReport& r, const char* name, double v) {
  if (!std::isfinite(v)) {
    r.violations.push_back({name, "not a finite number"});
  } else if (!(v > 0.0)) {
    r.violations.push_back({name, "must be strictly positive"});
  }
}

}  // namespace

ShankParams derive_params_from_coefficients(const AnthroCoefficients& c,
                                            double g) {
  require_positive(c.c1, "c1");
  require_positive(c.c2, "c2");
  if (!(c.c3 >= 0.0) || !std::isfinite(c.c3)) {
    throw DomainError(kModule, "coefficient c3 must be finite and >= 0 (got " +
                                   text::format_number(c.c3) + ")");
  }
  require_positive(c.c4, "c4");
  require_positive(g, "g");

  // c4 / g = m2 a2 is the common factor of the three products.
  const double m2a2 = c.c4 / g;
  ShankParams s;
  s.a2 = c.c1 * g / c.c4;
  s.m2 = m2a2 / s.a2;
  s.l1 = c.c2 / m2a2;
  s.I2 = c.c3;
  return s;
}

AnthroCoefficients coefficients_from_params(const ShankParams& s, double g) {
  return {s.m2 * s.a2 * s.a2, s.m2 * s.l1 * s.a2, s.I2, s.m2 * g * s.a2};
}

SegmentParams anthro1_params() {
  const ShankParams shank =
      derive_params_from_coefficients(AnthroCoefficients{}, kStandardGravity);
  SegmentParams p;
  p.m1 = 7.0;
  p.a1 = 0.25;
  p.I1 = 0.15;
  p.l2 = 0.45;
  p.m2 = shank.m2;
  p.a2 = shank.a2;
  p.l1 = shank.l1;
  p.I2 = shank.I2;
  p.g = kStandardGravity;
  return p;
}

DamperGeometry default_damper() { return {0.05, 0.04, 0.0, 0.25}; }

ValidationReport validate_params(const SegmentParams& p) {
  ValidationReport r;
  check_positive(r, "m1", p.m1);
  check_positive(r, "m2", p.m2);
  check_positive(r, "a1", p.a1);
  check_positive(r, "a2", p.a2);
  check_positive(r, "I1", p.I1);
  check_positive(r, "I2", p.I2);
  check_positive(r, "l1", p.l1);
  check_positive(r, "l2", p.l2);
  check_positive(r, "g", p.g);
  if (std::isfinite(p.a1) && std::isfinite(p.l1) && p.a1 > p.l1) {
    r.violations.push_back({"a1", "COM beyond segment (a1 > l1)"});
  }
  if (std::isfinite(p.a2) && std::isfinite(p.l2) && p.a2 > p.l2) {
    r.violations.push_back({"a2", "COM beyond segment (a2 > l2)"});
  }
  return r;
}

ValidationReport validate_damper(const DamperGeometry& d) {
  ValidationReport r;
  check_positive(r, "s", d.s);
  check_positive(r, "b", d.b);
  check_positive(r, "ld", d.ld);
  if (!std::isfinite(d.beta)) r.violations.push_back({"beta", "not a finite number"});
  return r;
}

ParamSet parse_param_file(std::string_view text) {
  ParamSet out;
  const std::map<std::string, double*, std::less<>> slots = {
      {"m1", &out.segments.m1}, {"m2", &out.segments.m2},
      {"a1", &out.segments.a1}, {"a2", &out.segments.a2},
      {"I1", &out.segments.I1}, {"I2", &out.segments.I2},
      {"l1", &out.segments.l1}, {"l2", &out.segments.l2},
      {"g", &out.segments.g},   {"s", &out.damper.s},
      {"b", &out.damper.b},     {"beta", &out.damper.beta},
      {"ld", &out.damper.ld}};
  std::set<std::string, std::less<>> seen;

  const auto all = text::lines(text);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const std::string where = "line " + std::to_string(i + 1) + ": ";
    std::string_view line = all[i];
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = text::trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw DomainError(kModule, where + "expected `key = value`");
    }
    const auto key = text::trim(line.substr(0, eq));
    const auto slot = slots.find(key);
    if (slot == slots.end()) {
      throw DomainError(kModule, where + "unknown key '" + std::string(key) + "'");
    }
    if (!seen.insert(std::string(key)).second) {
      throw DomainError(kModule, where + "duplicate key '" + std::string(key) + "'");
    }
    const auto value = text::parse_number(line.substr(eq + 1));
    if (!value) {
      throw DomainError(kModule, where + "malformed value for '" + std::string(key) + "'");
    }
    *slot->second = *value;
  }
  return out;
}

std::string format_param_file(const ParamSet& params) {
  using text::format_number;
  const auto& s = params.segments;
  const auto& d = params.damper;
  std::ostringstream os;
  os << "# segment parameters (SI units)\n"
     << "m1 = " << format_number(s.m1) << '\n'
     << "m2 = " << format_number(s.m2) << '\n'
     << "a1 = " << format_number(s.a1) << '\n'
     << "a2 = " << format_number(s.a2) << '\n'
     << "I1 = " << format_number(s.I1) << '\n'
     << "I2 = " << format_number(s.I2) << '\n'
     << "l1 = " << format_number(s.l1) << '\n'
     << "l2 = " << format_number(s.l2) << '\n'
     << "g = " << format_number(s.g) << '\n'
     << "# damper geometry\n"
     << "s = " << format_number(d.s) << '\n'
     << "b = " << format_number(d.b) << '\n'
     << "beta = " << format_number(d.beta) << '\n'
     << "ld = " << format_number(d.ld) << '\n';
  return os.str();
}

}  // namespace gaitdyn
