/*
Copyright 2026 The maslov-holonomy Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "json_out.hpp"

#include <cmath>
#include <cstdio>

namespace maslov::cli {

namespace {

void emit(const json& j, int depth, std::string& out) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close(2 * depth, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + json(k).dump() + ": ";
        emit(v, depth + 1, out);
      }
      out += "\n" + close + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        emit(j[i], depth + 1, out);
      }
      out += "\n" + close + "]";
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump_report(const json& j) {
  std::string out;
  emit(j, 0, out);
  out += "\n";
  return out;
}

json complex_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json phase_json(std::complex<double> z, double phase_tol) {
  static const std::pair<const char*, std::complex<double>> roots[] = {
      {"1", {1.0, 0.0}}, {"i", {0.0, 1.0}}, {"-1", {-1.0, 0.0}}, {"-i", {0.0, -1.0}}};
  double best = std::numeric_limits<double>::infinity();
  const char* label = nullptr;
  for (const auto& [name, r] : roots) {
    const double d = std::abs(z - r);
    if (d < best) {
      best = d;
      label = name;
    }
  }
  json j = complex_json(z);
  j["root_residual"] = best;
  j["root"] = best <= phase_tol ? json(label) : json(nullptr);
  return j;
}

}  // namespace maslov::cli
