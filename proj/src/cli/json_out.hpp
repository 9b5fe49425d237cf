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

#pragma once

#include <json.hpp>

#include <complex>
#include <string>

namespace maslov::cli {

using json = nlohmann::json;

/// Serializes with sorted keys, two-space indent and every floating value
/// printed with 17 significant digits, so equal reports are equal bytes.
std::string dump_report(const json& j);

/// {"re", "im", "root", "root_residual"}; root is the nearest fourth root of
/// unity ("1", "i", "-1", "-i") when within phase_tol, otherwise null.
json phase_json(std::complex<double> z, double phase_tol);
json complex_json(std::complex<double> z);

}  // namespace maslov::cli
