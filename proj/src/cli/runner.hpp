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

// Experiment-spec runner behind the maslov command line tool.

#pragma once

#include "json_out.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace maslov::cli {

inline constexpr const char* kSpecVersion = "1";
inline constexpr const char* kDefaultProfile = "paper-v1";

struct Options {
  std::optional<double> tol_phase;
  std::optional<std::uint64_t> seed;
  std::optional<int> refine_max;
  std::optional<std::string> format;
  std::string profile = kDefaultProfile;
};

struct Outcome {
  int exit_code = 0;  ///< 0 pass, 1 input error, 2 assertion failure
  std::string summary;
  json report;
  std::string csv;  ///< set when a trace is available
  std::string format = "json";
  std::optional<std::string> out_path;

  /// The text to write: the JSON report or the CSV trace.
  std::string body() const;
};

/// Never throws for bad input; schema and numerical errors become exit codes.
Outcome run(const json& spec, const Options& options);

/// Reads and parses a spec file, then runs it.
Outcome run_file(const std::string& path, const Options& options);

bool known_profile(const std::string& name);

}  // namespace maslov::cli
