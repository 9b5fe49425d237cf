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

#include "runner.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Maslov index and metaplectic holonomy experiments"};
  std::string spec_path;
  std::string out_path;
  std::string format;
  double tol_phase = 0.0;
  std::uint64_t seed = 0;
  int refine_max = 0;
  app.add_option("--spec", spec_path, "Experiment spec (JSON)")->required()->check(CLI::ExistingFile);
  auto* out_opt = app.add_option("--out", out_path, "Write the report here instead of stdout");
  auto* fmt_opt = app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  auto* tol_opt = app.add_option("--tol-phase", tol_phase, "Phase tolerance")->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed", seed, "Seed for randomized suites");
  auto* refine_opt = app.add_option("--refine-max", refine_max, "Maximum bisection depth")->check(CLI::Range(1, 60));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  maslov::cli::Options options;
  if (*fmt_opt) options.format = format;
  if (*tol_opt) options.tol_phase = tol_phase;
  if (*seed_opt) options.seed = seed;
  if (*refine_opt) options.refine_max = refine_max;
  if (const char* profile = std::getenv("MASLOV_CONVENTION_LEDGER")) options.profile = profile;

  maslov::cli::Outcome outcome = maslov::cli::run_file(spec_path, options);
  if (*out_opt) outcome.out_path = out_path;

  if (outcome.out_path) {
    std::ofstream out(*outcome.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << *outcome.out_path << "\n";
      return 1;
    }
    out << outcome.body();
    std::cout << outcome.summary << "\n";
  } else {
    std::cout << outcome.body();
    std::cerr << outcome.summary << "\n";
  }
  return outcome.exit_code;
}
