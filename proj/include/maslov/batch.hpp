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

// Randomized property suites. Each trial draws from its own generator seeded
// with seed + trial, so serial and parallel runs see identical inputs.

#pragma once

#include "maslov/metaplectic.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace maslov {

enum class Exec { Serial, Parallel };

struct SuiteResult {
  std::string name;
  int trials = 0;
  int passed = 0;
  int errors = 0;  ///< trials that threw
  std::vector<std::string> failures;  ///< "trial k: ..." in trial order

  bool ok() const { return passed == trials; }
};

/// mu(x,y) - mu(x,z) + mu(y,z) = tau on random lifted triples.
SuiteResult coboundary_suite(int n, int trials, std::uint64_t seed, Exec exec, const Tolerances& tol = {});

/// Deck shifts, antisymmetry and invariance under random lifted unitaries.
SuiteResult deck_invariance_suite(int n, int trials, std::uint64_t seed, Exec exec, const Tolerances& tol = {});

/// Cover lifting, 2 mu_CLM + (n - dim) and mu_hat of the Gaussian lift agree
/// mod 8 on random unitary paths (n alternating 1, 2).
SuiteResult mod8_suite(int trials, std::uint64_t seed, Exec exec, const Tolerances& tol = {}, int samples = 400);

/// mu_hat agrees across independent factorizations of random elements
/// (n cycling 1, 2, 3).
SuiteResult cocycle_suite(int trials, std::uint64_t seed, Exec exec, const Tolerances& tol = {});

/// U(t) = exp(i (t H0 + sin(pi t) H1 + t^2 H2)) embedded, t uniform.
std::vector<SymplecticMatrix> random_unitary_path(int n, Rng& rng, int samples, double scale = 2.0);

/// Random well-conditioned generating data with a branch of the right parity.
QuadraticFourier random_quad_fourier(int n, Rng& rng);

}  // namespace maslov
