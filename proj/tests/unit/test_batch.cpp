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

#include <doctest.h>

#include "maslov/batch.hpp"

using namespace maslov;

namespace {

void check_same(const SuiteResult& a, const SuiteResult& b) {
  CHECK(a.name == b.name);
  CHECK(a.trials == b.trials);
  CHECK(a.passed == b.passed);
  CHECK(a.errors == b.errors);
  CHECK(a.failures == b.failures);
}

}  // namespace

TEST_CASE("parallel suites reproduce the serial reference") {
  for (int n = 1; n <= 3; ++n) {
    const SuiteResult s = coboundary_suite(n, 40, 7, Exec::Serial);
    check_same(s, coboundary_suite(n, 40, 7, Exec::Parallel));
    CHECK(s.ok());
    const SuiteResult d = deck_invariance_suite(n, 10, 7, Exec::Serial);
    check_same(d, deck_invariance_suite(n, 10, 7, Exec::Parallel));
    CHECK(d.ok());
  }
  check_same(mod8_suite(10, 7, Exec::Serial), mod8_suite(10, 7, Exec::Parallel));
  check_same(cocycle_suite(10, 7, Exec::Serial), cocycle_suite(10, 7, Exec::Parallel));
}

TEST_CASE("failures are reported per trial") {
  // a phase tolerance this tight rejects every lifted index computation
  Tolerances strict;
  strict.phase_tol = 1e-300;
  const SuiteResult r = coboundary_suite(2, 5, 1, Exec::Parallel, strict);
  CHECK_FALSE(r.ok());
  CHECK(r.errors + static_cast<int>(r.failures.size()) >= r.trials - r.passed);
  for (const auto& f : r.failures) CHECK(f.rfind("trial ", 0) == 0);
}

TEST_CASE("seeds are honored") {
  Rng a(5), b(5);
  const auto p = random_unitary_path(2, a, 10);
  const auto q = random_unitary_path(2, b, 10);
  for (size_t k = 0; k < p.size(); ++k) CHECK(p[k].matrix() == q[k].matrix());
}
