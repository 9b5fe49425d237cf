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

namespace maslov {

struct Tolerances {
  double residual_tol = 1e-9;  // matrix identities (symplectic, unitary, isotropy)
  double rank_tol = 1e-8;      // singular-value truncation
  double phase_tol = 1e-6;     // distance of a computed real to the nearest integer

  /// Throws InvariantViolation unless all three are positive and rank_tol is
  /// at least machine epsilon times \p dim.
  void validate(int dim) const;
};

}  // namespace maslov
