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

#include "maslov/error.hpp"
#include "maslov/tolerances.hpp"

#include <limits>

namespace maslov {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvariantViolation: return "invariant violation";
    case ErrorKind::Dimension: return "dimension error";
    case ErrorKind::Transversality: return "transversality error";
    case ErrorKind::Conditioning: return "numerical conditioning error";
    case ErrorKind::Sampling: return "sampling error";
    case ErrorKind::StateDomain: return "state domain error";
    case ErrorKind::FreeGeneratingFunction: return "no free generating function";
    case ErrorKind::Case: return "case error";
    case ErrorKind::UnsupportedConfiguration: return "unsupported configuration";
    case ErrorKind::Immersion: return "immersion error";
    case ErrorKind::Convention: return "convention error";
    case ErrorKind::Schema: return "schema error";
  }
  return "error";
}

void Tolerances::validate(int dim) const {
  if (!(residual_tol > 0.0 && rank_tol > 0.0 && phase_tol > 0.0)) {
    throw Error(ErrorKind::InvariantViolation, "tolerances must be strictly positive");
  }
  if (rank_tol < std::numeric_limits<double>::epsilon() * dim) {
    throw Error(ErrorKind::InvariantViolation, "rank_tol below machine epsilon times dimension");
  }
}

}  // namespace maslov
