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

// Frame transport along paths on embedded Lagrangians and the end-to-end
// holonomy checks built on it.

#pragma once

#include "maslov/chart.hpp"
#include "maslov/index.hpp"
#include "maslov/metaplectic.hpp"

#include <optional>

namespace maslov {

struct TransportResult {
  std::vector<double> t;
  std::vector<Mat> frames;  ///< orthonormal tangent frames e(t)
  /// S(t) = F(t) F(0)^T with F = [e, J e]; moves the ambient frame.
  std::vector<SymplecticMatrix> S;
  /// g(t) = F(0)^T F(t); the same motion read in the frame at t = 0.
  std::vector<SymplecticMatrix> relative;
  LagrangianPath tangent_path;
  int refinements = 0;
  int max_depth = 0;
  double max_orthogonality_residual = 0.0;
  double max_tangency_residual = 0.0;
};

/// Projection transport: e_{k+1} = GramSchmidt(Pi_{k+1} e_k), halving steps
/// until every frame increment is below 1e-2. The default initial frame is
/// the orthonormalized Jacobian at the start.
TransportResult transport_frame(const LagrangianChart& chart, const ParamPath& path,
                                const std::optional<Mat>& initial = std::nullopt, const Tolerances& tol = {},
                                int refine_max = kDefaultRefineMax);

/// Tangent planes along the path; refinement re-evaluates the chart.
LagrangianPath tangent_lagrangian_path(const LagrangianChart& chart, const ParamPath& path);

struct Theorem1Report {
  int mu_clm = 0;
  int mu_clm_mod4 = 0;
  int leray = 0;
  cplx phase{1.0, 0.0};
  cplx predicted_phase{1.0, 0.0};
  double residual = 0.0;
  bool pass = false;
  EndpointForm form = EndpointForm::Orthogonal;
  int branch = 0;  ///< m of the metalinear factor
  int mu_hat = 0;
  int transport_refinements = 0;
  int lift_refinements = 0;
  double max_orthogonality_residual = 0.0;
  double max_tangency_residual = 0.0;
  std::vector<double> trace_t;
  std::vector<double> trace_theta;
};

/// Holonomy of u_0 around a closed path against e^{i pi/2 mu_CLM}.
Theorem1Report verify_theorem1(const LagrangianChart& chart, const ParamPath& path, const Tolerances& tol = {},
                               int refine_max = kDefaultRefineMax);

struct Corollary1Report {
  std::vector<Theorem1Report> loops;
  int dim_parallel = 1;
};

Corollary1Report verify_corollary1(const LagrangianChart& chart, const std::vector<ParamPath>& loops,
                                   const Tolerances& tol = {}, int refine_max = kDefaultRefineMax);

struct LevelPairing {
  Polynomial::Exponent alpha;
  cplx lhs{0.0, 0.0};  ///< delta(0) of the transported state
  cplx rhs{0.0, 0.0};  ///< e^{i pi/2 mu_CLM} psi(0)
  bool pass = false;
};

struct Theorem2Report {
  int n = 0;
  int mu_clm = 0;
  int endpoint_intersection = 0;
  bool transverse = false;
  bool near_degenerate = false;
  EndpointForm form = EndpointForm::FreeGenerating;
  DistributionState dual;
  int mu_hat = 0;

  // transverse endpoints
  double c_y = 0.0;
  bool chirp_free = false;
  cplx dual_phase{1.0, 0.0};  ///< dual prefactor divided by c(y)
  cplx predicted_literal{1.0, 0.0};  ///< e^{-i pi/2 mu}
  cplx predicted_shifted{1.0, 0.0};  ///< e^{-i pi/4 (2 mu + n)}
  bool transversal_pass = false;
  bool transversal_shifted_pass = false;
  cplx ground_phase{1.0, 0.0};  ///< kappa(S(1)) u_0 = ground_phase u_0
  cplx ground_predicted_literal{1.0, 0.0};
  cplx ground_predicted_shifted{1.0, 0.0};
  bool transversal2_pass = false;
  bool transversal2_shifted_pass = false;

  // equal endpoints
  bool othercase_pass = false;
  std::vector<LevelPairing> othercase2;
  bool othercase2_pass = false;

  /// All statements as printed for the applicable case.
  bool pass = false;
};

/// Dual transport of delta(0) along an open path whose endpoint tangent planes
/// are transverse or equal. Levels up to max_level enter the pairing check.
Theorem2Report verify_theorem2(const LagrangianChart& chart, const ParamPath& path, const Tolerances& tol = {},
                               int refine_max = kDefaultRefineMax, int max_level = 2);

}  // namespace maslov
