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

#include "maslov/geometry.hpp"

#include "maslov/error.hpp"

#include <cmath>

namespace maslov {

namespace {

Mat tangent_basis(const LagrangianChart& chart, const Vec& u) { return orthonormalize_columns(chart.jacobian(u)); }

Mat full_frame(const Mat& e) {
  const int n = static_cast<int>(e.cols());
  Mat f(2 * n, 2 * n);
  f << e, standard_J(n) * e;
  return f;
}

struct Transporter {
  const LagrangianChart& chart;
  const ParamPath& path;
  int refine_max;
  TransportResult& out;

  void step(double ta, const Mat& ea, double tb, int depth) {
    const Mat tb_basis = tangent_basis(chart, path(tb));
    const Mat eb = orthonormalize_columns(Mat(tb_basis * (tb_basis.transpose() * ea)));
    if (max_abs(Mat(eb - ea)) >= 1e-2) {
      if (depth >= refine_max) throw Error(ErrorKind::Sampling, "refinement exhausted during frame transport");
      const double tm = 0.5 * (ta + tb);
      ++out.refinements;
      out.max_depth = std::max(out.max_depth, depth + 1);
      step(ta, ea, tm, depth + 1);
      step(tm, out.frames.back(), tb, depth + 1);
      return;
    }
    const int n = static_cast<int>(eb.cols());
    out.max_orthogonality_residual =
        std::max(out.max_orthogonality_residual, max_abs(Mat(eb.transpose() * eb - Mat::Identity(n, n))));
    out.max_tangency_residual =
        std::max(out.max_tangency_residual, max_abs(Mat(eb - tb_basis * (tb_basis.transpose() * eb))));
    out.t.push_back(tb);
    out.frames.push_back(eb);
  }
};

}  // namespace

TransportResult transport_frame(const LagrangianChart& chart, const ParamPath& path, const std::optional<Mat>& initial,
                                const Tolerances& tol, int refine_max) {
  if (path.t.size() < 2) throw Error(ErrorKind::InvariantViolation, "a path needs at least two samples");
  const int n = chart.n();
  const Vec u0 = path(path.t.front());
  chart.check_at(u0, tol);
  const Mat basis = tangent_basis(chart, u0);
  Mat e0 = initial ? *initial : basis;
  if (e0.rows() != 2 * n || e0.cols() != n) throw Error(ErrorKind::Dimension, "initial frame has the wrong shape");
  if (max_abs(Mat(e0.transpose() * e0 - Mat::Identity(n, n))) > tol.residual_tol ||
      max_abs(Mat(e0 - basis * (basis.transpose() * e0))) > tol.residual_tol) {
    throw Error(ErrorKind::InvariantViolation, "initial frame must be orthonormal and tangent");
  }

  TransportResult out;
  out.t.push_back(path.t.front());
  out.frames.push_back(e0);
  Transporter tr{chart, path, refine_max, out};
  for (size_t k = 1; k < path.t.size(); ++k) tr.step(path.t[k - 1], out.frames.back(), path.t[k], 0);

  const Mat f0 = full_frame(e0);
  for (const Mat& e : out.frames) {
    const Mat f = full_frame(e);
    out.S.push_back(SymplecticMatrix::trusted(f * f0.transpose()));
    out.relative.push_back(SymplecticMatrix::trusted(f0.transpose() * f));
  }
  for (size_t k = 0; k < out.t.size(); ++k) {
    out.tangent_path.t.push_back(out.t[k]);
    out.tangent_path.frames.push_back(LagrangianFrame::trusted(tangent_basis(chart, path(out.t[k]))));
  }
  out.tangent_path.at = [&chart, path](double s) { return LagrangianFrame::trusted(tangent_basis(chart, path(s))); };
  return out;
}

LagrangianPath tangent_lagrangian_path(const LagrangianChart& chart, const ParamPath& path) {
  LagrangianPath lp;
  for (double s : path.t) {
    lp.t.push_back(s);
    lp.frames.push_back(LagrangianFrame::trusted(tangent_basis(chart, path(s))));
  }
  lp.at = [&chart, path](double s) { return LagrangianFrame::trusted(tangent_basis(chart, path(s))); };
  return lp;
}

Theorem1Report verify_theorem1(const LagrangianChart& chart, const ParamPath& path, const Tolerances& tol,
                               int refine_max) {
  check_closed_flag(chart, path, tol);
  if (!path.closed) throw Error(ErrorKind::UnsupportedConfiguration, "holonomy needs a closed path");
  Theorem1Report r;
  const ClmResult clm = clm_index(tangent_lagrangian_path(chart, path), tol, refine_max);
  r.mu_clm = clm.index;
  r.mu_clm_mod4 = clm.mod4();
  r.leray = clm.leray;

  const TransportResult tr = transport_frame(chart, path, std::nullopt, tol, refine_max);
  const MetaplecticLift lift = lift_unitary_path(tr.relative, tol, refine_max, tr.t);
  r.phase = lift.u0_factor;
  r.predicted_phase = ipow(r.mu_clm);
  r.residual = std::abs(r.phase - r.predicted_phase);
  r.pass = r.residual <= tol.phase_tol;
  r.form = lift.form;
  r.branch = lift.element.factors.front().m;
  r.mu_hat = lift.element.mu_hat(tol);
  r.transport_refinements = tr.refinements;
  r.lift_refinements = lift.refinements;
  r.max_orthogonality_residual = tr.max_orthogonality_residual;
  r.max_tangency_residual = tr.max_tangency_residual;
  r.trace_t = lift.t;
  r.trace_theta = lift.theta;
  return r;
}

Corollary1Report verify_corollary1(const LagrangianChart& chart, const std::vector<ParamPath>& loops,
                                   const Tolerances& tol, int refine_max) {
  Corollary1Report r;
  for (const ParamPath& p : loops) {
    r.loops.push_back(verify_theorem1(chart, p, tol, refine_max));
    if (r.loops.back().mu_clm_mod4 != 0) r.dim_parallel = 0;
  }
  return r;
}

Theorem2Report verify_theorem2(const LagrangianChart& chart, const ParamPath& path, const Tolerances& tol,
                               int refine_max, int max_level) {
  Theorem2Report r;
  r.n = chart.n();
  const LagrangianPath tangent = tangent_lagrangian_path(chart, path);
  const ClmResult clm = clm_index(tangent, tol, refine_max);
  r.mu_clm = clm.index;
  r.endpoint_intersection = clm.endpoint_intersection;
  if (r.endpoint_intersection != 0 && r.endpoint_intersection != r.n) {
    throw Error(ErrorKind::UnsupportedConfiguration, "endpoint tangent planes must be transverse or equal");
  }
  r.transverse = r.endpoint_intersection == 0;
  {
    Mat stacked(2 * r.n, 2 * r.n);
    stacked << tangent.frames.front().columns(), tangent.frames.back().columns();
    for (double s : singular_values(stacked))
      if (s >= tol.rank_tol && s <= 10.0 * tol.rank_tol) r.near_degenerate = true;
  }

  const TransportResult tr = transport_frame(chart, path, std::nullopt, tol, refine_max);
  const MetaplecticLift lift = lift_unitary_path(tr.relative, tol, refine_max, tr.t);
  MetaplecticElement element = lift.element;
  r.form = lift.form;
  if (r.transverse && r.form != EndpointForm::FreeGenerating) {
    element = match_branch({quad_fourier_from_symplectic(tr.relative.back(), 0, tol)}, lift.u0_factor, tol);
    r.form = EndpointForm::FreeGenerating;
  }
  r.mu_hat = element.mu_hat(tol);
  r.dual = apply_word_to_delta(element, tol);
  r.ground_phase = lift.u0_factor;

  const double quarter = kPi / 4.0;
  if (r.transverse) {
    const QuadraticFourier& qf = element.factors.front();
    r.c_y = transverse_constant(qf);
    r.chirp_free = r.dual.kind == DistributionState::Kind::Const && max_abs(r.dual.chirp) <= tol.phase_tol;
    r.dual_phase = r.dual.c / r.c_y;
    r.predicted_literal = ipow(-r.mu_clm);
    r.predicted_shifted = std::polar(1.0, -quarter * (2 * r.mu_clm + r.n));
    r.transversal_pass = r.chirp_free && std::abs(r.dual_phase - r.predicted_literal) <= tol.phase_tol;
    r.transversal_shifted_pass = std::abs(r.dual_phase - r.predicted_shifted) <= tol.phase_tol;
    r.ground_predicted_literal = ipow(r.mu_clm);
    r.ground_predicted_shifted = std::polar(1.0, quarter * (2 * r.mu_clm + r.n));
    r.transversal2_pass = std::abs(r.ground_phase - r.ground_predicted_literal) <= tol.phase_tol;
    r.transversal2_shifted_pass = std::abs(r.ground_phase - r.ground_predicted_shifted) <= tol.phase_tol;
    r.pass = r.transversal_pass && r.transversal2_pass;
  } else {
    r.othercase_pass = r.dual.kind == DistributionState::Kind::Delta &&
                       std::abs(r.dual.c - ipow(-r.mu_clm)) <= tol.phase_tol;
    r.othercase2_pass = true;
    const Vec origin = Vec::Zero(r.n);
    for (int l = 0; l <= max_level; ++l) {
      for (const auto& alpha : level_indices(l, r.n)) {
        const GaussianAmplitude psi = hermite_state(alpha);
        LevelPairing p;
        p.alpha = alpha;
        p.lhs = element.apply(psi, tol)(origin);
        p.rhs = ipow(r.mu_clm) * psi(origin);
        p.pass = std::abs(p.lhs - p.rhs) <= tol.phase_tol;
        r.othercase2_pass = r.othercase2_pass && p.pass;
        r.othercase2.push_back(std::move(p));
      }
    }
    r.pass = r.othercase_pass && r.othercase2_pass;
  }
  return r;
}

}  // namespace maslov
