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

#include "maslov/index.hpp"

#include "maslov/error.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <cmath>
#include <sstream>

namespace maslov {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

double arg_det(const CMat& w) { return std::arg(w.determinant()); }

/// Rounds, or throws if the value is not within phase_tol of an integer.
int to_integer(double v, const Tolerances& tol, const char* what) {
  const double r = std::round(v);
  if (std::abs(v - r) > tol.phase_tol) {
    throw Error(ErrorKind::Conditioning, std::string(what) + " is not integral: " + fmt(v));
  }
  return static_cast<int>(r);
}

}  // namespace

CoverPoint CoverPoint::make(CMat w, double theta, const Tolerances& tol) {
  if (w.rows() != w.cols() || w.rows() == 0) throw Error(ErrorKind::Dimension, "w must be square");
  const double asym = max_abs(CMat(w - w.transpose()));
  const double ur = unitary_residual(w);
  if (asym > tol.residual_tol || ur > tol.residual_tol) {
    throw Error(ErrorKind::InvariantViolation, "w is not symmetric unitary");
  }
  const double gap = std::abs(w.determinant() - std::polar(1.0, theta));
  if (gap > tol.phase_tol) {
    throw Error(ErrorKind::InvariantViolation, "det w differs from e^{i theta} by " + fmt(gap));
  }
  return {std::move(w), theta};
}

CoverPoint CoverPoint::principal(CMat w) {
  const double th = arg_det(w);
  return {std::move(w), th};
}

CoverPoint CoverPoint::over(const LagrangianFrame& l, int sheet) { return principal(souriau_map(l)).deck(sheet); }

CoverPoint CoverPoint::deck(int r) const { return {w, theta + 2.0 * kPi * r}; }

UnitaryLift UnitaryLift::principal(CMat r) {
  const double phi = std::arg(r.determinant());
  return {std::move(r), phi};
}

CoverPoint UnitaryLift::act(const CoverPoint& x) const {
  CMat w = r * x.w * r.transpose();
  return {0.5 * (w + w.transpose()), x.theta + 2.0 * phi};
}

int kashiwara_signature(const LagrangianFrame& l1, const LagrangianFrame& l2, const LagrangianFrame& l3,
                        const Tolerances& tol) {
  const int n = l1.n();
  if (l2.n() != n || l3.n() != n) throw Error(ErrorKind::Dimension, "frames have different n");
  const std::array<Mat, 3> x = {l1.orthonormal(), l2.orthonormal(), l3.orthonormal()};
  const Mat om = -standard_J(n);  // omega(a, b) = a^T om b
  Mat form = Mat::Zero(3 * n, 3 * n);
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const Mat b = x[i].transpose() * om * x[j];
    form.block(i * n, j * n, n, n) += 0.5 * b;
    form.block(j * n, i * n, n, n) += 0.5 * b.transpose();
  }
  return kKashiwaraSign * signature(form, tol.rank_tol);
}

int leray_transverse(const CoverPoint& x, const CoverPoint& y, const Tolerances& tol) {
  if (x.n() != y.n()) throw Error(ErrorKind::Dimension, "cover points have different n");
  double sum = 0.0;
  for (const cplx& nu : eigenvalues(CMat(x.w * y.w.adjoint()))) {
    if (std::abs(nu - 1.0) <= tol.rank_tol) throw Error(ErrorKind::Transversality, "pair is not transverse");
    sum += std::arg(-nu);
  }
  const int mu = to_integer((x.theta - y.theta - sum) / kPi, tol, "Leray index");
  if (mod(mu - x.n(), 2) != 0) throw Error(ErrorKind::Conditioning, "Leray index has the wrong parity");
  return mu;
}

int leray_index(const CoverPoint& x, const CoverPoint& y, const Tolerances& tol) {
  if (x.n() != y.n()) throw Error(ErrorKind::Dimension, "cover points have different n");
  const int n = x.n();
  const LagrangianFrame fx = x.frame(tol);
  const LagrangianFrame fy = y.frame(tol);
  const int dim = intersection_dim(fx, fy, tol);
  if (dim == 0) {
    try {
      return leray_transverse(x, y, tol);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Transversality) throw;
    }
  }

  // Auxiliary z = e^{i phi} L_0 with Souriau matrix e^{2 i phi} I, chosen on a
  // fixed grid to stay as far as possible from the spectra of w_x and w_y.
  std::vector<cplx> spec = eigenvalues(x.w);
  const std::vector<cplx> sy = eigenvalues(y.w);
  spec.insert(spec.end(), sy.begin(), sy.end());
  double best_phi = 0.0;
  double best_margin = -1.0;
  for (int j = 0; j < 32; ++j) {
    const double phi = j * kPi / 32.0;
    const cplx e = std::polar(1.0, 2.0 * phi);
    double margin = std::numeric_limits<double>::infinity();
    for (const cplx& s : spec) margin = std::min(margin, std::abs(s - e));
    if (margin > best_margin) {
      best_margin = margin;
      best_phi = phi;
    }
  }
  if (best_margin < 1e-3) throw Error(ErrorKind::Conditioning, "no auxiliary Lagrangian transverse to both");
  const CoverPoint z{std::polar(1.0, 2.0 * best_phi) * CMat::Identity(n, n), 2.0 * n * best_phi};
  Mat fz = Mat::Zero(2 * n, n);
  fz.topRows(n) = -std::sin(best_phi) * Mat::Identity(n, n);
  fz.bottomRows(n) = std::cos(best_phi) * Mat::Identity(n, n);
  const int mu = leray_transverse(x, z, tol) - leray_transverse(y, z, tol) +
                 kashiwara_signature(fx, fy, LagrangianFrame::trusted(fz), tol);
  if (mod(mu - n + dim, 2) != 0) throw Error(ErrorKind::Conditioning, "Leray index has the wrong parity");
  return mu;
}

LagrangianPath LagrangianPath::sampled(std::function<LagrangianFrame(double)> f, int samples, bool keep_callback) {
  if (samples < 2) throw Error(ErrorKind::InvariantViolation, "a path needs at least two samples");
  LagrangianPath p;
  for (int k = 0; k < samples; ++k) {
    const double t = static_cast<double>(k) / (samples - 1);
    p.t.push_back(t);
    p.frames.push_back(f(t));
  }
  if (keep_callback) p.at = std::move(f);
  return p;
}

void LagrangianPath::check() const {
  if (frames.empty() || frames.size() != t.size()) throw Error(ErrorKind::InvariantViolation, "path samples and parameters differ in length");
  for (size_t k = 1; k < t.size(); ++k) {
    if (!(t[k] > t[k - 1])) throw Error(ErrorKind::InvariantViolation, "path parameters must increase");
    if (frames[k].n() != frames[0].n()) throw Error(ErrorKind::Dimension, "path frames have different n");
  }
}

CMat souriau_midpoint(const CMat& wa, const CMat& wb, const Tolerances& tol) {
  const CMat r = souriau_root(wa, tol);
  const CMat v = r.adjoint() * wb * r.conjugate();
  for (const cplx& e : eigenvalues(v)) {
    if (std::abs(e + 1.0) < 1e-6) throw Error(ErrorKind::Sampling, "geodesic midpoint is ambiguous");
  }
  const CMat m = r * unitary_power(v, 0.5) * r.transpose();
  return 0.5 * (m + m.transpose());
}

namespace {

struct Lifter {
  const LagrangianPath& path;
  const Tolerances& tol;
  int refine_max;
  LiftedPath out;

  void step(double ta, const CMat& wa, double theta_a, double tb, const CMat& wb, int depth) {
    double sum = 0.0;
    double worst = 0.0;
    for (const cplx& nu : eigenvalues(CMat(wa.adjoint() * wb))) {
      const double a = std::arg(nu);
      sum += a;
      worst = std::max(worst, std::abs(a));
    }
    const bool coarse = worst >= kPi / 2 || std::abs(sum) >= kPi / 2 || max_abs(CMat(wb - wa)) >= path.max_step;
    if (coarse) {
      if (depth >= refine_max) throw Error(ErrorKind::Sampling, "refinement exhausted while lifting path");
      const double tm = 0.5 * (ta + tb);
      const CMat wm = path.at ? souriau_map(path.at(tm)) : souriau_midpoint(wa, wb, tol);
      ++out.refinements;
      out.max_depth = std::max(out.max_depth, depth + 1);
      step(ta, wa, theta_a, tm, wm, depth + 1);
      const double theta_m = out.points.back().theta;
      step(tm, wm, theta_m, tb, wb, depth + 1);
      return;
    }
    out.t.push_back(tb);
    out.points.push_back({wb, theta_a + sum});
  }
};

}  // namespace

LiftedPath lift_path(const LagrangianPath& path, double theta0, const Tolerances& tol, int refine_max) {
  path.check();
  const CMat w0 = souriau_map(path.frames.front());
  const double gap = std::abs(w0.determinant() - std::polar(1.0, theta0));
  if (gap > tol.phase_tol) throw Error(ErrorKind::InvariantViolation, "theta0 is not an argument of det w(t0)");
  Lifter lifter{path, tol, refine_max, {}};
  lifter.out.t.push_back(path.t.front());
  lifter.out.points.push_back({w0, theta0});
  CMat wa = w0;
  for (size_t k = 1; k < path.frames.size(); ++k) {
    const CMat wb = souriau_map(path.frames[k]);
    lifter.step(path.t[k - 1], wa, lifter.out.points.back().theta, path.t[k], wb, 0);
    wa = wb;
  }
  return std::move(lifter.out);
}

ClmResult clm_index(const LagrangianPath& path, const Tolerances& tol, int refine_max) {
  path.check();
  const CMat w0 = souriau_map(path.frames.front());
  const LiftedPath lift = lift_path(path, arg_det(w0), tol, refine_max);
  ClmResult r;
  r.n = path.n();
  r.leray = leray_index(lift.back(), lift.front(), tol);
  r.endpoint_intersection = intersection_dim(path.frames.front(), path.frames.back(), tol);
  r.theta0 = lift.front().theta;
  r.theta1 = lift.back().theta;
  r.refinements = lift.refinements;
  r.max_depth = lift.max_depth;
  const int twice = r.leray - r.n + r.endpoint_intersection;
  if (mod(twice, 2) != 0) throw Error(ErrorKind::Convention, "Leray index parity does not match the intersection");
  r.index = twice / 2;
  return r;
}

int clm_index_mod4(const LagrangianPath& path, const Tolerances& tol) { return clm_index(path, tol).mod4(); }

CoverIndex mu_hat_on_cover(const std::vector<SymplecticMatrix>& path, const LagrangianFrame& l, const Tolerances& tol,
                           int refine_max) {
  if (path.size() < 2) throw Error(ErrorKind::InvariantViolation, "a path needs at least two samples");
  const int n = l.n();
  if (max_abs(Mat(path.front().matrix() - Mat::Identity(2 * n, 2 * n))) > tol.residual_tol) {
    throw Error(ErrorKind::InvariantViolation, "symplectic path must start at the identity");
  }
  LagrangianPath lp;
  for (size_t k = 0; k < path.size(); ++k) {
    lp.t.push_back(static_cast<double>(k) / static_cast<double>(path.size() - 1));
    lp.frames.push_back(apply(path[k], l));
  }
  CoverIndex out;
  out.clm = clm_index(lp, tol, refine_max);
  out.value = out.clm.leray;
  out.mod8 = mod(out.value, 8);
  return out;
}

}  // namespace maslov
