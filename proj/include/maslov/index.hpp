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

// Indices on the universal cover of Lag(n) in Souriau coordinates.

#pragma once

#include "maslov/symplectic.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace maslov {

/// Applied to the cyclic form omega(z1,z2) + omega(z2,z3) + omega(z3,z1).
/// With -1 the coboundary identity for the Leray index holds.
inline constexpr int kKashiwaraSign = -1;

/// Point (w, theta) of the universal cover: w symmetric unitary and
/// det w = e^{i theta}.
struct CoverPoint {
  CMat w;
  double theta = 0.0;

  static CoverPoint make(CMat w, double theta, const Tolerances& tol = {});
  /// theta = principal arg det w.
  static CoverPoint principal(CMat w);
  static CoverPoint over(const LagrangianFrame& l, int sheet = 0);

  int n() const { return static_cast<int>(w.rows()); }
  /// beta^r . x; beta = (I, pi) moves theta by 2 pi.
  CoverPoint deck(int r) const;
  LagrangianFrame frame(const Tolerances& tol = {}) const { return lagrangian_from_souriau(w, tol); }
};

/// Element (r, phi) of the universal cover of U(n), det r = e^{i phi}.
struct UnitaryLift {
  CMat r;
  double phi = 0.0;

  static UnitaryLift principal(CMat r);
  /// (r w r^T, theta + 2 phi).
  CoverPoint act(const CoverPoint& x) const;
};

int kashiwara_signature(const LagrangianFrame& l1, const LagrangianFrame& l2, const LagrangianFrame& l3,
                        const Tolerances& tol = {});

/// Closed form on transverse pairs:
///   mu = (theta_x - theta_y - sum_k Arg(-nu_k)) / pi,  nu = spec(w_x w_y^{-1}).
int leray_transverse(const CoverPoint& x, const CoverPoint& y, const Tolerances& tol = {});

/// Any pair. Non-transverse pairs go through an auxiliary Lagrangian
/// e^{i phi} L_0 transverse to both and the coboundary identity.
int leray_index(const CoverPoint& x, const CoverPoint& y, const Tolerances& tol = {});

/// Samples of a path of Lagrangians. If \p at is set it gives the frame at
/// any parameter and is used for refinement; otherwise refinement uses the
/// geodesic midpoint in Lag(n).
struct LagrangianPath {
  std::vector<double> t;
  std::vector<LagrangianFrame> frames;
  std::function<LagrangianFrame(double)> at;
  double max_step = 0.5;

  static LagrangianPath sampled(std::function<LagrangianFrame(double)> f, int samples, bool keep_callback = true);
  int n() const { return frames.front().n(); }
  void check() const;
};

struct LiftedPath {
  std::vector<double> t;
  std::vector<CoverPoint> points;
  int refinements = 0;
  int max_depth = 0;

  const CoverPoint& front() const { return points.front(); }
  const CoverPoint& back() const { return points.back(); }
};

inline constexpr int kDefaultRefineMax = 24;

/// Continuous unwrapping of arg det w along the path, starting at theta0.
LiftedPath lift_path(const LagrangianPath& path, double theta0, const Tolerances& tol = {},
                     int refine_max = kDefaultRefineMax);

/// Midpoint of the shortest geodesic between two Souriau matrices.
CMat souriau_midpoint(const CMat& wa, const CMat& wb, const Tolerances& tol = {});

struct ClmResult {
  int index = 0;      ///< M
  int leray = 0;      ///< mu(lift at 1, lift at 0)
  int n = 0;
  int endpoint_intersection = 0;  ///< dim(gamma(0) ^ gamma(1))
  double theta0 = 0.0;
  double theta1 = 0.0;
  int refinements = 0;
  int max_depth = 0;

  int mod4() const { return mod(index, 4); }
  /// The shifted convention m_L = M + n.
  int m_L() const { return index + n; }
};

/// Index of the path against the constant path at its endpoint gamma(1).
ClmResult clm_index(const LagrangianPath& path, const Tolerances& tol = {}, int refine_max = kDefaultRefineMax);
int clm_index_mod4(const LagrangianPath& path, const Tolerances& tol = {});

struct CoverIndex {
  int value = 0;
  int mod8 = 0;
  ClmResult clm;
};

/// mu_L of the endpoint of a symplectic path starting at I, via the induced
/// path t -> S(t) L. Samples are taken at uniform parameters in [0, 1].
CoverIndex mu_hat_on_cover(const std::vector<SymplecticMatrix>& path, const LagrangianFrame& l,
                           const Tolerances& tol = {}, int refine_max = kDefaultRefineMax);

}  // namespace maslov
