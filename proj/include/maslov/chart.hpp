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

// Lagrangian embeddings of parameter patches into R^{2n}, coordinates
// ordered (q_1..q_n, p_1..p_n).

#pragma once

#include "maslov/polynomial.hpp"
#include "maslov/symplectic.hpp"

#include <memory>
#include <string>
#include <vector>

namespace maslov {

class LagrangianChart {
 public:
  virtual ~LagrangianChart() = default;
  virtual int n() const = 0;
  virtual std::string tag() const = 0;
  virtual Vec eval(const Vec& u) const = 0;
  /// Central differences unless overridden.
  virtual Mat jacobian(const Vec& u) const;
  virtual bool exact_jacobian() const { return false; }

  /// Throws Immersion on rank loss and InvariantViolation if the pullback of
  /// omega_0 does not vanish.
  void check_at(const Vec& u, const Tolerances& tol = {}) const;

  double fd_step = 1e-6;
};

using ChartPtr = std::shared_ptr<const LagrangianChart>;

/// u -> (r cos u, r sin u).
ChartPtr circle_chart(double r = 1.0);
/// Product of circles: q_k = r_k cos u_k, p_k = r_k sin u_k.
ChartPtr product_torus_chart(std::vector<double> radii);
/// u -> (u, grad phi(u)) for a real polynomial potential phi.
ChartPtr gradient_graph_chart(Polynomial potential);
/// u -> (u, 0).
ChartPtr flat_plane_chart(int n);

/// One coordinate of a custom chart is a sum of terms
/// coef * prod_f g_f(u_{var}), with g = u^k, cos(k u) or sin(k u).
struct ChartTerm {
  enum class Kind { Pow, Cos, Sin };
  struct Factor {
    int var = 0;
    Kind kind = Kind::Pow;
    int k = 1;
  };
  double coef = 1.0;
  std::vector<Factor> factors;
};
ChartPtr custom_chart(int n, std::vector<std::vector<ChartTerm>> coordinates);

/// Chart-space path u(t), t in [0, 1], with its sample parameters.
struct ParamPath {
  std::function<Vec(double)> at;
  std::vector<double> t;
  bool closed = false;

  Vec operator()(double s) const { return at(s); }
  static ParamPath segment(Vec from, Vec to, int samples);
  /// base + 2 pi t winding; closed for integer windings on periodic charts.
  static ParamPath loop(Vec base, Vec winding, int samples);
  static ParamPath from_function(std::function<Vec(double)> f, int samples, bool closed);
  ParamPath reversed() const;
};

/// Throws InvariantViolation if the closed flag disagrees with the chart
/// endpoints.
void check_closed_flag(const LagrangianChart& chart, const ParamPath& path, const Tolerances& tol = {});

Mat induced_metric(const LagrangianChart& chart, const Vec& u, const Tolerances& tol = {});

}  // namespace maslov
