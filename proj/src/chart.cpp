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

#include "maslov/chart.hpp"

#include "maslov/error.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace maslov {

Mat LagrangianChart::jacobian(const Vec& u) const {
  const int k = n();
  Mat jac(2 * k, k);
  for (int j = 0; j < k; ++j) {
    Vec up = u;
    Vec um = u;
    up(j) += fd_step;
    um(j) -= fd_step;
    jac.col(j) = (eval(up) - eval(um)) / (2.0 * fd_step);
  }
  return jac;
}

void LagrangianChart::check_at(const Vec& u, const Tolerances& tol) const {
  const Mat jac = jacobian(u);
  if (singular_values(jac).back() < tol.rank_tol) throw Error(ErrorKind::Immersion, tag() + " chart is not immersive");
  const Mat q = orthonormalize_columns(jac);
  const double pull = max_abs(Mat(q.transpose() * standard_J(n()) * q));
  // central differences carry an O(h^2) truncation error
  const double allowed = exact_jacobian() ? tol.residual_tol : std::max(tol.residual_tol, 1e-6);
  if (pull > allowed) throw Error(ErrorKind::InvariantViolation, tag() + " chart is not Lagrangian");
}

namespace {

class Circle final : public LagrangianChart {
 public:
  explicit Circle(double r) : r_(r) {
    if (!(r > 0.0)) throw Error(ErrorKind::InvariantViolation, "circle radius must be positive");
  }
  int n() const override { return 1; }
  std::string tag() const override { return "circle"; }
  Vec eval(const Vec& u) const override { return Vec{{r_ * std::cos(u(0)), r_ * std::sin(u(0))}}; }
  bool exact_jacobian() const override { return true; }
  Mat jacobian(const Vec& u) const override {
    Mat j(2, 1);
    j << -r_ * std::sin(u(0)), r_ * std::cos(u(0));
    return j;
  }

 private:
  double r_;
};

class Torus final : public LagrangianChart {
 public:
  explicit Torus(std::vector<double> radii) : r_(std::move(radii)) {
    if (r_.empty()) throw Error(ErrorKind::Dimension, "torus needs at least one radius");
    for (double r : r_)
      if (!(r > 0.0)) throw Error(ErrorKind::InvariantViolation, "torus radii must be positive");
  }
  int n() const override { return static_cast<int>(r_.size()); }
  std::string tag() const override { return "product_torus"; }
  Vec eval(const Vec& u) const override {
    const int k = n();
    Vec x(2 * k);
    for (int j = 0; j < k; ++j) {
      x(j) = r_[j] * std::cos(u(j));
      x(k + j) = r_[j] * std::sin(u(j));
    }
    return x;
  }
  bool exact_jacobian() const override { return true; }
  Mat jacobian(const Vec& u) const override {
    const int k = n();
    Mat jac = Mat::Zero(2 * k, k);
    for (int j = 0; j < k; ++j) {
      jac(j, j) = -r_[j] * std::sin(u(j));
      jac(k + j, j) = r_[j] * std::cos(u(j));
    }
    return jac;
  }

 private:
  std::vector<double> r_;
};

double real_eval(const Polynomial& p, const Vec& u) { return p(u).real(); }

class GradientGraph final : public LagrangianChart {
 public:
  explicit GradientGraph(Polynomial phi) : phi_(std::move(phi)) {
    const int k = phi_.n();
    for (int i = 0; i < k; ++i) {
      grad_.push_back(phi_.derivative(i));
      std::vector<Polynomial> row;
      for (int j = 0; j < k; ++j) row.push_back(grad_[i].derivative(j));
      hess_.push_back(std::move(row));
    }
  }
  int n() const override { return phi_.n(); }
  std::string tag() const override { return "gradient_graph"; }
  Vec eval(const Vec& u) const override {
    const int k = n();
    Vec x(2 * k);
    x.head(k) = u;
    for (int i = 0; i < k; ++i) x(k + i) = real_eval(grad_[i], u);
    return x;
  }
  bool exact_jacobian() const override { return true; }
  Mat jacobian(const Vec& u) const override {
    const int k = n();
    Mat jac(2 * k, k);
    jac.topRows(k) = Mat::Identity(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) jac(k + i, j) = real_eval(hess_[i][j], u);
    return jac;
  }

 private:
  Polynomial phi_;
  std::vector<Polynomial> grad_;
  std::vector<std::vector<Polynomial>> hess_;
};

class FlatPlane final : public LagrangianChart {
 public:
  explicit FlatPlane(int n) : n_(n) {
    if (n < 1) throw Error(ErrorKind::Dimension, "plane dimension must be positive");
  }
  int n() const override { return n_; }
  std::string tag() const override { return "flat_plane"; }
  Vec eval(const Vec& u) const override {
    Vec x = Vec::Zero(2 * n_);
    x.head(n_) = u;
    return x;
  }
  bool exact_jacobian() const override { return true; }
  Mat jacobian(const Vec&) const override {
    Mat jac = Mat::Zero(2 * n_, n_);
    jac.topRows(n_) = Mat::Identity(n_, n_);
    return jac;
  }

 private:
  int n_;
};

double factor_value(const ChartTerm::Factor& f, double u) {
  switch (f.kind) {
    case ChartTerm::Kind::Pow: return std::pow(u, f.k);
    case ChartTerm::Kind::Cos: return std::cos(f.k * u);
    case ChartTerm::Kind::Sin: return std::sin(f.k * u);
  }
  return 0.0;
}

double factor_derivative(const ChartTerm::Factor& f, double u) {
  switch (f.kind) {
    case ChartTerm::Kind::Pow: return f.k == 0 ? 0.0 : f.k * std::pow(u, f.k - 1);
    case ChartTerm::Kind::Cos: return -f.k * std::sin(f.k * u);
    case ChartTerm::Kind::Sin: return f.k * std::cos(f.k * u);
  }
  return 0.0;
}

class Custom final : public LagrangianChart {
 public:
  Custom(int n, std::vector<std::vector<ChartTerm>> coords) : n_(n), coords_(std::move(coords)) {
    if (n < 1 || static_cast<int>(coords_.size()) != 2 * n) {
      throw Error(ErrorKind::Dimension, "custom chart needs 2n coordinate expressions");
    }
    for (const auto& c : coords_)
      for (const auto& t : c)
        for (const auto& f : t.factors)
          if (f.var < 0 || f.var >= n) throw Error(ErrorKind::Dimension, "custom chart term uses an unknown variable");
  }
  int n() const override { return n_; }
  std::string tag() const override { return "custom"; }
  Vec eval(const Vec& u) const override {
    Vec x = Vec::Zero(2 * n_);
    for (int i = 0; i < 2 * n_; ++i) {
      for (const auto& t : coords_[i]) {
        double v = t.coef;
        for (const auto& f : t.factors) v *= factor_value(f, u(f.var));
        x(i) += v;
      }
    }
    return x;
  }
  bool exact_jacobian() const override { return true; }
  Mat jacobian(const Vec& u) const override {
    Mat jac = Mat::Zero(2 * n_, n_);
    for (int i = 0; i < 2 * n_; ++i) {
      for (const auto& t : coords_[i]) {
        for (size_t a = 0; a < t.factors.size(); ++a) {
          double v = t.coef * factor_derivative(t.factors[a], u(t.factors[a].var));
          for (size_t b = 0; b < t.factors.size(); ++b)
            if (b != a) v *= factor_value(t.factors[b], u(t.factors[b].var));
          jac(i, t.factors[a].var) += v;
        }
      }
    }
    return jac;
  }

 private:
  int n_;
  std::vector<std::vector<ChartTerm>> coords_;
};

}  // namespace

ChartPtr circle_chart(double r) { return std::make_shared<Circle>(r); }
ChartPtr product_torus_chart(std::vector<double> radii) { return std::make_shared<Torus>(std::move(radii)); }
ChartPtr gradient_graph_chart(Polynomial potential) { return std::make_shared<GradientGraph>(std::move(potential)); }
ChartPtr flat_plane_chart(int n) { return std::make_shared<FlatPlane>(n); }
ChartPtr custom_chart(int n, std::vector<std::vector<ChartTerm>> coordinates) {
  return std::make_shared<Custom>(n, std::move(coordinates));
}

ParamPath ParamPath::from_function(std::function<Vec(double)> f, int samples, bool closed) {
  if (samples < 2) throw Error(ErrorKind::InvariantViolation, "a path needs at least two samples");
  ParamPath p;
  p.at = std::move(f);
  p.closed = closed;
  for (int k = 0; k < samples; ++k) p.t.push_back(static_cast<double>(k) / (samples - 1));
  return p;
}

ParamPath ParamPath::segment(Vec from, Vec to, int samples) {
  if (from.size() != to.size()) throw Error(ErrorKind::Dimension, "segment endpoints of different dimension");
  return from_function([from, to](double s) -> Vec { return from + s * (to - from); }, samples, false);
}

ParamPath ParamPath::loop(Vec base, Vec winding, int samples) {
  if (base.size() != winding.size()) throw Error(ErrorKind::Dimension, "loop base and winding of different dimension");
  return from_function([base, winding](double s) -> Vec { return base + 2.0 * kPi * s * winding; }, samples, true);
}

ParamPath ParamPath::reversed() const {
  ParamPath p;
  auto f = at;
  p.at = [f](double s) { return f(1.0 - s); };
  for (auto it = t.rbegin(); it != t.rend(); ++it) p.t.push_back(1.0 - *it);
  p.closed = closed;
  return p;
}

void check_closed_flag(const LagrangianChart& chart, const ParamPath& path, const Tolerances& tol) {
  const double gap = max_abs(Mat(chart.eval(path(path.t.front())) - chart.eval(path(path.t.back()))));
  const bool ends_meet = gap <= std::sqrt(tol.residual_tol);
  if (ends_meet != path.closed) {
    throw Error(ErrorKind::InvariantViolation, path.closed ? "path is flagged closed but its ends differ"
                                                           : "path is flagged open but its ends coincide");
  }
}

Mat induced_metric(const LagrangianChart& chart, const Vec& u, const Tolerances& tol) {
  const Mat jac = chart.jacobian(u);
  const Mat g = jac.transpose() * jac;
  Eigen::SelfAdjointEigenSolver<Mat> es(g, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < tol.rank_tol) throw Error(ErrorKind::Immersion, "induced metric is degenerate");
  return g;
}

}  // namespace maslov
