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

#include "maslov/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace maslov {

Mat standard_J(int n) {
  Mat j = Mat::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = -Mat::Identity(n, n);
  j.bottomLeftCorner(n, n) = Mat::Identity(n, n);
  return j;
}

double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
double max_abs(const CMat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Mat orthonormalize_columns(const Mat& m) {
  Eigen::HouseholderQR<Mat> qr(m);
  Mat q = qr.householderQ() * Mat::Identity(m.rows(), m.cols());
  const Mat r = qr.matrixQR().topRows(m.cols()).triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  return q;
}

std::vector<double> singular_values(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  const Vec s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

int numeric_rank(const Mat& m, double tol) {
  const auto s = singular_values(m);
  return static_cast<int>(std::count_if(s.begin(), s.end(), [tol](double v) { return v > tol; }));
}

std::vector<cplx> eigenvalues(const CMat& m) {
  Eigen::ComplexEigenSolver<CMat> es(m, /*computeEigenvectors=*/false);
  const CVec ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

int signature(const Mat& sym, double tol) {
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (sym + sym.transpose()), Eigen::EigenvaluesOnly);
  int sig = 0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    const double v = es.eigenvalues()(k);
    if (v > tol) ++sig;
    if (v < -tol) --sig;
  }
  return sig;
}

CMat unitary_power(const CMat& u, double s) {
  Eigen::ComplexSchur<CMat> schur(u);
  const CMat& t = schur.matrixT();
  const CMat& q = schur.matrixU();
  CVec d(t.rows());
  for (Eigen::Index k = 0; k < t.rows(); ++k) {
    const double arg = std::arg(t(k, k));
    d(k) = std::polar(1.0, s * arg);
  }
  return q * d.asDiagonal() * q.adjoint();
}

CMat expi_hermitian(const CMat& h, double t) {
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (h + h.adjoint()));
  CVec d(h.rows());
  for (Eigen::Index k = 0; k < h.rows(); ++k) d(k) = std::polar(1.0, t * es.eigenvalues()(k));
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

cplx det_inv_sqrt_canonical(const CMat& m) {
  cplx acc{1.0, 0.0};
  for (const cplx& lambda : eigenvalues(m)) acc /= std::sqrt(lambda);
  return acc;
}

double wrap_angle(double a) {
  double r = std::remainder(a, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

cplx ipow(int k) {
  switch (mod(k, 4)) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace maslov
