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

#include "maslov/symplectic.hpp"

#include "maslov/error.hpp"

#include <Eigen/Eigenvalues>

#include <array>
#include <cmath>
#include <sstream>

namespace maslov {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

void require_square_even(const Mat& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0) {
    throw Error(ErrorKind::Dimension, "expected a non-empty 2n x 2n matrix");
  }
}

}  // namespace

double symplectic_residual(const Mat& s) {
  const Mat j = standard_J(static_cast<int>(s.rows() / 2));
  return max_abs(Mat(s.transpose() * j * s - j));
}

SymplecticMatrix::SymplecticMatrix(Mat entries, const Tolerances& tol) : m_(std::move(entries)) {
  require_square_even(m_);
  const double r = symplectic_residual(m_);
  if (r > tol.residual_tol) {
    throw Error(ErrorKind::InvariantViolation, "matrix is not symplectic (residual " + fmt(r) + ")");
  }
}

SymplecticMatrix SymplecticMatrix::trusted(Mat entries) {
  SymplecticMatrix s;
  s.m_ = std::move(entries);
  return s;
}

SymplecticMatrix SymplecticMatrix::inverse() const {
  // S^{-1} = -J S^T J
  const Mat j = standard_J(n());
  return trusted(-j * m_.transpose() * j);
}

double unitary_residual(const CMat& u) {
  return max_abs(CMat(u.adjoint() * u - CMat::Identity(u.rows(), u.cols())));
}

UnitaryMatrix::UnitaryMatrix(CMat entries, const Tolerances& tol) : u_(std::move(entries)) {
  if (u_.rows() != u_.cols() || u_.rows() == 0) throw Error(ErrorKind::Dimension, "expected a non-empty square matrix");
  const double r = unitary_residual(u_);
  if (r > tol.residual_tol) {
    throw Error(ErrorKind::InvariantViolation, "matrix is not unitary (residual " + fmt(r) + ")");
  }
}

UnitaryMatrix UnitaryMatrix::trusted(CMat entries) {
  UnitaryMatrix u;
  u.u_ = std::move(entries);
  return u;
}

LagrangianFrame::LagrangianFrame(Mat columns, const Tolerances& tol) : x_(std::move(columns)) {
  if (x_.cols() == 0 || x_.rows() != 2 * x_.cols()) {
    throw Error(ErrorKind::Dimension, "a Lagrangian frame is a 2n x n matrix");
  }
  const auto s = singular_values(x_);
  if (s.back() < tol.rank_tol) {
    throw Error(ErrorKind::InvariantViolation, "frame is rank deficient (smallest singular value " + fmt(s.back()) + ")");
  }
  const Mat q = orthonormalize_columns(x_);
  const double iso = max_abs(Mat(q.transpose() * standard_J(n()) * q));
  if (iso > tol.residual_tol) {
    throw Error(ErrorKind::InvariantViolation, "frame is not isotropic (residual " + fmt(iso) + ")");
  }
}

LagrangianFrame LagrangianFrame::trusted(Mat columns) {
  LagrangianFrame l;
  l.x_ = std::move(columns);
  return l;
}

double omega(const Vec& a, const Vec& b) {
  if (a.size() != b.size() || a.size() % 2 != 0) throw Error(ErrorKind::Dimension, "omega needs two vectors in R^{2n}");
  const Eigen::Index n = a.size() / 2;
  return a.head(n).dot(b.tail(n)) - a.tail(n).dot(b.head(n));
}

bool kahler_compatible(int n, double tol) {
  const Mat j = standard_J(n);
  for (int i = 0; i < 2 * n; ++i) {
    for (int k = 0; k < 2 * n; ++k) {
      const Vec ei = Vec::Unit(2 * n, i);
      const Vec ek = Vec::Unit(2 * n, k);
      if (std::abs(ei.dot(ek) - omega(ei, j * ek)) > tol) return false;
    }
  }
  return true;
}

LagrangianFrame standard_lagrangian(int n) {
  Mat x = Mat::Zero(2 * n, n);
  x.bottomRows(n) = Mat::Identity(n, n);
  return LagrangianFrame::trusted(std::move(x));
}

LagrangianFrame line(double angle) {
  Mat x(2, 1);
  x << std::cos(angle), std::sin(angle);
  return LagrangianFrame::trusted(std::move(x));
}

SymplecticMatrix embed_unitary(const UnitaryMatrix& u) {
  const int n = u.n();
  const Mat a = u.matrix().real();
  const Mat b = u.matrix().imag();
  Mat s(2 * n, 2 * n);
  s << a, -b, b, a;
  return SymplecticMatrix::trusted(std::move(s));
}

SymplecticMatrix embed_unitary(const CMat& u, const Tolerances& tol) { return embed_unitary(UnitaryMatrix(u, tol)); }

CMat unitary_block(const SymplecticMatrix& s, const Tolerances& tol) {
  const Mat a = s.A();
  const Mat b = s.C();
  const double off = std::max(max_abs(Mat(s.D() - a)), max_abs(Mat(s.B() + b)));
  if (off > tol.residual_tol) {
    throw Error(ErrorKind::InvariantViolation, "matrix is not in the unitary image (residual " + fmt(off) + ")");
  }
  CMat u = a.cast<cplx>() + kI * b.cast<cplx>();
  const double r = unitary_residual(u);
  if (r > tol.residual_tol) {
    throw Error(ErrorKind::InvariantViolation, "block A+iB is not unitary (residual " + fmt(r) + ")");
  }
  return u;
}

LagrangianFrame apply(const SymplecticMatrix& s, const LagrangianFrame& l) {
  if (s.n() != l.n()) throw Error(ErrorKind::Dimension, "symplectic matrix and frame have different n");
  return LagrangianFrame::trusted(s.matrix() * l.columns());
}

CMat souriau_map(const LagrangianFrame& l) {
  // With X orthonormal, Z = X_q + i X_p is unitary and embed(-iZ) maps L_0 onto
  // span X, so r = -iZ and r r^T = -Z Z^T.
  const Mat x = l.orthonormal();
  const int n = l.n();
  const CMat z = x.topRows(n).cast<cplx>() + kI * x.bottomRows(n).cast<cplx>();
  const CMat w = -z * z.transpose();
  return 0.5 * (w + w.transpose());
}

CMat souriau_root(const CMat& w, const Tolerances& tol) {
  if (w.rows() != w.cols() || w.rows() == 0) throw Error(ErrorKind::Dimension, "expected a non-empty square matrix");
  const double asym = max_abs(CMat(w - w.transpose()));
  if (asym > tol.residual_tol) throw Error(ErrorKind::InvariantViolation, "w is not symmetric (residual " + fmt(asym) + ")");
  const double ur = unitary_residual(w);
  if (ur > tol.residual_tol) throw Error(ErrorKind::InvariantViolation, "w is not unitary (residual " + fmt(ur) + ")");

  // Re w and Im w are commuting real symmetric matrices, so a generic real
  // combination of them has an eigenbasis that diagonalizes w.
  const Mat x = w.real();
  const Mat y = w.imag();
  const Eigen::Index n = w.rows();
  constexpr std::array<double, 5> mix = {0.41421356237309503, 1.6180339887498949, 0.73908513321516067,
                                         2.7182818284590451, 0.31830988618379069};
  double best = std::numeric_limits<double>::infinity();
  CMat best_r;
  for (double c : mix) {
    Eigen::SelfAdjointEigenSolver<Mat> es(x + c * y);
    const Mat o = es.eigenvectors();
    const CMat d = o.transpose().cast<cplx>() * w * o.cast<cplx>();
    const double off = max_abs(CMat(d - CMat(d.diagonal().asDiagonal())));
    if (off < best) {
      best = off;
      CVec half(n);
      for (Eigen::Index k = 0; k < n; ++k) half(k) = std::polar(1.0, 0.5 * std::arg(d(k, k)));
      best_r = o.cast<cplx>() * half.asDiagonal();
    }
    if (off <= tol.residual_tol) break;
  }
  if (best > std::sqrt(tol.residual_tol)) {
    throw Error(ErrorKind::Conditioning, "could not diagonalize symmetric unitary (off-diagonal " + fmt(best) + ")");
  }
  return best_r;
}

LagrangianFrame lagrangian_from_souriau(const CMat& w, const Tolerances& tol) {
  const CMat r = souriau_root(w, tol);
  const Eigen::Index n = w.rows();
  // span embed(r) L_0 has frame [-Im r; Re r]
  Mat x(2 * n, n);
  x.topRows(n) = -r.imag();
  x.bottomRows(n) = r.real();
  return LagrangianFrame::trusted(std::move(x));
}

int intersection_dim(const LagrangianFrame& l1, const LagrangianFrame& l2, const Tolerances& tol) {
  if (l1.n() != l2.n()) throw Error(ErrorKind::Dimension, "frames have different n");
  const int n = l1.n();
  Mat stacked(2 * n, 2 * n);
  stacked << l1.orthonormal(), l2.orthonormal();
  return 2 * n - numeric_rank(stacked, tol.rank_tol);
}

int unit_eigenvalue_multiplicity(const CMat& w1, const CMat& w2, const Tolerances& tol) {
  if (w1.rows() != w2.rows()) throw Error(ErrorKind::Dimension, "Souriau matrices have different n");
  int count = 0;
  for (const cplx& nu : eigenvalues(CMat(w1 * w2.adjoint()))) {
    if (std::abs(nu - 1.0) <= tol.rank_tol) ++count;
  }
  return count;
}

CMat random_unitary(int n, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMat z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = cplx(g(rng), g(rng)) / std::sqrt(2.0);
  Eigen::HouseholderQR<CMat> qr(z);
  CMat q = qr.householderQ() * CMat::Identity(n, n);
  const CMat r = qr.matrixQR();
  for (int j = 0; j < n; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

CMat random_hermitian(int n, Rng& rng, double scale) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMat z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = cplx(g(rng), g(rng));
  return 0.5 * scale * (z + z.adjoint());
}

Mat random_symmetric(int n, Rng& rng, double scale) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = g(rng);
  return 0.5 * scale * (z + z.transpose());
}

LagrangianFrame random_lagrangian(int n, Rng& rng) {
  return apply(embed_unitary(UnitaryMatrix::trusted(random_unitary(n, rng))), standard_lagrangian(n));
}

}  // namespace maslov
