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

// Linear symplectic substrate on (R^{2n}, omega_0). Vectors are ordered
// (q_1..q_n, p_1..p_n) and omega_0(z, z') = <q, p'> - <p, q'>.

#pragma once

#include "maslov/linalg.hpp"
#include "maslov/tolerances.hpp"

#include <random>

namespace maslov {

class SymplecticMatrix {
 public:
  /// Validates S^T J S = J within residual_tol.
  SymplecticMatrix(Mat entries, const Tolerances& tol = {});

  /// Skips validation; for values that are symplectic by construction.
  static SymplecticMatrix trusted(Mat entries);

  const Mat& matrix() const { return m_; }
  int n() const { return static_cast<int>(m_.rows() / 2); }

  Mat A() const { return m_.topLeftCorner(n(), n()); }
  Mat B() const { return m_.topRightCorner(n(), n()); }
  Mat C() const { return m_.bottomLeftCorner(n(), n()); }
  Mat D() const { return m_.bottomRightCorner(n(), n()); }

  SymplecticMatrix operator*(const SymplecticMatrix& o) const { return trusted(m_ * o.m_); }
  SymplecticMatrix inverse() const;

  static SymplecticMatrix identity(int n) { return trusted(Mat::Identity(2 * n, 2 * n)); }

 private:
  SymplecticMatrix() = default;
  Mat m_;
};

double symplectic_residual(const Mat& s);

class UnitaryMatrix {
 public:
  UnitaryMatrix(CMat entries, const Tolerances& tol = {});
  static UnitaryMatrix trusted(CMat entries);

  const CMat& matrix() const { return u_; }
  int n() const { return static_cast<int>(u_.rows()); }

 private:
  UnitaryMatrix() = default;
  CMat u_;
};

double unitary_residual(const CMat& u);

/// Columns span a Lagrangian subspace. The stored columns are as given; most
/// consumers work with orthonormal() instead.
class LagrangianFrame {
 public:
  LagrangianFrame(Mat columns, const Tolerances& tol = {});
  static LagrangianFrame trusted(Mat columns);

  const Mat& columns() const { return x_; }
  Mat orthonormal() const { return orthonormalize_columns(x_); }
  int n() const { return static_cast<int>(x_.cols()); }

 private:
  LagrangianFrame() = default;
  Mat x_;
};

/// omega_0(a, b).
double omega(const Vec& a, const Vec& b);

/// True when g_0(e_i, e_j) = omega_0(e_i, J_0 e_j) on the standard basis.
bool kahler_compatible(int n, double tol);

/// L_0 = {0} x R^n.
LagrangianFrame standard_lagrangian(int n);

/// The line through (cos a, sin a) in R^2.
LagrangianFrame line(double angle);

SymplecticMatrix embed_unitary(const UnitaryMatrix& u);
SymplecticMatrix embed_unitary(const CMat& u, const Tolerances& tol = {});

/// A + iB for S = [[A,-B],[B,A]]. Throws unless S is in that image.
CMat unitary_block(const SymplecticMatrix& s, const Tolerances& tol = {});

LagrangianFrame apply(const SymplecticMatrix& s, const LagrangianFrame& l);

/// w = r r^T for any unitary r with embed_unitary(r) L_0 = L.
CMat souriau_map(const LagrangianFrame& l);

/// Unitary r with r r^T = w, built from a real orthogonal diagonalization of
/// the commuting pair (Re w, Im w).
CMat souriau_root(const CMat& w, const Tolerances& tol = {});

LagrangianFrame lagrangian_from_souriau(const CMat& w, const Tolerances& tol = {});

int intersection_dim(const LagrangianFrame& l1, const LagrangianFrame& l2, const Tolerances& tol = {});

/// Multiplicity of the eigenvalue 1 of w1 w2^{-1}, counted within rank_tol.
int unit_eigenvalue_multiplicity(const CMat& w1, const CMat& w2, const Tolerances& tol = {});

using Rng = std::mt19937_64;

/// Haar-distributed unitary via QR of a complex Gaussian matrix.
CMat random_unitary(int n, Rng& rng);
CMat random_hermitian(int n, Rng& rng, double scale = 1.0);
Mat random_symmetric(int n, Rng& rng, double scale = 1.0);
LagrangianFrame random_lagrangian(int n, Rng& rng);

}  // namespace maslov
