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

// Small dense helpers shared by every module. Matrices here are at most
// 6x6 (n <= 3 on R^{2n}), so nothing is tuned for size.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace maslov {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

/// Standard complex structure [[0,-I],[I,0]] on R^{2n}.
Mat standard_J(int n);

/// Largest absolute entry.
double max_abs(const Mat& m);
double max_abs(const CMat& m);

/// Thin QR with a positive R diagonal; keeps column order and orientation.
Mat orthonormalize_columns(const Mat& m);

std::vector<double> singular_values(const Mat& m);
int numeric_rank(const Mat& m, double tol);

std::vector<cplx> eigenvalues(const CMat& m);

/// Signature (#positive - #negative) of a real symmetric matrix, eigenvalues
/// with magnitude below \p tol dropped.
int signature(const Mat& sym, double tol);

/// Principal power of a unitary matrix, U^s = Q diag(lambda^s) Q^*, with
/// eigenvalue arguments taken in (-pi, pi].
CMat unitary_power(const CMat& u, double s);

/// exp(i t H) for Hermitian H.
CMat expi_hermitian(const CMat& h, double t);

/// det(M)^{-1/2} on the branch that is continuous on {Re M positive definite}
/// and positive for real positive-definite M.
cplx det_inv_sqrt_canonical(const CMat& m);

/// Wraps to (-pi, pi].
double wrap_angle(double a);

/// i^k for integer k (any sign).
cplx ipow(int k);

/// Non-negative residue of k modulo m.
inline int mod(int k, int m) { return ((k % m) + m) % m; }

}  // namespace maslov
