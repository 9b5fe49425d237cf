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

#include <doctest.h>

#include "maslov/error.hpp"
#include "maslov/symplectic.hpp"

#include <cmath>

using namespace maslov;

namespace {

bool spans_equal(const Mat& a, const Mat& b) {
  Mat stacked(a.rows(), a.cols() + b.cols());
  stacked << a, b;
  return numeric_rank(stacked, 1e-8) == a.cols();
}

// Brute-force oracle: dimension of the nullspace of [L1 | -L2] from a full SVD.
int nullspace_dim(const Mat& l1, const Mat& l2) {
  Mat stacked(l1.rows(), l1.cols() + l2.cols());
  stacked << l1, -l2;
  Eigen::JacobiSVD<Mat> svd(stacked);
  int zero = 0;
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) zero += svd.singularValues()(k) < 1e-8;
  return zero + static_cast<int>(stacked.cols() - svd.singularValues().size());
}

}  // namespace

TEST_CASE("embed_unitary examples") {
  const Mat id = embed_unitary(CMat::Identity(1, 1)).matrix();
  CHECK(max_abs(Mat(id - Mat::Identity(2, 2))) < 1e-15);

  const Mat j = embed_unitary(CMat::Constant(1, 1, kI)).matrix();
  CHECK(max_abs(Mat(j - standard_J(1))) < 1e-15);

  const Mat r = embed_unitary(CMat::Constant(1, 1, std::polar(1.0, kPi / 4))).matrix();
  const double h = std::sqrt(2.0) / 2;
  Mat expect(2, 2);
  expect << h, -h, h, h;
  CHECK(max_abs(Mat(r - expect)) < 1e-15);
  CHECK(symplectic_residual(r) < 1e-14);
}

TEST_CASE("embed_unitary rejects non-unitary input") {
  CMat u = CMat::Identity(2, 2);
  u(0, 1) = 0.1;
  try {
    embed_unitary(u);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvariantViolation);
  }
}

TEST_CASE("random unitaries embed into Sp(2n) and O(2n)") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 3;
    const Mat s = embed_unitary(random_unitary(n, rng)).matrix();
    CHECK(symplectic_residual(s) < 1e-12);
    CHECK(max_abs(Mat(s.transpose() * s - Mat::Identity(2 * n, 2 * n))) < 1e-12);
  }
}

TEST_CASE("symplectic matrix validation") {
  Mat s = Mat::Identity(2, 2);
  s(0, 0) = 2.0;
  CHECK_THROWS_AS(SymplecticMatrix{s}, Error);
  s(1, 1) = 0.5;
  const SymplecticMatrix ok(s);
  CHECK(max_abs(Mat((ok * ok.inverse()).matrix() - Mat::Identity(2, 2))) < 1e-14);
}

TEST_CASE("kahler pair") { CHECK(kahler_compatible(3, 1e-15)); }

TEST_CASE("souriau_map examples") {
  CHECK(std::abs(souriau_map(standard_lagrangian(1))(0, 0) - 1.0) < 1e-14);

  Mat horizontal(2, 1);
  horizontal << 1.0, 0.0;
  CHECK(std::abs(souriau_map(LagrangianFrame(horizontal))(0, 0) + 1.0) < 1e-14);

  Rng rng(3);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int k = 0; k < 10; ++k) {
    const double a = angle(rng);
    const cplx w = souriau_map(line(a))(0, 0);
    CHECK(std::abs(w + std::polar(1.0, 2 * a)) < 1e-13);
    // r = e^{i(a - pi/2)} carries L_0 onto the line
    const Mat image = embed_unitary(CMat::Constant(1, 1, std::polar(1.0, a - kPi / 2))).matrix() *
                      standard_lagrangian(1).columns();
    CHECK(spans_equal(image, line(a).columns()));
  }
}

TEST_CASE("souriau_map rejects a non-Lagrangian frame") {
  Mat x = Mat::Zero(4, 2);
  x(0, 0) = 1.0;
  x(2, 1) = 1.0;
  CHECK_THROWS_AS(LagrangianFrame{x}, Error);
}

TEST_CASE("lagrangian_from_souriau examples") {
  const CMat one = CMat::Identity(1, 1);
  CHECK(spans_equal(lagrangian_from_souriau(one).columns(), standard_lagrangian(1).columns()));
  Mat horizontal(2, 1);
  horizontal << 1.0, 0.0;
  CHECK(spans_equal(lagrangian_from_souriau(-one).columns(), horizontal));
  CHECK(spans_equal(lagrangian_from_souriau(CMat::Identity(2, 2)).columns(), standard_lagrangian(2).columns()));

  CMat asym = CMat::Identity(2, 2);
  asym(0, 1) = 0.3;
  CHECK_THROWS_AS(lagrangian_from_souriau(asym), Error);
}

TEST_CASE("souriau round trip on random Lagrangians") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 3;
    const LagrangianFrame l = random_lagrangian(n, rng);
    const CMat w = souriau_map(l);
    CHECK(max_abs(CMat(w - w.transpose())) < 1e-12);
    CHECK(unitary_residual(w) < 1e-12);
    const LagrangianFrame back = lagrangian_from_souriau(w);
    CHECK(intersection_dim(back, l) == n);
    CHECK(max_abs(CMat(souriau_map(back) - w)) < 1e-9);
  }
}

TEST_CASE("souriau equivariance") {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 3;
    const CMat r = random_unitary(n, rng);
    const LagrangianFrame l = random_lagrangian(n, rng);
    const CMat lhs = souriau_map(apply(embed_unitary(r), l));
    const CMat rhs = r * souriau_map(l) * r.transpose();
    CHECK(max_abs(CMat(lhs - rhs)) < 1e-9);
  }
}

TEST_CASE("intersection_dim examples") {
  const LagrangianFrame l0 = standard_lagrangian(1);
  CHECK(intersection_dim(l0, l0) == 1);
  Mat horizontal(2, 1);
  horizontal << 1.0, 0.0;
  CHECK(intersection_dim(l0, LagrangianFrame(horizontal)) == 0);

  Mat mixed = Mat::Zero(4, 2);
  mixed(0, 0) = 1.0;
  mixed(3, 1) = 1.0;
  CHECK(intersection_dim(standard_lagrangian(2), LagrangianFrame(mixed)) == 1);
  CHECK(nullspace_dim(standard_lagrangian(2).columns(), mixed) == 1);

  CHECK_THROWS_AS(intersection_dim(standard_lagrangian(1), standard_lagrangian(2)), Error);
}

TEST_CASE("intersection_dim symmetry, frame invariance and the eigenvalue criterion") {
  Rng rng(9);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 3;
    const LagrangianFrame a = random_lagrangian(n, rng);
    LagrangianFrame b = random_lagrangian(n, rng);
    if (trial % 4 == 0 && n >= 2) {
      // force a shared direction by rotating only the complement
      CMat u = CMat::Identity(n, n);
      u.bottomRightCorner(n - 1, n - 1) = random_unitary(n - 1, rng);
      const CMat r = souriau_root(souriau_map(a));
      b = apply(embed_unitary(r * u), standard_lagrangian(n));
    }
    const int d = intersection_dim(a, b);
    CHECK(d == intersection_dim(b, a));
    CHECK(d == nullspace_dim(a.columns(), b.columns()));
    Mat g_mat(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g_mat(i, j) = g(rng);
    g_mat += 3.0 * Mat::Identity(n, n);
    CHECK(d == intersection_dim(LagrangianFrame(a.columns() * g_mat), b));
    CHECK(d == unit_eigenvalue_multiplicity(souriau_map(a), souriau_map(b)));
  }
}
