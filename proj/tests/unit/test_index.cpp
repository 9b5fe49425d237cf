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
#include "maslov/index.hpp"

#include <cmath>

using namespace maslov;

namespace {

// Brute-force oracle for the cyclic form omega(z1,z2) + omega(z2,z3) + omega(z3,z1)
// on L1 x L2 x L3, assembled block by block.
int cyclic_form_signature(const LagrangianFrame& a, const LagrangianFrame& b, const LagrangianFrame& c) {
  const int n = a.n();
  const Mat omega = -standard_J(n);
  const Mat* x[3] = {&a.columns(), &b.columns(), &c.columns()};
  Mat q = Mat::Zero(3 * n, 3 * n);
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const Mat block = 0.5 * x[i]->transpose() * omega * *x[j];
    q.block(i * n, j * n, n, n) += block;
    q.block(j * n, i * n, n, n) += block.transpose();
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(q);
  int s = 0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    if (es.eigenvalues()(k) > 1e-9) ++s;
    if (es.eigenvalues()(k) < -1e-9) --s;
  }
  return s;
}

CoverPoint random_cover_point(int n, Rng& rng) {
  std::uniform_int_distribution<int> sheet(-2, 2);
  return CoverPoint::over(random_lagrangian(n, rng), sheet(rng));
}

// A pair sharing exactly k directions.
std::pair<LagrangianFrame, LagrangianFrame> pair_with_intersection(int n, int k, Rng& rng) {
  const CMat r = random_unitary(n, rng);
  CMat u = CMat::Identity(n, n);
  if (k < n) u.bottomRightCorner(n - k, n - k) = random_unitary(n - k, rng);
  const LagrangianFrame a = apply(embed_unitary(r), standard_lagrangian(n));
  const LagrangianFrame b = apply(embed_unitary(CMat(r * u)), standard_lagrangian(n));
  return {a, b};
}

LagrangianPath circle_tangent_path(double turns, int samples) {
  return LagrangianPath::sampled([turns](double t) { return line(2 * kPi * turns * t + kPi / 2); }, samples);
}

}  // namespace

TEST_CASE("kashiwara signature examples") {
  const LagrangianFrame l = line(0.4);
  CHECK(kashiwara_signature(l, l, l) == 0);

  const LagrangianFrame a = line(0.0), b = line(kPi / 4), c = line(kPi / 2);
  CHECK(cyclic_form_signature(a, b, c) == 1);
  CHECK(kashiwara_signature(a, b, c) == kKashiwaraSign * cyclic_form_signature(a, b, c));
  CHECK(kashiwara_signature(a, b, c) == -1);

  CHECK_THROWS_AS(kashiwara_signature(a, b, standard_lagrangian(2)), Error);
}

TEST_CASE("kashiwara signature matches the oracle and is antisymmetric") {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 3;
    const LagrangianFrame a = random_lagrangian(n, rng), b = random_lagrangian(n, rng), c = random_lagrangian(n, rng);
    const int t = kashiwara_signature(a, b, c);
    CHECK(t == kKashiwaraSign * cyclic_form_signature(a, b, c));
    CHECK(kashiwara_signature(b, a, c) == -t);
    CHECK(kashiwara_signature(a, c, b) == -t);
    CHECK(std::abs(t) <= 3 * n);
  }
}

TEST_CASE("leray index examples") {
  const CoverPoint x = CoverPoint::make(CMat::Constant(1, 1, -1.0), kPi);
  const CoverPoint y = CoverPoint::make(CMat::Identity(1, 1), 0.0);
  CHECK(leray_transverse(x, y) == 1);
  CHECK(leray_index(x, y) == 1);

  Rng rng(4);
  std::uniform_real_distribution<double> angle(0.0, kPi);
  for (int k = 0; k < 20; ++k) {
    const double a = angle(rng), b = angle(rng);
    if (std::abs(std::sin(a - b)) < 1e-3) continue;
    const CMat wa = CMat::Constant(1, 1, -std::polar(1.0, 2 * a));
    const CMat wb = CMat::Constant(1, 1, -std::polar(1.0, 2 * b));
    const CoverPoint xa = CoverPoint::make(wa, 2 * a - kPi), yb = CoverPoint::make(wb, 2 * b - kPi);
    // by hand: nu = e^{2i(a-b)}, Arg(-nu) taken principal
    const double oracle = (2 * a - 2 * b - std::arg(-std::polar(1.0, 2 * (a - b)))) / kPi;
    CHECK(leray_transverse(xa, yb) == static_cast<int>(std::lround(oracle)));
    CHECK(leray_transverse(xa.deck(1), yb) == static_cast<int>(std::lround(oracle)) + 2);
  }
}

TEST_CASE("leray index rejects bad input") {
  const CoverPoint y = CoverPoint::over(line(0.3));
  CHECK_THROWS_AS(leray_transverse(y, y), Error);
  CHECK_THROWS_AS(CoverPoint::make(CMat::Identity(1, 1), 1.0), Error);
  CHECK_THROWS_AS(leray_index(y, CoverPoint::over(standard_lagrangian(2))), Error);
}

TEST_CASE("leray index on equal arguments vanishes") {
  Rng rng(8);
  for (int n = 1; n <= 3; ++n) {
    const CoverPoint x = random_cover_point(n, rng);
    CHECK(leray_index(x, x) == 0);
  }
}

TEST_CASE("deck shifts") {
  Rng rng(12);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 1 + trial % 3;
    const CoverPoint x = random_cover_point(n, rng), y = random_cover_point(n, rng);
    const int mu = leray_index(x, y);
    for (int r = -2; r <= 2; ++r)
      for (int s = -2; s <= 2; ++s) CHECK(leray_index(x.deck(r), y.deck(s)) == mu + 2 * (r - s));
  }
}

TEST_CASE("antisymmetry, parity and the coboundary identity") {
  Rng rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 3;
    const CoverPoint x = random_cover_point(n, rng), y = random_cover_point(n, rng), z = random_cover_point(n, rng);
    const int mxy = leray_index(x, y);
    CHECK(mxy == -leray_index(y, x));
    CHECK(mod(mxy, 2) == mod(n - intersection_dim(x.frame(), y.frame()), 2));
    CHECK(mxy - leray_index(x, z) + leray_index(y, z) == kashiwara_signature(x.frame(), y.frame(), z.frame()));
  }
}

TEST_CASE("non-transverse pairs: independence of the auxiliary lift") {
  Rng rng(14);
  std::uniform_int_distribution<int> sheet(-2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 3;
    std::uniform_int_distribution<int> dim(1, n);
    const auto [a, b] = pair_with_intersection(n, dim(rng), rng);
    const CoverPoint x = CoverPoint::over(a, sheet(rng)), y = CoverPoint::over(b, sheet(rng));
    const int mu = leray_index(x, y);
    CHECK(mod(mu, 2) == mod(n - intersection_dim(a, b), 2));
    LagrangianFrame l3 = random_lagrangian(n, rng);
    while (intersection_dim(l3, a) != 0 || intersection_dim(l3, b) != 0) l3 = random_lagrangian(n, rng);
    for (int r : {0, 3}) {
      const CoverPoint z = CoverPoint::over(l3, r);
      CHECK(leray_transverse(x, z) - leray_transverse(y, z) + kashiwara_signature(a, b, l3) == mu);
    }
  }
}

TEST_CASE("symplectic invariance under lifted unitaries") {
  Rng rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 3;
    const CoverPoint x = random_cover_point(n, rng), y = random_cover_point(n, rng);
    UnitaryLift s = UnitaryLift::principal(random_unitary(n, rng));
    s.phi += 2 * kPi * (trial % 5 - 2);
    CHECK(leray_index(s.act(x), s.act(y)) == leray_index(x, y));
    CHECK(s.act(x).frame().n() == n);
    CHECK(intersection_dim(s.act(x).frame(), apply(embed_unitary(s.r), x.frame())) == n);
  }
}

TEST_CASE("local constancy of the transverse index") {
  Rng rng(16);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 3;
    const CoverPoint x = random_cover_point(n, rng), y = random_cover_point(n, rng);
    if (intersection_dim(x.frame(), y.frame(), {1e-9, 1e-2, 1e-6}) != 0) continue;
    const UnitaryLift nudge = UnitaryLift::principal(expi_hermitian(random_hermitian(n, rng), 1e-4));
    const CoverPoint x2 = nudge.act(x);
    CHECK(max_abs(CMat(x2.w - x.w)) < 1e-3);
    CHECK(leray_transverse(x2, y) == leray_transverse(x, y));
  }
}

TEST_CASE("lift_path examples") {
  const LagrangianPath still = LagrangianPath::sampled([](double) { return line(0.7); }, 5);
  const LiftedPath a = lift_path(still, std::arg(souriau_map(line(0.7))(0, 0)));
  CHECK(std::abs(a.back().theta - a.front().theta) < 1e-14);

  // direct accumulation oracle at 10^4 samples
  double oracle = 0.0;
  cplx prev = -std::polar(1.0, kPi);
  for (int k = 1; k <= 10000; ++k) {
    const cplx w = -std::polar(1.0, 2 * (2 * kPi * k / 10000.0 + kPi / 2));
    oracle += std::arg(w / prev);
    prev = w;
  }
  CHECK(std::abs(oracle - 4 * kPi) < 1e-9);
  const LagrangianPath loop = circle_tangent_path(1.0, 64);
  const LiftedPath b = lift_path(loop, std::arg(souriau_map(loop.frames.front()).determinant()));
  CHECK(std::abs(b.back().theta - b.front().theta - oracle) < 1e-9);

  const LagrangianPath product = LagrangianPath::sampled(
      [](double t) {
        Mat x = Mat::Zero(4, 2);
        const Mat c = line(2 * kPi * t + kPi / 2).columns();
        x(0, 0) = c(0, 0);
        x(2, 0) = c(1, 0);
        x(3, 1) = 1.0;
        return LagrangianFrame(x);
      },
      64);
  const LiftedPath p = lift_path(product, std::arg(souriau_map(product.frames.front()).determinant()));
  CHECK(std::abs(p.back().theta - p.front().theta - 4 * kPi) < 1e-9);
}

TEST_CASE("lift_path refinement through the geodesic midpoint") {
  LagrangianPath coarse = circle_tangent_path(1.0, 9);
  coarse.at = nullptr;
  const LiftedPath l = lift_path(coarse, std::arg(souriau_map(coarse.frames.front()).determinant()));
  CHECK(l.refinements > 0);
  CHECK(std::abs(l.back().theta - l.front().theta - 4 * kPi) < 1e-9);
  CHECK_THROWS_AS(lift_path(coarse, 0.3), Error);
}

TEST_CASE("clm index examples") {
  const LagrangianPath still = LagrangianPath::sampled([](double) { return line(0.2); }, 3);
  CHECK(clm_index(still).index == 0);
  const ClmResult circle = clm_index(circle_tangent_path(1.0, 128));
  CHECK(circle.index == 2);
  CHECK(circle.mod4() == 2);
  CHECK(circle.m_L() == 3);
  CHECK(clm_index(circle_tangent_path(2.0, 256)).index == 4);
  CHECK(clm_index(circle_tangent_path(-1.0, 128)).index == -2);
  CHECK(clm_index_mod4(circle_tangent_path(3.0, 256)) == 2);
}

TEST_CASE("clm index is a homotopy invariant") {
  Rng rng(17);
  std::uniform_real_distribution<double> amp(-0.8, 0.8);
  std::uniform_int_distribution<int> freq(1, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const double a = amp(rng);
    const int k = freq(rng);
    const auto angle = [a, k](double t) {
      const double s = t + 0.1 * std::sin(2 * kPi * t);  // reparametrization
      return 2 * kPi * s + kPi / 2 + a * std::sin(2 * kPi * k * t);
    };
    const LagrangianPath p = LagrangianPath::sampled([angle](double t) { return line(angle(t)); }, 200);
    CHECK(clm_index(p).index == 2);
  }
}

TEST_CASE("mu_hat_on_cover") {
  std::vector<SymplecticMatrix> still(4, SymplecticMatrix::identity(2));
  CHECK(mu_hat_on_cover(still, standard_lagrangian(2)).value == 0);

  std::vector<SymplecticMatrix> rotation;
  for (int k = 0; k <= 200; ++k) {
    rotation.push_back(embed_unitary(CMat::Constant(1, 1, std::polar(1.0, 2 * kPi * k / 200.0))));
  }
  const CoverIndex c = mu_hat_on_cover(rotation, standard_lagrangian(1));
  CHECK(std::abs(c.value) == 4);
  CHECK(c.mod8 == 4);
  CHECK(c.mod8 == mod(2 * c.clm.index + 1 - c.clm.endpoint_intersection, 8));

  std::vector<SymplecticMatrix> bad = rotation;
  bad.front() = embed_unitary(CMat::Constant(1, 1, kI));
  CHECK_THROWS_AS(mu_hat_on_cover(bad, standard_lagrangian(1)), Error);
}
