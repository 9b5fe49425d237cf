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

#include "maslov/batch.hpp"
#include "maslov/error.hpp"
#include "maslov/metaplectic.hpp"

#include <cmath>

using namespace maslov;

namespace {

const cplx kEighth = std::polar(1.0, kPi / 4);

bool close(cplx a, cplx b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

GaussianAmplitude random_state(int n, Rng& rng, int degree = 0) {
  std::normal_distribution<double> g;
  GaussianAmplitude s;
  s.c = cplx(g(rng), g(rng));
  s.M = (Mat::Identity(n, n) + 0.2 * random_symmetric(n, rng)).cast<cplx>() + kI * 0.5 * random_symmetric(n, rng).cast<cplx>();
  s.poly = Polynomial::constant(n, 1.0);
  for (int d = 0; d < degree; ++d) {
    Polynomial lin(n);
    for (int j = 0; j < n; ++j) lin += Polynomial::variable(n, j) * cplx(g(rng), g(rng));
    s.poly = s.poly * (lin + Polynomial::constant(n, cplx(g(rng), 0.0)));
  }
  return s;
}

Generator random_generator(int n, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, 2);
  switch (pick(rng)) {
    case 0: {
      // singular values in [1/2, 2] keep the dilated Gaussians well conditioned
      std::uniform_real_distribution<double> sv(0.5, 2.0);
      Vec d(n);
      for (int i = 0; i < n; ++i) d(i) = sv(rng);
      const Mat u = embed_unitary(random_unitary(n, rng)).matrix().topLeftCorner(n, n);
      const Mat v = embed_unitary(random_unitary(n, rng)).matrix().topLeftCorner(n, n);
      const Mat a = orthonormalize_columns(u) * d.asDiagonal() * orthonormalize_columns(v).transpose();
      return Dilate{a, branch_parity(a) + 2 * (pick(rng) % 2)};
    }
    case 1:
      return Chirp{random_symmetric(n, rng)};
    default:
      return JHat{};
  }
}

Word random_word(int n, Rng& rng, int length) {
  Word w;
  for (int k = 0; k < length; ++k) w.push_back(random_generator(n, rng));
  return w;
}

// Trapezoid oracles on a uniform grid for n = 1.
struct Grid {
  double lo = -14.0, hi = 14.0;
  int points = 5601;
  double h() const { return (hi - lo) / (points - 1); }
  double x(int k) const { return lo + k * h(); }
};

// |f|^2 carries only the envelope exp(-Re M x^2), so the window follows Re M.
double grid_norm(const GaussianAmplitude& f) {
  const double half = std::sqrt(80.0 / f.M(0, 0).real()) + 4.0;
  const Grid g{-half, half, 20001};
  double s = 0.0;
  for (int k = 0; k < g.points; ++k) s += std::norm(f(Vec::Constant(1, g.x(k))));
  return std::sqrt(s * g.h());
}

// (F f)(xi) = (2 pi)^{-1/2} int e^{-i xi x} f(x) dx.
cplx grid_fourier(const GaussianAmplitude& f, double xi, const Grid& g = {}) {
  cplx s = 0.0;
  for (int k = 0; k < g.points; ++k) s += std::polar(1.0, -xi * g.x(k)) * f(Vec::Constant(1, g.x(k)));
  return s * g.h() / std::sqrt(2 * kPi);
}

std::vector<SymplecticMatrix> rotation_path(double total, int samples) {
  std::vector<SymplecticMatrix> p;
  for (int k = 0; k < samples; ++k) {
    p.push_back(embed_unitary(CMat::Constant(1, 1, std::polar(1.0, total * k / (samples - 1)))));
  }
  return p;
}

}  // namespace

TEST_CASE("generator examples") {
  for (int n = 1; n <= 3; ++n) {
    const GaussianAmplitude j = apply_generator(JHat{}, GaussianAmplitude::ground_state(n));
    CHECK(close(j.c, std::pow(kEighth, -n)));
    CHECK(max_abs(CMat(j.M - CMat::Identity(n, n))) < 1e-14);
  }
  const GaussianAmplitude d = apply_generator(Dilate{-Mat::Identity(1, 1), 1}, GaussianAmplitude::ground_state(1));
  CHECK(close(d.c, kI));
  CHECK(max_abs(CMat(d.M - CMat::Identity(1, 1))) < 1e-14);

  Rng rng(1);
  const GaussianAmplitude s = random_state(2, rng, 2);
  const Mat b = random_symmetric(2, rng);
  const GaussianAmplitude back = apply_word({Chirp{-b}, Chirp{b}}, s);
  CHECK(close(back.c, s.c, 1e-15));
  CHECK(max_abs(CMat(back.M - s.M)) < 1e-14);
  CHECK(back.poly.max_abs_diff(s.poly) < 1e-14);
}

TEST_CASE("generator matrices act on Gaussians by the Moebius rule") {
  Rng rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 3;
    const GaussianAmplitude s = random_state(n, rng);
    const Generator g = random_generator(n, rng);
    const Mat m = generator_matrix(g, n);
    CHECK(symplectic_residual(m) < 1e-10);
    // Z = iM in the Siegel half space, Z' = (C + D Z)(A + B Z)^{-1}
    const CMat z = kI * s.M;
    const CMat a = m.topLeftCorner(n, n).cast<cplx>(), b = m.topRightCorner(n, n).cast<cplx>();
    const CMat c = m.bottomLeftCorner(n, n).cast<cplx>(), d = m.bottomRightCorner(n, n).cast<cplx>();
    const CMat expect = -kI * ((c + d * z) * (a + b * z).inverse());
    CHECK(max_abs(CMat(apply_generator(g, s).M - expect)) < 1e-9);
  }
}

TEST_CASE("the Fourier generator against a quadrature oracle") {
  Rng rng(3);
  for (int degree = 0; degree <= 3; ++degree) {
    const GaussianAmplitude f = random_state(1, rng, degree);
    const GaussianAmplitude j = apply_generator(JHat{}, f);
    for (double xi : {-1.3, -0.2, 0.0, 0.7, 2.1}) {
      CHECK(close(j(Vec::Constant(1, xi)), std::pow(kEighth, -1) * grid_fourier(f, xi), 1e-9));
    }
  }
}

TEST_CASE("quadratic Fourier data from symplectic matrices") {
  Mat j = standard_J(1);
  const QuadraticFourier qf = quad_fourier_from_symplectic(SymplecticMatrix(j), 1);
  CHECK(std::abs(qf.P(0, 0)) < 1e-15);
  CHECK(std::abs(qf.Q(0, 0)) < 1e-15);
  CHECK(std::abs(qf.L(0, 0) + 1.0) < 1e-15);
  CHECK(max_abs(Mat(symplectic_from_quad_fourier(qf).matrix() - j)) < 1e-14);

  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 3;
    const CMat u = random_unitary(n, rng);
    const Mat a = u.real(), b = u.imag();
    const QuadraticFourier w = quad_fourier_from_symplectic(embed_unitary(u), 0);
    const Mat bi = b.inverse();
    CHECK(max_abs(Mat(w.P - a * bi)) < 1e-8);
    CHECK(max_abs(Mat(w.L + bi.transpose())) < 1e-8);
    CHECK(max_abs(Mat(w.Q - bi * a)) < 1e-8);
    CHECK(max_abs(Mat(symplectic_from_quad_fourier(w).matrix() - embed_unitary(u).matrix())) < 1e-8);
    CHECK(max_abs(Mat(word_matrix(w.word(), n) - embed_unitary(u).matrix())) < 1e-8);
  }

  Mat shear = Mat::Identity(2, 2);
  shear(1, 0) = 0.7;
  try {
    quad_fourier_from_symplectic(SymplecticMatrix(shear), 0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FreeGeneratingFunction);
  }
}

TEST_CASE("metalinear pair acts on the ground state by a fourth root of unity") {
  Rng rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 1 + trial % 3;
    const Mat a = embed_unitary(random_unitary(n, rng)).matrix().topLeftCorner(n, n);
    Mat o = orthonormalize_columns(a);
    if (trial % 2) o.col(0) *= -1.0;
    const int m = branch_parity(o) + 2 * (trial % 4 >= 2);
    const MetaplecticElement e{{QuadraticFourier{Mat::Zero(n, n), o, Mat::Zero(n, n), m},
                                QuadraticFourier{Mat::Zero(n, n), -Mat::Identity(n, n), Mat::Zero(n, n), n % 4}}};
    const GaussianAmplitude out = e.apply(GaussianAmplitude::ground_state(n));
    CHECK(close(out.c, ipow(m)));
    CHECK(max_abs(CMat(out.M - CMat::Identity(n, n))) < 1e-12);
    CHECK(e.mu_hat() == mod(2 * m, 8));
  }
}

TEST_CASE("applying (0,I,0) twice matches the composed matrix and the quadrature oracle") {
  const QuadraticFourier w{Mat::Zero(1, 1), Mat::Identity(1, 1), Mat::Zero(1, 1), 0};
  const MetaplecticElement twice{{w, w}};
  CHECK(max_abs(Mat(twice.matrix().matrix() + Mat::Identity(2, 2))) < 1e-14);
  Rng rng(6);
  const GaussianAmplitude f = random_state(1, rng, 1);
  const GaussianAmplitude once = apply_quad_fourier(w, f);
  const GaussianAmplitude g = twice.apply(f);
  // twice the Fourier transform with the i^{-1/2} factor each time: f(-x) times i^{-1}
  for (double x : {-1.1, 0.3, 1.7}) {
    CHECK(close(once(Vec::Constant(1, x)), std::pow(kEighth, -1) * grid_fourier(f, x), 1e-9));
    CHECK(close(g(Vec::Constant(1, x)), -kI * f(Vec::Constant(1, -x)), 1e-12));
  }
}

TEST_CASE("norm preservation") {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 3;
    const GaussianAmplitude f = random_state(n, rng, trial % 4);
    const Word w = random_word(n, rng, 6);
    GaussianAmplitude g = apply_word(w, f);
    const double before = l2_norm(f), after = l2_norm(g);
    CHECK(std::abs(after - before) <= 1e-9 * before);
    const GaussianAmplitude q = apply_quad_fourier(random_quad_fourier(n, rng), f);
    CHECK(std::abs(l2_norm(q) - before) <= 1e-9 * before);
    if (n == 1) {
      CHECK(std::abs(grid_norm(f) - before) <= 1e-9 * before);
      CHECK(std::abs(grid_norm(g) - after) <= 1e-9 * after);
    }
  }
}

TEST_CASE("state domain errors") {
  GaussianAmplitude s = GaussianAmplitude::ground_state(1);
  s.M(0, 0) = cplx(-1.0, 0.0);
  CHECK_THROWS_AS(s.validate(), Error);
  CHECK_THROWS_AS(apply_generator(JHat{}, s), Error);
}

TEST_CASE("adjoint words") {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 2;
    const Word w = random_word(n, rng, 4);
    const GaussianAmplitude f = random_state(n, rng, 1), g = random_state(n, rng, 1);
    const cplx lhs = inner_product(g, apply_word(w, f));
    const cplx rhs = inner_product(apply_word(adjoint_word(w, n), g), f);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("dual action on the Dirac functional") {
  Rng rng(9);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 2;
    const Word w = random_word(n, rng, 3);
    DistributionState d;
    try {
      d = apply_word_dual(w, DistributionState::delta(n));
    } catch (const Error& e) {
      // a Fourier transform of a chirped constant leaves the DELTA/CONST calculus
      CHECK(e.kind() == ErrorKind::Case);
      continue;
    }
    const GaussianAmplitude f = random_state(n, rng, trial % 3);
    const cplx expect = apply_word(adjoint_word(w, n), f)(Vec::Zero(n));
    CHECK(std::abs(d.pair(f) - expect) <= 1e-9 * std::max(1.0, std::abs(expect)));
    ++checked;
  }
  CHECK(checked >= 30);
  const DistributionState id = apply_word_dual({}, DistributionState::delta(2));
  CHECK(id.kind == DistributionState::Kind::Delta);
  CHECK(close(id.c, 1.0));
}

TEST_CASE("apply_to_delta") {
  const QuadraticFourier w{Mat::Zero(1, 1), Mat::Identity(1, 1), Mat::Zero(1, 1), 0};
  const DistributionState d = apply_to_delta(w);
  CHECK(d.kind == DistributionState::Kind::Const);
  CHECK(close(d.c, kEighth / std::sqrt(2 * kPi), 1e-15));
  CHECK(std::abs(transverse_constant(w) - 1 / std::sqrt(2 * kPi)) < 1e-15);

  Rng rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 3;
    const QuadraticFourier qf = random_quad_fourier(n, rng);
    const DistributionState a = apply_to_delta(qf);
    const DistributionState b = apply_word_dual(qf.word(), DistributionState::delta(n));
    CHECK(a.kind == DistributionState::Kind::Const);
    CHECK(close(a.c, b.c, 1e-9));
    CHECK(max_abs(Mat(a.chirp - b.chirp)) < 1e-9);
    const cplx expect = std::pow(2 * kPi, -n / 2.0) * std::pow(kEighth, n) * ipow(-qf.m) * std::sqrt(std::abs(qf.L.determinant()));
    CHECK(close(a.c, expect, 1e-9));
  }
}

TEST_CASE("mu_hat") {
  CHECK(mu_hat(QuadraticFourier{Mat::Zero(1, 1), Mat::Identity(1, 1), Mat::Zero(1, 1), 0}) == 7);
  CHECK(mu_hat(QuadraticFourier{Mat::Zero(2, 2), Mat::Identity(2, 2), Mat::Zero(2, 2), 1}) == 0);

  // the Fourier generator alone is (0, I, 0) with m = 0
  const QuadraticFourier j{Mat::Zero(1, 1), Mat::Identity(1, 1), Mat::Zero(1, 1), 0};
  CHECK(max_abs(Mat(symplectic_from_quad_fourier(j).matrix() - generator_matrix(JHat{}, 1))) < 1e-15);
  CHECK(close(apply_quad_fourier(j, GaussianAmplitude::ground_state(1)).c,
              apply_generator(JHat{}, GaussianAmplitude::ground_state(1)).c));
  // J^2 = -I through the metalinear pair agrees with the composition cocycle
  const GaussianAmplitude jj = apply_word({JHat{}, JHat{}}, GaussianAmplitude::ground_state(1));
  const MetaplecticElement minus = metaplectic_element(SymplecticMatrix(Mat(-Mat::Identity(2, 2))), jj.c);
  CHECK(minus.mu_hat() == mu_hat_composed(j, j));
}

TEST_CASE("mu_hat_composed") {
  Rng rng(11);
  const QuadraticFourier a = random_quad_fourier(2, rng);
  QuadraticFourier b = random_quad_fourier(2, rng);
  b.P = -a.Q;
  CHECK(mu_hat_composed(a, b) == mod(mu_hat(a) + mu_hat(b), 8));

  for (int n = 1; n <= 3; ++n) {
    const QuadraticFourier w{Mat::Zero(n, n), Mat::Identity(n, n), Mat::Zero(n, n), 2};
    const QuadraticFourier wp{Mat::Zero(n, n), -Mat::Identity(n, n), Mat::Zero(n, n), n % 4};
    CHECK(mu_hat_composed(w, wp) == mod(2 * 2, 8));
  }
  CHECK_THROWS_AS(mu_hat_composed(random_quad_fourier(1, rng), random_quad_fourier(2, rng)), Error);
}

TEST_CASE("cocycle well-definedness") {
  const SuiteResult r = cocycle_suite(50, 5, Exec::Serial);
  CHECK(r.ok());
}

TEST_CASE("lift_frame_path examples") {
  Rng rng(12);
  const GaussianAmplitude s = random_state(2, rng, 2);
  const std::vector<SymplecticMatrix> still(3, SymplecticMatrix::identity(2));
  const GaussianAmplitude same = lift_frame_path(still, s);
  CHECK(close(same.c, s.c, 1e-12));
  CHECK(max_abs(CMat(same.M - s.M)) < 1e-12);
  CHECK(same.poly.max_abs_diff(s.poly) < 1e-12);

  const GaussianAmplitude u = lift_frame_path(rotation_path(2 * kPi, 64), GaussianAmplitude::ground_state(1));
  CHECK(close(u.c, -1.0, 1e-9));
  const GaussianAmplitude uu = lift_frame_path(rotation_path(4 * kPi, 128), GaussianAmplitude::ground_state(1));
  CHECK(close(uu.c, 1.0, 1e-9));
  // oscillator oracle: rotation by t acts on level l as e^{-i t H_0} = e^{i t (l + 1/2)}
  for (int l = 0; l <= 3; ++l) {
    const GaussianAmplitude h = hermite_state({l});
    const GaussianAmplitude q = lift_frame_path(rotation_path(kPi / 3, 16), h);
    for (double x : {-0.8, 0.37, 1.4}) {
      const Vec v = Vec::Constant(1, x);
      CHECK(close(q(v), std::polar(1.0, kPi / 3 * (l + 0.5)) * h(v), 1e-12));
    }
  }

  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + trial % 2;
    Mat o = orthonormalize_columns(embed_unitary(random_unitary(n, rng)).matrix().topLeftCorner(n, n));
    Vec k(n);
    for (int i = 0; i < n; ++i) k(i) = static_cast<double>(trial % 3 + i);
    std::vector<SymplecticMatrix> p;
    for (int s2 = 0; s2 <= 80; ++s2) {
      CVec phases(n);
      for (int i = 0; i < n; ++i) phases(i) = std::polar(1.0, kPi * k(i) * s2 / 80.0);
      p.push_back(embed_unitary(CMat(o.cast<cplx>() * phases.asDiagonal() * o.transpose().cast<cplx>())));
    }
    const GaussianAmplitude end = lift_frame_path(p, GaussianAmplitude::ground_state(n));
    const double quarter = std::arg(end.c) / (kPi / 2);
    CHECK(std::abs(std::abs(end.c) - 1.0) < 1e-9);
    CHECK(std::abs(quarter - std::round(quarter)) < 1e-6);
  }
}

TEST_CASE("branch coherence under sampling doubling") {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 2;
    Rng a(100 + trial), b(100 + trial);
    const auto coarse = random_unitary_path(n, a, 200);
    const auto fine = random_unitary_path(n, b, 399);
    const MetaplecticLift lc = lift_unitary_path(coarse);
    const MetaplecticLift lf = lift_unitary_path(fine);
    CHECK(std::abs(lc.u0_factor - lf.u0_factor) < 1e-6);
    const GaussianAmplitude s = random_state(n, rng, 1);
    const GaussianAmplitude x = lift_frame_path(coarse, s), y = lift_frame_path(fine, s);
    CHECK(std::abs(x.c - y.c) < 1e-6 * std::abs(s.c));
  }
}

TEST_CASE("factorization consistency with the cover index") {
  const SuiteResult r = mod8_suite(20, 3, Exec::Serial);
  CHECK(r.ok());
}

TEST_CASE("hermite states and the harmonic oscillator") {
  const GaussianAmplitude h0 = hermite_state({0});
  CHECK(close(h0.c, std::pow(kPi, -0.25), 1e-15));
  CHECK(h0.poly.degree() == 0);

  const GaussianAmplitude h1 = hermite_state({1});
  CHECK(h1.poly.degree() == 1);
  CHECK(h1.poly.parity() == -1);
  CHECK(std::abs(h1(Vec::Zero(1))) < 1e-15);
  CHECK(close(h1.poly.coefficient({1}) * h1.c, 2.0 / std::sqrt(2 * std::sqrt(kPi)), 1e-14));

  for (int n = 1; n <= 2; ++n) {
    for (int l = 0; l <= 4; ++l) {
      const auto basis = level_basis(l, n);
      long long expect = 1;
      for (int k = 1; k < n; ++k) expect = expect * (l + k) / k;
      CHECK(static_cast<long long>(basis.size()) == expect);
      for (size_t i = 0; i < basis.size(); ++i) {
        const GaussianAmplitude& s = basis[i];
        const GaussianAmplitude hs = harmonic_oscillator(s);
        CHECK(hs.poly.max_abs_diff(s.poly * cplx(-(l + n / 2.0))) < 1e-9);
        CHECK(std::abs(l2_norm(s) - 1.0) < 1e-12);
        for (size_t j = 0; j < i; ++j) CHECK(std::abs(inner_product(basis[j], s)) < 1e-12);
      }
    }
  }
}

TEST_CASE("unitary-image words preserve harmonic levels") {
  Rng rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + trial % 2;
    const auto path = random_unitary_path(n, rng, 300);
    for (int l = 0; l <= 2; ++l) {
      for (const auto& s : level_basis(l, n)) {
        const GaussianAmplitude out = lift_frame_path(path, s);
        CHECK(max_abs(CMat(out.M - CMat::Identity(n, n))) < 1e-8);
        CHECK(out.poly.pruned(1e-10).degree() == l);
        CHECK(out.poly.pruned(1e-10).parity() == (l % 2 ? -1 : 1));
        CHECK(harmonic_oscillator(out).poly.max_abs_diff(out.poly * cplx(-(l + n / 2.0))) < 1e-8);
      }
    }
  }
}

TEST_CASE("gaussian moments") {
  CMat cov = CMat::Identity(2, 2);
  cov(0, 1) = cov(1, 0) = 0.3;
  CHECK(close(gaussian_moment({2, 0}, cov), 1.0, 1e-15));
  CHECK(close(gaussian_moment({1, 1}, cov), 0.3, 1e-15));
  CHECK(close(gaussian_moment({4, 0}, cov), 3.0, 1e-15));
  CHECK(close(gaussian_moment({2, 2}, cov), 1.0 + 2 * 0.09, 1e-15));
  CHECK(close(gaussian_moment({1, 0}, cov), 0.0, 1e-15));
}
