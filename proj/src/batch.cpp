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

#include "maslov/batch.hpp"

#include "maslov/error.hpp"
#include "maslov/index.hpp"


#include <functional>
#include <optional>
#include <sstream>

namespace maslov {

namespace {

using Trial = std::function<std::optional<std::string>(int, Rng&)>;

SuiteResult run_suite(std::string name, int trials, std::uint64_t seed, Exec exec, const Trial& trial) {
  std::vector<std::optional<std::string>> outcome(trials);
  std::vector<char> threw(trials, 0);
  auto one = [&](int i) {
    Rng rng(seed + static_cast<std::uint64_t>(i));
    try {
      outcome[i] = trial(i, rng);
    } catch (const std::exception& e) {
      outcome[i] = std::string("exception: ") + e.what();
      threw[i] = 1;
    }
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < trials; ++i) one(i);
  } else {
    for (int i = 0; i < trials; ++i) one(i);
  }
  SuiteResult r;
  r.name = std::move(name);
  r.trials = trials;
  for (int i = 0; i < trials; ++i) {
    if (!outcome[i]) {
      ++r.passed;
      continue;
    }
    r.errors += threw[i];
    r.failures.push_back("trial " + std::to_string(i) + ": " + *outcome[i]);
  }
  return r;
}

std::string join(std::initializer_list<int> v) {
  std::ostringstream os;
  bool first = true;
  for (int x : v) {
    os << (first ? "" : ", ") << x;
    first = false;
  }
  return os.str();
}

CoverPoint random_cover_point(int n, Rng& rng, LagrangianFrame* frame = nullptr) {
  std::uniform_int_distribution<int> sheet(-2, 2);
  const LagrangianFrame l = random_lagrangian(n, rng);
  if (frame) *frame = l;
  return CoverPoint::over(l, sheet(rng));
}

}  // namespace

std::vector<SymplecticMatrix> random_unitary_path(int n, Rng& rng, int samples, double scale) {
  const CMat h0 = random_hermitian(n, rng, scale);
  const CMat h1 = random_hermitian(n, rng, scale);
  const CMat h2 = random_hermitian(n, rng, scale);
  std::vector<SymplecticMatrix> path;
  for (int k = 0; k < samples; ++k) {
    const double t = static_cast<double>(k) / (samples - 1);
    const CMat h = t * h0 + std::sin(kPi * t) * h1 + t * t * h2;
    path.push_back(embed_unitary(UnitaryMatrix::trusted(expi_hermitian(h, 1.0))));
  }
  return path;
}

QuadraticFourier random_quad_fourier(int n, Rng& rng) {
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  Mat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = u(rng);
  Vec s(n);
  for (int i = 0; i < n; ++i) s(i) = std::exp(u(rng));
  const Mat q1 = orthonormalize_columns(Mat(Mat::Identity(n, n) + g));
  const Mat q2 = orthonormalize_columns(Mat(Mat::Identity(n, n) - g.transpose()));
  Mat l = q1 * s.asDiagonal() * q2;
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) l.row(0) *= -1.0;
  QuadraticFourier qf{random_symmetric(n, rng), l, random_symmetric(n, rng), 0};
  qf.m = branch_parity(l) + 2 * std::uniform_int_distribution<int>(0, 1)(rng);
  return qf;
}

SuiteResult coboundary_suite(int n, int trials, std::uint64_t seed, Exec exec, const Tolerances& tol) {
  return run_suite("coboundary n=" + std::to_string(n), trials, seed, exec,
                   [n, &tol](int, Rng& rng) -> std::optional<std::string> {
                     LagrangianFrame lx = standard_lagrangian(n), ly = lx, lz = lx;
                     const CoverPoint x = random_cover_point(n, rng, &lx);
                     const CoverPoint y = random_cover_point(n, rng, &ly);
                     const CoverPoint z = random_cover_point(n, rng, &lz);
                     const int lhs = leray_index(x, y, tol) - leray_index(x, z, tol) + leray_index(y, z, tol);
                     const int tau = kashiwara_signature(lx, ly, lz, tol);
                     if (lhs == tau) return std::nullopt;
                     return "cocycle " + std::to_string(lhs) + " != tau " + std::to_string(tau);
                   });
}

SuiteResult deck_invariance_suite(int n, int trials, std::uint64_t seed, Exec exec, const Tolerances& tol) {
  return run_suite("deck/invariance n=" + std::to_string(n), trials, seed, exec,
                   [n, &tol](int, Rng& rng) -> std::optional<std::string> {
                     const CoverPoint x = random_cover_point(n, rng);
                     const CoverPoint y = random_cover_point(n, rng);
                     const int mu = leray_index(x, y, tol);
                     if (leray_index(y, x, tol) != -mu) return std::string("antisymmetry fails");
                     for (int r = -2; r <= 2; ++r) {
                       for (int rp = -2; rp <= 2; ++rp) {
                         const int shifted = leray_index(x.deck(r), y.deck(rp), tol);
                         if (shifted != mu + 2 * (r - rp)) {
                           return "deck shift (" + join({r, rp}) + ") gives " + std::to_string(shifted);
                         }
                       }
                     }
                     UnitaryLift g = UnitaryLift::principal(random_unitary(n, rng));
                     g.phi += 2.0 * kPi * std::uniform_int_distribution<int>(-2, 2)(rng);
                     const int moved = leray_index(g.act(x), g.act(y), tol);
                     if (moved != mu) return "invariance: " + std::to_string(moved) + " != " + std::to_string(mu);
                     return std::nullopt;
                   });
}

SuiteResult mod8_suite(int trials, std::uint64_t seed, Exec exec, const Tolerances& tol, int samples) {
  return run_suite("mod8 identity", trials, seed, exec,
                   [&tol, samples](int i, Rng& rng) -> std::optional<std::string> {
                     const int n = 1 + i % 2;
                     const auto path = random_unitary_path(n, rng, samples);
                     const CoverIndex cover = mu_hat_on_cover(path, standard_lagrangian(n), tol);
                     const int clm_route = mod(2 * cover.clm.index + n - cover.clm.endpoint_intersection, 8);
                     const MetaplecticLift lift = lift_unitary_path(path, tol);
                     const int gauss_route = lift.element.mu_hat(tol);
                     if (cover.mod8 == clm_route && clm_route == gauss_route) return std::nullopt;
                     return "cover " + std::to_string(cover.mod8) + ", clm " + std::to_string(clm_route) + ", mu_hat " +
                            std::to_string(gauss_route) + " (" + to_string(lift.form) + ")";
                   });
}

SuiteResult cocycle_suite(int trials, std::uint64_t seed, Exec exec, const Tolerances& tol) {
  return run_suite("cocycle", trials, seed, exec, [&tol](int i, Rng& rng) -> std::optional<std::string> {
    const int n = 1 + i % 3;
    const QuadraticFourier a = random_quad_fourier(n, rng);
    const QuadraticFourier b = random_quad_fourier(n, rng);
    const MetaplecticElement first{{a, b}};
    const SymplecticMatrix s = first.matrix();
    const GaussianAmplitude ref = first.apply(GaussianAmplitude::ground_state(n), tol);

    QuadraticFourier right = random_quad_fourier(n, rng);
    const QuadraticFourier left =
        quad_fourier_from_symplectic(s * symplectic_from_quad_fourier(right).inverse(), 0, tol);
    const MetaplecticElement second = match_branch({left, right}, ref.c, tol);
    const GaussianAmplitude img = second.apply(GaussianAmplitude::ground_state(n), tol);
    if (max_abs(CMat(img.M - ref.M)) > 1e-6 * std::max(1.0, max_abs(ref.M))) {
      return std::string("factorizations act differently on u_0");
    }
    const int mu1 = first.mu_hat(tol);
    const int mu2 = second.mu_hat(tol);
    if (mu1 != mu2) return "mu_hat " + std::to_string(mu1) + " vs " + std::to_string(mu2);
    if (singular_values(s.B()).back() >= 1e-2) {
      const MetaplecticElement single = match_branch({quad_fourier_from_symplectic(s, 0, tol)}, ref.c, tol);
      if (single.mu_hat(tol) != mu1) return "single factor mu_hat " + std::to_string(single.mu_hat(tol)) + " vs " + std::to_string(mu1);
    }
    return std::nullopt;
  });
}

}  // namespace maslov
