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

// Metaplectic calculus on polynomial-Gaussian amplitudes
//   f(x) = c p(x) exp(-<Mx, x>/2),   Re M > 0,
// and on the two distributions DELTA (Dirac at 0) and CONST (a constant
// times a chirp exp(i<Kx, x>/2)).
//
// An element covering S = [[A,B],[C,D]] acts on Gaussians by
//   M -> -i (C + D iM)(A + B iM)^{-1},   c -> c det(A + B iM)^{-1/2}.

#pragma once

#include "maslov/polynomial.hpp"
#include "maslov/symplectic.hpp"

#include <variant>
#include <vector>

namespace maslov {

struct GaussianAmplitude {
  cplx c{1.0, 0.0};
  CMat M;
  Polynomial poly;

  static GaussianAmplitude ground_state(int n);
  int n() const { return static_cast<int>(M.rows()); }
  /// Throws StateDomain unless M is symmetric with positive-definite real part.
  void validate(const Tolerances& tol = {}) const;
  cplx operator()(const Vec& x) const;
};

/// <f, g> = integral of conj(f) g.
cplx inner_product(const GaussianAmplitude& f, const GaussianAmplitude& g);
double l2_norm(const GaussianAmplitude& f);
/// Integral of f over R^n.
cplx integral(const GaussianAmplitude& f);

struct Dilate {
  Mat A;
  int m = 0;
};
struct Chirp {
  Mat B;
};
struct JHat {};
using Generator = std::variant<Dilate, Chirp, JHat>;
/// Composition order: word[0] is applied last.
using Word = std::vector<Generator>;

/// Dilate(A)  ~ [[A^{-T},0],[0,A]],  Chirp(B) ~ [[I,0],[-B,I]],  JHat ~ [[0,I],[-I,0]].
Mat generator_matrix(const Generator& g, int n);
Mat word_matrix(const Word& w, int n);

GaussianAmplitude apply_generator(const Generator& g, const GaussianAmplitude& s, const Tolerances& tol = {});
GaussianAmplitude apply_word(const Word& w, const GaussianAmplitude& s, const Tolerances& tol = {});

/// Adjoint of each generator (used to check the dual action).
Word adjoint_word(const Word& w, int n);

struct DistributionState {
  enum class Kind { Delta, Const };
  Kind kind = Kind::Delta;
  cplx c{1.0, 0.0};
  Mat chirp;  ///< K for CONST; zero otherwise

  static DistributionState delta(int n, cplx c = 1.0);
  static DistributionState constant(int n, cplx c = 1.0);
  int n() const { return static_cast<int>(chirp.rows()); }
  /// Bilinear pairing T(f).
  cplx pair(const GaussianAmplitude& f) const;
};

/// The action extended to distributions, T -> T o kappa(g)^*.
DistributionState apply_generator_dual(const Generator& g, const DistributionState& t, const Tolerances& tol = {});
DistributionState apply_word_dual(const Word& w, const DistributionState& t, const Tolerances& tol = {});

/// Generating form <Px,x>/2 - <Lx,x'> + <Qx',x'>/2 and branch m.
struct QuadraticFourier {
  Mat P;
  Mat L;
  Mat Q;
  int m = 0;

  int n() const { return static_cast<int>(L.rows()); }
  void validate(const Tolerances& tol = {}) const;
  /// Chirp(P) Dilate(L, m) JHat Chirp(Q).
  Word word() const;
};

/// P = -D B^{-1}, L = B^{-T}, Q = -B^{-1} A.
QuadraticFourier quad_fourier_from_symplectic(const SymplecticMatrix& s, int m, const Tolerances& tol = {});
/// [[-L^{-T}Q, L^{-T}], [P L^{-T} Q - L, -P L^{-T}]].
SymplecticMatrix symplectic_from_quad_fourier(const QuadraticFourier& qf);
GaussianAmplitude apply_quad_fourier(const QuadraticFourier& qf, const GaussianAmplitude& s, const Tolerances& tol = {});

/// Branch parity forced by L: m is even iff det L > 0.
int branch_parity(const Mat& L);

/// (2m - n) mod 8.
int mu_hat(const QuadraticFourier& qf);

/// Sign in front of the signature term of the composition cocycle.
inline constexpr int kCocycleSign = -1;

/// mu_hat of S_{W1,m1} S_{W2,m2}: mu_hat(1) + mu_hat(2) - sign(P2 + Q1) mod 8.
int mu_hat_composed(const QuadraticFourier& left, const QuadraticFourier& right, const Tolerances& tol = {});

/// Product of at most two quadratic Fourier transforms, factors[0] leftmost.
struct MetaplecticElement {
  std::vector<QuadraticFourier> factors;

  int n() const { return factors.front().n(); }
  SymplecticMatrix matrix() const;
  Word word() const;
  GaussianAmplitude apply(const GaussianAmplitude& s, const Tolerances& tol = {}) const;
  DistributionState apply_dual(const DistributionState& t, const Tolerances& tol = {}) const;
  int mu_hat(const Tolerances& tol = {}) const;
};

/// Fixes factors[0].m so that the element maps u_0 to target_c times a
/// Gaussian. Throws Conditioning if no branch matches.
MetaplecticElement match_branch(std::vector<QuadraticFourier> factors, cplx target_c, const Tolerances& tol = {});

enum class EndpointForm { FreeGenerating, Orthogonal, TwoFactor };
const char* to_string(EndpointForm f);

/// Element over S whose action on u_0 has prefactor target_c. Picks a single
/// factor when B is well conditioned, the metalinear pair (0,A,0)(0,-I,0)
/// when S = diag(A^{-T}, A), and otherwise splits off embed(e^{i psi} I).
MetaplecticElement metaplectic_element(const SymplecticMatrix& s, cplx target_c, EndpointForm* form = nullptr,
                                       const Tolerances& tol = {});

struct MetaplecticLift {
  MetaplecticElement element;
  EndpointForm form = EndpointForm::FreeGenerating;
  cplx u0_factor{1.0, 0.0};  ///< kappa(S(1)) u_0 = u0_factor u_0
  std::vector<double> t;
  std::vector<double> theta;  ///< unwrapped arg det of the Souriau matrix of S(t) L_0
  int refinements = 0;
  int max_depth = 0;

  cplx phase_at(size_t k) const { return std::polar(1.0, theta[k] / 4.0); }
};

/// Continuous lift of a path in the unitary image starting at I. Sample
/// parameters default to a uniform grid on [0, 1].
MetaplecticLift lift_unitary_path(const std::vector<SymplecticMatrix>& path, const Tolerances& tol = {},
                                  int refine_max = 24, std::vector<double> params = {});

/// kappa of the lifted endpoint applied to s0.
GaussianAmplitude lift_frame_path(const std::vector<SymplecticMatrix>& path, const GaussianAmplitude& s0,
                                  const Tolerances& tol = {});

/// Dual action of S_{W,m} on DELTA: CONST with prefactor
/// (2 pi)^{-n/2} i^{n/2 - m} |det L|^{1/2} and chirp P.
DistributionState apply_to_delta(const QuadraticFourier& qf, const Tolerances& tol = {});
DistributionState apply_word_to_delta(const MetaplecticElement& e, const Tolerances& tol = {});
/// (2 pi)^{-n/2} |det L|^{1/2}.
double transverse_constant(const QuadraticFourier& qf);

/// Hermite function H_alpha(x) exp(-|x|^2/2), L2-normalized.
GaussianAmplitude hermite_state(const Polynomial::Exponent& alpha);
std::vector<Polynomial::Exponent> level_indices(int l, int n);
std::vector<GaussianAmplitude> level_basis(int l, int n);

/// (Laplacian - |x|^2) / 2, applied symbolically. Level l has eigenvalue -(l + n/2).
GaussianAmplitude harmonic_oscillator(const GaussianAmplitude& f);

}  // namespace maslov
