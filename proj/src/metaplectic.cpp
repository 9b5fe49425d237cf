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

#include "maslov/metaplectic.hpp"

#include "maslov/error.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numeric>
#include <sstream>

namespace maslov {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;


/// i^{k/2} with i^{1/2} = e^{i pi/4}.
cplx i_half_pow(int k) { return std::polar(1.0, k * kPi / 4.0); }

double min_singular_value(const Mat& m) { return singular_values(m).back(); }

/// Integral of x^e exp(-<Kx,x>/2) over R^n.
cplx gaussian_monomial_integral(const Polynomial::Exponent& e, const CMat& k) {
  const int n = static_cast<int>(k.rows());
  const CMat cov = k.inverse();
  return std::pow(2.0 * kPi, n / 2.0) * det_inv_sqrt_canonical(k) * gaussian_moment(e, cov);
}

/// Polynomial part of the Fourier transform of p(x) exp(-<Mx,x>/2), given
/// N = M^{-1}: multiplication by x_j becomes q -> i (d_j q - (N xi)_j q).
Polynomial fourier_polynomial(const Polynomial& p, const CMat& nmat) {
  const int n = p.n();
  std::vector<Polynomial> nx;
  for (int j = 0; j < n; ++j) {
    Polynomial r(n);
    for (int k = 0; k < n; ++k) r += Polynomial::variable(n, k) * nmat(j, k);
    nx.push_back(std::move(r));
  }
  Polynomial out(n);
  for (const auto& [e, a] : p.terms()) {
    Polynomial q = Polynomial::constant(n, a);
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < e[j]; ++r) q = (q.derivative(j) - nx[j] * q) * kI;
    out += q;
  }
  return out;
}

void require_n(const Mat& m, int n, const char* what) {
  if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::Dimension, std::string(what) + " has the wrong size");
}

}  // namespace

// ---------------------------------------------------------------------------
// States

GaussianAmplitude GaussianAmplitude::ground_state(int n) {
  return {cplx(1.0), CMat::Identity(n, n), Polynomial::constant(n, 1.0)};
}

void GaussianAmplitude::validate(const Tolerances& tol) const {
  if (M.rows() != M.cols() || M.rows() == 0 || poly.n() != n()) throw Error(ErrorKind::Dimension, "inconsistent state dimensions");
  const double asym = max_abs(CMat(M - M.transpose()));
  if (asym > tol.residual_tol * std::max(1.0, max_abs(M))) {
    throw Error(ErrorKind::StateDomain, "Gaussian matrix is not symmetric (residual " + fmt(asym) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(Mat(0.5 * (M.real() + M.real().transpose())), Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < tol.rank_tol) {
    throw Error(ErrorKind::StateDomain, "real part of the Gaussian matrix is not positive definite");
  }
}

cplx GaussianAmplitude::operator()(const Vec& x) const {
  const CVec xc = x.cast<cplx>();
  const cplx q = (xc.transpose() * M * xc)(0, 0);
  return c * poly(x) * std::exp(-0.5 * q);
}

cplx inner_product(const GaussianAmplitude& f, const GaussianAmplitude& g) {
  if (f.n() != g.n()) throw Error(ErrorKind::Dimension, "states of different dimension");
  const CMat k = f.M.conjugate() + g.M;
  const Polynomial prod = f.poly.conjugate() * g.poly;
  cplx acc = 0.0;
  for (const auto& [e, a] : prod.terms()) acc += a * gaussian_monomial_integral(e, k);
  return std::conj(f.c) * g.c * acc;
}

double l2_norm(const GaussianAmplitude& f) { return std::sqrt(std::max(0.0, inner_product(f, f).real())); }

cplx integral(const GaussianAmplitude& f) {
  cplx acc = 0.0;
  for (const auto& [e, a] : f.poly.terms()) acc += a * gaussian_monomial_integral(e, f.M);
  return f.c * acc;
}

// ---------------------------------------------------------------------------
// Generators

Mat generator_matrix(const Generator& g, int n) {
  const Mat id = Mat::Identity(n, n);
  const Mat zero = Mat::Zero(n, n);
  Mat s(2 * n, 2 * n);
  std::visit(overloaded{
                 [&](const Dilate& d) { s << d.A.inverse().transpose(), zero, zero, d.A; },
                 [&](const Chirp& c) { s << id, zero, -c.B, id; },
                 [&](const JHat&) { s << zero, id, -id, zero; },
             },
             g);
  return s;
}

Mat word_matrix(const Word& w, int n) {
  Mat s = Mat::Identity(2 * n, 2 * n);
  for (const Generator& g : w) s = s * generator_matrix(g, n);
  return s;
}

GaussianAmplitude apply_generator(const Generator& g, const GaussianAmplitude& s, const Tolerances& tol) {
  const int n = s.n();
  GaussianAmplitude out = s;
  std::visit(overloaded{
                 [&](const Dilate& d) {
                   require_n(d.A, n, "dilation matrix");
                   const double det = d.A.determinant();
                   if (std::abs(det) < tol.rank_tol) throw Error(ErrorKind::InvariantViolation, "dilation matrix is singular");
                   out.c = s.c * std::sqrt(std::abs(det)) * ipow(d.m);
                   const CMat a = d.A.cast<cplx>();
                   out.M = a * s.M * a.transpose();
                   out.poly = s.poly.substitute(a.transpose());
                 },
                 [&](const Chirp& c) {
                   require_n(c.B, n, "chirp matrix");
                   if (max_abs(Mat(c.B - c.B.transpose())) > tol.residual_tol * std::max(1.0, max_abs(c.B))) {
                     throw Error(ErrorKind::InvariantViolation, "chirp matrix is not symmetric");
                   }
                   out.M = s.M + kI * c.B.cast<cplx>();
                 },
                 [&](const JHat&) {
                   const CMat nmat = s.M.inverse();
                   out.c = s.c * det_inv_sqrt_canonical(s.M) * i_half_pow(-n);
                   out.M = nmat;
                   out.poly = fourier_polynomial(s.poly, nmat);
                 },
             },
             g);
  out.M = 0.5 * (out.M + out.M.transpose());
  out.validate(tol);
  return out;
}

GaussianAmplitude apply_word(const Word& w, const GaussianAmplitude& s, const Tolerances& tol) {
  GaussianAmplitude out = s;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = apply_generator(*it, out, tol);
  return out;
}

Word adjoint_word(const Word& w, int n) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    std::visit(overloaded{
                   [&](const Dilate& d) { out.push_back(Dilate{d.A.inverse(), -d.m}); },
                   [&](const Chirp& c) { out.push_back(Chirp{-c.B}); },
                   [&](const JHat&) {
                     out.push_back(Dilate{-Mat::Identity(n, n), n});
                     out.push_back(JHat{});
                   },
               },
               *it);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Distributions

DistributionState DistributionState::delta(int n, cplx c) { return {Kind::Delta, c, Mat::Zero(n, n)}; }
DistributionState DistributionState::constant(int n, cplx c) { return {Kind::Const, c, Mat::Zero(n, n)}; }

cplx DistributionState::pair(const GaussianAmplitude& f) const {
  if (kind == Kind::Delta) return c * f(Vec::Zero(f.n()));
  GaussianAmplitude g = f;
  g.M = f.M - kI * chirp.cast<cplx>();
  return c * integral(g);
}

DistributionState apply_generator_dual(const Generator& g, const DistributionState& t, const Tolerances& tol) {
  const int n = t.n();
  const double norm = std::pow(2.0 * kPi, n / 2.0);
  DistributionState out = t;
  std::visit(overloaded{
                 [&](const Dilate& d) {
                   require_n(d.A, n, "dilation matrix");
                   const double det = std::abs(d.A.determinant());
                   if (t.kind == DistributionState::Kind::Delta) {
                     out.c = t.c / std::sqrt(det) * ipow(-d.m);
                   } else {
                     out.c = t.c * std::sqrt(det) * ipow(-d.m);
                     out.chirp = d.A * t.chirp * d.A.transpose();
                   }
                 },
                 [&](const Chirp& c) {
                   if (t.kind == DistributionState::Kind::Const) out.chirp = t.chirp + c.B;
                 },
                 [&](const JHat&) {
                   if (t.kind == DistributionState::Kind::Delta) {
                     out = DistributionState::constant(n, t.c * i_half_pow(n) / norm);
                   } else if (max_abs(t.chirp) <= tol.residual_tol) {
                     out = DistributionState::delta(n, t.c * i_half_pow(n) * norm);
                   } else {
                     throw Error(ErrorKind::Case, "Fourier transform of a chirped constant is outside the DELTA/CONST calculus");
                   }
                 },
             },
             g);
  return out;
}

DistributionState apply_word_dual(const Word& w, const DistributionState& t, const Tolerances& tol) {
  DistributionState out = t;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = apply_generator_dual(*it, out, tol);
  return out;
}

// ---------------------------------------------------------------------------
// Quadratic Fourier transforms

void QuadraticFourier::validate(const Tolerances& tol) const {
  const int k = n();
  require_n(P, k, "P");
  require_n(Q, k, "Q");
  require_n(L, k, "L");
  if (max_abs(Mat(P - P.transpose())) > tol.residual_tol * std::max(1.0, max_abs(P)) ||
      max_abs(Mat(Q - Q.transpose())) > tol.residual_tol * std::max(1.0, max_abs(Q))) {
    throw Error(ErrorKind::InvariantViolation, "P and Q must be symmetric");
  }
  if (std::abs(L.determinant()) < tol.rank_tol) throw Error(ErrorKind::InvariantViolation, "L must be invertible");
}

Word QuadraticFourier::word() const { return {Chirp{P}, Dilate{L, m}, JHat{}, Chirp{Q}}; }

QuadraticFourier quad_fourier_from_symplectic(const SymplecticMatrix& s, int m, const Tolerances& tol) {
  const Mat b = s.B();
  if (std::abs(b.determinant()) < tol.rank_tol) {
    throw Error(ErrorKind::FreeGeneratingFunction, "B block is singular; the element has no free generating function");
  }
  const Mat bi = b.inverse();
  QuadraticFourier qf{-s.D() * bi, bi.transpose(), -bi * s.A(), mod(m, 4)};
  const double scale = std::max(1.0, max_abs(bi)) * std::max(1.0, max_abs(s.matrix()));
  const double asym = std::max(max_abs(Mat(qf.P - qf.P.transpose())), max_abs(Mat(qf.Q - qf.Q.transpose())));
  if (asym > std::sqrt(tol.residual_tol) * scale) {
    throw Error(ErrorKind::InvariantViolation, "generating form is not symmetric (residual " + fmt(asym) + ")");
  }
  qf.P = 0.5 * (qf.P + qf.P.transpose());
  qf.Q = 0.5 * (qf.Q + qf.Q.transpose());
  return qf;
}

SymplecticMatrix symplectic_from_quad_fourier(const QuadraticFourier& qf) {
  const int n = qf.n();
  const Mat lit = qf.L.inverse().transpose();
  Mat s(2 * n, 2 * n);
  s << -lit * qf.Q, lit, qf.P * lit * qf.Q - qf.L, -qf.P * lit;
  return SymplecticMatrix::trusted(std::move(s));
}

GaussianAmplitude apply_quad_fourier(const QuadraticFourier& qf, const GaussianAmplitude& s, const Tolerances& tol) {
  return apply_word(qf.word(), s, tol);
}

int branch_parity(const Mat& L) { return L.determinant() > 0.0 ? 0 : 1; }

int mu_hat(const QuadraticFourier& qf) { return mod(2 * qf.m - qf.n(), 8); }

int mu_hat_composed(const QuadraticFourier& left, const QuadraticFourier& right, const Tolerances& tol) {
  if (left.n() != right.n()) throw Error(ErrorKind::Dimension, "factors of different dimension");
  const int sig = signature(Mat(right.P + left.Q), tol.rank_tol);
  return mod(mu_hat(left) + mu_hat(right) + kCocycleSign * sig, 8);
}

SymplecticMatrix MetaplecticElement::matrix() const {
  SymplecticMatrix s = SymplecticMatrix::identity(n());
  for (const auto& f : factors) s = s * symplectic_from_quad_fourier(f);
  return s;
}

Word MetaplecticElement::word() const {
  Word w;
  for (const auto& f : factors) {
    const Word fw = f.word();
    w.insert(w.end(), fw.begin(), fw.end());
  }
  return w;
}

GaussianAmplitude MetaplecticElement::apply(const GaussianAmplitude& s, const Tolerances& tol) const {
  return apply_word(word(), s, tol);
}

DistributionState MetaplecticElement::apply_dual(const DistributionState& t, const Tolerances& tol) const {
  return apply_word_dual(word(), t, tol);
}

int MetaplecticElement::mu_hat(const Tolerances& tol) const {
  if (factors.size() == 1) return maslov::mu_hat(factors[0]);
  if (factors.size() == 2) return mu_hat_composed(factors[0], factors[1], tol);
  throw Error(ErrorKind::Case, "mu_hat is only implemented for one or two factors");
}

MetaplecticElement match_branch(std::vector<QuadraticFourier> factors, cplx target_c, const Tolerances& tol) {
  if (factors.empty()) throw Error(ErrorKind::InvariantViolation, "empty factorization");
  factors[0].m = 0;
  MetaplecticElement e{std::move(factors)};
  const GaussianAmplitude img = e.apply(GaussianAmplitude::ground_state(e.n()), tol);
  const cplx ratio = target_c / img.c;
  const double q = std::arg(ratio) / (kPi / 2.0);
  const int m = mod(static_cast<int>(std::lround(q)), 4);
  if (std::abs(ratio - ipow(m)) > tol.phase_tol * std::max(1.0, std::abs(ratio)) * 10.0) {
    throw Error(ErrorKind::Conditioning, "no branch matches the tracked prefactor (ratio " + fmt(std::abs(ratio - ipow(m))) + ")");
  }
  e.factors[0].m = m;
  if (m % 2 != branch_parity(e.factors[0].L)) {
    throw Error(ErrorKind::Convention, "branch integer has the wrong parity for det L");
  }
  return e;
}

const char* to_string(EndpointForm f) {
  switch (f) {
    case EndpointForm::FreeGenerating: return "free_generating";
    case EndpointForm::Orthogonal: return "orthogonal";
    case EndpointForm::TwoFactor: return "two_factor";
  }
  return "unknown";
}

MetaplecticElement metaplectic_element(const SymplecticMatrix& s, cplx target_c, EndpointForm* form,
                                       const Tolerances& tol) {
  const int n = s.n();
  const Mat b = s.B();
  const Mat id = Mat::Identity(n, n);
  const Mat zero = Mat::Zero(n, n);
  auto set_form = [&](EndpointForm f) {
    if (form) *form = f;
  };
  if (max_abs(b) <= 1e-7 && max_abs(s.C()) <= 1e-7) {
    // diag(A^{-T}, A) = S_{(0,A,0)} S_{(0,-I,0)}
    set_form(EndpointForm::Orthogonal);
    return match_branch({QuadraticFourier{zero, s.D(), zero, 0}, QuadraticFourier{zero, -id, zero, n % 4}}, target_c, tol);
  }
  if (min_singular_value(b) >= 1e-2) {
    set_form(EndpointForm::FreeGenerating);
    return match_branch({quad_fourier_from_symplectic(s, 0, tol)}, target_c, tol);
  }
  double best_score = -1.0;
  double best_psi = 0.0;
  for (int j = 1; j < 16; ++j) {
    const double psi = j * kPi / 16.0;
    const SymplecticMatrix sb = embed_unitary(UnitaryMatrix::trusted(std::polar(1.0, psi) * CMat::Identity(n, n)));
    const double score = std::min(min_singular_value((s * sb.inverse()).B()), std::abs(std::sin(psi)));
    if (score > best_score) {
      best_score = score;
      best_psi = psi;
    }
  }
  if (best_score < tol.rank_tol) throw Error(ErrorKind::Conditioning, "no admissible two-factor splitting");
  const SymplecticMatrix sb = embed_unitary(UnitaryMatrix::trusted(std::polar(1.0, best_psi) * CMat::Identity(n, n)));
  QuadraticFourier right = quad_fourier_from_symplectic(sb, 0, tol);
  right.m = branch_parity(right.L);
  set_form(EndpointForm::TwoFactor);
  return match_branch({quad_fourier_from_symplectic(s * sb.inverse(), 0, tol), right}, target_c, tol);
}

// ---------------------------------------------------------------------------
// Path lifting

namespace {

struct UnitaryTracker {
  const Tolerances& tol;
  int refine_max;
  MetaplecticLift& out;

  /// Adds the increment of arg det U (principal eigen-arguments of U_a^* U_b),
  /// subdividing along the geodesic until every eigen-argument is below pi/2.
  void step(double ta, const CMat& ua, double tb, const CMat& ub, int depth) {
    const CMat rel = ua.adjoint() * ub;
    double sum = 0.0;
    double worst = 0.0;
    for (const cplx& e : eigenvalues(rel)) {
      sum += std::arg(e);
      worst = std::max(worst, std::abs(std::arg(e)));
    }
    const bool coarse = worst >= kPi / 2 || std::abs(sum) >= kPi / 2 || max_abs(CMat(ub - ua)) >= 0.5;
    if (coarse) {
      if (depth >= refine_max) throw Error(ErrorKind::Sampling, "refinement exhausted while lifting unitary path");
      for (const cplx& e : eigenvalues(rel)) {
        if (std::abs(e + 1.0) < 1e-6) throw Error(ErrorKind::Sampling, "unitary step is ambiguous (eigenvalue -1)");
      }
      const CMat um = ua * unitary_power(rel, 0.5);
      const double tm = 0.5 * (ta + tb);
      ++out.refinements;
      out.max_depth = std::max(out.max_depth, depth + 1);
      step(ta, ua, tm, um, depth + 1);
      step(tm, um, tb, ub, depth + 1);
      return;
    }
    // theta of S L_0 is arg det(U U^T) = 2 arg det U
    out.t.push_back(tb);
    out.theta.push_back(out.theta.back() + 2.0 * sum);
  }
};

}  // namespace

MetaplecticLift lift_unitary_path(const std::vector<SymplecticMatrix>& path, const Tolerances& tol, int refine_max,
                                  std::vector<double> params) {
  if (path.size() < 2) throw Error(ErrorKind::InvariantViolation, "a path needs at least two samples");
  if (params.empty()) {
    for (size_t k = 0; k < path.size(); ++k) params.push_back(static_cast<double>(k) / static_cast<double>(path.size() - 1));
  }
  if (params.size() != path.size()) throw Error(ErrorKind::InvariantViolation, "path samples and parameters differ in length");
  const int n = path.front().n();
  if (max_abs(Mat(path.front().matrix() - Mat::Identity(2 * n, 2 * n))) > tol.residual_tol) {
    throw Error(ErrorKind::InvariantViolation, "symplectic path must start at the identity");
  }
  MetaplecticLift out;
  out.t.push_back(params.front());
  out.theta.push_back(0.0);
  UnitaryTracker tracker{tol, refine_max, out};
  CMat ua = unitary_block(path.front(), tol);
  for (size_t k = 1; k < path.size(); ++k) {
    const CMat ub = unitary_block(path[k], tol);
    tracker.step(params[k - 1], ua, params[k], ub, 0);
    ua = ub;
  }
  // kappa(S) u_0 = det(A + iB)^{-1/2} u_0 with A + iB = conj(U)
  out.u0_factor = std::polar(1.0, out.theta.back() / 4.0);
  out.element = metaplectic_element(path.back(), out.u0_factor, &out.form, tol);
  return out;
}

GaussianAmplitude lift_frame_path(const std::vector<SymplecticMatrix>& path, const GaussianAmplitude& s0,
                                  const Tolerances& tol) {
  return lift_unitary_path(path, tol).element.apply(s0, tol);
}

DistributionState apply_to_delta(const QuadraticFourier& qf, const Tolerances& tol) {
  qf.validate(tol);
  return apply_word_dual(qf.word(), DistributionState::delta(qf.n()), tol);
}

DistributionState apply_word_to_delta(const MetaplecticElement& e, const Tolerances& tol) {
  return e.apply_dual(DistributionState::delta(e.n()), tol);
}

double transverse_constant(const QuadraticFourier& qf) {
  return std::pow(2.0 * kPi, -qf.n() / 2.0) * std::sqrt(std::abs(qf.L.determinant()));
}

// ---------------------------------------------------------------------------
// Harmonic oscillator eigenstates

namespace {

Polynomial hermite_1d(int n, int j, int k) {
  Polynomial prev = Polynomial::constant(n, 1.0);
  if (k == 0) return prev;
  const Polynomial x = Polynomial::variable(n, j);
  Polynomial cur = x * cplx(2.0);
  for (int r = 1; r < k; ++r) {
    Polynomial next = x * cur * cplx(2.0) - prev * cplx(2.0 * r);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

GaussianAmplitude hermite_state(const Polynomial::Exponent& alpha) {
  const int n = static_cast<int>(alpha.size());
  if (n == 0) throw Error(ErrorKind::Dimension, "empty multi-index");
  Polynomial p = Polynomial::constant(n, 1.0);
  double norm2 = std::pow(kPi, n / 2.0);
  for (int j = 0; j < n; ++j) {
    if (alpha[j] < 0) throw Error(ErrorKind::InvariantViolation, "negative Hermite index");
    p = p * hermite_1d(n, j, alpha[j]);
    norm2 *= std::pow(2.0, alpha[j]) * std::tgamma(alpha[j] + 1.0);
  }
  return {cplx(1.0 / std::sqrt(norm2)), CMat::Identity(n, n), p};
}

std::vector<Polynomial::Exponent> level_indices(int l, int n) {
  std::vector<Polynomial::Exponent> out;
  Polynomial::Exponent cur(n, 0);
  auto rec = [&](auto&& self, int j, int left) -> void {
    if (j == n - 1) {
      cur[j] = left;
      out.push_back(cur);
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur[j] = k;
      self(self, j + 1, left - k);
    }
  };
  if (l < 0 || n < 1) throw Error(ErrorKind::InvariantViolation, "level and dimension must be non-negative");
  rec(rec, 0, l);
  return out;
}

std::vector<GaussianAmplitude> level_basis(int l, int n) {
  std::vector<GaussianAmplitude> out;
  for (const auto& a : level_indices(l, n)) out.push_back(hermite_state(a));
  return out;
}

GaussianAmplitude harmonic_oscillator(const GaussianAmplitude& f) {
  // Laplacian of p e^{-<Mx,x>/2} is [Lap p - 2 <Mx, grad p> + p (|Mx|^2 - tr M)] e^{...}
  const int n = f.n();
  std::vector<Polynomial> mx;
  for (int i = 0; i < n; ++i) {
    Polynomial r(n);
    for (int j = 0; j < n; ++j) r += Polynomial::variable(n, j) * f.M(i, j);
    mx.push_back(std::move(r));
  }
  Polynomial lap(n);
  Polynomial mx2(n);
  Polynomial x2(n);
  for (int i = 0; i < n; ++i) {
    lap += f.poly.derivative(i).derivative(i);
    lap += mx[i] * f.poly.derivative(i) * cplx(-2.0);
    mx2 += mx[i] * mx[i];
    x2 += Polynomial::variable(n, i) * Polynomial::variable(n, i);
  }
  lap += f.poly * (mx2 + Polynomial::constant(n, -f.M.trace()));
  GaussianAmplitude out = f;
  out.poly = ((lap - x2 * f.poly) * cplx(0.5)).pruned(0.0);
  return out;
}

}  // namespace maslov
