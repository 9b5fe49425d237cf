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

#pragma once

#include "maslov/linalg.hpp"

#include <map>
#include <vector>

namespace maslov {

/// Multivariate polynomial in x_1..x_n with complex coefficients, stored as a
/// map from exponent vectors to coefficients.
class Polynomial {
 public:
  using Exponent = std::vector<int>;

  explicit Polynomial(int n = 1) : n_(n) {}
  static Polynomial constant(int n, cplx c);
  static Polynomial monomial(const Exponent& e, cplx c = 1.0);
  /// The coordinate function x_j.
  static Polynomial variable(int n, int j);

  int n() const { return n_; }
  const std::map<Exponent, cplx>& terms() const { return terms_; }
  int degree() const;
  bool is_zero(double tol = 0.0) const;
  /// +1 even, -1 odd, 0 mixed.
  int parity(double tol = 0.0) const;

  cplx operator()(const Vec& x) const;
  cplx coefficient(const Exponent& e) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator*=(cplx s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a += b * cplx(-1.0); }
  friend Polynomial operator*(Polynomial a, cplx s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial derivative(int j) const;
  /// x -> p(T x) for an n x n matrix T.
  Polynomial substitute(const CMat& t) const;
  Polynomial conjugate() const;

  /// Drops coefficients with modulus below tol.
  Polynomial pruned(double tol) const;
  double max_abs_diff(const Polynomial& o) const;

 private:
  void add(const Exponent& e, cplx c);

  int n_;
  std::map<Exponent, cplx> terms_;
};

/// E[x^e] for a centered Gaussian with (possibly complex symmetric)
/// covariance c, by Isserlis' theorem.
cplx gaussian_moment(const Polynomial::Exponent& e, const CMat& cov);

}  // namespace maslov
