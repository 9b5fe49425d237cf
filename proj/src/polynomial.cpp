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

#include "maslov/polynomial.hpp"

#include "maslov/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace maslov {

Polynomial Polynomial::constant(int n, cplx c) {
  Polynomial p(n);
  p.add(Exponent(n, 0), c);
  return p;
}

Polynomial Polynomial::monomial(const Exponent& e, cplx c) {
  Polynomial p(static_cast<int>(e.size()));
  p.add(e, c);
  return p;
}

Polynomial Polynomial::variable(int n, int j) {
  Exponent e(n, 0);
  e.at(j) = 1;
  return monomial(e);
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool Polynomial::is_zero(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(), [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
}

int Polynomial::parity(double tol) const {
  bool even = false;
  bool odd = false;
  for (const auto& [e, c] : terms_) {
    if (std::abs(c) <= tol) continue;
    (std::accumulate(e.begin(), e.end(), 0) % 2 == 0 ? even : odd) = true;
  }
  if (even && odd) return 0;
  return odd ? -1 : 1;
}

cplx Polynomial::operator()(const Vec& x) const {
  if (x.size() != n_) throw Error(ErrorKind::Dimension, "polynomial evaluated at a point of the wrong dimension");
  cplx acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double m = 1.0;
    for (int j = 0; j < n_; ++j) m *= std::pow(x(j), e[j]);
    acc += c * m;
  }
  return acc;
}

cplx Polynomial::coefficient(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? cplx(0.0) : it->second;
}

void Polynomial::add(const Exponent& e, cplx c) {
  if (static_cast<int>(e.size()) != n_) throw Error(ErrorKind::Dimension, "exponent of the wrong length");
  if (c == cplx(0.0)) return;
  terms_[e] += c;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.n_ != n_) throw Error(ErrorKind::Dimension, "polynomials in different numbers of variables");
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

Polynomial& Polynomial::operator*=(cplx s) {
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) throw Error(ErrorKind::Dimension, "polynomials in different numbers of variables");
  Polynomial r(a.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponent e(ea);
      for (int j = 0; j < a.n_; ++j) e[j] += eb[j];
      r.add(e, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::derivative(int j) const {
  Polynomial r(n_);
  for (const auto& [e, c] : terms_) {
    if (e.at(j) == 0) continue;
    Exponent d(e);
    --d[j];
    r.add(d, c * static_cast<double>(e[j]));
  }
  return r;
}

Polynomial Polynomial::substitute(const CMat& t) const {
  if (t.rows() != n_ || t.cols() != n_) throw Error(ErrorKind::Dimension, "substitution matrix of the wrong size");
  std::vector<Polynomial> lin;
  for (int i = 0; i < n_; ++i) {
    Polynomial li(n_);
    for (int j = 0; j < n_; ++j) li += variable(n_, j) * t(i, j);
    lin.push_back(std::move(li));
  }
  Polynomial r(n_);
  for (const auto& [e, c] : terms_) {
    Polynomial m = constant(n_, c);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < e[i]; ++k) m = m * lin[i];
    r += m;
  }
  return r;
}

Polynomial Polynomial::conjugate() const {
  Polynomial r(n_);
  for (const auto& [e, c] : terms_) r.add(e, std::conj(c));
  return r;
}

Polynomial Polynomial::pruned(double tol) const {
  Polynomial r(n_);
  for (const auto& [e, c] : terms_)
    if (std::abs(c) > tol) r.add(e, c);
  return r;
}

double Polynomial::max_abs_diff(const Polynomial& o) const {
  const Polynomial d = *this - o;
  double m = 0.0;
  for (const auto& [e, c] : d.terms_) m = std::max(m, std::abs(c));
  return m;
}

namespace {

cplx pairings(std::vector<int>& idx, size_t first, const CMat& cov) {
  if (first >= idx.size()) return 1.0;
  cplx acc = 0.0;
  for (size_t k = first + 1; k < idx.size(); ++k) {
    std::swap(idx[first + 1], idx[k]);
    acc += cov(idx[first], idx[first + 1]) * pairings(idx, first + 2, cov);
    std::swap(idx[first + 1], idx[k]);
  }
  return acc;
}

}  // namespace

cplx gaussian_moment(const Polynomial::Exponent& e, const CMat& cov) {
  std::vector<int> idx;
  for (size_t j = 0; j < e.size(); ++j)
    for (int k = 0; k < e[j]; ++k) idx.push_back(static_cast<int>(j));
  if (idx.size() % 2 != 0) return 0.0;
  return pairings(idx, 0, cov);
}

}  // namespace maslov
