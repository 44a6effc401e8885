/* Copyright (c) 2026 The ratmod authors
 * This program is licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/// Homogeneous binary forms F = a0 X^d + a1 X^{d-1} Y + ... + ad Y^d.
///
/// A form carries a declared degree d and exactly d+1 coefficients in the
/// order a0..ad; leading and trailing zeros are allowed, and the zero form
/// of each degree exists (it is only legal where an operation says so).
/// Forms of degree d over K are in bijection with pairs (Y-multiplicity,
/// dehomogenized polynomial), which is how gcd, exact division and
/// factorization are routed through the univariate kernel.

#pragma once

#include "ratmod/poly.hpp"

#include <cassert>
#include <string>
#include <utility>
#include <vector>

namespace ratmod {

template <class K>
class BinaryForm {
 public:
  BinaryForm() : d_(0), c_{K()} {}
  BinaryForm(int degree, std::vector<K> coeffs)
      : d_(degree), c_(std::move(coeffs)) {
    assert(static_cast<int>(c_.size()) == d_ + 1);
  }

  static BinaryForm zero(int degree, const K& sample) {
    return BinaryForm(degree, std::vector<K>(static_cast<std::size_t>(degree) + 1,
                                             zero_like(sample)));
  }

  int degree() const { return d_; }
  const std::vector<K>& coeffs() const { return c_; }
  const K& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  K& coeff(int i) { return c_[static_cast<std::size_t>(i)]; }

  bool is_zero() const {
    for (const K& x : c_)
      if (!ratmod::is_zero(x)) return false;
    return true;
  }

  K sample() const { return c_.front(); }

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    if (a.d_ != b.d_) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const BinaryForm& a, const BinaryForm& b) {
    return !(a == b);
  }

  /// F(x, y) by direct expansion.
  K evaluate(const K& x, const K& y) const {
    K acc = zero_like(x);
    K xp = one_like(x);
    std::vector<K> ypow(static_cast<std::size_t>(d_) + 1, one_like(x));
    for (int i = 1; i <= d_; ++i)
      ypow[static_cast<std::size_t>(i)] = ypow[static_cast<std::size_t>(i - 1)] * y;
    for (int i = d_; i >= 0; --i) {
      acc = acc + c_[static_cast<std::size_t>(i)] * xp * ypow[static_cast<std::size_t>(i)];
      xp = xp * x;
    }
    return acc;
  }

  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    assert(a.d_ == b.d_);
    std::vector<K> r(a.c_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b.c_[i];
    return BinaryForm(a.d_, std::move(r));
  }
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
    assert(a.d_ == b.d_);
    std::vector<K> r(a.c_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b.c_[i];
    return BinaryForm(a.d_, std::move(r));
  }
  BinaryForm operator-() const {
    std::vector<K> r(c_);
    for (auto& x : r) x = -x;
    return BinaryForm(d_, std::move(r));
  }
  friend BinaryForm operator*(const K& s, const BinaryForm& f) {
    std::vector<K> r(f.c_);
    for (auto& x : r) x = s * x;
    return BinaryForm(f.d_, std::move(r));
  }
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    std::vector<K> r(static_cast<std::size_t>(a.d_ + b.d_) + 1,
                     zero_like(a.sample()));
    for (int i = 0; i <= a.d_; ++i)
      for (int j = 0; j <= b.d_; ++j)
        r[static_cast<std::size_t>(i + j)] =
            r[static_cast<std::size_t>(i + j)] + a.coeff(i) * b.coeff(j);
    return BinaryForm(a.d_ + b.d_, std::move(r));
  }

 private:
  int d_;
  std::vector<K> c_;
};

/// Dehomogenization F(z, 1): coefficient of z^j is a_{d-j}.
template <class K>
Poly<K> dehomogenize(const BinaryForm<K>& f) {
  std::vector<K> r(f.coeffs().rbegin(), f.coeffs().rend());
  return Poly<K>(std::move(r));
}

/// Homogenization of p to exact degree d >= deg p:  Y^{d - deg p} * P(X, Y).
template <class K>
BinaryForm<K> homogenize(const Poly<K>& p, int d, const K& sample) {
  BinaryForm<K> f = BinaryForm<K>::zero(d, sample);
  if (p.is_zero()) return f;
  assert(p.degree() <= d);
  for (int j = 0; j <= p.degree(); ++j) f.coeff(d - j) = p.coeff(j);
  return f;
}

/// Number of leading zero coefficients a0..: the multiplicity of Y in F,
/// equivalently the vanishing order at [1:0]. Returns d+1 for the zero form.
template <class K>
int y_multiplicity(const BinaryForm<K>& f) {
  int k = 0;
  while (k <= f.degree() && is_zero(f.coeff(k))) ++k;
  return k;
}

/// Vanishing order at [0:1] (multiplicity of X): trailing zero count.
template <class K>
int x_multiplicity(const BinaryForm<K>& f) {
  int k = 0;
  while (k <= f.degree() && is_zero(f.coeff(f.degree() - k))) ++k;
  return k;
}

/// F(alpha X + beta Y, gamma X + delta Y) as a degree-d form.
template <class K>
BinaryForm<K> compose_linear(const BinaryForm<K>& f, const K& alpha,
                             const K& beta, const K& gamma, const K& delta) {
  const int d = f.degree();
  const K zero = zero_like(f.sample());
  // Power tables for (alpha X + beta Y)^k and (gamma X + delta Y)^k.
  std::vector<std::vector<K>> pa(static_cast<std::size_t>(d) + 1),
      pb(static_cast<std::size_t>(d) + 1);
  pa[0] = {one_like(alpha)};
  pb[0] = {one_like(alpha)};
  for (int k = 1; k <= d; ++k) {
    auto step = [&](const std::vector<K>& prev, const K& u, const K& v) {
      std::vector<K> cur(prev.size() + 1, zero);
      for (std::size_t i = 0; i < prev.size(); ++i) {
        cur[i] = cur[i] + prev[i] * u;
        cur[i + 1] = cur[i + 1] + prev[i] * v;
      }
      return cur;
    };
    pa[static_cast<std::size_t>(k)] =
        step(pa[static_cast<std::size_t>(k - 1)], alpha, beta);
    pb[static_cast<std::size_t>(k)] =
        step(pb[static_cast<std::size_t>(k - 1)], gamma, delta);
  }
  BinaryForm<K> out = BinaryForm<K>::zero(d, f.sample());
  for (int i = 0; i <= d; ++i) {
    if (is_zero(f.coeff(i))) continue;
    const auto& u = pa[static_cast<std::size_t>(d - i)];
    const auto& v = pb[static_cast<std::size_t>(i)];
    // Convolve u and v, scaled by the coefficient.
    for (std::size_t s = 0; s < u.size(); ++s)
      for (std::size_t t = 0; t < v.size(); ++t)
        out.coeff(static_cast<int>(s + t)) =
            out.coeff(static_cast<int>(s + t)) + f.coeff(i) * u[s] * v[t];
  }
  return out;
}

/// F(G, H) for forms G, H of equal degree e: the degree d*e composition.
template <class K>
BinaryForm<K> compose_forms(const BinaryForm<K>& f, const BinaryForm<K>& g,
                            const BinaryForm<K>& h) {
  assert(g.degree() == h.degree());
  const int d = f.degree(), e = g.degree();
  BinaryForm<K> acc = BinaryForm<K>::zero(d * e, f.sample());
  // Powers g^{d-i} h^i accumulated incrementally.
  std::vector<BinaryForm<K>> gp(static_cast<std::size_t>(d) + 1,
                                BinaryForm<K>(0, {one_like(f.sample())}));
  std::vector<BinaryForm<K>> hp = gp;
  for (int k = 1; k <= d; ++k) {
    gp[static_cast<std::size_t>(k)] = gp[static_cast<std::size_t>(k - 1)] * g;
    hp[static_cast<std::size_t>(k)] = hp[static_cast<std::size_t>(k - 1)] * h;
  }
  for (int i = 0; i <= d; ++i) {
    if (is_zero(f.coeff(i))) continue;
    BinaryForm<K> term = gp[static_cast<std::size_t>(d - i)] * hp[static_cast<std::size_t>(i)];
    acc = acc + f.coeff(i) * term;
  }
  return acc;
}

template <class K>
BinaryForm<K> derivative_x(const BinaryForm<K>& f) {
  const int d = f.degree();
  assert(d >= 1);
  std::vector<K> r(static_cast<std::size_t>(d), zero_like(f.sample()));
  for (int i = 0; i < d; ++i)
    r[static_cast<std::size_t>(i)] = from_int_like(f.sample(), d - i) * f.coeff(i);
  return BinaryForm<K>(d - 1, std::move(r));
}

/// Res(F, G) at the declared degrees; 0 whenever either form is zero.
template <class K>
K form_resultant(const BinaryForm<K>& f, const BinaryForm<K>& g) {
  if (f.is_zero() || g.is_zero()) return zero_like(f.sample());
  // Sylvester rows take the X-polynomial coefficient order a0..ad.
  return sylvester_resultant(f.coeffs(), f.degree(), g.coeffs(), g.degree(),
                             f.sample());
}

/// Gcd of two forms, computed through the univariate kernel with the
/// Y-multiplicity tracked separately. Zero inputs behave like gcd(0, G) = G.
template <class K>
BinaryForm<K> form_gcd(const BinaryForm<K>& f, const BinaryForm<K>& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  const int yf = y_multiplicity(f), yg = y_multiplicity(g);
  Poly<K> pf = dehomogenize(f), pg = dehomogenize(g);
  Poly<K> h = gcd_monic(pf, pg);
  const int y = std::min(yf, yg);
  return homogenize(h, h.degree() + y, f.sample());
}

/// Exact division of forms; throws inexact_division when G does not divide F.
template <class K>
BinaryForm<K> form_exact_div(const BinaryForm<K>& f, const BinaryForm<K>& g) {
  assert(!g.is_zero());
  if (f.is_zero()) return BinaryForm<K>::zero(f.degree() - g.degree(), f.sample());
  const int yf = f.degree() - dehomogenize(f).degree();
  const int yg = g.degree() - dehomogenize(g).degree();
  if (yf < yg) throw inexact_division();
  Poly<K> q = exact_div(dehomogenize(f), dehomogenize(g));
  return homogenize(q, q.degree() + (yf - yg), f.sample());
}

/// Largest m with L_P^m | F for the linear form L_P vanishing at P = [x:y];
/// returns d+1 when F is the zero form.
template <class K, class K2>
int multiplicity_at(const BinaryForm<K>& f, const K2& x, const K2& y) {
  if (f.is_zero()) return f.degree() + 1;
  // Lift F into the evaluation domain.
  std::vector<K2> lifted;
  lifted.reserve(f.coeffs().size());
  for (const K& c : f.coeffs()) lifted.push_back(K2(c));
  BinaryForm<K2> g(f.degree(), std::move(lifted));
  // Move P to [0:1] with the unimodular-ish matrix (columns S, P), S != P.
  K2 s0, s1;
  if (is_zero(x)) {
    s0 = one_like(x);
    s1 = zero_like(x);
  } else {
    s0 = zero_like(x);
    s1 = one_like(x);
  }
  BinaryForm<K2> shifted = compose_linear(g, s0, x, s1, y);
  return x_multiplicity(shifted);
}

// Rational-coefficient normalizations.

inline BinaryForm<Rat> form_primitive(const BinaryForm<Rat>& f) {
  if (f.is_zero()) return f;
  Poly<Rat> p(std::vector<Rat>(f.coeffs()));
  Rat c = content(p);
  std::vector<Rat> r(f.coeffs());
  for (auto& x : r) x /= c;
  return BinaryForm<Rat>(f.degree(), std::move(r));
}

template <class K>
std::string to_string(const BinaryForm<K>& f) {
  std::string s;
  const int d = f.degree();
  for (int i = 0; i <= d; ++i) {
    if (is_zero(f.coeff(i))) continue;
    if (!s.empty()) s += " + ";
    s += "(" + to_string(f.coeff(i)) + ")";
    if (d - i > 0) s += "*X" + (d - i > 1 ? "^" + std::to_string(d - i) : std::string());
    if (i > 0) s += "*Y" + (i > 1 ? "^" + std::to_string(i) : std::string());
  }
  return s.empty() ? "0" : s;
}

}  // namespace ratmod
