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

/// Dense univariate polynomials over an exact scalar domain.
///
/// Coefficients are stored constant term first; the zero polynomial is the
/// empty coefficient vector and its "degree" is a sentinel, never used in
/// arithmetic. The scalar domain K must provide value semantics, ring
/// operators, and the is_zero / zero_like / one_like / inverse free
/// functions (Rat, Fp and ExtElem all qualify). Division-flavoured
/// operations require invertible leading coefficients and surface
/// not_invertible otherwise, which is the designed escape hatch when K is
/// a quotient ring that is not actually a field.

#pragma once

#include "ratmod/errors.hpp"
#include "ratmod/fp.hpp"
#include "ratmod/rational.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <string>
#include <utility>
#include <vector>

namespace ratmod {

template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly constant(K v) { return Poly(std::vector<K>{std::move(v)}); }

  /// The monomial z, with constants minted in the domain of `sample`.
  static Poly identity(const K& sample) {
    return Poly(std::vector<K>{zero_like(sample), one_like(sample)});
  }

  bool is_zero() const { return c_.empty(); }

  /// Degree of a nonzero polynomial.
  int degree() const {
    assert(!c_.empty());
    return static_cast<int>(c_.size()) - 1;
  }

  /// Degree with the zero polynomial mapped to -1. Only for size
  /// bookkeeping (loop bounds, comparisons); never fed into arithmetic.
  int degree_or_neg1() const { return static_cast<int>(c_.size()) - 1; }

  const std::vector<K>& coeffs() const { return c_; }

  /// Coefficient of z^i, zero beyond the degree.
  K coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero_like(sample());
    return c_[static_cast<std::size_t>(i)];
  }

  const K& leading() const {
    assert(!c_.empty());
    return c_.back();
  }

  /// Any coefficient usable to mint domain constants (zero if empty).
  K sample() const { return c_.empty() ? K() : c_.front(); }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<K> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i < a.c_.size() && i < b.c_.size())
        r[i] = a.c_[i] + b.c_[i];
      else if (i < a.c_.size())
        r[i] = a.c_[i];
      else
        r[i] = b.c_[i];
    }
    return Poly(std::move(r));
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  Poly operator-() const {
    std::vector<K> r(c_);
    for (auto& x : r) x = -x;
    return Poly(std::move(r));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, zero_like(a.c_.front()));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }

  friend Poly operator*(const K& s, const Poly& p) {
    if (is_zero(s) || p.is_zero()) return Poly();
    std::vector<K> r(p.c_);
    for (auto& x : r) x = s * x;
    return Poly(std::move(r));
  }

  /// Multiplies by z^k.
  Poly shifted_up(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<K> r(c_.size() + static_cast<std::size_t>(k),
                     zero_like(c_.front()));
    std::copy(c_.begin(), c_.end(), r.begin() + k);
    return Poly(std::move(r));
  }

  K eval(const K& x) const {
    if (is_zero()) return zero_like(x);
    K acc = zero_like(x);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && ratmod::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<K> c_;
};

template <class K>
Poly<K> derivative(const Poly<K>& p) {
  if (p.is_zero() || p.degree() == 0) return Poly<K>();
  std::vector<K> r(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i)
    r[static_cast<std::size_t>(i - 1)] =
        from_int_like(p.coeff(i), i) * p.coeff(i);
  return Poly<K>(std::move(r));
}

/// Quotient and remainder; the divisor's leading coefficient must be
/// invertible (throws not_invertible through K otherwise).
template <class K>
std::pair<Poly<K>, Poly<K>> divrem(const Poly<K>& a, const Poly<K>& b) {
  assert(!b.is_zero());
  if (a.is_zero() || a.degree() < b.degree()) return {Poly<K>(), a};
  const K lc_inv = inverse(b.leading());
  std::vector<K> rem(a.coeffs());
  std::vector<K> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1),
                     zero_like(a.sample()));
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    K q = rem[static_cast<std::size_t>(i + b.degree())] * lc_inv;
    quo[static_cast<std::size_t>(i)] = q;
    if (!is_zero(q))
      for (int j = 0; j <= b.degree(); ++j)
        rem[static_cast<std::size_t>(i + j)] =
            rem[static_cast<std::size_t>(i + j)] - q * b.coeff(j);
  }
  return {Poly<K>(std::move(quo)), Poly<K>(std::move(rem))};
}

template <class K>
Poly<K> exact_div(const Poly<K>& a, const Poly<K>& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw inexact_division();
  return q;
}

template <class K>
Poly<K> monic(const Poly<K>& p) {
  if (p.is_zero()) return p;
  return inverse(p.leading()) * p;
}

/// Monic gcd by the Euclidean algorithm (zero if both inputs are zero).
template <class K>
Poly<K> gcd_monic(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    auto r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Extended gcd: returns (g, u, v) with u*a + v*b = g and g monic.
template <class K>
std::array<Poly<K>, 3> extended_gcd(const Poly<K>& a, const Poly<K>& b) {
  Poly<K> r0 = a, r1 = b;
  K one = one_like(a.is_zero() ? b.sample() : a.sample());
  Poly<K> s0 = Poly<K>::constant(one), s1;
  Poly<K> t0, t1 = Poly<K>::constant(one);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<K> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly<K> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  K scale = inverse(r0.leading());
  return {scale * r0, scale * s0, scale * t0};
}

template <class K>
Poly<K> poly_pow(const Poly<K>& base, unsigned long e) {
  Poly<K> r = Poly<K>::constant(one_like(base.sample()));
  Poly<K> b = base;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

template <class K>
Poly<K> mod_pow(const Poly<K>& base, const Int& e, const Poly<K>& mod) {
  Poly<K> r = Poly<K>::constant(one_like(mod.sample()));
  Poly<K> b = divrem(base, mod).second;
  Int n = e;
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) r = divrem(r * b, mod).second;
    b = divrem(b * b, mod).second;
    n /= 2;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Rational-specific helpers: integer content and squarefree structure.
// ---------------------------------------------------------------------------

/// Content of a rational polynomial: the positive rational c such that
/// p / c has coprime integer coefficients. Zero polynomial has content 0.
inline Rat content(const Poly<Rat>& p) {
  if (p.is_zero()) return Rat(0);
  Int num_gcd = 0, den_lcm = 1;
  for (const Rat& c : p.coeffs()) {
    if (is_zero(c)) continue;
    num_gcd = gcd(num_gcd, numerator(c));
    den_lcm = lcm(den_lcm, denominator(c));
  }
  Rat c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

/// Primitive part: coprime integer coefficients, positive leading one.
inline Poly<Rat> primitive_part(const Poly<Rat>& p) {
  if (p.is_zero()) return p;
  Rat c = content(p);
  Poly<Rat> q = inverse(c) * p;
  if (sgn(q.leading()) < 0) q = -q;
  return q;
}

/// Squarefree part of a rational polynomial: p / gcd(p, p').
inline Poly<Rat> squarefree_part(const Poly<Rat>& p) {
  if (p.is_zero() || p.degree() == 0) return p;
  Poly<Rat> g = gcd_monic(p, derivative(p));
  if (g.degree() == 0) return p;
  return exact_div(p, g);
}

inline bool is_squarefree(const Poly<Rat>& p) {
  if (p.is_zero()) return false;
  if (p.degree() == 0) return true;
  return gcd_monic(p, derivative(p)).degree() == 0;
}

/// Yun's squarefree decomposition: p = unit * prod f_i^i with the f_i
/// squarefree, pairwise coprime and primitive, returned as (f_i, i) pairs
/// for the nonconstant f_i.
inline std::vector<std::pair<Poly<Rat>, int>> squarefree_decomposition(
    const Poly<Rat>& p) {
  std::vector<std::pair<Poly<Rat>, int>> out;
  if (p.is_zero() || p.degree() == 0) return out;
  Poly<Rat> f = primitive_part(p);
  Poly<Rat> g = gcd_monic(f, derivative(f));
  if (g.degree() == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  Poly<Rat> c = exact_div(f, g);
  Poly<Rat> d = exact_div(derivative(f), g) - derivative(c);
  for (int i = 1; !(c.degree() == 0); ++i) {
    Poly<Rat> step = gcd_monic(c, d);
    if (step.degree() > 0) out.emplace_back(primitive_part(step), i);
    c = exact_div(c, step);
    d = exact_div(d, step) - derivative(c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Resultants by fraction-free (Bareiss) elimination on the Sylvester matrix.
// ---------------------------------------------------------------------------

/// Determinant of the (da+db) x (da+db) Sylvester matrix of the two
/// coefficient sequences with *declared* degrees da, db; leading or
/// trailing zeros in the sequences are honored (homogeneous convention).
/// Elimination is Bareiss', so integer inputs stay integers throughout.
template <class K>
K sylvester_resultant(const std::vector<K>& a, int da, const std::vector<K>& b,
                      int db, const K& sample) {
  const K zero = zero_like(sample);
  const K one = one_like(sample);
  if (da == 0 && db == 0) return one;
  const int n = da + db;
  auto coeff = [&](const std::vector<K>& v, int i) -> K {
    return (i >= 0 && i < static_cast<int>(v.size())) ? v[i] : zero;
  };
  std::vector<std::vector<K>> m(static_cast<std::size_t>(n),
                                std::vector<K>(static_cast<std::size_t>(n), zero));
  for (int r = 0; r < db; ++r)
    for (int j = 0; j <= da; ++j) m[r][r + j] = coeff(a, j);
  for (int r = 0; r < da; ++r)
    for (int j = 0; j <= db; ++j) m[db + r][r + j] = coeff(b, j);

  K prev = one;
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (!is_zero(m[i][k])) {
        pivot = i;
        break;
      }
    if (pivot < 0) return zero;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        K num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = num * inverse(prev);
      }
      m[i][k] = zero;
    }
    prev = m[k][k];
  }
  K det = m[n - 1][n - 1];
  return negate ? -det : det;
}

/// Resultant of two univariate polynomials at their true degrees.
template <class K>
K resultant(const Poly<K>& f, const Poly<K>& g) {
  K sample = f.is_zero() ? g.sample() : f.sample();
  if (f.is_zero() || g.is_zero()) return zero_like(sample);
  if (f.degree() == 0) {
    K r = one_like(sample);
    for (int i = 0; i < g.degree(); ++i) r = r * f.coeff(0);
    return r;
  }
  if (g.degree() == 0) {
    K r = one_like(sample);
    for (int i = 0; i < f.degree(); ++i) r = r * g.coeff(0);
    return r;
  }
  return sylvester_resultant(f.coeffs(), f.degree(), g.coeffs(), g.degree(),
                             sample);
}

template <class K>
std::string to_string(const Poly<K>& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int i = p.degree(); i >= 0; --i) {
    K c = p.coeff(i);
    if (is_zero(c)) continue;
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c) + ")";
    if (i == 1) s += "*z";
    if (i > 1) s += "*z^" + std::to_string(i);
  }
  return s;
}

}  // namespace ratmod
