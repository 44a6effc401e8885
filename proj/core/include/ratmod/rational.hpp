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

/// Exact scalar arithmetic over Z and Q.
///
/// Rat is an arbitrary-precision rational kept in lowest terms with a
/// positive denominator (zero is 0/1); Int is an arbitrary-precision
/// integer. Both are thin aliases of the GMP C++ classes, which already
/// maintain exactly those invariants. Everything in this header is a
/// value type, safe for concurrent use.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "ratmod/errors.hpp"

namespace ratmod {

using Int = mpz_class;
using Rat = mpq_class;

inline const Int& numerator(const Rat& q) { return q.get_num(); }
inline const Int& denominator(const Rat& q) { return q.get_den(); }

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }
inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

/// Serializes as "num/den", with "/den" omitted for integers.
inline std::string to_string(const Rat& q) {
  if (is_integer(q)) return numerator(q).get_str();
  return numerator(q).get_str() + "/" + denominator(q).get_str();
}

inline std::string to_string(const Int& n) { return n.get_str(); }

/// Parses "num" or "num/den". Whitespace is not accepted; the result is
/// canonicalized (so "2/4" parses to 1/2 and "3/-6" to -1/2).
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (denominator(q) == 0)
    throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

/// p-adic valuation of a nonzero integer.
inline long valuation(const Int& n, const Int& p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  long v = 0;
  Int m = n, q, r;
  for (;;) {
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    if (r != 0) return v;
    ++v;
    m = q;
  }
}

/// p-adic valuation of a nonzero rational.
inline long valuation(const Rat& q, const Int& p) {
  return valuation(numerator(q), p) - valuation(denominator(q), p);
}

/// Exact square root test; returns the root of a perfect-square rational.
inline std::optional<Rat> exact_sqrt(const Rat& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return Rat(0);
  Int num = numerator(q), den = denominator(q);
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rat(rn) / Rat(rd);
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  Rat b = e > 0 ? base : Rat(1) / base;
  unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
  Rat r(1);
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

// Scalar-domain hooks used by the generic polynomial and form code.
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat from_int_like(const Rat&, long n) { return Rat(n); }
inline Rat inverse(const Rat& q) {
  if (is_zero(q)) throw not_invertible("0");
  return Rat(1) / q;
}

}  // namespace ratmod
