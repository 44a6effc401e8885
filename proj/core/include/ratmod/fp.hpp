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

/// Prime-field scalars Z/p for odd primes p <= 2^61.
///
/// Used by the mod-p factorization kernel and by cross-check suites that
/// compare rational computations against their reductions. Elements are
/// plain values carrying their modulus; a default-constructed element is
/// an "unbound" zero that adopts the modulus of whatever it is combined
/// with, which lets generic polynomial code mint constants.

#pragma once

#include "ratmod/errors.hpp"
#include "ratmod/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ratmod {

class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

  static constexpr std::uint64_t kMaxPrime = (1ULL << 61);

  /// Validates that p is usable as a prime-field modulus: odd, >= 3,
  /// <= 2^61 and (probably) prime. p = 2 is rejected because the
  /// derivative-based routines degenerate there.
  static void check_modulus(std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || p > kMaxPrime)
      throw std::invalid_argument("prime-field modulus must be an odd prime <= 2^61");
    Int n(static_cast<unsigned long>(p));
    if (mpz_probab_prime_p(n.get_mpz_t(), 32) == 0)
      throw std::invalid_argument("prime-field modulus is composite");
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    std::uint64_t p = merge(a, b);
    if (p == 0) return Fp();
    std::uint64_t s = a.v_ + b.v_;
    if (s >= p) s -= p;
    return Fp(s, p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    std::uint64_t p = merge(a, b);
    if (p == 0) return Fp();
    std::uint64_t s = a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + p - b.v_;
    return Fp(s, p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    std::uint64_t p = merge(a, b);
    if (p == 0) return Fp();
    unsigned __int128 prod = static_cast<unsigned __int128>(a.v_) * b.v_;
    return Fp(static_cast<std::uint64_t>(prod % p), p);
  }
  Fp operator-() const { return p_ == 0 ? Fp() : Fp(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  friend bool operator==(const Fp& a, const Fp& b) {
    merge(a, b);
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  Fp pow(std::uint64_t e) const {
    Fp r(1 % p_, p_), base = *this;
    while (e) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  Fp inverse() const {
    if (v_ == 0) throw not_invertible("0");
    return pow(p_ - 2);
  }

 private:
  // Two unbound zeros stay unbound; otherwise moduli must agree.
  static std::uint64_t merge(const Fp& a, const Fp& b) {
    if (a.p_ == 0) return b.p_;
    if (b.p_ == 0 || a.p_ == b.p_) return a.p_;
    throw std::invalid_argument("mixed prime-field moduli");
  }

  std::uint64_t v_;
  std::uint64_t p_;
};

inline bool is_zero(const Fp& x) { return x.value() == 0; }
inline Fp zero_like(const Fp& x) { return Fp(0, x.modulus() ? x.modulus() : 3); }
inline Fp one_like(const Fp& x) { return Fp(1, x.modulus() ? x.modulus() : 3); }
inline Fp inverse(const Fp& x) { return x.inverse(); }
inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }

/// Reduction of a rational mod p; the denominator must be prime to p.
inline Fp reduce_mod_p(const Rat& q, std::uint64_t p) {
  Int pp(static_cast<unsigned long>(p));
  Int num = numerator(q) % pp;
  Int den = denominator(q) % pp;
  if (den == 0) throw not_invertible(to_string(pp));
  std::uint64_t n = mpz_get_ui(Int(num >= 0 ? num : num + pp).get_mpz_t());
  std::uint64_t d = mpz_get_ui(den.get_mpz_t());
  return Fp(n, p) * Fp(d, p).inverse();
}

inline Fp from_int_like(const Fp& x, long n) {
  std::uint64_t p = x.modulus() ? x.modulus() : 3;
  long r = n % static_cast<long>(p);
  if (r < 0) r += static_cast<long>(p);
  return Fp(static_cast<std::uint64_t>(r), p);
}

}  // namespace ratmod
