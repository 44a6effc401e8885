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

#include "ratmod/factor.hpp"

#include "ratmod/fp.hpp"
#include "ratmod/rng.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ratmod {

namespace {

constexpr int kMaxFactorDegree = 8;

using FpPoly = Poly<Fp>;

FpPoly reduce_poly(const Poly<Rat>& f, std::uint64_t p) {
  std::vector<Fp> c;
  c.reserve(f.coeffs().size());
  for (const Rat& q : f.coeffs()) c.push_back(reduce_mod_p(q, p));
  return FpPoly(std::move(c));
}

// --- arithmetic on Z/q[x] with q a prime power (coefficients in [0, q)) ---

struct ZqPoly {
  std::vector<Int> c;  // constant first, trimmed

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  Int coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<std::size_t>(i)] : Int(0);
  }
};

Int mod_pos(const Int& a, const Int& q) {
  Int r = a % q;
  if (r < 0) r += q;
  return r;
}

ZqPoly zq_reduce(const std::vector<Int>& coeffs, const Int& q) {
  ZqPoly r;
  r.c.reserve(coeffs.size());
  for (const Int& a : coeffs) r.c.push_back(mod_pos(a, q));
  r.trim();
  return r;
}

ZqPoly zq_mul(const ZqPoly& a, const ZqPoly& b, const Int& q) {
  if (a.is_zero() || b.is_zero()) return {};
  ZqPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % q;
  r.trim();
  return r;
}

ZqPoly zq_add(const ZqPoly& a, const ZqPoly& b, const Int& q) {
  ZqPoly r;
  r.c.assign(std::max(a.c.size(), b.c.size()), Int(0));
  for (std::size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = mod_pos(a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i)), q);
  r.trim();
  return r;
}

ZqPoly zq_sub(const ZqPoly& a, const ZqPoly& b, const Int& q) {
  ZqPoly r;
  r.c.assign(std::max(a.c.size(), b.c.size()), Int(0));
  for (std::size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = mod_pos(a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i)), q);
  r.trim();
  return r;
}

// Division by a monic divisor is always possible over Z/q.
std::pair<ZqPoly, ZqPoly> zq_divrem_monic(const ZqPoly& a, const ZqPoly& b,
                                          const Int& q) {
  assert(!b.is_zero() && b.c.back() == 1);
  if (a.is_zero() || a.degree() < b.degree()) return {{}, a};
  ZqPoly rem = a;
  ZqPoly quo;
  quo.c.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1), Int(0));
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    Int f = rem.coeff(i + b.degree());
    if (f == 0) continue;
    quo.c[static_cast<std::size_t>(i)] = f;
    for (int j = 0; j <= b.degree(); ++j)
      rem.c[static_cast<std::size_t>(i + j)] =
          mod_pos(rem.coeff(i + j) - f * b.coeff(j), q);
  }
  rem.trim();
  quo.trim();
  return {quo, rem};
}

ZqPoly zq_from_fp(const FpPoly& f) {
  ZqPoly r;
  for (const Fp& x : f.coeffs()) r.c.push_back(Int(static_cast<unsigned long>(x.value())));
  r.trim();
  return r;
}

// --- mod-p factorization of a monic squarefree polynomial ---

void equal_degree_split(const FpPoly& f, int piece_degree, std::uint64_t p,
                        Rng& rng, std::vector<FpPoly>& out) {
  if (f.degree() == piece_degree) {
    out.push_back(f);
    return;
  }
  // Cantor-Zassenhaus: gcd(r^((p^e-1)/2) - 1, f) splits f with probability
  // about 1/2 per random r.
  Int pe = pow(Int(static_cast<unsigned long>(p)),
               static_cast<unsigned long>(piece_degree));
  Int exp = (pe - 1) / 2;
  for (;;) {
    std::vector<Fp> rc;
    for (int i = 0; i < f.degree(); ++i)
      rc.push_back(Fp(rng.below(p), p));
    FpPoly r(std::move(rc));
    if (r.is_zero() || r.degree() == 0) continue;
    FpPoly s = mod_pow(r, exp, f);
    s = s - FpPoly::constant(Fp(1, p));
    FpPoly g = gcd_monic(s, f);
    if (!g.is_zero() && g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, piece_degree, p, rng, out);
      equal_degree_split(exact_div(f, g), piece_degree, p, rng, out);
      return;
    }
  }
}

std::vector<FpPoly> factor_mod_p(const FpPoly& f_in, std::uint64_t p, Rng& rng) {
  std::vector<FpPoly> out;
  FpPoly f = monic(f_in);
  FpPoly x = FpPoly::identity(Fp(0, p));
  FpPoly h = x;
  int d = 0;
  while (!(f.degree() == 0)) {
    ++d;
    if (2 * d > f.degree()) {
      out.push_back(f);  // what is left is irreducible
      break;
    }
    h = mod_pow(h, Int(static_cast<unsigned long>(p)), f);
    FpPoly g = gcd_monic(h - x, f);
    if (!(g.degree() == 0)) {
      equal_degree_split(g, d, p, rng, out);
      f = exact_div(f, g);
      h = divrem(h, f).second;
    }
  }
  return out;
}

// --- quadratic Hensel lifting ---

struct HenselPair {
  ZqPoly g, h, a, b;  // f = g*h, a*g + b*h = 1 (mod q)
};

// One quadratic step: from identities mod q to identities mod q^2.
HenselPair hensel_step(const ZqPoly& f, const HenselPair& in, const Int& q) {
  const Int q2 = q * q;
  ZqPoly g = zq_reduce(in.g.c, q2), h = zq_reduce(in.h.c, q2);
  ZqPoly a = zq_reduce(in.a.c, q2), b = zq_reduce(in.b.c, q2);
  ZqPoly e = zq_sub(f, zq_mul(g, h, q2), q2);
  auto [qq, r] = zq_divrem_monic(zq_mul(b, e, q2), g, q2);
  ZqPoly g1 = zq_add(g, r, q2);
  ZqPoly h1 = zq_add(h, zq_add(zq_mul(a, e, q2), zq_mul(qq, h, q2), q2), q2);
  ZqPoly one;
  one.c = {Int(1)};
  ZqPoly e2 = zq_sub(zq_add(zq_mul(a, g1, q2), zq_mul(b, h1, q2), q2), one, q2);
  auto [qq2, r2] = zq_divrem_monic(zq_mul(b, e2, q2), g1, q2);
  ZqPoly b1 = zq_sub(b, r2, q2);
  ZqPoly a1 = zq_sub(a, zq_add(zq_mul(a, e2, q2), zq_mul(qq2, h1, q2), q2), q2);
  return {g1, h1, a1, b1};
}

// Lifts the full modular factorization of a monic f from mod p to mod p^(2^s),
// p^(2^s) >= target, by recursive two-way splitting.
std::vector<ZqPoly> hensel_lift_tree(const ZqPoly& f,
                                     const std::vector<FpPoly>& factors,
                                     std::uint64_t p, const Int& target,
                                     const Int& q_final) {
  if (factors.size() == 1) return {zq_reduce(f.c, q_final)};
  const std::size_t half = factors.size() / 2;
  std::vector<FpPoly> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<FpPoly> right(factors.begin() + static_cast<long>(half), factors.end());
  Fp one(1, p);
  FpPoly gp = FpPoly::constant(one), hp = FpPoly::constant(one);
  for (const auto& x : left) gp = gp * x;
  for (const auto& x : right) hp = hp * x;
  auto [gcd, a, b] = extended_gcd(gp, hp);
  assert(gcd.degree() == 0);
  HenselPair pair{zq_from_fp(gp), zq_from_fp(hp), zq_from_fp(a), zq_from_fp(b)};
  Int q(static_cast<unsigned long>(p));
  while (q < target) {
    pair = hensel_step(zq_reduce(f.c, q * q), pair, q);
    q = q * q;
  }
  ZqPoly gq = zq_reduce(pair.g.c, q_final);
  ZqPoly hq = zq_reduce(pair.h.c, q_final);
  auto l = hensel_lift_tree(gq, left, p, target, q_final);
  auto r = hensel_lift_tree(hq, right, p, target, q_final);
  l.insert(l.end(), r.begin(), r.end());
  return l;
}

// --- recombination over Z ---

std::vector<Int> balanced(const ZqPoly& f, const Int& q) {
  std::vector<Int> out;
  out.reserve(f.c.size());
  for (const Int& x : f.c) out.push_back(2 * x > q ? x - q : x);
  return out;
}

Poly<Rat> poly_from_ints(const std::vector<Int>& v) {
  std::vector<Rat> c;
  c.reserve(v.size());
  for (const Int& x : v) c.emplace_back(x);
  return Poly<Rat>(std::move(c));
}

// Factors a monic squarefree integer polynomial (degree >= 2).
std::vector<Poly<Rat>> zassenhaus_monic(const Poly<Rat>& f, Rng& rng) {
  const int n = f.degree();
  // Prime selection: f must stay squarefree mod p.
  static const std::uint64_t primes[] = {10007, 10009, 10037, 10039, 10061,
                                         10067, 10069, 10079, 10091, 10093,
                                         10099, 10103, 10111, 10133, 10139};
  std::uint64_t p = 0;
  FpPoly fp_poly;
  for (std::uint64_t cand : primes) {
    FpPoly g = reduce_poly(f, cand);
    if (g.degree() != n) continue;  // cannot happen for monic f
    if (gcd_monic(g, derivative(g)).degree() == 0) {
      p = cand;
      fp_poly = g;
      break;
    }
  }
  if (p == 0) throw std::logic_error("no usable prime for factorization");

  std::vector<FpPoly> modular = factor_mod_p(fp_poly, p, rng);
  if (modular.size() == 1) return {f};

  // Coefficient bound for monic divisors (Mignotte, loose but safe).
  Rat norm2_sq(0);
  for (const Rat& c : f.coeffs()) norm2_sq += c * c;
  Int norm_ceil = numerator(norm2_sq) / denominator(norm2_sq) + 1;
  Int bound = (Int(1) << (2 * n)) * (sqrt(norm_ceil) + 1);
  Int target = 2 * bound + 1;
  Int q(static_cast<unsigned long>(p));
  while (q < target) q = q * q;

  ZqPoly fq = zq_reduce([&] {
    std::vector<Int> v;
    for (const Rat& c : f.coeffs()) v.push_back(numerator(c));
    return v;
  }(), q);
  std::vector<ZqPoly> lifted = hensel_lift_tree(fq, modular, p, target, q);

  // Subset recombination: try products of k modular factors as true divisors.
  std::vector<Poly<Rat>> out;
  Poly<Rat> rem_poly = f;
  std::vector<ZqPoly> pool = lifted;
  bool progress = true;
  while (progress) {
    progress = false;
    const std::size_t m = pool.size();
    if (m == 0) break;
    for (std::size_t k = 1; !progress && 2 * k <= m; ++k) {
      // Iterate k-subsets by bitmask (m <= 8).
      for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
        ZqPoly prod;
        prod.c = {Int(1)};
        for (std::size_t i = 0; i < m; ++i)
          if (mask & (1u << i)) prod = zq_mul(prod, pool[i], q);
        Poly<Rat> cand = poly_from_ints(balanced(prod, q));
        auto [quo, rem] = divrem(rem_poly, cand);
        if (rem.is_zero()) {
          out.push_back(cand);
          rem_poly = quo;
          std::vector<ZqPoly> next;
          for (std::size_t i = 0; i < m; ++i)
            if (!(mask & (1u << i))) next.push_back(pool[i]);
          pool = std::move(next);
          progress = true;
          break;
        }
      }
    }
  }
  if (!(rem_poly.degree() == 0)) out.push_back(rem_poly);
  return out;
}

Poly<Rat> normalize_factor(const Poly<Rat>& f) { return primitive_part(f); }

}  // namespace

Factorization factor_poly(const Poly<Rat>& f) {
  if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  if (f.degree() > kMaxFactorDegree) throw factor_degree_too_large();
  Factorization out;
  out.unit = f.degree() == 0 ? f.coeff(0) : Rat(1);
  if (f.degree() == 0) return out;

  Rng rng(0x5eedf00du);  // fixed: factorization must be deterministic
  for (const auto& [sf, mult] : squarefree_decomposition(f)) {
    // Monicize by scaling so the Hensel machinery sees a monic polynomial:
    // g(x) = lc^(deg-1) * sf(x / lc) is monic with integer coefficients.
    Rat lc = sf.leading();
    Poly<Rat> g = sf;
    if (lc != 1) {
      std::vector<Rat> c(sf.coeffs());
      const int deg = sf.degree();
      for (int i = 0; i <= deg; ++i)
        c[static_cast<std::size_t>(i)] *= pow(lc, deg - 1 - i);
      g = Poly<Rat>(std::move(c));
    }
    std::vector<Poly<Rat>> irred =
        g.degree() == 1 ? std::vector<Poly<Rat>>{g} : zassenhaus_monic(g, rng);
    for (Poly<Rat>& h : irred) {
      if (lc != 1) {
        // Undo the scaling substitution x -> lc*x.
        std::vector<Rat> c(h.coeffs());
        Rat pw(1);
        for (std::size_t i = 0; i < c.size(); ++i) {
          c[i] *= pw;
          pw *= lc;
        }
        h = Poly<Rat>(std::move(c));
      }
      out.factors.push_back({normalize_factor(h), mult});
    }
  }

  // Order factors deterministically: by degree, then coefficients.
  std::sort(out.factors.begin(), out.factors.end(),
            [](const PolyFactor& a, const PolyFactor& b) {
              if (a.factor.degree_or_neg1() != b.factor.degree_or_neg1())
                return a.factor.degree_or_neg1() < b.factor.degree_or_neg1();
              for (int i = a.factor.degree(); i >= 0; --i) {
                if (a.factor.coeff(i) != b.factor.coeff(i))
                  return a.factor.coeff(i) < b.factor.coeff(i);
              }
              return a.exponent < b.exponent;
            });

  // The product of the normalized factors reproduces the input up to a
  // rational unit; recover it and verify exactness.
  Poly<Rat> prod = Poly<Rat>::constant(Rat(1));
  for (const auto& pf : out.factors)
    prod = prod * poly_pow(pf.factor, static_cast<unsigned long>(pf.exponent));
  out.unit = f.leading() / prod.leading();
  if (!(out.unit * prod == f))
    throw std::logic_error("factorization self-check failed");
  return out;
}

std::vector<std::pair<Rat, int>> rational_roots(const Poly<Rat>& f) {
  std::vector<std::pair<Rat, int>> roots;
  for (const auto& pf : factor_poly(f).factors)
    if (pf.factor.degree() == 1)
      roots.emplace_back(-pf.factor.coeff(0) / pf.factor.coeff(1), pf.exponent);
  std::sort(roots.begin(), roots.end());
  return roots;
}

FormFactorization factor_form(const BinaryForm<Rat>& f) {
  if (f.is_zero()) throw std::invalid_argument("cannot factor the zero form");
  if (f.degree() > kMaxFactorDegree) throw factor_degree_too_large();
  FormFactorization out;
  const int ymult = y_multiplicity(f);
  Poly<Rat> deh = dehomogenize(f);
  Factorization base = factor_poly(deh);
  out.unit = base.unit;
  if (ymult > 0) {
    BinaryForm<Rat> y(1, {Rat(0), Rat(1)});
    out.factors.push_back({y, ymult});
  }
  for (const auto& pf : base.factors)
    out.factors.push_back(
        {homogenize(pf.factor, pf.factor.degree(), Rat(0)), pf.exponent});
  return out;
}

}  // namespace ratmod
