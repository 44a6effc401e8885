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

#include "ratmod/extension.hpp"

#include "ratmod/factor.hpp"
#include "ratmod/qmatrix.hpp"

#include <cassert>
#include <stdexcept>

namespace ratmod {

FieldPtr make_field(const Poly<Rat>& modulus, Tri irreducible) {
  if (modulus.is_zero() || modulus.degree() < 1)
    throw std::invalid_argument("extension modulus must have degree >= 1");
  auto f = std::make_shared<ExtensionField>();
  f->modulus = monic(modulus);
  f->squarefree = is_squarefree(f->modulus);
  f->irreducible = irreducible;
  return f;
}

ExtElem::ExtElem(FieldPtr field, Poly<Rat> rep) : field_(std::move(field)) {
  if (field_) {
    rep_ = divrem(rep, field_->modulus).second;
    if (field_->degree() == 1) {
      // Degree-1 moduli are just Q in disguise; collapse to a plain rational.
      field_.reset();
    }
  } else {
    if (!rep.is_zero() && rep.degree() > 0)
      throw std::invalid_argument("nonconstant representative without a field");
    rep_ = std::move(rep);
  }
}

FieldPtr ExtElem::merge(const ExtElem& a, const ExtElem& b) {
  if (!a.field_) return b.field_;
  if (!b.field_) return a.field_;
  if (a.field_ == b.field_ || a.field_->modulus == b.field_->modulus)
    return a.field_;
  throw std::invalid_argument("mixed extension fields");
}

ExtElem ExtElem::inverse() const {
  if (rep_.is_zero()) throw not_invertible("0");
  if (!field_) return ExtElem(Rat(1) / rep_.coeff(0));
  auto [g, u, v] = extended_gcd(rep_, field_->modulus);
  (void)v;
  if (!(g.degree() == 0)) {
    // g is a nontrivial common factor with the modulus: a zero divisor.
    throw not_invertible(to_string(g));
  }
  return ExtElem(field_, u);
}

Rat ExtElem::norm() const {
  if (!field_) return rational_value();
  if (rep_.is_zero()) return Rat(0);
  return resultant(field_->modulus, rep_);
}

std::string to_string(const ExtElem& x) {
  if (x.is_rational()) return to_string(x.rational_value());
  return to_string(x.rep());
}

AdjoinResult adjoin_root(const Poly<Rat>& m) {
  if (m.is_zero() || m.degree() < 1)
    throw std::invalid_argument("adjoin_root needs degree >= 1");
  if (!is_squarefree(m)) throw not_squarefree();
  Poly<Rat> mm = monic(m);
  if (mm.degree() <= 8) {
    auto roots = rational_roots(mm);
    if (!roots.empty())
      return {roots.front().first, nullptr, ExtElem(roots.front().first)};
  }
  // Rational-root testing settles irreducibility up to degree 3 only;
  // higher degrees keep the unknown flag and lean on not_invertible.
  Tri irr = (mm.degree() <= 3) ? Tri::yes : Tri::unknown;
  FieldPtr field = make_field(mm, irr);
  ExtElem root(field, Poly<Rat>::identity(Rat(0)));
  return {std::nullopt, field, root};
}

namespace {

// Elements of K[b]/(b^2 - d) as pairs (u0, u1) = u0(t) + u1(t) b.
struct AlgElem {
  Poly<Rat> u0, u1;
};

AlgElem alg_mul(const AlgElem& x, const AlgElem& y, const Poly<Rat>& m,
                const Poly<Rat>& d) {
  auto red = [&](const Poly<Rat>& p) { return divrem(p, m).second; };
  return {red(x.u0 * y.u0 + x.u1 * y.u1 * d), red(x.u0 * y.u1 + x.u1 * y.u0)};
}

std::vector<Rat> alg_vec(const AlgElem& x, int k) {
  std::vector<Rat> v(static_cast<std::size_t>(2 * k), Rat(0));
  for (int i = 0; i <= x.u0.degree_or_neg1(); ++i) v[static_cast<std::size_t>(i)] = x.u0.coeff(i);
  for (int i = 0; i <= x.u1.degree_or_neg1(); ++i)
    v[static_cast<std::size_t>(k + i)] = x.u1.coeff(i);
  return v;
}

}  // namespace

CompositeSqrt adjoin_sqrt(const FieldPtr& base, const ExtElem& d) {
  if (!base) throw std::invalid_argument("adjoin_sqrt needs a genuine base field");
  if (is_zero(d)) throw std::invalid_argument("adjoin_sqrt of zero");
  const Poly<Rat>& m = base->modulus;
  const int k = m.degree();
  const int n = 2 * k;
  const Poly<Rat> drep = d.field() ? d.rep() : Poly<Rat>::constant(d.rational_value());

  for (int attempt = 0; attempt < 4 * n + 4; ++attempt) {
    const long c = (attempt % 2 == 0) ? attempt / 2 : -(attempt / 2 + 1);
    // gamma = b + c t
    AlgElem gamma{Rat(c) * Poly<Rat>::identity(Rat(0)), Poly<Rat>::constant(Rat(1))};
    std::vector<std::vector<Rat>> powers;
    AlgElem acc{Poly<Rat>::constant(Rat(1)), Poly<Rat>()};
    powers.push_back(alg_vec(acc, k));
    for (int j = 1; j <= n; ++j) {
      acc = alg_mul(acc, gamma, m, drep);
      powers.push_back(alg_vec(acc, k));
    }
    // Need gamma^0..gamma^{n-1} independent; then gamma generates the algebra.
    QMatrix mat(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        mat.at(i, j) = powers[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    if (mat.rank() < n) continue;

    auto minpoly_rhs = mat.solve(powers[static_cast<std::size_t>(n)]);
    assert(minpoly_rhs.has_value());
    std::vector<Rat> mod_coeffs(static_cast<std::size_t>(n) + 1, Rat(0));
    for (int i = 0; i < n; ++i) mod_coeffs[static_cast<std::size_t>(i)] = -(*minpoly_rhs)[static_cast<std::size_t>(i)];
    mod_coeffs[static_cast<std::size_t>(n)] = Rat(1);
    FieldPtr field = make_field(Poly<Rat>(std::move(mod_coeffs)), Tri::unknown);

    // Express t (and then b = gamma - c t) in the gamma power basis.
    AlgElem t_elem{Poly<Rat>::identity(Rat(0)), Poly<Rat>()};
    auto t_coords = mat.solve(alg_vec(t_elem, k));
    assert(t_coords.has_value());
    ExtElem t_image(field, Poly<Rat>(std::move(*t_coords)));
    ExtElem gamma_image(field, Poly<Rat>::identity(Rat(0)));
    ExtElem sqrt_image = gamma_image - ExtElem(Rat(c)) * t_image;
    return {field, t_image, sqrt_image};
  }
  throw domain_error("adjoin_sqrt: no primitive element found");
}

}  // namespace ratmod
