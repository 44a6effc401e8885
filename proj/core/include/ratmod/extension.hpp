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

/// Simple algebraic extensions Q[t]/(m) with a single monic modulus.
///
/// There are no towers: nested needs (a square root over a cubic field,
/// say) are met by computing a primitive element and re-adjoining over Q.
/// Arithmetic is valid whenever the inverses it takes exist; when the
/// modulus is not irreducible, division can hit a zero divisor and throws
/// not_invertible carrying a nontrivial factor of the modulus, which is
/// the caller's cue to split the extension.
///
/// An ExtElem without a field is a plain rational constant; it combines
/// freely with elements of any field. This keeps ExtElem a regular value
/// type usable as a scalar domain for the generic polynomial code.

#pragma once

#include "ratmod/poly.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>

namespace ratmod {

enum class Tri { yes, no, unknown };

struct ExtensionField {
  Poly<Rat> modulus;  // monic, degree >= 1
  bool squarefree = true;
  Tri irreducible = Tri::unknown;

  int degree() const { return modulus.degree(); }
};

using FieldPtr = std::shared_ptr<const ExtensionField>;

/// Builds a field description; the modulus is made monic.
FieldPtr make_field(const Poly<Rat>& modulus, Tri irreducible = Tri::unknown);

class ExtElem {
 public:
  ExtElem() = default;
  ExtElem(const Rat& r) : rep_(r == 0 ? Poly<Rat>() : Poly<Rat>::constant(r)) {}
  ExtElem(long n) : ExtElem(Rat(n)) {}
  ExtElem(FieldPtr field, Poly<Rat> rep);

  const FieldPtr& field() const { return field_; }
  const Poly<Rat>& rep() const { return rep_; }

  bool is_rational() const { return rep_.is_zero() || rep_.degree() == 0; }

  /// The rational value of a constant element.
  Rat rational_value() const {
    return rep_.is_zero() ? Rat(0) : rep_.coeff(0);
  }

  friend ExtElem operator+(const ExtElem& a, const ExtElem& b) {
    FieldPtr f = merge(a, b);
    return ExtElem(f, a.rep_ + b.rep_);
  }
  friend ExtElem operator-(const ExtElem& a, const ExtElem& b) {
    FieldPtr f = merge(a, b);
    return ExtElem(f, a.rep_ - b.rep_);
  }
  friend ExtElem operator*(const ExtElem& a, const ExtElem& b) {
    FieldPtr f = merge(a, b);
    return ExtElem(f, a.rep_ * b.rep_);
  }
  ExtElem operator-() const { return ExtElem(field_, -rep_, already_reduced{}); }
  ExtElem& operator+=(const ExtElem& o) { return *this = *this + o; }
  ExtElem& operator-=(const ExtElem& o) { return *this = *this - o; }
  ExtElem& operator*=(const ExtElem& o) { return *this = *this * o; }

  friend bool operator==(const ExtElem& a, const ExtElem& b) {
    merge(a, b);
    return a.rep_ == b.rep_;
  }
  friend bool operator!=(const ExtElem& a, const ExtElem& b) { return !(a == b); }

  /// Multiplicative inverse in the quotient ring (extended gcd).
  ExtElem inverse() const;

  /// Norm down to Q: the resultant of the modulus with the representative,
  /// i.e. the determinant of multiplication by this element. Constants
  /// without a field are their own norm.
  Rat norm() const;

 private:
  struct already_reduced {};
  ExtElem(FieldPtr f, Poly<Rat> rep, already_reduced)
      : field_(std::move(f)), rep_(std::move(rep)) {}

  static FieldPtr merge(const ExtElem& a, const ExtElem& b);

  FieldPtr field_;   // null for plain rationals
  Poly<Rat> rep_;    // reduced mod the modulus when field_ is set
};

inline bool is_zero(const ExtElem& x) { return x.rep().is_zero(); }
inline ExtElem zero_like(const ExtElem& x) {
  return x.field() ? ExtElem(x.field(), Poly<Rat>()) : ExtElem(Rat(0));
}
inline ExtElem one_like(const ExtElem& x) {
  return x.field() ? ExtElem(x.field(), Poly<Rat>::constant(Rat(1)))
                   : ExtElem(Rat(1));
}
inline ExtElem from_int_like(const ExtElem& x, long n) {
  return x.field() ? ExtElem(x.field(), Poly<Rat>::constant(Rat(n)))
                   : ExtElem(Rat(n));
}
inline ExtElem inverse(const ExtElem& x) { return x.inverse(); }

std::string to_string(const ExtElem& x);

/// Result of adjoining a root of a monic squarefree polynomial. Either the
/// polynomial had a rational root (rational_root is set, root is that
/// constant) or a genuine extension was built.
struct AdjoinResult {
  std::optional<Rat> rational_root;
  FieldPtr field;    // null in the rational branch
  ExtElem root;
};

/// Adjoins a root of m (degree >= 1). m must be squarefree (checked via
/// gcd(m, m')); throws not_squarefree otherwise. When m has a rational
/// root, the prime field and the smallest such root are returned instead
/// of an extension. Irreducibility of the modulus is decided exactly up
/// to degree 3; beyond that the field carries Tri::unknown.
AdjoinResult adjoin_root(const Poly<Rat>& m);

/// A single-modulus presentation of K(sqrt(d)) for K = Q[t]/(m), d in K not
/// a square in Q (and not zero). Returns the new field L together with the
/// images of t and sqrt(d) in L. The primitive element is sqrt(d) + c*t for
/// the smallest workable shift c.
struct CompositeSqrt {
  FieldPtr field;
  ExtElem t_image;
  ExtElem sqrt_image;
};
CompositeSqrt adjoin_sqrt(const FieldPtr& base, const ExtElem& d);

}  // namespace ratmod
