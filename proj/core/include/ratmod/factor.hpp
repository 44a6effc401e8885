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

/// Exact factorization over Q for the small degrees this library needs
/// (<= 8: fixed-point forms for d <= 5, multiplier cubics, boundary
/// quadratics). Pipeline: Yun squarefree decomposition, then mod-p
/// distinct/equal-degree splitting, quadratic Hensel lifting and subset
/// recombination. Everything is exact; no floating point is involved.

#pragma once

#include "ratmod/binary_form.hpp"
#include "ratmod/poly.hpp"

#include <vector>

namespace ratmod {

struct PolyFactor {
  Poly<Rat> factor;  // irreducible over Q, primitive integer, positive lead
  int exponent;
};

struct Factorization {
  Rat unit;  // input = unit * prod(factor^exponent)
  std::vector<PolyFactor> factors;
};

/// Irreducible factorization over Q. Throws factor_degree_too_large for
/// degree > 8 and inexact behavior is impossible: the result is verified
/// to multiply back to the input.
Factorization factor_poly(const Poly<Rat>& f);

/// Rational roots with multiplicity (pairs of root and multiplicity),
/// sorted ascending. Degree <= 8.
std::vector<std::pair<Rat, int>> rational_roots(const Poly<Rat>& f);

struct FormFactor {
  BinaryForm<Rat> factor;  // irreducible; includes Y when [1:0] is a root
  int exponent;
};

struct FormFactorization {
  Rat unit;
  std::vector<FormFactor> factors;
};

/// Factorization of a nonzero binary form of degree <= 8 over Q, with the
/// power of Y (the root at [1:0]) listed like any other factor.
FormFactorization factor_form(const BinaryForm<Rat>& f);

}  // namespace ratmod
