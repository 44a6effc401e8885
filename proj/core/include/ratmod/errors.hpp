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

#pragma once

#include <stdexcept>
#include <string>

namespace ratmod {

/// Base class for all mathematical-domain errors raised by the library.
/// Input/usage errors (bad JSON, bad flags) are reported with
/// std::invalid_argument instead; anything deriving from domain_error
/// here means the inputs were well-formed but outside an operation's
/// mathematical domain.
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Extended gcd against the modulus found a zero divisor. The offending
/// nontrivial factor of the modulus is carried as a coefficient string so
/// callers can split the extension.
class not_invertible : public domain_error {
 public:
  explicit not_invertible(std::string factor)
      : domain_error("element is not invertible modulo the given modulus"),
        factor_(std::move(factor)) {}
  const std::string& factor() const noexcept { return factor_; }

 private:
  std::string factor_;
};

class not_squarefree : public domain_error {
 public:
  not_squarefree() : domain_error("polynomial is not squarefree") {}
};

class inexact_division : public domain_error {
 public:
  inexact_division() : domain_error("polynomial division left a remainder") {}
};

class factor_degree_too_large : public domain_error {
 public:
  factor_degree_too_large()
      : domain_error("rational factorization is limited to degree <= 8") {}
};

class singular_matrix : public domain_error {
 public:
  singular_matrix() : domain_error("matrix has zero determinant") {}
};

class not_periodic : public domain_error {
 public:
  not_periodic() : domain_error("point is not periodic with the given period") {}
};

class chart_search_exhausted : public domain_error {
 public:
  chart_search_exhausted()
      : domain_error("no good chart found within the retry budget") {}
};

class not_an_nth_power : public domain_error {
 public:
  not_an_nth_power()
      : domain_error("polynomial is not an exact n-th power") {}
};

class degenerate_at_one : public domain_error {
 public:
  degenerate_at_one()
      : domain_error("some multiplier equals 1; the fixed-point identity "
                     "denominator vanishes") {}
};

class bad_valuation : public domain_error {
 public:
  bad_valuation() : domain_error("coordinate has negative p-adic valuation") {}
};

class not_degenerate : public domain_error {
 public:
  not_degenerate()
      : domain_error("resultant is nonzero; the point is not on the boundary") {}
};

class not_stable : public domain_error {
 public:
  not_stable() : domain_error("point is not stable") {}
};

class all_zero : public domain_error {
 public:
  all_zero()
      : domain_error("(rho, rho*sigma1, rho*sigma2) vanish simultaneously; "
                     "the input point is not stable") {}
};

class zero_point : public domain_error {
 public:
  zero_point() : domain_error("both forms are identically zero") {}
};

}  // namespace ratmod
