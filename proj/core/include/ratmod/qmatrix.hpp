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

/// Small dense matrices over Q: products, characteristic polynomials and
/// exact Gaussian elimination. Sizes here top out around 54x54.

#pragma once

#include "ratmod/rational.hpp"

#include <optional>
#include <vector>

namespace ratmod {

class QMatrix {
 public:
  QMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rat(0)) {}

  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[idx(i, j)]; }
  const Rat& at(int i, int j) const { return a_[idx(i, j)]; }

  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator-() const;

  Rat trace() const;

  /// Coefficients (sigma_0 .. sigma_n) of det(T*I + A) = sum sigma_i T^{n-i},
  /// computed by the Faddeev-LeVerrier trace recursion (the only divisions
  /// are by the integers 1..n).
  std::vector<Rat> charpoly_of_T_plus() const;

  int rank() const;

  /// One solution of A x = b, if the system is consistent.
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

  /// Basis of the null space.
  std::vector<std::vector<Rat>> kernel() const;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
  }

  int rows_, cols_;
  std::vector<Rat> a_;
};

}  // namespace ratmod
