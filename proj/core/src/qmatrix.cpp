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

#include "ratmod/qmatrix.hpp"

#include <cassert>
#include <utility>

namespace ratmod {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  assert(cols_ == o.rows_);
  QMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& aik = at(i, k);
      if (is_zero(aik)) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (!is_zero(o.at(k, j))) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

QMatrix QMatrix::operator-() const {
  QMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = -at(i, j);
  return r;
}

Rat QMatrix::trace() const {
  assert(rows_ == cols_);
  Rat t(0);
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

std::vector<Rat> QMatrix::charpoly_of_T_plus() const {
  assert(rows_ == cols_);
  const int n = rows_;
  // det(T I + A) = det(T I - B) with B = -A.
  QMatrix b = -*this;
  std::vector<Rat> c(static_cast<std::size_t>(n) + 1, Rat(0));
  c[0] = Rat(1);
  QMatrix m = b;
  for (int k = 1; k <= n; ++k) {
    c[static_cast<std::size_t>(k)] = -m.trace() / Rat(k);
    if (k == n) break;
    for (int i = 0; i < n; ++i) m.at(i, i) += c[static_cast<std::size_t>(k)];
    m = b * m;
  }
  return c;
}

namespace {

// Row-reduces `m` in place (optionally with an augmented column in `rhs`),
// returning the pivot column of each pivot row.
std::vector<int> row_reduce(std::vector<std::vector<Rat>>& m,
                            std::vector<Rat>* rhs) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!is_zero(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)])) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[static_cast<std::size_t>(p)], m[static_cast<std::size_t>(r)]);
    if (rhs) std::swap((*rhs)[static_cast<std::size_t>(p)], (*rhs)[static_cast<std::size_t>(r)]);
    Rat inv = Rat(1) / m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    for (int j = c; j < cols; ++j) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] *= inv;
    if (rhs) (*rhs)[static_cast<std::size_t>(r)] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      Rat f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (is_zero(f)) continue;
      for (int j = c; j < cols; ++j)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            f * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
      if (rhs) (*rhs)[static_cast<std::size_t>(i)] -= f * (*rhs)[static_cast<std::size_t>(r)];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int QMatrix::rank() const {
  std::vector<std::vector<Rat>> m(static_cast<std::size_t>(rows_),
                                  std::vector<Rat>(static_cast<std::size_t>(cols_)));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = at(i, j);
  return static_cast<int>(row_reduce(m, nullptr).size());
}

std::optional<std::vector<Rat>> QMatrix::solve(const std::vector<Rat>& b) const {
  assert(static_cast<int>(b.size()) == rows_);
  std::vector<std::vector<Rat>> m(static_cast<std::size_t>(rows_),
                                  std::vector<Rat>(static_cast<std::size_t>(cols_)));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = at(i, j);
  std::vector<Rat> rhs = b;
  std::vector<int> pivots = row_reduce(m, &rhs);
  // Consistency: a zero row with nonzero rhs means no solution.
  for (int i = static_cast<int>(pivots.size()); i < rows_; ++i)
    if (!is_zero(rhs[static_cast<std::size_t>(i)])) return std::nullopt;
  std::vector<Rat> x(static_cast<std::size_t>(cols_), Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[static_cast<std::size_t>(pivots[r])] = rhs[r];
  return x;
}

std::vector<std::vector<Rat>> QMatrix::kernel() const {
  std::vector<std::vector<Rat>> m(static_cast<std::size_t>(rows_),
                                  std::vector<Rat>(static_cast<std::size_t>(cols_)));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = at(i, j);
  std::vector<int> pivots = row_reduce(m, nullptr);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    std::vector<Rat> v(static_cast<std::size_t>(cols_), Rat(0));
    v[static_cast<std::size_t>(free_col)] = Rat(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<std::size_t>(pivots[r])] = -m[r][static_cast<std::size_t>(free_col)];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace ratmod
