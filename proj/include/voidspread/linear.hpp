// Copyright 2026 The voidspread Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense Gaussian elimination over Z_q for prime q. Matrices are tiny
// (constraint rows by digit columns), so no pivot-selection heuristics.

#pragma once

#include <stdexcept>
#include <vector>

namespace voidspread {

inline bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

inline int inverse_mod(int a, int q) {
  a = ((a % q) + q) % q;
  if (a == 0) throw std::invalid_argument("inverse_mod: zero");
  // Extended Euclid.
  int r0 = q, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    int k = r0 / r1;
    int r2 = r0 - k * r1;
    int s2 = s0 - k * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) throw std::invalid_argument("inverse_mod: not invertible");
  return ((s0 % q) + q) % q;
}

// Row-major matrix over Z_q with `cols` columns; rows are appended flat.
struct ModMatrix {
  int q = 2;
  int cols = 0;
  std::vector<int> data;

  int rows() const { return cols == 0 ? 0 : static_cast<int>(data.size()) / cols; }
  int& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  int at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
  void add_row(const std::vector<int>& row) {
    for (int v : row) data.push_back(((v % q) + q) % q);
  }
};

// In-place reduction; returns the rank. If `vars` < cols the trailing
// columns are treated as an augmented right-hand side: they never produce
// pivots, and `consistent` (when non-null) reports whether any reduced row
// is zero on the variable part but nonzero on the augmented part.
inline int row_reduce(ModMatrix& m, int vars = -1, bool* consistent = nullptr) {
  if (vars < 0) vars = m.cols;
  if (consistent) *consistent = true;
  const int nrows = m.rows();
  int rank = 0;
  for (int col = 0; col < vars && rank < nrows; ++col) {
    int pivot = -1;
    for (int r = rank; r < nrows; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    const int inv = inverse_mod(m.at(rank, col), m.q);
    for (int c = col; c < m.cols; ++c)
      m.at(rank, c) = (m.at(rank, c) * inv) % m.q;
    for (int r = 0; r < nrows; ++r) {
      if (r == rank) continue;
      const int f = m.at(r, col);
      if (f == 0) continue;
      for (int c = col; c < m.cols; ++c)
        m.at(r, c) = ((m.at(r, c) - f * m.at(rank, c)) % m.q + m.q) % m.q;
    }
    ++rank;
  }
  if (consistent) {
    for (int r = rank; r < nrows; ++r) {
      bool lhs_zero = true;
      for (int c = 0; c < vars; ++c)
        if (m.at(r, c) != 0) {
          lhs_zero = false;
          break;
        }
      if (!lhs_zero) continue;
      for (int c = vars; c < m.cols; ++c)
        if (m.at(r, c) != 0) {
          *consistent = false;
          return rank;
        }
    }
  }
  return rank;
}

}  // namespace voidspread
