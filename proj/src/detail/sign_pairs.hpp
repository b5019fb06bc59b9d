// Copyright 2026 The qperm Authors
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

#pragma once

#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace qperm::detail {

/// Visits every sign-vector pair (x, x') in {-1, 1}^N x {-1, 1}^N with the row vector x'
/// taken from [row_begin, row_end) and the column vector x ranging over its first
/// `column_bits` spins (the rest stay +1). Calls visit(sign, qb, qc) with
/// sign = prod_k x_k x'_k, qb = x'^T B x, qc = x'^T C x (0 when C is empty).
///
/// x' is rebuilt from scratch per outer index; x walks a Gray code so each inner step is
/// an O(1) update of the two bilinear forms. Bit p of an index set means spin p is -1.
template <typename Visit>
void for_each_sign_pair(std::size_t n, std::span<const double> b, std::span<const double> c,
                        std::uint64_t row_begin, std::uint64_t row_end, std::size_t column_bits, Visit&& visit) {
  const bool with_c = !c.empty();
  const std::uint64_t inner = std::uint64_t{1} << column_bits;
  std::vector<double> vb(n);
  std::vector<double> vc(n);
  std::vector<double> x(n);
  for (std::uint64_t rows = row_begin; rows < row_end; ++rows) {
    for (std::size_t k = 0; k < n; ++k) {
      double accb = 0.0;
      double accc = 0.0;
      for (std::size_t p = 0; p < n; ++p) {
        const double xp = (rows >> p) & 1U ? -1.0 : 1.0;
        accb += xp * b[p * n + k];
        if (with_c) {
          accc += xp * c[p * n + k];
        }
      }
      vb[k] = accb;
      vc[k] = accc;
    }
    std::fill(x.begin(), x.end(), 1.0);
    double qb = std::accumulate(vb.begin(), vb.end(), 0.0);
    double qc = with_c ? std::accumulate(vc.begin(), vc.end(), 0.0) : 0.0;
    int sign = std::popcount(rows) % 2 == 0 ? 1 : -1;
    for (std::uint64_t i = 0; i < inner; ++i) {
      if (i != 0) {
        const int k = std::countr_zero(i);
        qb -= 2.0 * x[k] * vb[k];
        if (with_c) {
          qc -= 2.0 * x[k] * vc[k];
        }
        x[k] = -x[k];
        sign = -sign;
      }
      visit(sign, qb, qc);
    }
  }
}

}  // namespace qperm::detail
