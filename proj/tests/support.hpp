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

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qperm/matrix.hpp"

namespace qperm::testing {

inline SquareMatrix random_real(std::size_t n, std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  std::vector<Complex> e(n * n);
  for (Complex& z : e) {
    z = u(rng);
  }
  return SquareMatrix(n, e);
}

inline SquareMatrix random_complex(std::size_t n, std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  std::vector<Complex> e(n * n);
  for (Complex& z : e) {
    const double re = u(rng);
    z = {re, u(rng)};
  }
  return SquareMatrix(n, e);
}

namespace detail {

inline Complex expand(const SquareMatrix& a, std::size_t row, std::vector<bool>& used) {
  if (row == a.n()) {
    return 1.0;
  }
  Complex total = 0.0;
  for (std::size_t c = 0; c < a.n(); ++c) {
    if (!used[c] && a(row, c) != Complex{}) {
      used[c] = true;
      total += a(row, c) * expand(a, row + 1, used);
      used[c] = false;
    }
  }
  return total;
}

}  // namespace detail

/// Permanent by recursive expansion along rows.
inline Complex expansion_permanent(const SquareMatrix& a) {
  std::vector<bool> used(a.n(), false);
  return detail::expand(a, 0, used);
}

/// |x - y| <= rel * max(|x|, |y|), or <= abs_floor when both are small.
inline bool close(Complex x, Complex y, double rel, double abs_floor = 1e-12) {
  const double scale = std::max(std::abs(x), std::abs(y));
  return std::abs(x - y) <= std::max(rel * scale, abs_floor);
}

/// Spin configuration s -> (column spins x, row spins x').
inline void spins(std::uint64_t s, std::size_t n, std::vector<int>& x, std::vector<int>& xp) {
  x.assign(n, 1);
  xp.assign(n, 1);
  for (std::size_t k = 0; k < n; ++k) {
    x[k] = (s >> k) & 1 ? -1 : 1;
    xp[k] = (s >> (n + k)) & 1 ? -1 : 1;
  }
}

/// x'^T M x for real M.
inline double quadratic_form(const SquareMatrix& m, const std::vector<int>& x, const std::vector<int>& xp) {
  double q = 0.0;
  for (std::size_t p = 0; p < m.n(); ++p) {
    for (std::size_t k = 0; k < m.n(); ++k) {
      q += m(p, k).real() * xp[p] * x[k];
    }
  }
  return q;
}

/// Brute-force <phi|U(M; t)|phi> over all 4^N spin configurations.
inline Complex brute_overlap(const SquareMatrix& m, double t) {
  const std::size_t n = m.n();
  std::vector<int> x;
  std::vector<int> xp;
  Complex total = 0.0;
  const std::uint64_t count = std::uint64_t{1} << (2 * n);
  for (std::uint64_t s = 0; s < count; ++s) {
    spins(s, n, x, xp);
    total += std::exp(Complex{0.0, -t * quadratic_form(m, x, xp)});
  }
  return total / static_cast<double>(count);
}

/// Central finite-difference estimate of Per(A), evaluated per spin configuration:
/// (1/N!) avg_s P(s) sum_l C(N,l) i^l (2 sin(qB dt/2)/dt)^(N-l) (2 sin(qC dt/2)/dt)^l.
inline Complex truncated_fd_permanent(const SquareMatrix& a, double dt) {
  const std::size_t n = a.n();
  const SquareMatrix b = SquareMatrix::from_real(n, a.real_part());
  const SquareMatrix c = SquareMatrix::from_real(n, a.imag_part());
  std::vector<int> x;
  std::vector<int> xp;
  std::vector<double> binom(n + 1, 1.0);
  for (std::size_t l = 1; l <= n; ++l) {
    binom[l] = binom[l - 1] * static_cast<double>(n - l + 1) / static_cast<double>(l);
  }
  Complex total = 0.0;
  const std::uint64_t count = std::uint64_t{1} << (2 * n);
  for (std::uint64_t s = 0; s < count; ++s) {
    spins(s, n, x, xp);
    int parity = 1;
    for (std::size_t k = 0; k < n; ++k) {
      parity *= x[k] * xp[k];
    }
    const double db = 2.0 * std::sin(quadratic_form(b, x, xp) * dt / 2.0) / dt;
    const double dc = 2.0 * std::sin(quadratic_form(c, x, xp) * dt / 2.0) / dt;
    Complex inner = 0.0;
    for (std::size_t l = 0; l <= n; ++l) {
      inner += binom[l] * std::pow(Complex{0.0, 1.0}, static_cast<int>(l)) * std::pow(db, static_cast<double>(n - l)) *
               std::pow(dc, static_cast<double>(l));
    }
    total += static_cast<double>(parity) * inner;
  }
  return total / static_cast<double>(count) / std::tgamma(static_cast<double>(n) + 1.0);
}

}  // namespace qperm::testing
