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

#include "qperm/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "qperm/error.hpp"

namespace qperm {

SquareMatrix::SquareMatrix(std::size_t n) : SquareMatrix(n, std::vector<Complex>(n * n)) {}

SquareMatrix::SquareMatrix(std::size_t n, std::vector<Complex> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ == 0) {
    throw InvalidInput("matrix dimension must be positive");
  }
  if (entries_.size() != n_ * n_) {
    throw InvalidInput("expected " + std::to_string(n_ * n_) + " entries for a " + std::to_string(n_) +
                       "x" + std::to_string(n_) + " matrix, got " + std::to_string(entries_.size()));
  }
  real_.reserve(entries_.size());
  imag_.reserve(entries_.size());
  for (const Complex& z : entries_) {
    real_.push_back(z.real());
    imag_.push_back(z.imag());
    is_real_ = is_real_ && z.imag() == 0.0;
  }
}

SquareMatrix SquareMatrix::identity(std::size_t n) {
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    e[i * n + i] = 1.0;
  }
  return SquareMatrix(n, std::move(e));
}

SquareMatrix SquareMatrix::from_real(std::size_t n, std::span<const double> entries) {
  return SquareMatrix(n, std::vector<Complex>(entries.begin(), entries.end()));
}

SquareMatrix SquareMatrix::from_parts(std::size_t n, std::span<const double> real, std::span<const double> imag) {
  if (real.size() != imag.size()) {
    throw InvalidInput("real and imaginary parts differ in length");
  }
  std::vector<Complex> e(real.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = {real[i], imag[i]};
  }
  return SquareMatrix(n, std::move(e));
}

SquareMatrix SquareMatrix::transpose() const {
  std::vector<Complex> e(entries_.size());
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      e[c * n_ + r] = entries_[r * n_ + c];
    }
  }
  return SquareMatrix(n_, std::move(e));
}

SquareMatrix SquareMatrix::conjugate() const {
  std::vector<Complex> e(entries_);
  for (Complex& z : e) {
    z = std::conj(z);
  }
  return SquareMatrix(n_, std::move(e));
}

SquareMatrix SquareMatrix::scaled(Complex factor) const {
  std::vector<Complex> e(entries_);
  for (Complex& z : e) {
    z *= factor;
  }
  return SquareMatrix(n_, std::move(e));
}

SquareMatrix SquareMatrix::direct_sum_one() const {
  const std::size_t m = n_ + 1;
  std::vector<Complex> e(m * m);
  for (std::size_t r = 0; r < n_; ++r) {
    std::copy_n(entries_.begin() + r * n_, n_, e.begin() + r * m);
  }
  e[m * m - 1] = 1.0;
  return SquareMatrix(m, std::move(e));
}

SquareMatrix SquareMatrix::permuted(std::span<const std::size_t> row_order,
                                    std::span<const std::size_t> col_order) const {
  if (row_order.size() != n_ || col_order.size() != n_) {
    throw InvalidInput("permutation length does not match matrix dimension");
  }
  std::vector<Complex> e(entries_.size());
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      e[r * n_ + c] = (*this)(row_order[r], col_order[c]);
    }
  }
  return SquareMatrix(n_, std::move(e));
}

namespace {

void require_finite(const SquareMatrix& a) {
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    const Complex z = a.entries()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw InvalidInput("non-finite entry at row " + std::to_string(i / a.n()) + ", column " +
                         std::to_string(i % a.n()));
    }
  }
}

}  // namespace

double ising_norm(std::span<const double> entries) {
  double total = 0.0;
  for (double v : entries) {
    total += std::abs(v);
  }
  return total;
}

double ising_norm(const SquareMatrix& a) {
  double total = 0.0;
  for (const Complex& z : a.entries()) {
    total += std::abs(z);
  }
  return total;
}

double one_norm(const SquareMatrix& a) {
  double best = 0.0;
  for (std::size_t c = 0; c < a.n(); ++c) {
    double col = 0.0;
    for (std::size_t r = 0; r < a.n(); ++r) {
      col += std::abs(a(r, c));
    }
    best = std::max(best, col);
  }
  return best;
}

std::vector<double> singular_values(const SquareMatrix& a) {
  const std::size_t n = a.n();
  // Column-major working copy; columns are rotated pairwise until mutually orthogonal.
  std::vector<Complex> w(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      w[c * n + r] = a(r, c);
    }
  }
  constexpr int kMaxSweeps = 100;
  constexpr double kOrthogonality = 1e-15;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      Complex* wi = &w[i * n];
      for (std::size_t j = i + 1; j < n; ++j) {
        Complex* wj = &w[j * n];
        double alpha = 0.0;
        double beta = 0.0;
        Complex gamma = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          alpha += std::norm(wi[r]);
          beta += std::norm(wj[r]);
          gamma += std::conj(wi[r]) * wj[r];
        }
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= kOrthogonality * std::sqrt(alpha * beta)) {
          continue;
        }
        rotated = true;
        const Complex phase = gamma / g;
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t r = 0; r < n; ++r) {
          const Complex x = wi[r];
          const Complex y = wj[r] * std::conj(phase);
          wi[r] = c * x - s * y;
          wj[r] = s * x + c * y;
        }
      }
    }
    if (!rotated) {
      break;
    }
  }
  std::vector<double> sv(n);
  for (std::size_t c = 0; c < n; ++c) {
    double col = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      col += std::norm(w[c * n + r]);
    }
    sv[c] = std::sqrt(col);
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

double two_norm(const SquareMatrix& a) { return singular_values(a).front(); }

MatrixNorms norms(const SquareMatrix& a) {
  require_finite(a);
  return {two_norm(a), one_norm(a), ising_norm(a)};
}

double diagonal_ising_spectral_norm(const SquareMatrix& a) {
  const std::size_t n = a.n();
  if (n > 8) {
    throw DimensionTooLarge("diagonal Ising spectral norm is exhaustive and capped at n = 8");
  }
  // h(s) = x'^T A x with x the column spins and x' the row spins. Flipping every spin
  // leaves h unchanged, so the last row spin stays at +1.
  const std::uint64_t half = std::uint64_t{1} << n;
  double best = 0.0;
  std::vector<Complex> v(n);
  std::vector<int> x(n);
  for (std::uint64_t rows = 0; rows < half / 2; ++rows) {
    for (std::size_t k = 0; k < n; ++k) {
      Complex acc = 0.0;
      for (std::size_t p = 0; p < n; ++p) {
        acc += ((rows >> p) & 1U ? -1.0 : 1.0) * a(p, k);
      }
      v[k] = acc;
    }
    std::fill(x.begin(), x.end(), 1);
    Complex h = 0.0;
    for (const Complex& vk : v) {
      h += vk;
    }
    for (std::uint64_t i = 0; i < half; ++i) {
      if (i != 0) {
        const int k = std::countr_zero(i);
        h -= 2.0 * static_cast<double>(x[k]) * v[k];
        x[k] = -x[k];
      }
      best = std::max(best, std::abs(h));
    }
  }
  return best;
}

std::vector<SquareMatrix> gaussian_ensemble(std::size_t n, std::size_t count, std::uint64_t seed,
                                            GaussianKind kind) {
  if (n == 0 || count == 0) {
    throw InvalidInput("gaussian_ensemble needs n >= 1 and count >= 1");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double scale = kind == GaussianKind::complex_standard_normal ? std::sqrt(0.5) : 1.0;
  std::vector<SquareMatrix> out;
  out.reserve(count);
  for (std::size_t m = 0; m < count; ++m) {
    std::vector<Complex> e(n * n);
    for (Complex& z : e) {
      const double re = normal(rng) * scale;
      const double im = kind == GaussianKind::complex_standard_normal ? normal(rng) * scale : 0.0;
      z = {re, im};
    }
    out.emplace_back(n, std::move(e));
  }
  return out;
}

}  // namespace qperm
