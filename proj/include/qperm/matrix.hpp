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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qperm {

using Complex = std::complex<double>;

/// Dense N x N complex matrix, row-major and immutable after construction.
///
/// The real and imaginary parts (A = B + iC) are split out once at construction since
/// the complex protocol and the Glynn-Kan evaluators work on B and C separately.
class SquareMatrix {
 public:
  /// Zero matrix of dimension n.
  explicit SquareMatrix(std::size_t n);
  /// Row-major entries; throws InvalidInput unless entries.size() == n * n and n >= 1.
  SquareMatrix(std::size_t n, std::vector<Complex> entries);

  static SquareMatrix identity(std::size_t n);
  static SquareMatrix from_real(std::size_t n, std::span<const double> entries);
  static SquareMatrix from_parts(std::size_t n, std::span<const double> real, std::span<const double> imag);

  std::size_t n() const { return n_; }
  Complex operator()(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }
  std::span<const Complex> entries() const { return entries_; }
  /// B in A = B + iC.
  std::span<const double> real_part() const { return real_; }
  /// C in A = B + iC.
  std::span<const double> imag_part() const { return imag_; }
  bool is_real() const { return is_real_; }

  SquareMatrix transpose() const;
  SquareMatrix conjugate() const;
  SquareMatrix scaled(Complex factor) const;
  /// Direct sum with the 1 x 1 matrix [1].
  SquareMatrix direct_sum_one() const;
  /// Rows and columns reordered: result(i, j) = this(row_order[i], col_order[j]).
  SquareMatrix permuted(std::span<const std::size_t> row_order, std::span<const std::size_t> col_order) const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<Complex> entries_;
  std::vector<double> real_;
  std::vector<double> imag_;
  bool is_real_ = true;
};

struct MatrixNorms {
  /// Largest singular value.
  double two_norm = 0.0;
  /// Maximum absolute column sum.
  double one_norm = 0.0;
  /// Sum of |A_jk|, the Pauli-coefficient 1-norm of the Ising operator.
  double ising_norm = 0.0;
};

/// All three norms. The 2-norm comes from one-sided Jacobi iteration.
/// Throws InvalidInput on non-finite entries.
MatrixNorms norms(const SquareMatrix& a);

double ising_norm(const SquareMatrix& a);
double ising_norm(std::span<const double> entries);
double two_norm(const SquareMatrix& a);
double one_norm(const SquareMatrix& a);

/// Singular values in descending order via one-sided (Hestenes) Jacobi sweeps.
std::vector<double> singular_values(const SquareMatrix& a);

/// Exact spectral norm of the diagonal Ising operator sum_jk A_jk Z_{N+j} Z_k, i.e. the
/// maximum over spin configurations of |sum_jk A_jk s_{N+j} s_k|. Exhaustive, n <= 8.
double diagonal_ising_spectral_norm(const SquareMatrix& a);

enum class GaussianKind {
  /// Entries i.i.d. N(0, 1).
  real_standard_normal,
  /// Real and imaginary parts i.i.d. N(0, 1/2), so E|z|^2 = 1.
  complex_standard_normal,
};

/// Deterministic under a fixed seed.
std::vector<SquareMatrix> gaussian_ensemble(std::size_t n, std::size_t count, std::uint64_t seed,
                                            GaussianKind kind = GaussianKind::real_standard_normal);

}  // namespace qperm
