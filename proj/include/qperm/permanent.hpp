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

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qperm/matrix.hpp"
#include "qperm/parallel.hpp"

namespace qperm {

enum class Method {
  naive,
  ryser,
  glynn,
  glynn_kan,
  glynn_kan_complex,
  gapp,
  gurvits,
  quantum_protocol,
  operator_expectation,
};

std::string_view to_string(Method method);
/// Throws InvalidInput for unknown names.
Method parse_method(std::string_view name);

/// The two nonnegative halves of the GapP form of a real permanent (even dimension).
struct GapPSplit {
  double positive = 0.0;
  double negative = 0.0;
};

struct PermanentEstimate {
  Complex value;
  Method method = Method::naive;
  /// 0 for exact methods; the additive envelope for estimators.
  std::optional<double> error_bound;
  std::optional<std::uint64_t> samples_used;
  /// Number of summand evaluations.
  std::uint64_t wall_terms = 0;
  /// Sample standard error of a Monte-Carlo mean.
  std::optional<double> standard_error;
  std::optional<GapPSplit> gapp_split;
  /// Richardson tableau diagonal, coarsest step first.
  std::vector<Complex> richardson_levels;
  /// |T(i,i) - T(i-1,i-1)| for each level i >= 1.
  std::vector<double> richardson_residuals;
};

inline constexpr std::size_t kNaiveMaxN = 10;
inline constexpr std::size_t kRyserMaxN = 30;
inline constexpr std::size_t kGlynnMaxN = 28;
inline constexpr std::size_t kGlynnKanMaxN = 13;
inline constexpr std::size_t kGapPMaxN = 12;

/// Sum over all n! permutations.
PermanentEstimate permanent_naive(const SquareMatrix& a);

/// Ryser inclusion-exclusion over column subsets, visited in Gray-code order so each step
/// updates the N row sums in O(N).
PermanentEstimate permanent_ryser(const SquareMatrix& a, const ExecOptions& exec = {});

/// Glynn's average of 2^N signed products over sign vectors x, with the N dot products
/// A_j . x updated by Gray-code flips.
PermanentEstimate permanent_glynn(const SquareMatrix& a, const ExecOptions& exec = {});

/// Glynn-Kan formula: average of (x'^T A x)^N over 4^N sign-vector pairs. Complex input
/// is expanded binomially in l over (x'^T B x)^(N-l) (x'^T C x)^l.
PermanentEstimate permanent_glynn_kan(const SquareMatrix& a, const ExecOptions& exec = {});

/// Real input only. Even dimension: the difference of two nonnegative sums; odd dimension
/// is padded with a direct-sum 1 first.
PermanentEstimate permanent_gapp(const SquareMatrix& b, const ExecOptions& exec = {});

struct GurvitsOptions {
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  /// Enumerate all 2^N sign vectors instead of sampling; requires samples == 2^N.
  bool exhaustive = false;
};

/// Monte-Carlo mean of Glynn terms over uniform x in {-1, 1}^N. error_bound is the
/// 3-sigma-style envelope 3 ||A||_2^N / sqrt(samples).
PermanentEstimate permanent_gurvits(const SquareMatrix& a, const GurvitsOptions& options);

/// Normalized Glynn-Kan moments m_l = <phi| P H(B)^(N-l) H(C)^l |phi>, l = 0..N, where
/// H(X) = sum_jk X_jk Z_{N+j} Z_k and |phi> is the uniform state on 2N qubits. The
/// permanent is sum_l i^l binom(N, l) m_l / N!. When C is zero only m_0 is computed.
std::vector<double> glynn_kan_moments(const SquareMatrix& a, const ExecOptions& exec = {});

/// Dispatches on method; gurvits uses `gurvits`.
PermanentEstimate compute_permanent(const SquareMatrix& a, Method method, const GurvitsOptions& gurvits = {},
                                    const ExecOptions& exec = {});

}  // namespace qperm
