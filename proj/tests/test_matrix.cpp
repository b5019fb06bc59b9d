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

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <numbers>

#include "qperm/error.hpp"
#include "qperm/matrix.hpp"
#include "qperm/matrix_io.hpp"
#include "support.hpp"

namespace qperm {
namespace {

using testing::random_complex;
using testing::random_real;

double eigen_two_norm(const SquareMatrix& a) {
  const auto n = static_cast<Eigen::Index>(a.n());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      m(r, c) = a(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    }
  }
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues()(0);
}

TEST(MatrixTest, RejectsBadShapes) {
  EXPECT_THROW(SquareMatrix(0), InvalidInput);
  EXPECT_THROW(SquareMatrix(2, std::vector<Complex>(3)), InvalidInput);
}

TEST(MatrixTest, PartsReconstructEntries) {
  std::mt19937_64 rng(11);
  const SquareMatrix a = random_complex(4, rng);
  for (std::size_t i = 0; i < 16; ++i) {
    EXPECT_EQ(Complex(a.real_part()[i], a.imag_part()[i]), a.entries()[i]);
  }
  EXPECT_FALSE(a.is_real());
  EXPECT_TRUE(SquareMatrix::identity(3).is_real());
  EXPECT_EQ(SquareMatrix::from_parts(4, a.real_part(), a.imag_part()), a);
}

TEST(MatrixTest, IdentityNorms) {
  const MatrixNorms m = norms(SquareMatrix::identity(3));
  EXPECT_NEAR(m.two_norm, 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(m.one_norm, 1.0);
  EXPECT_DOUBLE_EQ(m.ising_norm, 3.0);
}

TEST(MatrixTest, SingleEntryNorms) {
  const SquareMatrix a(2, {0.0, 2.0, 0.0, 0.0});
  const MatrixNorms m = norms(a);
  EXPECT_NEAR(m.two_norm, 2.0, 1e-12);
  EXPECT_DOUBLE_EQ(m.one_norm, 2.0);
  EXPECT_DOUBLE_EQ(m.ising_norm, 2.0);
}

TEST(MatrixTest, OneNormIsMaxColumnSum) {
  const SquareMatrix a(2, {1.0, -5.0, 2.0, 1.0});
  EXPECT_DOUBLE_EQ(one_norm(a), 6.0);
}

TEST(MatrixTest, TwoNormMatchesSvdOracle) {
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      const SquareMatrix a = random_complex(n, rng);
      EXPECT_NEAR(two_norm(a), eigen_two_norm(a), 1e-9 * eigen_two_norm(a)) << "n=" << n;
    }
  }
}

TEST(MatrixTest, SingularValuesDescendAndMatchFrobenius) {
  std::mt19937_64 rng(5);
  const SquareMatrix a = random_complex(6, rng);
  const std::vector<double> s = singular_values(a);
  double frob = 0.0;
  double sum_sq = 0.0;
  for (const Complex& z : a.entries()) {
    frob += std::norm(z);
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    sum_sq += s[i] * s[i];
    if (i > 0) {
      EXPECT_LE(s[i], s[i - 1]);
    }
  }
  EXPECT_NEAR(sum_sq, frob, 1e-10 * frob);
}

TEST(MatrixTest, RankDeficientTwoNorm) {
  // u v^T has a single nonzero singular value |u| |v|.
  std::vector<Complex> e;
  const double u[3] = {1.0, 2.0, 2.0};
  const double v[3] = {3.0, 0.0, 4.0};
  for (double ui : u) {
    for (double vj : v) {
      e.emplace_back(ui * vj);
    }
  }
  EXPECT_NEAR(two_norm(SquareMatrix(3, e)), 15.0, 1e-12);
}

TEST(MatrixTest, NormEquivalenceIntervals) {
  for (const SquareMatrix& a : gaussian_ensemble(5, 50, 21, GaussianKind::complex_standard_normal)) {
    const MatrixNorms m = norms(a);
    const double root = std::sqrt(5.0);
    EXPECT_LE(m.one_norm / root, m.two_norm * (1 + 1e-12));
    EXPECT_LE(m.two_norm, m.one_norm * root * (1 + 1e-12));
    EXPECT_GE(m.ising_norm, m.two_norm * (1 - 1e-12));
  }
}

TEST(MatrixTest, IsingNormSymmetries) {
  std::mt19937_64 rng(8);
  const SquareMatrix a = random_complex(5, rng);
  EXPECT_DOUBLE_EQ(ising_norm(a), ising_norm(a.transpose()));
  EXPECT_DOUBLE_EQ(ising_norm(a), ising_norm(a.conjugate()));
  const std::vector<std::size_t> rows{4, 2, 0, 1, 3};
  const std::vector<std::size_t> cols{1, 0, 3, 4, 2};
  const SquareMatrix p = a.permuted(rows, cols);
  EXPECT_NEAR(ising_norm(p), ising_norm(a), 1e-12);
  EXPECT_NEAR(two_norm(p), two_norm(a), 1e-10);
  EXPECT_NEAR(one_norm(p), one_norm(a), 1e-12);
}

TEST(MatrixTest, NonFiniteEntriesRejected) {
  const SquareMatrix a(2, {1.0, std::numeric_limits<double>::quiet_NaN(), 0.0, 1.0});
  EXPECT_THROW(norms(a), InvalidInput);
  const SquareMatrix b(1, {Complex{0.0, std::numeric_limits<double>::infinity()}});
  EXPECT_THROW(norms(b), InvalidInput);
}

TEST(MatrixTest, DiagonalSpectralNormBelowIsingNorm) {
  std::mt19937_64 rng(9);
  for (std::size_t n = 1; n <= 4; ++n) {
    const SquareMatrix a = random_real(n, rng);
    EXPECT_LE(diagonal_ising_spectral_norm(a), ising_norm(a) * (1 + 1e-12));
  }
  // All-ones matrix: the all-up configuration attains sum |A_jk|.
  EXPECT_NEAR(diagonal_ising_spectral_norm(SquareMatrix(3, std::vector<Complex>(9, 1.0))), 9.0, 1e-12);
  EXPECT_THROW(diagonal_ising_spectral_norm(SquareMatrix(9)), DimensionTooLarge);
}

TEST(GaussianEnsembleTest, Deterministic) {
  const auto first = gaussian_ensemble(2, 3, 7);
  const auto second = gaussian_ensemble(2, 3, 7);
  ASSERT_EQ(first.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(first[i], second[i]);
    EXPECT_TRUE(first[i].is_real());
  }
  EXPECT_NE(gaussian_ensemble(2, 1, 8).front(), first.front());
}

TEST(GaussianEnsembleTest, RealMeanIsingNorm) {
  double total = 0.0;
  for (const SquareMatrix& a : gaussian_ensemble(10, 2000, 1)) {
    total += ising_norm(a);
  }
  const double predicted = std::sqrt(2.0 / std::numbers::pi) * 100.0;
  EXPECT_NEAR(total / 2000.0, predicted, 0.02 * predicted);
}

TEST(GaussianEnsembleTest, ComplexVarianceConvention) {
  const std::size_t count = 100000 / 9 + 1;
  double second_moment = 0.0;
  std::size_t entries = 0;
  for (const SquareMatrix& a : gaussian_ensemble(3, count, 4, GaussianKind::complex_standard_normal)) {
    for (const Complex& z : a.entries()) {
      second_moment += std::norm(z);
      ++entries;
    }
  }
  EXPECT_NEAR(second_moment / static_cast<double>(entries), 1.0, 0.02);
}

TEST(MatrixIoTest, RoundTripIsExact) {
  std::mt19937_64 rng(2);
  const SquareMatrix c = random_complex(4, rng);
  EXPECT_EQ(parse_matrix_json(format_matrix_json(c)), c);
  const SquareMatrix r = random_real(3, rng);
  const std::string text = format_matrix_json(r);
  EXPECT_EQ(text.find('['), text.find("[["));
  EXPECT_EQ(parse_matrix_json(text), r);
}

TEST(MatrixIoTest, AcceptsMixedEntryForms) {
  const SquareMatrix a = parse_matrix_json(R"({"n": 2, "rows": [[1, [2, -1]], [[0.5, 0], 4]]})");
  EXPECT_EQ(a(0, 1), Complex(2.0, -1.0));
  EXPECT_EQ(a(1, 0), Complex(0.5, 0.0));
  EXPECT_EQ(a(1, 1), Complex(4.0, 0.0));
}

void expect_parse_error_mentions(const std::string& text, const std::string& fragment) {
  try {
    parse_matrix_json(text);
    FAIL() << "no error for " << text;
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

TEST(MatrixIoTest, ErrorsNameTheRow) {
  expect_parse_error_mentions(R"({"n": 2, "rows": [[1, 2], [3]]})", "row 1");
  expect_parse_error_mentions(R"({"n": 2, "rows": [[1, "x"], [3, 4]]})", "row 0");
  expect_parse_error_mentions(R"({"n": 2, "rows": [[1, 2], [3, [4, 5, 6]]]})", "row 1");
  expect_parse_error_mentions(R"({"n": 3, "rows": [[1, 2], [3, 4]]})", "rows");
  expect_parse_error_mentions(R"({"rows": [[1]]})", "n");
  expect_parse_error_mentions("not json", "");
}

}  // namespace
}  // namespace qperm
