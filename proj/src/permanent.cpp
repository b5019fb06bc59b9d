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

#include "qperm/permanent.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "detail/sign_pairs.hpp"
#include "qperm/error.hpp"
#include "qperm/ising.hpp"
#include "qperm/kahan.hpp"

namespace qperm {

namespace {

constexpr std::array<std::string_view, 9> kMethodNames = {
    "naive", "ryser", "glynn", "glynn_kan", "glynn_kan_complex", "gapp", "gurvits", "quantum_protocol",
    "operator_expectation",
};

void require_at_most(const SquareMatrix& a, std::size_t cap, std::string_view what) {
  if (a.n() > cap) {
    throw DimensionTooLarge(std::string(what) + " is capped at n = " + std::to_string(cap) + ", got n = " +
                            std::to_string(a.n()));
  }
}

bool has_zero_column(const SquareMatrix& a) {
  for (std::size_t c = 0; c < a.n(); ++c) {
    bool zero = true;
    for (std::size_t r = 0; r < a.n() && zero; ++r) {
      zero = a(r, c) == Complex{};
    }
    if (zero) {
      return true;
    }
  }
  return false;
}

double factorial(std::size_t n) {
  double f = 1.0;
  for (std::size_t i = 2; i <= n; ++i) {
    f *= static_cast<double>(i);
  }
  return f;
}

Complex merge(const std::vector<CompensatedComplexSum>& parts) {
  CompensatedComplexSum total;
  for (const auto& p : parts) {
    total.merge(p);
  }
  return total.value();
}

PermanentEstimate exact(Complex value, Method method, std::uint64_t terms) {
  PermanentEstimate e;
  e.value = value;
  e.method = method;
  e.error_bound = 0.0;
  e.wall_terms = terms;
  return e;
}

double int_pow(double base, std::size_t exponent) {
  double r = 1.0;
  for (std::size_t i = 0; i < exponent; ++i) {
    r *= base;
  }
  return r;
}

}  // namespace

std::string_view to_string(Method method) { return kMethodNames.at(static_cast<std::size_t>(method)); }

Method parse_method(std::string_view name) {
  for (std::size_t i = 0; i < kMethodNames.size(); ++i) {
    if (kMethodNames[i] == name) {
      return static_cast<Method>(i);
    }
  }
  throw InvalidInput("unknown method '" + std::string(name) + "'");
}

PermanentEstimate permanent_naive(const SquareMatrix& a) {
  require_at_most(a, kNaiveMaxN, "naive permanent");
  const std::size_t n = a.n();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  CompensatedComplexSum sum;
  std::uint64_t terms = 0;
  do {
    Complex prod = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      prod *= a(j, perm[j]);
    }
    sum += prod;
    ++terms;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return exact(sum.value(), Method::naive, terms);
}

PermanentEstimate permanent_ryser(const SquareMatrix& a, const ExecOptions& exec) {
  require_at_most(a, kRyserMaxN, "Ryser permanent");
  const std::size_t n = a.n();
  const std::uint64_t subsets = std::uint64_t{1} << n;
  if (has_zero_column(a)) {
    return exact(0.0, Method::ryser, 0);
  }
  auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
    CompensatedComplexSum sum;
    std::vector<Complex> row_sums(n);
    std::uint64_t subset = begin ^ (begin >> 1);
    for (std::size_t k = 0; k < n; ++k) {
      if ((subset >> k) & 1U) {
        for (std::size_t j = 0; j < n; ++j) {
          row_sums[j] += a(j, k);
        }
      }
    }
    for (std::uint64_t i = begin; i < end; ++i) {
      if (i != begin) {
        const int k = std::countr_zero(i);
        subset ^= std::uint64_t{1} << k;
        const double dir = (subset >> k) & 1U ? 1.0 : -1.0;
        for (std::size_t j = 0; j < n; ++j) {
          row_sums[j] += dir * a(j, k);
        }
      }
      if (subset == 0) {
        continue;
      }
      Complex prod = 1.0;
      for (const Complex& s : row_sums) {
        prod *= s;
      }
      sum += std::popcount(subset) % 2 == 0 ? prod : -prod;
    }
    return sum;
  };
  Complex total = merge(run_chunks<CompensatedComplexSum>(subsets, exec, chunk));
  if (n % 2 == 1) {
    total = -total;
  }
  return exact(total, Method::ryser, subsets - 1);
}

PermanentEstimate permanent_glynn(const SquareMatrix& a, const ExecOptions& exec) {
  require_at_most(a, kGlynnMaxN, "Glynn permanent");
  const std::size_t n = a.n();
  const std::uint64_t vectors = std::uint64_t{1} << n;
  if (has_zero_column(a)) {
    return exact(0.0, Method::glynn, 0);
  }
  // Bit k set in the Gray code means x_k = -1.
  auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
    CompensatedComplexSum sum;
    std::vector<Complex> dots(n);
    std::uint64_t code = begin ^ (begin >> 1);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        dots[j] += ((code >> k) & 1U ? -1.0 : 1.0) * a(j, k);
      }
    }
    for (std::uint64_t i = begin; i < end; ++i) {
      if (i != begin) {
        const int k = std::countr_zero(i);
        code ^= std::uint64_t{1} << k;
        const double delta = (code >> k) & 1U ? -2.0 : 2.0;
        for (std::size_t j = 0; j < n; ++j) {
          dots[j] += delta * a(j, k);
        }
      }
      Complex prod = 1.0;
      for (const Complex& d : dots) {
        prod *= d;
      }
      sum += std::popcount(code) % 2 == 0 ? prod : -prod;
    }
    return sum;
  };
  const Complex total = merge(run_chunks<CompensatedComplexSum>(vectors, exec, chunk));
  return exact(std::ldexp(1.0, -static_cast<int>(n)) * total, Method::glynn, vectors);
}

std::vector<double> glynn_kan_moments(const SquareMatrix& a, const ExecOptions& exec) {
  require_at_most(a, kGlynnKanMaxN, "Glynn-Kan expansion");
  const std::size_t n = a.n();
  const bool complex_input = !a.is_real();
  const std::size_t orders = complex_input ? n + 1 : 1;
  const std::span<const double> c = complex_input ? a.imag_part() : std::span<const double>{};
  auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<CompensatedSum> sums(orders);
    std::vector<double> pow_b(n + 1);
    std::vector<double> pow_c(n + 1);
    detail::for_each_sign_pair(n, a.real_part(), c, begin, end, n, [&](int sign, double qb, double qc) {
      if (!complex_input) {
        sums[0].add(sign * int_pow(qb, n));
        return;
      }
      pow_b[0] = 1.0;
      pow_c[0] = 1.0;
      for (std::size_t i = 1; i <= n; ++i) {
        pow_b[i] = pow_b[i - 1] * qb;
        pow_c[i] = pow_c[i - 1] * qc;
      }
      for (std::size_t l = 0; l <= n; ++l) {
        sums[l].add(sign * pow_b[n - l] * pow_c[l]);
      }
    });
    return sums;
  };
  const auto parts = run_chunks<std::vector<CompensatedSum>>(std::uint64_t{1} << n, exec, chunk);
  std::vector<double> moments(orders);
  const double norm = std::ldexp(1.0, -2 * static_cast<int>(n));
  for (std::size_t l = 0; l < orders; ++l) {
    CompensatedSum total;
    for (const auto& p : parts) {
      total.merge(p[l]);
    }
    moments[l] = total.value() * norm;
  }
  return moments;
}

PermanentEstimate permanent_glynn_kan(const SquareMatrix& a, const ExecOptions& exec) {
  const std::size_t n = a.n();
  const std::vector<double> moments = glynn_kan_moments(a, exec);
  const std::uint64_t pairs = std::uint64_t{1} << (2 * n);
  if (a.is_real()) {
    return exact(moments[0] / factorial(n), Method::glynn_kan, pairs);
  }
  // sum_l i^l binom(N, l) m_l, with the i^l phase applied exactly.
  CompensatedSum re;
  CompensatedSum im;
  double binom = 1.0;
  for (std::size_t l = 0; l <= n; ++l) {
    const double term = binom * moments[l];
    switch (l % 4) {
      case 0: re.add(term); break;
      case 1: im.add(term); break;
      case 2: re.add(-term); break;
      default: im.add(-term); break;
    }
    binom = binom * static_cast<double>(n - l) / static_cast<double>(l + 1);
  }
  const Complex value = Complex{re.value(), im.value()} / factorial(n);
  return exact(value, Method::glynn_kan_complex, (n + 1) * pairs);
}

PermanentEstimate permanent_gapp(const SquareMatrix& b, const ExecOptions& exec) {
  if (!b.is_real()) {
    throw InvalidInput("GapP split needs a real matrix");
  }
  require_at_most(b, kGapPMaxN, "GapP permanent");
  const SquareMatrix even = b.n() % 2 == 0 ? b : b.direct_sum_one();
  const std::size_t n = even.n();
  // S+ collects pairs with prod x = prod x', S- the others. With N even every q^N >= 0.
  struct Split {
    CompensatedSum positive;
    CompensatedSum negative;
  };
  auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
    Split s;
    detail::for_each_sign_pair(n, even.real_part(), {}, begin, end, n, [&](int sign, double qb, double) {
      const double term = int_pow(qb, n);
      if (sign > 0) {
        s.positive.add(term);
      } else {
        s.negative.add(term);
      }
    });
    return s;
  };
  const auto parts = run_chunks<Split>(std::uint64_t{1} << n, exec, chunk);
  CompensatedSum pos;
  CompensatedSum neg;
  for (const auto& p : parts) {
    pos.merge(p.positive);
    neg.merge(p.negative);
  }
  const double scale = std::ldexp(1.0, -2 * static_cast<int>(n)) / factorial(n);
  PermanentEstimate e = exact(scale * (pos.value() - neg.value()), Method::gapp, std::uint64_t{1} << (2 * n));
  e.gapp_split = GapPSplit{scale * pos.value(), scale * neg.value()};
  return e;
}

namespace {

Complex glynn_term(const SquareMatrix& a, std::span<const double> x) {
  const std::size_t n = a.n();
  Complex prod = 1.0;
  double sign = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    Complex dot = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      dot += a(j, k) * x[k];
    }
    prod *= dot;
    sign *= x[j];
  }
  return sign * prod;
}

}  // namespace

PermanentEstimate permanent_gurvits(const SquareMatrix& a, const GurvitsOptions& options) {
  if (options.samples == 0) {
    throw InvalidInput("Gurvits estimator needs at least one sample");
  }
  const std::size_t n = a.n();
  std::vector<double> x(n);
  PermanentEstimate e;
  e.method = Method::gurvits;
  e.samples_used = options.samples;
  e.wall_terms = options.samples;

  if (options.exhaustive) {
    require_at_most(a, kGlynnMaxN, "exhaustive Gurvits enumeration");
    const std::uint64_t all = std::uint64_t{1} << n;
    if (options.samples != all) {
      throw InvalidInput("exhaustive enumeration needs samples = 2^n = " + std::to_string(all));
    }
    CompensatedComplexSum sum;
    for (std::uint64_t code = 0; code < all; ++code) {
      for (std::size_t k = 0; k < n; ++k) {
        x[k] = (code >> k) & 1U ? -1.0 : 1.0;
      }
      sum += glynn_term(a, x);
    }
    e.value = std::ldexp(1.0, -static_cast<int>(n)) * sum.value();
    e.error_bound = 0.0;
    e.standard_error = 0.0;
    return e;
  }

  std::mt19937_64 rng(options.seed);
  CompensatedComplexSum sum;
  Complex mean = 0.0;
  double m2 = 0.0;
  for (std::uint64_t s = 0; s < options.samples; ++s) {
    std::uint64_t bits = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k % 64 == 0) {
        bits = rng();
      }
      x[k] = (bits >> (k % 64)) & 1U ? -1.0 : 1.0;
    }
    const Complex term = glynn_term(a, x);
    sum += term;
    const Complex delta = term - mean;
    mean += delta / static_cast<double>(s + 1);
    m2 += std::real(std::conj(delta) * (term - mean));
  }
  const auto count = static_cast<double>(options.samples);
  e.value = sum.value() / count;
  if (options.samples > 1) {
    e.standard_error = std::sqrt(m2 / (count - 1.0) / count);
  }
  e.error_bound = 3.0 / std::sqrt(count) * std::pow(two_norm(a), static_cast<double>(n));
  return e;
}

PermanentEstimate compute_permanent(const SquareMatrix& a, Method method, const GurvitsOptions& gurvits,
                                    const ExecOptions& exec) {
  switch (method) {
    case Method::naive: return permanent_naive(a);
    case Method::ryser: return permanent_ryser(a, exec);
    case Method::glynn: return permanent_glynn(a, exec);
    case Method::glynn_kan:
    case Method::glynn_kan_complex: return permanent_glynn_kan(a, exec);
    case Method::gapp: return permanent_gapp(a, exec);
    case Method::gurvits: return permanent_gurvits(a, gurvits);
    case Method::operator_expectation: return glynn_kan_operator_expectation(a);
    case Method::quantum_protocol: break;
  }
  throw InvalidInput("the quantum protocol needs a ProtocolConfig; use run_protocol");
}

}  // namespace qperm
