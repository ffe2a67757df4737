#pragma once

// Seeded generators and independent oracles shared by the test suites. Nothing
// here calls the library's determinant or gamma code.

#include "hankel_gamma/exact.hpp"
#include "hankel_gamma/matrix.hpp"

#include <random>
#include <vector>

namespace hg_test {

using namespace hankel_gamma;

inline Rational random_rational(std::mt19937_64& rng, long range = 20) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, range);
  return ratio(num(rng), den(rng));
}

inline Poly random_poly(std::mt19937_64& rng, long max_degree = 4, long range = 9) {
  std::uniform_int_distribution<long> deg(-1, max_degree);
  const long d = deg(rng);
  std::vector<Rational> c;
  for (long k = 0; k <= d; ++k) c.push_back(random_rational(rng, range));
  return Poly(std::move(c));
}

inline RationalMatrix random_rational_matrix(std::mt19937_64& rng, std::size_t size, long range = 9) {
  RationalMatrix m(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) m(i, j) = random_rational(rng, range);
  return m;
}

inline PolyMatrix random_poly_matrix(std::mt19937_64& rng, std::size_t size, long max_degree = 2) {
  PolyMatrix m(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) m(i, j) = random_poly(rng, max_degree, 5);
  return m;
}

// Laplace expansion along the first row. Exponential, so only for small sizes.
template <class T>
T cofactor_det(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  T total(0);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<T> minor(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = m(i, k);
    const T term = m(0, j) * cofactor_det(minor);
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

// Coefficient of t_1...t_m in det(A + sum t_i X_i). The determinant has degree
// <= size in each t_i, so it is sampled on {0..size}^m and the linear
// coefficient is taken one variable at a time by univariate interpolation.
inline Rational mixed_coefficient(const RationalMatrix& a, const std::vector<RationalMatrix>& xs) {
  const std::size_t size = a.rows();
  const std::size_t m = xs.size();
  const std::size_t pts = size + 1;
  std::size_t total = 1;
  for (std::size_t k = 0; k < m; ++k) total *= pts;
  std::vector<Rational> values(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    RationalMatrix b = a;
    std::size_t rest = idx;
    for (std::size_t k = 0; k < m; ++k) {
      const Rational t(static_cast<long>(rest % pts));
      rest /= pts;
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) b(i, j) += t * xs[k](i, j);
    }
    values[idx] = cofactor_det(b);
  }
  // Contract the last axis first; the index layout has variable 0 fastest.
  for (std::size_t k = m; k-- > 0;) {
    std::size_t stride = 1;
    for (std::size_t q = 0; q < k; ++q) stride *= pts;
    std::vector<Rational> next(values.size() / pts);
    for (std::size_t lo = 0; lo < stride; ++lo) {
      std::vector<std::pair<Rational, Rational>> samples;
      for (std::size_t p = 0; p < pts; ++p) samples.emplace_back(Rational(static_cast<long>(p)), values[lo + p * stride]);
      next[lo] = interpolate(samples).coeff(1);
    }
    values = std::move(next);
  }
  return values.front();
}

}  // namespace hg_test
