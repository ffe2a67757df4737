#pragma once

// Square matrices over exact rings and the two determinant engines.

#include "hankel_gamma/exact.hpp"
#include "hankel_gamma/parallel.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hankel_gamma {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit Matrix(std::size_t size) : Matrix(size, size) {}

  static Matrix identity(std::size_t size) {
    Matrix m(size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  void set_col(std::size_t j, const Matrix& src, std::size_t src_col) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = src(i, src_col);
  }
  void set_row(std::size_t i, const Matrix& src, std::size_t src_row) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = src(src_row, j);
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using PolyMatrix = Matrix<Poly>;
using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

namespace detail {
inline bool is_zero(const Poly& p) { return p.is_zero(); }
inline Poly exact_quotient(const Poly& a, const Poly& b) { return a.exact_div(b); }
}  // namespace detail

/// Fraction-free (Bareiss) elimination over an integral domain.
///
/// Every division is exact in T; with T = Poly a failing division surfaces as
/// NotDivisible, which can only mean an arithmetic bug. Zero pivots are handled
/// by a row swap.
template <class T>
T det_bareiss(Matrix<T> m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  bool negate = false;
  T prev(1);
  T a, b;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (detail::is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && detail::is_zero(m(p, k))) ++p;
      if (p == n) return T(0);
      m.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a = m(i, j) * m(k, k);
        b = m(i, k) * m(k, j);
        a -= b;
        m(i, j) = detail::exact_quotient(a, prev);
      }
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  return negate ? T(-d) : d;
}

// Sum over rows of the largest entry degree; an upper bound on deg det.
inline long row_degree_bound(const PolyMatrix& m) {
  long total = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    long row = Poly::kZeroDegree;
    for (std::size_t j = 0; j < m.cols(); ++j) row = std::max(row, m(i, j).degree());
    if (row == Poly::kZeroDegree) return Poly::kZeroDegree;
    total += row;
  }
  return total;
}

namespace detail {

// Integer matrix with the same determinant up to the returned positive scale.
inline std::pair<IntegerMatrix, Integer> integral_rows(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  Integer scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
    scale *= l;
  }
  return {std::move(out), std::move(scale)};
}

}  // namespace detail

// Determinant of a rational matrix, computed on the integer matrix obtained by clearing row denominators.
inline Rational det_rational(const RationalMatrix& m) {
  auto [im, scale] = detail::integral_rows(m);
  return make_rational(det_bareiss(std::move(im)), scale);
}

/// Evaluation/interpolation engine: sample at 0..D with D = row_degree_bound,
/// take exact rational determinants, interpolate. Sample points may be evaluated
/// concurrently; each lands in its own slot.
inline Poly det_interpolation(const PolyMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return Poly(1);
  const long bound = row_degree_bound(m);
  if (bound == Poly::kZeroDegree) return {};
  std::vector<std::pair<Rational, Rational>> samples(static_cast<std::size_t>(bound) + 1);
  parallel_for(samples.size(), [&](std::size_t s) {
    const Rational at(static_cast<long>(s));
    samples[s] = {at, det_rational(m.map([&](const Poly& p) { return p.evaluate(at); }))};
  });
  return interpolate(samples);
}

enum class DetEngine { bareiss, interpolation };

inline Poly det(const PolyMatrix& m, DetEngine engine = DetEngine::bareiss) {
  return engine == DetEngine::bareiss ? det_bareiss(m) : det_interpolation(m);
}

}  // namespace hankel_gamma
