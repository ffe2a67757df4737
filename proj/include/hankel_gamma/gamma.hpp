#pragma once

// The gamma operator: gamma_A(X_1..X_m) is the coefficient of t_1...t_m in
// det(A + t_1 X_1 + ... + t_m X_m), evaluated here as the sum over column
// subsets S (|S| = m) and permutations sigma of det(A_{S,sigma}).

#include "hankel_gamma/exact.hpp"
#include "hankel_gamma/hankel.hpp"
#include "hankel_gamma/matrix.hpp"
#include "hankel_gamma/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hankel_gamma {

struct TooManyArguments : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline Poly determinant(const PolyMatrix& m) { return det_bareiss(m); }
inline Rational determinant(const RationalMatrix& m) { return det_rational(m); }
inline Integer determinant(const IntegerMatrix& m) { return det_bareiss(m); }

namespace detail {

// All m-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> s(m);
  std::iota(s.begin(), s.end(), 0);
  if (m > n) return out;
  while (true) {
    out.push_back(s);
    std::size_t i = m;
    while (i > 0 && s[i - 1] == n - m + i - 1) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < m; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

enum class Axis { columns, rows };

template <class T>
T replacement_sum(const Matrix<T>& a, const std::vector<Matrix<T>>& args, Axis axis) {
  if (!a.square()) throw std::invalid_argument("gamma needs a square matrix");
  for (const auto& x : args)
    if (x.rows() != a.rows() || x.cols() != a.cols()) throw std::invalid_argument("gamma argument size mismatch");
  const std::size_t size = a.rows();
  const std::size_t m = args.size();
  if (m > size) throw TooManyArguments("gamma takes at most n+1 arguments");
  if (m == 0) return determinant(a);

  const auto sets = subsets(size, m);
  std::vector<T> partial(sets.size());
  parallel_for(sets.size(), [&](std::size_t s) {
    std::vector<std::size_t> sigma(m);
    std::iota(sigma.begin(), sigma.end(), 0);
    T acc(0);
    do {
      Matrix<T> b = a;
      for (std::size_t k = 0; k < m; ++k) {
        if (axis == Axis::columns) {
          b.set_col(sets[s][k], args[sigma[k]], sets[s][k]);
        } else {
          b.set_row(sets[s][k], args[sigma[k]], sets[s][k]);
        }
      }
      acc += determinant(b);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    partial[s] = std::move(acc);
  });
  T total(0);
  for (auto& p : partial) total += p;
  return total;
}

}  // namespace detail

/// gamma_A(X_1, ..., X_m) by column replacement; m = 0 gives det(A).
template <class T>
T gamma_definitional(const Matrix<T>& a, const std::vector<Matrix<T>>& args) {
  return detail::replacement_sum(a, args, detail::Axis::columns);
}

// Same sum taken over row replacements.
template <class T>
T gamma_definitional_rows(const Matrix<T>& a, const std::vector<Matrix<T>>& args) {
  return detail::replacement_sum(a, args, detail::Axis::rows);
}

enum class ArgKind {
  shift,                 // a_{i+j+k}
  index_weighted_shift,  // (i+j) a_{i+j+k}
  conv_shift,            // c_{i+j+k}
  deriv_shift,           // d/dx a_{i+j+k}
  explicit_matrix,
  row_weighted_shift,  // i a_{i+j+k}
  col_weighted_shift,  // j a_{i+j+k}
};

/// Symbolic gamma argument, materialized against an entry sequence.
struct MatrixDescriptor {
  ArgKind kind = ArgKind::shift;
  long shift = 0;
  PolyMatrix matrix;

  static MatrixDescriptor Shift(long k) { return make(ArgKind::shift, k); }
  static MatrixDescriptor IndexWeightedShift(long k) { return make(ArgKind::index_weighted_shift, k); }
  static MatrixDescriptor ConvShift(long k) { return make(ArgKind::conv_shift, k); }
  static MatrixDescriptor DerivShift(long k) { return make(ArgKind::deriv_shift, k); }
  static MatrixDescriptor Explicit(PolyMatrix m) {
    MatrixDescriptor d;
    d.kind = ArgKind::explicit_matrix;
    d.matrix = std::move(m);
    return d;
  }

  // Short code used in row ids: a2, ia2, c-1, da0, i*a2, j*a2, X.
  std::string code() const {
    const std::string k = std::to_string(shift);
    switch (kind) {
      case ArgKind::shift: return "a" + k;
      case ArgKind::index_weighted_shift: return "ia" + k;
      case ArgKind::conv_shift: return "c" + k;
      case ArgKind::deriv_shift: return "da" + k;
      case ArgKind::row_weighted_shift: return "i*a" + k;
      case ArgKind::col_weighted_shift: return "j*a" + k;
      case ArgKind::explicit_matrix: return "X";
    }
    return "?";
  }

  // Printed matrix form, e.g. "[(i+j)a_{i+j+2}]".
  std::string printed() const {
    const std::string idx = shift == 0 ? "i+j" : (shift > 0 ? "i+j+" : "i+j") + std::to_string(shift);
    switch (kind) {
      case ArgKind::shift: return "[a_{" + idx + "}]";
      case ArgKind::index_weighted_shift: return "[(i+j)a_{" + idx + "}]";
      case ArgKind::conv_shift: return "[c_{" + idx + "}]";
      case ArgKind::deriv_shift: return "[d/dx a_{" + idx + "}]";
      case ArgKind::row_weighted_shift: return "[i a_{" + idx + "}]";
      case ArgKind::col_weighted_shift: return "[j a_{" + idx + "}]";
      case ArgKind::explicit_matrix: return "[X]";
    }
    return "?";
  }

  // Largest sequence index touched for an (n+1)x(n+1) materialization.
  long max_index(long n) const { return kind == ArgKind::explicit_matrix ? 0 : 2 * n + shift; }

 private:
  static MatrixDescriptor make(ArgKind kind, long k) {
    if (kind == ArgKind::conv_shift ? k < -1 : k < 0) throw std::invalid_argument("invalid descriptor shift");
    MatrixDescriptor d;
    d.kind = kind;
    d.shift = k;
    return d;
  }
};

/// Entry values a_k and, when available, their x-derivatives.
template <class T>
struct SymbolSequence {
  std::vector<T> a;
  std::vector<T> da;

  std::size_t size() const { return a.size(); }
};

inline SymbolSequence<Poly> family_symbols(FamilySpec spec, long count) {
  SymbolSequence<Poly> s;
  s.a = entry_sequence(spec, count);
  s.da.reserve(s.a.size());
  for (const auto& p : s.a) s.da.push_back(p.derivative());
  return s;
}

template <class T>
Matrix<T> materialize(const MatrixDescriptor& d, const SymbolSequence<T>& seq, long n) {
  const auto size = static_cast<std::size_t>(n + 1);
  if (d.kind == ArgKind::explicit_matrix) {
    if constexpr (std::is_same_v<T, Poly>) {
      if (d.matrix.rows() != size || d.matrix.cols() != size) throw std::invalid_argument("explicit matrix size mismatch");
      return d.matrix;
    } else {
      throw std::invalid_argument("explicit polynomial matrices need polynomial symbols");
    }
  }
  if (d.max_index(n) >= static_cast<long>(seq.a.size())) throw std::out_of_range("symbol sequence too short");
  if (d.kind == ArgKind::deriv_shift && seq.da.size() < seq.a.size())
    throw std::invalid_argument("symbol sequence has no derivatives");
  const std::span<const T> a(seq.a);
  Matrix<T> m(size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const long idx = static_cast<long>(i + j) + d.shift;
      const auto u = static_cast<std::size_t>(std::max(idx, 0L));
      switch (d.kind) {
        case ArgKind::shift: m(i, j) = seq.a[u]; break;
        case ArgKind::deriv_shift: m(i, j) = seq.da[u]; break;
        case ArgKind::conv_shift: m(i, j) = idx < 0 ? T(0) : convolution(a, idx); break;
        case ArgKind::index_weighted_shift: m(i, j) = seq.a[u] * T(static_cast<long>(i + j)); break;
        case ArgKind::row_weighted_shift: m(i, j) = seq.a[u] * T(static_cast<long>(i)); break;
        case ArgKind::col_weighted_shift: m(i, j) = seq.a[u] * T(static_cast<long>(j)); break;
        case ArgKind::explicit_matrix: break;
      }
    }
  }
  return m;
}

/// gamma_A over descriptors with A = [a_{i+j}] of size n+1. Each
/// (i+j)-weighted argument is split into its i-weighted and j-weighted halves and
/// the pieces are summed by multilinearity.
template <class T>
T gamma_of(const SymbolSequence<T>& seq, long n, const std::vector<MatrixDescriptor>& args) {
  const Matrix<T> a = materialize(MatrixDescriptor::Shift(0), seq, n);
  std::vector<std::size_t> weighted;
  for (std::size_t k = 0; k < args.size(); ++k)
    if (args[k].kind == ArgKind::index_weighted_shift) weighted.push_back(k);
  T total(0);
  for (std::size_t mask = 0; mask < (std::size_t{1} << weighted.size()); ++mask) {
    std::vector<Matrix<T>> mats;
    mats.reserve(args.size());
    for (const auto& d : args) mats.push_back(materialize(d, seq, n));
    for (std::size_t w = 0; w < weighted.size(); ++w) {
      MatrixDescriptor half = args[weighted[w]];
      half.kind = (mask >> w) & 1 ? ArgKind::col_weighted_shift : ArgKind::row_weighted_shift;
      mats[weighted[w]] = materialize(half, seq, n);
    }
    total += gamma_definitional(a, mats);
  }
  return total;
}

/// Checks d/dx gamma_A(X...) = gamma_A(A', X...) + sum_j gamma_A(..., X_j', ...)
/// for the (spec) family, both sides as exact polynomials.
inline bool gamma_derivative_check(FamilySpec spec, long n, const std::vector<MatrixDescriptor>& args) {
  if (static_cast<long>(args.size()) > n) throw TooManyArguments("derivative rule needs at most n arguments");
  long top = 2 * n + 1;
  for (const auto& d : args) top = std::max(top, d.max_index(n) + 1);
  const auto seq = family_symbols(spec, top);
  const PolyMatrix a = materialize(MatrixDescriptor::Shift(0), seq, n);

  std::vector<PolyMatrix> mats;
  for (const auto& d : args) mats.push_back(materialize(d, seq, n));
  const Poly lhs = gamma_definitional(a, mats).derivative();

  std::vector<PolyMatrix> first{materialize(MatrixDescriptor::DerivShift(0), seq, n)};
  first.insert(first.end(), mats.begin(), mats.end());
  Poly rhs = gamma_definitional(a, first);
  for (std::size_t j = 0; j < args.size(); ++j) {
    std::vector<PolyMatrix> v = mats;
    v[j] = args[j].kind == ArgKind::shift ? materialize(MatrixDescriptor::DerivShift(args[j].shift), seq, n)
                                          : mats[j].map([](const Poly& p) { return p.derivative(); });
    rhs += gamma_definitional(a, v);
  }
  return lhs == rhs;
}

}  // namespace hankel_gamma
