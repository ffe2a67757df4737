#pragma once

// Entry sequences a_k^{(beta,alpha)}(x), their convolutions, Hankel matrices and
// partition-shifted Hankel determinants.

#include "hankel_gamma/exact.hpp"
#include "hankel_gamma/matrix.hpp"

#include <initializer_list>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hankel_gamma {

struct PartitionTooLong : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// n below the smallest size at which a relation is asserted.
struct NTooSmall : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct FamilySpec {
  long beta = 2;
  long alpha = 2;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline constexpr FamilySpec kCentralFamily{2, 2};

/// Weakly decreasing positive parts; the empty partition is written "0".
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<long> parts) : Partition(std::vector<long>(parts)) {}
  explicit Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  // (first, 1^ones)
  static Partition hook(long first, long ones) {
    std::vector<long> p{first};
    p.insert(p.end(), static_cast<std::size_t>(ones), 1);
    return Partition(std::move(p));
  }
  static Partition ones(long count) { return Partition(std::vector<long>(static_cast<std::size_t>(count), 1)); }

  // Accepts "0", "" or a comma separated list such as "3,1,1".
  static Partition parse(std::string_view text) {
    std::vector<long> parts;
    if (text.empty() || text == "0") return {};
    std::stringstream ss{std::string(text)};
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        parts.push_back(std::stol(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw ParseError("bad partition '" + std::string(text) + "'");
      }
    }
    return Partition(std::move(parts));
  }

  const std::vector<long>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  long largest() const { return parts_.empty() ? 0 : parts_.front(); }
  long weight() const {
    long s = 0;
    for (long p : parts_) s += p;
    return s;
  }
  bool empty() const { return parts_.empty(); }

  // Exponent notation: "0", "2", "21", "1^3", "2^21", "31^2".
  std::string label() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size();) {
      std::size_t j = i;
      while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
      out += std::to_string(parts_[i]);
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
    return out;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<long> parts_;
};

/// a_k(x) = sum_{m=0}^{k} C(beta k + alpha - m, k - m) x^m.
inline Poly entry_poly(FamilySpec spec, long k) {
  if (k < 0) throw std::invalid_argument("entry index must be non-negative");
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
  for (long m = 0; m <= k; ++m) c[static_cast<std::size_t>(m)] = Rational(binomial(spec.beta * k + spec.alpha - m, k - m));
  return Poly(std::move(c));
}

// a_0 .. a_{count-1}
inline std::vector<Poly> entry_sequence(FamilySpec spec, long count) {
  std::vector<Poly> a;
  a.reserve(static_cast<std::size_t>(std::max(0L, count)));
  for (long k = 0; k < count; ++k) a.push_back(entry_poly(spec, k));
  return a;
}

/// c_k = sum_{i=0}^{k} a_i a_{k-i}, with c_{-1} = 0.
template <class T>
T convolution(std::span<const T> a, long k) {
  if (k < -1) throw std::invalid_argument("convolution index must be >= -1");
  if (static_cast<long>(a.size()) <= k) throw std::out_of_range("sequence too short for convolution");
  T acc(0);
  for (long i = 0; i <= k; ++i) acc += a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(k - i)];
  return acc;
}

inline Poly convolution_poly(FamilySpec spec, long k) {
  if (k < -1) throw std::invalid_argument("convolution index must be >= -1");
  const auto a = entry_sequence(spec, k + 1);
  return convolution<Poly>(a, k);
}

// Number of sequence terms needed for H_lambda of size n+1.
inline long terms_needed(long n, const Partition& lambda) { return 2 * n + lambda.largest() + 1; }

/// Column j carries shift mu_{n+1-j}: mu lists the parts of lambda then zeros, so
/// the last column carries the largest part.
template <class T>
Matrix<T> shifted_hankel_matrix(std::span<const T> a, long n, const Partition& lambda) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (static_cast<long>(lambda.length()) > n + 1)
    throw PartitionTooLong("partition " + lambda.label() + " has more than n+1 parts");
  if (static_cast<long>(a.size()) < terms_needed(n, lambda)) throw std::out_of_range("sequence too short for H_lambda");
  const auto size = static_cast<std::size_t>(n + 1);
  Matrix<T> m(size);
  for (std::size_t j = 0; j < size; ++j) {
    const std::size_t mu_index = size - j;  // 1-based index into mu
    const long shift = mu_index <= lambda.length() ? lambda.parts()[mu_index - 1] : 0;
    for (std::size_t i = 0; i < size; ++i) m(i, j) = a[i + j + static_cast<std::size_t>(shift)];
  }
  return m;
}

template <class T>
T shifted_hankel_det(std::span<const T> a, long n, const Partition& lambda) {
  return det_bareiss(shifted_hankel_matrix(a, n, lambda));
}

inline Poly shifted_hankel_det(FamilySpec spec, long n, const Partition& lambda, DetEngine engine = DetEngine::bareiss) {
  if (static_cast<long>(lambda.length()) > n + 1)
    throw PartitionTooLong("partition " + lambda.label() + " has more than n+1 parts");
  const auto a = entry_sequence(spec, terms_needed(n, lambda));
  return det(shifted_hankel_matrix<Poly>(a, n, lambda), engine);
}

// H_0(n, x) of the given family.
inline Poly hankel_det(FamilySpec spec, long n, DetEngine engine = DetEngine::bareiss) {
  return shifted_hankel_det(spec, n, Partition{}, engine);
}

/// Entrywise check of the expansion of [c_{i+j+k}] as a sum of a_p-weighted,
/// shifted and masked copies of the Hankel matrix, for k >= -1.
template <class T>
bool convolution_matrix_expansion_holds(std::span<const T> a, long n, long k) {
  if (k < -1 || n < 0) throw std::invalid_argument("need n >= 0 and k >= -1");
  if (static_cast<long>(a.size()) < 2 * n + k + 1) throw std::out_of_range("sequence too short");
  for (long i = 0; i <= n; ++i) {
    for (long j = 0; j <= n; ++j) {
      const long idx = i + j + k;
      T lhs = idx >= 0 ? convolution(a, idx) : T(0);
      T rhs(0);
      for (long p = 0; p <= n + k; ++p)
        if (j >= p - k) rhs += a[static_cast<std::size_t>(p)] * a[static_cast<std::size_t>(idx - p)];
      for (long p = 0; p <= n - 1; ++p)
        if (i > p) rhs += a[static_cast<std::size_t>(p)] * a[static_cast<std::size_t>(idx - p)];
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

inline bool convolution_matrix_expansion_check(FamilySpec spec, long n, long k) {
  const auto a = entry_sequence(spec, std::max(1L, 2 * n + k + 1));
  return convolution_matrix_expansion_holds<Poly>(a, n, k);
}

}  // namespace hankel_gamma
