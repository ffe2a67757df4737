#pragma once

// Exact scalars, dense univariate polynomials and truncated power series.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hankel_gamma {

using Integer = mpz_class;
using Rational = mpq_class;

struct NotDivisible : std::domain_error {
  using std::domain_error::domain_error;
};
struct DuplicateAbscissa : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NonUnitConstantTerm : std::domain_error {
  using std::domain_error::domain_error;
};
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// C(a, b) with the convention C(a, b) = 0 unless 0 <= b <= a.
inline Integer binomial(long a, long b) {
  Integer r;
  if (a < 0 || b < 0 || b > a) return r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

inline Integer factorial(long k) {
  Integer r;
  if (k < 0) throw std::domain_error("factorial of negative number");
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// num/den in canonical form.
inline Rational ratio(long num, long den) { return make_rational(Integer(num), Integer(den)); }

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

// Parses "p/q" or an integer literal. Decimal points and exponents are rejected.
inline Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto to_int = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text)) throw ParseError("not an exact rational literal: '" + std::string(text) + "'");
    return Rational(to_int(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    throw ParseError("not an exact rational literal: '" + std::string(text) + "'");
  const Integer d = to_int(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return make_rational(to_int(num), d);
}

// Always "num/den", the wire form used in JSON.
inline std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace detail {

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }

inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }
inline Integer exact_quotient(const Integer& a, const Integer& b) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw NotDivisible("integer division leaves a remainder");
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace detail

/// Dense univariate polynomial over an exact ring, lowest power first.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and equality is structural.
template <class Coeff>
class BasicPoly {
 public:
  using coefficient_type = Coeff;

  /// Degree reported for the zero polynomial.
  static constexpr long kZeroDegree = std::numeric_limits<long>::min();

  BasicPoly() = default;
  BasicPoly(const Coeff& c) {  // NOLINT(google-explicit-constructor)
    if (!detail::is_zero(c)) coeffs_.push_back(c);
  }
  BasicPoly(long c) : BasicPoly(Coeff(c)) {}  // NOLINT(google-explicit-constructor)
  BasicPoly(int c) : BasicPoly(Coeff(c)) {}   // NOLINT(google-explicit-constructor)
  explicit BasicPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static BasicPoly x() { return monomial(Coeff(1), 1); }
  static BasicPoly monomial(const Coeff& c, std::size_t power) {
    if (detail::is_zero(c)) return {};
    std::vector<Coeff> v(power + 1);
    v[power] = c;
    return BasicPoly(std::move(v));
  }

  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  long degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }

  Coeff coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Coeff(0); }
  Coeff leading() const { return coeffs_.empty() ? Coeff(0) : coeffs_.back(); }

  template <class Point>
  Point evaluate(const Point& at) const {
    Point acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= at;
      acc += Point(*it);
    }
    return acc;
  }

  BasicPoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Coeff> v(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * Coeff(static_cast<long>(k));
    return BasicPoly(std::move(v));
  }

  // p(x + shift), by Horner in the shifted variable.
  BasicPoly taylor_shift(const Coeff& shift) const {
    std::vector<Coeff> v(coeffs_.begin(), coeffs_.end());
    const std::size_t n = v.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t k = n - 2; k + 1 > i; --k) v[k] += shift * v[k + 1];
    return BasicPoly(std::move(v));
  }

  BasicPoly& operator+=(const BasicPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  BasicPoly& operator-=(const BasicPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  BasicPoly& operator*=(const BasicPoly& o) { return *this = *this * o; }
  BasicPoly& operator*=(const Coeff& c) {
    if (detail::is_zero(c)) {
      coeffs_.clear();
    } else {
      for (auto& a : coeffs_) a *= c;
    }
    return *this;
  }

  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
  friend BasicPoly operator-(BasicPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    Coeff t;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (detail::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        t = a.coeffs_[i] * b.coeffs_[j];
        v[i + j] += t;
      }
    }
    return BasicPoly(std::move(v));
  }
  friend BasicPoly operator*(BasicPoly a, const Coeff& c) { return a *= c; }
  friend BasicPoly operator*(const Coeff& c, BasicPoly a) { return a *= c; }
  friend BasicPoly operator*(BasicPoly a, long c) { return a *= Coeff(c); }
  friend BasicPoly operator*(long c, BasicPoly a) { return a *= Coeff(c); }
  friend BasicPoly operator*(BasicPoly a, int c) { return a *= Coeff(c); }
  friend BasicPoly operator*(int c, BasicPoly a) { return a *= Coeff(c); }

  friend bool operator==(const BasicPoly& a, const BasicPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const BasicPoly& a, const BasicPoly& b) { return !(a == b); }

  /// Quotient of an exact division; throws NotDivisible on a nonzero remainder.
  BasicPoly exact_div(const BasicPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    if (is_zero()) return {};
    if (degree() < d.degree()) throw NotDivisible("divisor degree exceeds dividend degree");
    std::vector<Coeff> rem = coeffs_;
    const std::size_t dn = d.coeffs_.size();
    std::vector<Coeff> q(rem.size() - dn + 1);
    Coeff t;
    for (std::size_t k = q.size(); k-- > 0;) {
      Coeff& top = rem[k + dn - 1];
      if (detail::is_zero(top)) continue;
      q[k] = detail::exact_quotient(top, d.coeffs_.back());
      for (std::size_t j = 0; j < dn; ++j) {
        t = q[k] * d.coeffs_[j];
        rem[k + j] -= t;
      }
    }
    for (std::size_t k = 0; k + 1 < dn; ++k)
      if (!detail::is_zero(rem[k])) throw NotDivisible("polynomial division leaves a remainder");
    return BasicPoly(std::move(q));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && detail::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using Poly = BasicPoly<Rational>;
using IntPoly = BasicPoly<Integer>;

inline Poly operator*(Poly a, const Integer& c) { return a *= Rational(c); }
inline Poly operator*(const Integer& c, Poly a) { return a *= Rational(c); }

inline Poly pow(const Poly& p, unsigned e) {
  Poly r(1);
  for (unsigned i = 0; i < e; ++i) r *= p;
  return r;
}

// Long division over Q: returns {quotient, remainder}.
inline std::pair<Poly, Poly> divmod(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (p.degree() < d.degree()) return {Poly(), p};
  std::vector<Rational> rem = p.coeffs();
  const std::size_t dn = d.size();
  std::vector<Rational> q(rem.size() - dn + 1);
  const Rational lead = d.leading();
  Rational t;
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = rem[k + dn - 1] / lead;
    if (sgn(q[k]) == 0) continue;
    for (std::size_t j = 0; j < dn; ++j) {
      t = q[k] * d.coeffs()[j];
      rem[k + j] -= t;
    }
  }
  rem.resize(dn - 1);
  return {Poly(std::move(q)), Poly(std::move(rem))};
}

inline Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading());
}

// Monic gcd over Q; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

inline Poly to_rational_poly(const IntPoly& p) {
  std::vector<Rational> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return Poly(std::move(v));
}

// Multiplies by the lcm of the denominators; returns the integer polynomial and the scale.
inline std::pair<IntPoly, Integer> clear_denominators(const Poly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Integer> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) v.push_back(c.get_num() * (l / c.get_den()));
  return {IntPoly(std::move(v)), l};
}

/// Unique polynomial of degree < points.size() through the given points.
///
/// Newton divided differences. When the abscissae are exactly 0, 1, ..., d the
/// differences reduce to forward differences divided by k!. Newton coefficients
/// that vanish at the top are dropped before the Horner expansion, so the cost of
/// the expansion follows the true degree rather than the number of samples.
inline Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  const std::size_t n = points.size();
  if (n == 0) return {};
  {
    std::vector<Rational> xs;
    xs.reserve(n);
    for (const auto& p : points) xs.push_back(p.first);
    std::sort(xs.begin(), xs.end());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
      throw DuplicateAbscissa("interpolation abscissae must be pairwise distinct");
  }
  bool unit_grid = true;
  for (std::size_t i = 0; i < n && unit_grid; ++i) unit_grid = points[i].first == Rational(static_cast<long>(i));

  std::vector<Rational> diff(n);
  for (std::size_t i = 0; i < n; ++i) diff[i] = points[i].second;
  if (unit_grid) {
    for (std::size_t k = 1; k < n; ++k)
      for (std::size_t i = n - 1; i >= k; --i) diff[i] -= diff[i - 1];
    Integer fact = 1;
    for (std::size_t k = 1; k < n; ++k) {
      fact *= static_cast<unsigned long>(k);
      if (sgn(diff[k]) != 0) diff[k] /= Rational(fact);
    }
  } else {
    for (std::size_t k = 1; k < n; ++k)
      for (std::size_t i = n - 1; i >= k; --i)
        diff[i] = (diff[i] - diff[i - 1]) / (points[i].first - points[i - k].first);
  }
  std::size_t top = n;
  while (top > 0 && sgn(diff[top - 1]) == 0) --top;
  Poly acc;
  for (std::size_t k = top; k-- > 0;) {
    acc *= Poly(std::vector<Rational>{-points[k].first, Rational(1)});
    acc += Poly(diff[k]);
  }
  return acc;
}

// Human-readable form, lowest power first: "-1 - x + 5x^2".
inline std::string to_string(const Poly& p, std::string_view var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const Rational& c = p.coeffs()[k];
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const bool unit = mag == 1;
    const bool frac = mag.get_den() != 1;
    if (k == 0 || !unit) out += frac && k > 0 ? "(" + mag.get_str() + ")" : mag.get_str();
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

/// Truncated power series in t whose coefficients are polynomials in x.
class Series {
 public:
  Series(std::vector<Poly> coeffs, std::size_t order) : coeffs_(std::move(coeffs)), order_(order) {
    coeffs_.resize(order_ + 1);
  }

  std::size_t order() const { return order_; }
  const Poly& operator[](std::size_t k) const { return coeffs_[k]; }
  const std::vector<Poly>& coeffs() const { return coeffs_; }

  Series truncated(std::size_t order) const {
    std::vector<Poly> v(coeffs_.begin(), coeffs_.begin() + static_cast<long>(std::min(order, order_) + 1));
    return Series(std::move(v), order);
  }

  friend Series operator*(const Series& a, const Series& b) {
    const std::size_t order = std::min(a.order_, b.order_);
    std::vector<Poly> v(order + 1);
    for (std::size_t i = 0; i <= order; ++i)
      for (std::size_t j = 0; i + j <= order; ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Series(std::move(v), order);
  }
  friend Series operator+(const Series& a, const Series& b) {
    const std::size_t order = std::min(a.order_, b.order_);
    std::vector<Poly> v(order + 1);
    for (std::size_t i = 0; i <= order; ++i) v[i] = a.coeffs_[i] + b.coeffs_[i];
    return Series(std::move(v), order);
  }
  friend bool operator==(const Series& a, const Series& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Poly> coeffs_;
  std::size_t order_;
};

/// num / den to t^order. The constant term of den must be a nonzero constant.
inline Series series_quotient(const Series& num, const Series& den, std::size_t order) {
  const Poly& d0 = den[0];
  if (d0.is_zero() || !d0.is_constant())
    throw NonUnitConstantTerm("series denominator needs a nonzero constant t^0 coefficient");
  const Rational inv = 1 / d0.leading();
  std::vector<Poly> q(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    Poly acc = k <= num.order() ? num[k] : Poly();
    for (std::size_t i = 1; i <= k && i <= den.order(); ++i) acc -= den[i] * q[k - i];
    q[k] = acc * inv;
  }
  return Series(std::move(q), order);
}

}  // namespace hankel_gamma
