#pragma once

// Closed forms, series and special values of H_0(n, x) for the (2,2) family.

#include "hankel_gamma/exact.hpp"
#include "hankel_gamma/hankel.hpp"
#include "hankel_gamma/matrix.hpp"
#include "hankel_gamma/parallel.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hankel_gamma {

enum class Center { plus2, minus2 };
enum class ExpansionForm { binomial, rational };

namespace detail {

inline long neg1_pow(long e) { return e % 2 == 0 ? 1 : -1; }

inline void require_nonneg(long n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
}

// sum_k coeffs[k] (x - center)^k as a polynomial in x.
inline Poly recenter(std::vector<Rational> coeffs, long center) {
  return Poly(std::move(coeffs)).taylor_shift(Rational(-center));
}

}  // namespace detail

/// H_0(n, x) as a finite sum in powers of (x - 2) or (x + 2).
inline Poly thm1_expansion(long n, Center center, ExpansionForm form) {
  detail::require_nonneg(n);
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) {
    Rational v;
    if (center == Center::plus2 && form == ExpansionForm::binomial) {
      v = Rational((2 * n + 3) * binomial(n + k, 2 * k + 1) + (2 * k + 1) * binomial(n + k + 1, 2 * k + 1)) *
          detail::neg1_pow(n);
    } else if (center == Center::plus2) {
      v = ratio(2 * n * n + 4 * n + 2 * k * k + 1, 2 * k + 1) * Rational(binomial(n + k, 2 * k)) * detail::neg1_pow(n);
    } else if (form == ExpansionForm::binomial) {
      v = Rational((n + k + 1) * binomial(n + k, 2 * k) + (2 * n + 4 * k + 1) * binomial(n + k, 2 * k + 1) +
                   8 * (k + 1) * binomial(n + k + 1, 2 * k + 3)) *
          detail::neg1_pow(k);
    } else {
      v = Rational(2 * n + 3) * ratio(2 * n * n + 2 * k * k + 4 * k + 1, (2 * k + 1) * (2 * k + 3)) *
          Rational(binomial(n + k, 2 * k)) * detail::neg1_pow(k);
    }
    c[static_cast<std::size_t>(k)] = v;
  }
  return detail::recenter(std::move(c), center == Center::plus2 ? 2 : -2);
}

/// The floor-function expansion of H_0(n, x) in powers of x.
inline Poly solution_at0(long n) {
  detail::require_nonneg(n);
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) {
    const long s = detail::neg1_pow(n * (n - 1) / 2 + k * (k - 1) / 2 + k * n);
    const long weight = 2 * k + detail::neg1_pow(n - k);
    const Integer num = factorial(n - (n - k + 1) / 2);
    const Integer den = factorial((n - k) / 2) * factorial(k);
    c[static_cast<std::size_t>(k)] = make_rational(num, den) * (s * weight);
  }
  return Poly(std::move(c));
}

// H_0(0..count-1, x) by Bareiss, in parallel.
inline std::vector<Poly> hankel_dets(long count) {
  std::vector<Poly> h(static_cast<std::size_t>(std::max(0L, count)));
  parallel_for(h.size(), [&](std::size_t k) { h[k] = hankel_det(kCentralFamily, static_cast<long>(k)); });
  return h;
}

/// (1 - t + t^2 - t^3 - x t - 3x t^2) / (1 + x t + t^2)^2 through t^order.
inline Series generating_function(long order) {
  if (order < 0) throw std::invalid_argument("order must be non-negative");
  const Poly x = Poly::x();
  const auto o = static_cast<std::size_t>(order);
  const Series num({Poly(1), -1 - x, 1 - 3 * x, Poly(-1)}, o);
  const Series base({Poly(1), x, Poly(1)}, o);
  return series_quotient(num, base * base, o);
}

inline bool genfun_check(long order, const std::vector<Poly>* dets = nullptr) {
  const Series g = generating_function(order);
  const auto h = dets ? *dets : hankel_dets(order + 1);
  for (long k = 0; k <= order; ++k)
    if (g[static_cast<std::size_t>(k)] != h.at(static_cast<std::size_t>(k))) return false;
  return true;
}

/// (2+(2n+3)x)^2 H_{n+2} + x(4+4(2n+3)x+(2n+3)(2n+5)x^2) H_{n+1} + (2+(2n+5)x)^2 H_n.
inline Poly recursion_residual(long n, const Poly& hn, const Poly& hn1, const Poly& hn2) {
  const Poly x = Poly::x();
  const Poly p = 2 + (2 * n + 3) * x;
  const Poly q = 2 + (2 * n + 5) * x;
  return p * p * hn2 + x * (4 + 4 * (2 * n + 3) * x + (2 * n + 3) * (2 * n + 5) * x * x) * hn1 + q * q * hn;
}

inline bool recursion_check(long n_max, const std::vector<Poly>* dets = nullptr) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  const auto h = dets ? *dets : hankel_dets(n_max + 3);
  for (long n = 0; n <= n_max; ++n) {
    const auto k = static_cast<std::size_t>(n);
    if (!recursion_residual(n, h.at(k), h.at(k + 1), h.at(k + 2)).is_zero()) return false;
  }
  return true;
}

/// Closed-form value of H_0(n, x0) for x0 in {2, -2, 0, 1}.
inline Rational special_value_closed(long n, const Rational& x0) {
  detail::require_nonneg(n);
  if (x0 == 2) return Rational(detail::neg1_pow(n) * (2 * n * n + 4 * n + 1));
  if (x0 == -2) return ratio((2 * n + 3) * (1 + 2 * n * n), 3);
  if (x0 == 0) return Rational(detail::neg1_pow(n * (n + 1) / 2));
  if (x0 == 1) {
    switch (n % 3) {
      case 0: return ratio(2 * n + 3, 3);
      case 1: return ratio(-4 * (n + 2), 3);
      default: return ratio(2 * n + 5, 3);
    }
  }
  throw std::invalid_argument("closed forms exist only at x = 2, -2, 0, 1");
}

// computed is det[a_{i+j}(x0)], taken over Q after substituting x0.
struct SpecialValue {
  Rational computed;
  Rational closed_form;
};

inline SpecialValue special_value(long n, const Rational& x0) {
  const Rational closed = special_value_closed(n, x0);
  std::vector<Rational> a;
  for (const auto& p : entry_sequence(kCentralFamily, 2 * n + 1)) a.push_back(p.evaluate(x0));
  return {det_rational(shifted_hankel_matrix<Rational>(std::span<const Rational>(a), n, {})), closed};
}

inline bool ak_at2_identity(long k_max) {
  if (k_max < 0) throw std::invalid_argument("k_max must be non-negative");
  for (long k = 0; k <= k_max; ++k) {
    const Rational lhs = entry_poly(kCentralFamily, k).evaluate(Rational(2));
    if (lhs != Rational(ipow(Integer(4), static_cast<unsigned long>(k + 1)) - binomial(2 * k + 3, k + 1))) return false;
  }
  return true;
}

/// H_0(n-1) H_0(n+1) - (H_0 H_2 + H_0 H_{1^2} - H_1^2) with the right side at size n.
inline Poly pfaff_residual(long n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const auto a = entry_sequence(kCentralFamily, 2 * n + 4);
  const std::span<const Poly> s(a);
  const Poly h0 = shifted_hankel_det<Poly>(s, n, {});
  const Poly h1 = shifted_hankel_det<Poly>(s, n, {1});
  const Poly h2 = shifted_hankel_det<Poly>(s, n, {2});
  const Poly h11 = shifted_hankel_det<Poly>(s, n, {1, 1});
  return shifted_hankel_det<Poly>(s, n - 1, {}) * shifted_hankel_det<Poly>(s, n + 1, {}) -
         (h0 * h2 + h0 * h11 - h1 * h1);
}

/// With samples, the identity is checked at those points only (rational
/// determinants); without, as a polynomial identity.
inline bool pfaff_check(long n, const std::vector<Rational>& samples = {}) {
  if (samples.empty()) return pfaff_residual(n).is_zero();
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const auto a = entry_sequence(kCentralFamily, 2 * n + 4);
  for (const auto& at : samples) {
    std::vector<Rational> v;
    for (const auto& p : a) v.push_back(p.evaluate(at));
    const std::span<const Rational> s(v);
    auto H = [&](long m, const Partition& l) { return det_rational(shifted_hankel_matrix<Rational>(s, m, l)); };
    const Rational h0 = H(n, {}), h1 = H(n, {1});
    if (H(n - 1, {}) * H(n + 1, {}) != h0 * H(n, {2}) + h0 * H(n, {1, 1}) - h1 * h1) return false;
  }
  return true;
}

enum class SeriesCenter { BK, DK, EK };

struct SeriesCheck {
  std::vector<Rational> coeffs;        // b_k, d_k or e_k for k = 0..n+4
  std::vector<long> failing_k;         // recurrence failures
  std::optional<bool> first_ratio_ok;  // b_1/b_0 or d_1/d_0
  std::optional<bool> closed_form_ok;  // closed coefficient form (BK, DK)

  bool pass() const {
    return failing_k.empty() && first_ratio_ok.value_or(true) && closed_form_ok.value_or(true);
  }
};

namespace detail {

// Left side minus right side of the printed recurrence at index k; e(j) = 0 for j < 0.
inline Rational series_recurrence_residual(SeriesCenter which, long n, long k, const std::vector<Rational>& c) {
  auto e = [&](long j) { return j < 0 || j >= static_cast<long>(c.size()) ? Rational(0) : c[static_cast<std::size_t>(j)]; };
  const long n2 = n * n, n3 = n2 * n, n4 = n3 * n, k2 = k * k;
  const long m = 2 * n + 1;
  switch (which) {
    case SeriesCenter::BK:
      return Rational(16 * k * (2 * k + 1) * (2 * n2 + 4 * n + 1)) * e(k) -
             (Rational(8 * (2 * n4 + 6 * n3 - 10 * k2 * n2 + 18 * k * n2 - n2 - 16 * k2 * n + 26 * k * n - 7 * n -
                            3 * k2 + 4 * k - 1)) * e(k - 1) +
              Rational(2 * (8 * n4 + 20 * n3 - 16 * k2 * n2 + 60 * k * n2 - 46 * n2 - 20 * k2 * n + 68 * k * n -
                            58 * n - 4 * k2 + 15 * k - 14)) * e(k - 2) +
              Rational((n + 3 - k) * (k + n - 2) * m * m) * e(k - 3));
    case SeriesCenter::DK:
      return Rational(16 * k * (2 * k + 3) * (2 * n2 + 1)) * e(k) -
             (Rational(-8 * (2 * n4 + 2 * n3 - 10 * k2 * n2 + 10 * k * n2 + 7 * n2 - 4 * k2 * n + 6 * k * n + 5 * n -
                             3 * k2 + 2 * k + 1)) * e(k - 1) +
              Rational(2 * (8 * n4 + 12 * n3 - 16 * k2 * n2 + 52 * k * n2 - 30 * n2 - 12 * k2 * n + 44 * k * n -
                            34 * n - 4 * k2 + 13 * k - 10)) * e(k - 2) +
              Rational((k - n - 3) * (k + n - 2) * m * m) * e(k - 3));
    case SeriesCenter::EK:
      return Rational(16 * k * (k - 1)) * e(k) -
             (Rational(-8 * (k - 1) * (4 * k * n - 12 * n + 1)) * e(k - 1) +
              Rational(-4 * (4 * n2 * k2 + 4 * n * k2 - 28 * n2 * k - 24 * n * k - 6 * k + 49 * n2 + 41 * n + 12)) *
                  e(k - 2) +
              Rational(-2 * (4 * n3 + 4 * k * n2 - 12 * n2 - 4 * k2 * n + 20 * k * n - 28 * n + k - 3)) * e(k - 3) +
              Rational((k - n - 4) * (k + n - 3) * m * m) * e(k - 4));
  }
  return {};
}

}  // namespace detail

inline std::vector<Rational> series_coefficients(long n, SeriesCenter which) {
  const Poly h = hankel_det(kCentralFamily, n);
  const Poly p = which == SeriesCenter::BK ? h.taylor_shift(Rational(2))
                 : which == SeriesCenter::DK ? h.taylor_shift(Rational(-2))
                                             : h;
  std::vector<Rational> c(static_cast<std::size_t>(n) + 5);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = p.coeff(k);
  return c;
}

/// Checks the printed recurrence for 2 <= k <= n+4 on the coefficients of H_0(n, x)
/// about the chosen center, and the first-ratio and closed forms where printed.
inline SeriesCheck series_recurrence_report(long n, SeriesCenter which) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  SeriesCheck r;
  r.coeffs = series_coefficients(n, which);
  for (long k = 2; k <= n + 4; ++k)
    if (detail::series_recurrence_residual(which, n, k, r.coeffs) != 0) r.failing_k.push_back(k);
  const Rational& c0 = r.coeffs[0];
  const long n2 = n * n;
  if (which == SeriesCenter::BK) {
    r.first_ratio_ok = r.coeffs[1] == ratio(n * (n + 1) * (2 * n2 + 4 * n + 3), 6 * (2 * n2 + 4 * n + 1)) * c0;
    bool ok = true;
    for (long k = 0; k <= n + 4; ++k)
      ok = ok && r.coeffs[static_cast<std::size_t>(k)] ==
                     ratio(2 * n2 + 4 * n + 2 * k * k + 1, (2 * n2 + 4 * n + 1) * (2 * k + 1)) *
                         Rational(binomial(n + k, 2 * k)) * c0;
    r.closed_form_ok = ok;
  } else if (which == SeriesCenter::DK) {
    r.first_ratio_ok = r.coeffs[1] == ratio(-n * (1 + n) * (7 + 2 * n2), 10 * (1 + 2 * n2)) * c0;
    bool ok = true;
    for (long k = 0; k <= n + 4; ++k)
      ok = ok && r.coeffs[static_cast<std::size_t>(k)] ==
                     ratio(3 * (2 * n2 + 2 * k * k + 4 * k + 1), (1 + 2 * n2) * (2 * k + 1) * (2 * k + 3)) *
                         Rational(binomial(n + k, 2 * k)) * c0 * detail::neg1_pow(k);
    r.closed_form_ok = ok;
  }
  return r;
}

inline bool series_recurrence_check(long n, SeriesCenter which) { return series_recurrence_report(n, which).pass(); }

}  // namespace hankel_gamma
