#pragma once

// Exact real-root counting and isolation by Sturm chains, and the interlacing
// of zeros of consecutive H_0(n, x).

#include "hankel_gamma/exact.hpp"
#include "hankel_gamma/hankel.hpp"
#include "hankel_gamma/parallel.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace hankel_gamma {

struct EndpointIsRoot : std::domain_error {
  using std::domain_error::domain_error;
};

/// Open interval (lo, hi) with lo < hi.
struct Interval {
  Rational lo, hi;

  Interval() = default;
  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (!(lo < hi)) throw std::invalid_argument("interval needs lo < hi");
  }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool disjoint(const Interval& o) const { return hi <= o.lo || o.hi <= lo; }
};

struct RootReport {
  long n = 0;
  std::vector<Interval> isolating_intervals;  // sorted, disjoint, one root each
};

/// p, p', then negated remainders, each remainder scaled by 1/|leading coefficient|.
inline std::vector<Poly> sturm_chain(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
  std::vector<Poly> chain{p};
  if (p.is_constant()) return chain;
  chain.push_back(p.derivative());
  while (!chain.back().is_constant()) {
    Poly r = -divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    Rational lc = abs(r.leading());
    chain.push_back(r * (1 / lc));
  }
  return chain;
}

inline int sign_variations(const std::vector<Poly>& chain, const Rational& at) {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = sign(q.evaluate(at));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Distinct real roots of chain[0] in (lo, hi).
inline long count_roots(const std::vector<Poly>& chain, const Interval& iv) {
  if (chain.front().evaluate(iv.lo) == 0 || chain.front().evaluate(iv.hi) == 0)
    throw EndpointIsRoot("interval endpoint is a root");
  return sign_variations(chain, iv.lo) - sign_variations(chain, iv.hi);
}

inline long count_roots(const Poly& p, const Interval& iv) { return count_roots(sturm_chain(p), iv); }

namespace detail {

// A split point inside (lo, hi) that is not a root: the midpoint, nudged up by
// width/1000 steps if needed.
inline Rational split_point(const Poly& p, const Interval& iv) {
  Rational m = iv.midpoint();
  const Rational step = iv.width() / 1000;
  while (p.evaluate(m) == 0) m += step;
  return m;
}

// Shrinks an interval holding one simple root by sign bisection.
inline Interval refine(const Poly& p, Interval iv, const Rational& width) {
  int slo = sign(p.evaluate(iv.lo));
  while (iv.width() > width) {
    const Rational m = split_point(p, iv);
    const int sm = sign(p.evaluate(m));
    if (sm == slo) {
      iv.lo = m;
    } else {
      iv.hi = m;
    }
  }
  return iv;
}

}  // namespace detail

/// Isolating intervals of width <= width for the roots of p in range, sorted.
/// Endpoints of range must not be roots.
inline std::vector<Interval> isolate(const Poly& p, const Interval& range, const Rational& width) {
  if (width <= 0) throw std::invalid_argument("width must be positive");
  const auto chain = sturm_chain(p);
  std::vector<Interval> done;
  std::vector<std::pair<Interval, long>> todo{{range, count_roots(chain, range)}};
  while (!todo.empty()) {
    auto [iv, count] = todo.back();
    todo.pop_back();
    if (count == 0) continue;
    if (count == 1) {
      done.push_back(detail::refine(p, iv, width));
      continue;
    }
    const Rational m = detail::split_point(p, iv);
    const Interval left(iv.lo, m), right(m, iv.hi);
    const long cl = count_roots(chain, left);
    todo.push_back({right, count - cl});
    todo.push_back({left, cl});
  }
  std::sort(done.begin(), done.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return done;
}

inline const Interval& open_unit_range() {
  static const Interval r(Rational(-2), Rational(2));
  return r;
}

inline RootReport isolate_roots(long n, const Rational& width) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return {n, isolate(hankel_det(kCentralFamily, n), open_unit_range(), width)};
}

/// Rounds q to the given number of decimals, halves away from zero.
inline std::string round_decimal(const Rational& q, int digits) {
  if (digits < 0) throw std::invalid_argument("digits must be non-negative");
  const Integer scale = ipow(Integer(10), static_cast<unsigned long>(digits));
  const Rational scaled = abs(q) * scale + ratio(1, 2);
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  std::string s = r.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  return (sgn(q) < 0 && r != 0 ? "-" : "") + s;
}

/// Truncates q toward zero to the given number of decimals.
inline std::string truncate_decimal(const Rational& q, int digits) {
  if (digits < 0) throw std::invalid_argument("digits must be non-negative");
  const Integer scale = ipow(Integer(10), static_cast<unsigned long>(digits));
  const Rational scaled = abs(q) * scale;
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  return round_decimal(make_rational(r, scale) * sgn(q), digits);
}

/// The root isolated by iv, truncated toward zero to digits decimals. The interval
/// is refined until both endpoints truncate alike, which pins the root's digits
/// unless the root sits exactly on the decimal grid; that case is checked directly.
inline std::string certified_truncation(const Poly& p, Interval iv, int digits) {
  const Integer scale = ipow(Integer(10), static_cast<unsigned long>(digits));
  for (int step = 0; step < 400; ++step) {
    const std::string lo = truncate_decimal(iv.lo, digits);
    if (lo == truncate_decimal(iv.hi, digits)) return lo;
    // A grid point inside the interval that is itself the root.
    Integer g;
    const Rational hi_scaled = iv.hi * scale;
    mpz_fdiv_q(g.get_mpz_t(), hi_scaled.get_num_mpz_t(), hi_scaled.get_den_mpz_t());
    const Rational grid = make_rational(g, scale);
    if (iv.lo < grid && p.evaluate(grid) == 0) return truncate_decimal(grid, digits);
    iv = detail::refine(p, iv, iv.width() / 2);
  }
  throw std::runtime_error("truncation did not stabilise");
}

/// True iff the roots of inner (degree d) strictly separate those of outer
/// (degree d+1), all real and inside range. A shared root, detected by a
/// nonconstant gcd, gives false.
inline bool strictly_interlace(const Poly& outer, const Poly& inner, const Interval& range) {
  if (!gcd(outer, inner).is_constant()) return false;
  if (outer.degree() != inner.degree() + 1) return false;
  Rational width = range.width() / 64;
  while (true) {
    const auto ro = isolate(outer, range, width);
    const auto ri = isolate(inner, range, width);
    if (static_cast<long>(ro.size()) != outer.degree() || static_cast<long>(ri.size()) != inner.degree()) return false;
    bool disjoint = true;
    for (const auto& a : ro)
      for (const auto& b : ri) disjoint = disjoint && a.disjoint(b);
    if (disjoint) {
      for (std::size_t k = 0; k < ri.size(); ++k)
        if (!(ro[k].hi <= ri[k].lo && ri[k].hi <= ro[k + 1].lo)) return false;
      return true;
    }
    width /= 2;
  }
}

/// Strict interlacing of the zeros of H_0(n) and H_0(n+1) for 1 <= n < n_max.
inline bool verify_interlacing(long n_max) {
  if (n_max < 2) throw std::invalid_argument("n_max must be >= 2");
  std::vector<Poly> h(static_cast<std::size_t>(n_max) + 1);
  parallel_for(h.size(), [&](std::size_t k) { h[k] = hankel_det(kCentralFamily, static_cast<long>(k)); });
  std::vector<char> ok(static_cast<std::size_t>(n_max), 1);
  parallel_for(static_cast<std::size_t>(n_max - 1), [&](std::size_t k) {
    const std::size_t n = k + 1;
    ok[n] = strictly_interlace(h[n + 1], h[n], open_unit_range()) ? 1 : 0;
  });
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

/// At every root of H_0(n+1), H_0(n) and H_0(n+2) have opposite signs. Each root
/// interval is refined until it holds no root of either neighbour, so the sign at
/// its midpoint is the sign at the root.
inline bool recursion_sign_check(long n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  const Poly h0 = hankel_det(kCentralFamily, n);
  const Poly h1 = hankel_det(kCentralFamily, n + 1);
  const Poly h2 = hankel_det(kCentralFamily, n + 2);
  const auto c0 = sturm_chain(h0);
  const auto c2 = sturm_chain(h2);
  auto clear = [&](const std::vector<Poly>& chain, const Interval& iv) {
    return chain.front().evaluate(iv.lo) != 0 && chain.front().evaluate(iv.hi) != 0 && count_roots(chain, iv) == 0;
  };
  for (Interval iv : isolate(h1, open_unit_range(), ratio(1, 16))) {
    while (!(clear(c0, iv) && clear(c2, iv))) iv = detail::refine(h1, iv, iv.width() / 2);
    const Rational m = iv.midpoint();
    if (sign(h0.evaluate(m)) * sign(h2.evaluate(m)) >= 0) return false;
  }
  return true;
}

}  // namespace hankel_gamma
