#pragma once

// The (2,2)-case relations checked as exact polynomial identities per concrete n.

#include "hankel_gamma/exact.hpp"
#include "hankel_gamma/formulas.hpp"
#include "hankel_gamma/hankel.hpp"
#include "hankel_gamma/matrix.hpp"
#include "hankel_gamma/parallel.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace hankel_gamma {

struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct SingularSystem : std::domain_error {
  using std::domain_error::domain_error;
};

/// Left side minus right side of a named relation at size n; zero on pass.
struct IdentityResidual {
  long n = 0;
  std::string name;
  Poly residual;

  bool pass() const { return residual.is_zero(); }
};

using CoefficientSet = formulas::DerivativeCoefficients;

namespace detail {

struct SequenceCache {
  std::vector<Poly> a;
  std::vector<Poly> c;  // c[k] = c_k

  explicit SequenceCache(long count) : a(entry_sequence(kCentralFamily, count)) {
    c.reserve(a.size());
    for (long k = 0; k < count; ++k) c.push_back(convolution<Poly>(a, k));
  }
  const Poly& conv(long k) const {
    static const Poly zero;
    return k < 0 ? zero : c.at(static_cast<std::size_t>(k));
  }
};

// H_lambda at size n+1 for the shapes that appear in the linear system.
struct HValues {
  Poly h0, h1, h2, h11, h3, h21, h111;

  explicit HValues(long n) {
    const auto a = entry_sequence(kCentralFamily, 2 * n + 4);
    const std::span<const Poly> s(a);
    h0 = shifted_hankel_det<Poly>(s, n, {});
    h1 = shifted_hankel_det<Poly>(s, n, {1});
    h2 = shifted_hankel_det<Poly>(s, n, {2});
    h11 = shifted_hankel_det<Poly>(s, n, {1, 1});
    h3 = shifted_hankel_det<Poly>(s, n, {3});
    h21 = shifted_hankel_det<Poly>(s, n, {2, 1});
    h111 = shifted_hankel_det<Poly>(s, n, {1, 1, 1});
  }
};

inline Poly apply(const formulas::LinearRelation& e, const HValues& h) {
  return e.h3 * h.h3 + e.h21 * h.h21 + e.h111 * h.h111 + e.h2 * h.h2 + e.h11 * h.h11 + e.h1 * h.h1 + e.h0 * h.h0;
}

inline Poly apply(const formulas::Expansion& e, const Poly& lambda_value, const HValues& h) {
  return e.lead * lambda_value - e.h0 * h.h0 - e.h1 * h.h1;
}

inline void require_n2(long n, const char* what) {
  if (n < 2) throw NTooSmall(std::string(what) + " needs n >= 2");
}

}  // namespace detail

inline std::vector<IdentityResidual> verify_first_identity(long n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  const detail::SequenceCache seq(n_max + 3);
  std::vector<IdentityResidual> out;
  for (long n = 0; n <= n_max; ++n) {
    const auto f = formulas::first_identity(n);
    const auto k = static_cast<std::size_t>(n);
    const Poly rhs = f.a2 * seq.a[k + 2] + f.a1 * seq.a[k + 1] + f.a0 * seq.a[k] + f.c0 * seq.conv(n) +
                     f.cm1 * seq.conv(n - 1);
    out.push_back({n, "FI", f.lead * seq.a[k].derivative() - rhs});
  }
  return out;
}

inline std::vector<IdentityResidual> verify_second_identity(long n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  const detail::SequenceCache seq(n_max + 3);
  std::vector<IdentityResidual> out;
  for (long n = 0; n <= n_max; ++n) {
    const auto s = formulas::second_identity(n);
    const auto k = static_cast<std::size_t>(n);
    out.push_back({n, "SI",
                   s.a2 * seq.a[k + 2] + s.a1 * seq.a[k + 1] + s.a0 * seq.a[k] + s.c0 * seq.conv(n) +
                       s.cm1 * seq.conv(n - 1)});
  }
  return out;
}

inline Poly ti_weight(long n, long j) {
  if (n < 0 || j < 0 || j > n + 2) throw IndexOutOfRange("third identity weight needs 0 <= j <= n+2");
  return formulas::third_identity_weight(n, j);
}

/// Row sums sum_j w_{n,j} a_{i+j} for i = 0..n; the residual is the nonzero row
/// sum of largest degree, or zero.
inline IdentityResidual verify_third_identity(long n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  const auto a = entry_sequence(kCentralFamily, 2 * n + 3);
  std::vector<Poly> w;
  for (long j = 0; j <= n + 2; ++j) w.push_back(ti_weight(n, j));
  IdentityResidual r{n, "TI", {}};
  for (long i = 0; i <= n; ++i) {
    Poly sum;
    for (long j = 0; j <= n + 2; ++j) sum += w[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(i + j)];
    if (!sum.is_zero() && (r.residual.is_zero() || sum.degree() > r.residual.degree())) r.residual = sum;
  }
  return r;
}

/// w_{n,n+2} H_{21^k} + w_{n,n+1} H_{1^{k+1}} + (-1)^k w_{n,n-k} H_0 for 0 <= k <= n.
inline Poly kernel_relation_residual(long n, long k) {
  if (k < 0 || k > n) throw IndexOutOfRange("kernel relation needs 0 <= k <= n");
  const auto a = entry_sequence(kCentralFamily, 2 * n + 3);
  const std::span<const Poly> s(a);
  const Poly h21k = shifted_hankel_det<Poly>(s, n, Partition::hook(2, k));
  const Poly h1k = shifted_hankel_det<Poly>(s, n, Partition::ones(k + 1));
  const Poly h0 = shifted_hankel_det<Poly>(s, n, {});
  const Poly last = ti_weight(n, n - k) * h0;
  return ti_weight(n, n + 2) * h21k + ti_weight(n, n + 1) * h1k + (k % 2 == 0 ? last : -last);
}

/// The weight vector, evaluated at three seeded random rationals, lies in the right
/// kernel of [v_0 ... v_{n+2}] with v_j = (a_j, ..., a_{n+j})^T; and every
/// kernel relation for k = 0..n vanishes.
inline bool kernel_membership_check(long n, std::uint64_t seed = 7) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  const auto a = entry_sequence(kCentralFamily, 2 * n + 3);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(1, 1000);
  for (int trial = 0; trial < 3; ++trial) {
    const Rational at = make_rational(Integer(dist(rng)) - 500, Integer(dist(rng)));
    for (long i = 0; i <= n; ++i) {
      Rational sum = 0;
      for (long j = 0; j <= n + 2; ++j)
        sum += ti_weight(n, j).evaluate(at) * a[static_cast<std::size_t>(i + j)].evaluate(at);
      if (sum != 0) return false;
    }
  }
  for (long k = 0; k <= n; ++k)
    if (!kernel_relation_residual(n, k).is_zero()) return false;
  return true;
}

inline std::vector<IdentityResidual> build_five_equations(long n) {
  detail::require_n2(n, "the five equations");
  const detail::HValues h(n);
  std::vector<IdentityResidual> out;
  for (int k = 1; k <= 5; ++k) out.push_back({n, "EQ" + std::to_string(k), detail::apply(formulas::equation(k, n), h)});
  return out;
}

struct LinearSystem {
  PolyMatrix M;
  std::vector<Poly> b;
  // b = b_h0 * H_0 + b_h1 * H_1, entrywise.
  std::vector<Poly> b_h0, b_h1;
};

/// M u = b with u = (H_3, H_21, H_111, H_2, H_11) and b the H_0/H_1 parts of
/// the five equations moved to the right.
inline LinearSystem build_M(long n) {
  detail::require_n2(n, "the linear system");
  const detail::HValues h(n);
  LinearSystem sys;
  sys.M = formulas::matrix_M(n);
  for (int k = 1; k <= 5; ++k) {
    const auto e = formulas::equation(k, n);
    sys.b_h0.push_back(-e.h0);
    sys.b_h1.push_back(-e.h1);
    sys.b.push_back(-e.h0 * h.h0 - e.h1 * h.h1);
  }
  return sys;
}

/// Each row of the displayed M against the H_3..H_11 coefficients of the
/// corresponding equation; residual is the first differing entry difference.
inline IdentityResidual matrix_rows_check(long n) {
  const PolyMatrix m = formulas::matrix_M(n);
  IdentityResidual r{n, "M_ROWS", {}};
  for (int k = 1; k <= 5 && r.residual.is_zero(); ++k) {
    const auto e = formulas::equation(k, n);
    const std::array<Poly, 5> row{e.h3, e.h21, e.h111, e.h2, e.h11};
    for (std::size_t j = 0; j < 5 && r.residual.is_zero(); ++j)
      r.residual = m(static_cast<std::size_t>(k - 1), j) - row[j];
  }
  return r;
}

inline IdentityResidual det_M_check(long n) {
  return {n, "DETM", det_bareiss(formulas::matrix_M(n)) - formulas::det_M(n)};
}

/// H_lambda = (h0_num H_0 + h1_num H_1) / den from Cramer's rule.
struct ExpansionSolution {
  Partition lambda;
  Poly h0_num, h1_num, den;
  Poly value;  // the quotient evaluated with the actual H_0, H_1
};

inline const std::array<Partition, 5>& system_unknowns() {
  static const std::array<Partition, 5> u{Partition{3}, Partition{2, 1}, Partition{1, 1, 1}, Partition{2},
                                          Partition{1, 1}};
  return u;
}

inline std::vector<ExpansionSolution> solve_expansions(long n) {
  const LinearSystem sys = build_M(n);
  const Poly d = det_bareiss(sys.M);
  if (d.is_zero()) throw SingularSystem("M is singular");
  const detail::HValues h(n);
  std::vector<ExpansionSolution> out;
  for (std::size_t i = 0; i < 5; ++i) {
    PolyMatrix m0 = sys.M, m1 = sys.M;
    for (std::size_t r = 0; r < 5; ++r) {
      m0(r, i) = sys.b_h0[r];
      m1(r, i) = sys.b_h1[r];
    }
    ExpansionSolution s;
    s.lambda = system_unknowns()[i];
    s.h0_num = det_bareiss(m0);
    s.h1_num = det_bareiss(m1);
    s.den = d;
    s.value = (s.h0_num * h.h0 + s.h1_num * h.h1).exact_div(d);
    out.push_back(std::move(s));
  }
  return out;
}

inline formulas::Expansion printed_expansion(const Partition& lambda, long n) {
  if (lambda == Partition{3}) return formulas::expansion_H3(n);
  if (lambda == Partition{2, 1}) return formulas::expansion_H21(n);
  if (lambda == Partition{1, 1, 1}) return formulas::expansion_H111(n);
  if (lambda == Partition{2}) return formulas::expansion_H2(n);
  if (lambda == Partition{1, 1}) return formulas::expansion_H11(n);
  throw std::invalid_argument("no printed expansion for H_" + lambda.label());
}

inline std::string expansion_name(const Partition& lambda) {
  std::string s = "EXP_H";
  for (long p : lambda.parts()) s += std::to_string(p);
  return s;
}

/// Printed expansions against the determinants (EXP_*), and the Cramer solution
/// against both the printed coefficients and the determinants (CRAMER_*).
inline std::vector<IdentityResidual> verify_expansions(long n) {
  const detail::HValues h(n);
  const std::array<const Poly*, 5> direct{&h.h3, &h.h21, &h.h111, &h.h2, &h.h11};
  const auto solved = solve_expansions(n);
  std::vector<IdentityResidual> out;
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& lambda = system_unknowns()[i];
    const auto e = printed_expansion(lambda, n);
    out.push_back({n, expansion_name(lambda), detail::apply(e, *direct[i], h)});
    const auto& s = solved[i];
    // lead * (h0_num H_0 + h1_num H_1) / den == h0 H_0 + h1 H_1, coefficientwise.
    Poly coeff = e.lead * s.h0_num - e.h0 * s.den;
    if (coeff.is_zero()) coeff = e.lead * s.h1_num - e.h1 * s.den;
    if (coeff.is_zero()) coeff = s.value - *direct[i];
    out.push_back({n, "CRAMER_" + expansion_name(lambda).substr(4), coeff});
  }
  return out;
}

inline CoefficientSet derivative_system(long n) {
  detail::require_n2(n, "the derivative system");
  return formulas::derivative_coefficients(n);
}

inline std::vector<IdentityResidual> verify_derivative_system(long n) {
  const CoefficientSet c = derivative_system(n);
  const detail::HValues h(n);
  const Poly d0 = h.h0.derivative();
  return {
      {n, "DH0", c.Q * d0 - c.Q0 * h.h0 - c.Q1 * h.h1},
      {n, "DH1", c.U * h.h1.derivative() - c.U0 * h.h0 - c.U1 * h.h1},
      {n, "D2H0", c.R * d0.derivative() - c.R0 * h.h0 - c.R1 * h.h1},
  };
}

/// Eliminating H_1 gives Q1 R H'' - R1 Q H' + (R1 Q0 - Q1 R0) H = 0; returns those
/// three coefficients.
inline std::array<Poly, 3> eliminated_coefficients(long n) {
  const auto c = formulas::derivative_coefficients(n);
  return {c.Q1 * c.R, -(c.R1 * c.Q), c.R1 * c.Q0 - c.Q1 * c.R0};
}

/// ODE: the printed second-order equation applied to H_0. GCD: monic gcd of the
/// eliminated coefficients against the stated factor. ODE_DERIVED: the eliminated
/// coefficients divided by their gcd are proportional to (S2, S1, S0).
inline std::vector<IdentityResidual> verify_ode(long n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  const auto c = formulas::derivative_coefficients(n);
  const Poly h = hankel_det(kCentralFamily, n);
  const Poly d1 = h.derivative();
  std::vector<IdentityResidual> out{{n, "ODE", c.S2 * d1.derivative() + c.S1 * d1 + c.S0 * h}};

  const auto e = eliminated_coefficients(n);
  const Poly g = gcd(gcd(e[0], e[1]), e[2]);
  out.push_back({n, "GCD", g - monic(formulas::elimination_gcd(n))});

  const std::array<Poly, 3> s{c.S2, c.S1, c.S0};
  const std::array<Poly, 3> q{e[0].exact_div(g), e[1].exact_div(g), e[2].exact_div(g)};
  Poly cross;
  for (std::size_t i = 0; i < 3 && cross.is_zero(); ++i)
    for (std::size_t j = i + 1; j < 3 && cross.is_zero(); ++j) cross = q[i] * s[j] - q[j] * s[i];
  out.push_back({n, "ODE_DERIVED", cross});
  return out;
}

/// Every relation at every n in [0, n_max]; relations of the linear system start
/// at n = 2. Sizes are processed concurrently, output is ordered by n.
inline std::vector<IdentityResidual> verify_all_identities(long n_max, long ti_max = -1) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  if (ti_max < 0) ti_max = n_max;
  std::vector<IdentityResidual> out = verify_first_identity(n_max);
  const auto si = verify_second_identity(n_max);
  out.insert(out.end(), si.begin(), si.end());

  std::vector<std::vector<IdentityResidual>> per_n(static_cast<std::size_t>(n_max) + 1);
  parallel_for(per_n.size(), [&](std::size_t k) {
    const long n = static_cast<long>(k);
    auto& v = per_n[k];
    if (n <= ti_max) v.push_back(verify_third_identity(n));
    if (n >= 2) {
      for (auto& r : build_five_equations(n)) v.push_back(std::move(r));
      v.push_back(matrix_rows_check(n));
      v.push_back(det_M_check(n));
      for (auto& r : verify_expansions(n)) v.push_back(std::move(r));
      for (auto& r : verify_derivative_system(n)) v.push_back(std::move(r));
    }
    for (auto& r : verify_ode(n)) v.push_back(std::move(r));
  });
  for (auto& v : per_n) out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace hankel_gamma
