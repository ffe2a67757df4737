#pragma once

// Transcribed coefficients of the (2,2)-case identities, with n substituted.
// Every constant used by identities.hpp lives here so the whole set can be
// audited in one place. Names follow the relation they belong to.

#include "hankel_gamma/exact.hpp"
#include "hankel_gamma/matrix.hpp"

#include <array>
#include <stdexcept>

namespace hankel_gamma::formulas {

namespace detail {
inline Poly X() { return Poly::x(); }
}  // namespace detail

// ---------------------------------------------------------------------------
// First identity:
//   fi.lead * a_n' = fi.a2 a_{n+2} + fi.a1 a_{n+1} + fi.a0 a_n + fi.c0 c_n + fi.cm1 c_{n-1}

struct FirstIdentity {
  Poly lead, a2, a1, a0, c0, cm1;
};

inline FirstIdentity first_identity(long n) {
  const Poly x = detail::X();
  const Poly x2 = x * x, x3 = x2 * x;
  FirstIdentity f;
  f.lead = (x - 2) * x * (x + 2) * (3 * x + 2);
  f.a2 = 2 * n * (x - 1);
  f.a1 = n * (x - 6) * (x - 2) + 3 * x2 - 2 * x + 4;
  f.a0 = -(3 * x3 + 18 * x2 - 20 * x + 24 + 4 * n * (x2 + 4));
  f.c0 = 8 * (x - 1) * (x - 1);
  f.cm1 = -32 * (x - 1) * (x - 1);
  return f;
}

// ---------------------------------------------------------------------------
// Second identity: a2 a_{n+2} + a1 a_{n+1} + a0 a_n + c0 c_n + cm1 c_{n-1} = 0

struct SecondIdentity {
  Poly a2, a1, a0, c0, cm1;
};

inline SecondIdentity second_identity(long n) {
  const Poly x = detail::X();
  const Poly x2 = x * x;
  SecondIdentity s;
  s.a2 = n * x + 3 * x + 2;
  s.a1 = -(n * x * (x + 6) + 3 * x2 + 16 * x + 8);
  s.a0 = 2 * x * (x + 2) * (2 * n + 5);
  s.c0 = (x - 1) * (x - 2);
  s.cm1 = -4 * (x - 1) * (x - 2);
  return s;
}

// ---------------------------------------------------------------------------
// Third identity weights: sum_{j=0}^{n+2} w_{n,j} a_{i+j} = 0 for 0 <= i <= n.

inline Poly third_identity_weight(long n, long j) {
  const Poly x = detail::X();
  const Rational b0(binomial(n + j + 2, 2 * j));
  const Rational b1(binomial(n + j + 2, 2 * j + 1));
  const Rational c0 = Rational(2 * (2 * n + 5)) / (2 * j + 1) * b0;
  const Rational c1 = Rational((2 * n + 3) * (2 * n + 5)) / (2 * j + 1) * b0;
  const Rational c2 = Rational((2 * n + 3) * (2 * n + 5)) / (2 * j + 3) * b1;
  Poly w = Poly(c0) + Poly(c1) * x + Poly(c2) * x * x;
  return (n - j) % 2 == 0 ? w : -w;
}

// ---------------------------------------------------------------------------
// Five linear relations among H_3, H_21, H_111, H_2, H_11, H_1, H_0 (same n).

struct LinearRelation {
  Poly h3, h21, h111, h2, h11, h1, h0;
};

inline LinearRelation equation(int which, long n) {
  const Poly x = detail::X();
  const Poly x2 = x * x;
  const long n2 = n * n;
  LinearRelation e;
  switch (which) {
    case 1:
      e.h2 = 2 + 3 * x + 2 * n * x;
      e.h11 = -(2 + x + 2 * n * x);
      e.h1 = -(8 + 16 * x + 12 * n * x + 3 * x2 + 2 * n * x2);
      e.h0 = 2 + 4 * n + 17 * x + 22 * n * x + 8 * n2 * x + 11 * x2 + 16 * n * x2 + 4 * n2 * x2;
      break;
    case 2:
      e.h3 = 1 + 2 * x + n * x;
      e.h21 = -(1 + x + n * x);
      e.h111 = 1 + n * x;
      e.h2 = -(4 + 11 * x + 6 * n * x + 2 * x2 + n * x2);
      e.h11 = 4 + 5 * x + 6 * n * x + x2 + n * x2;
      e.h1 = 2 + 11 * x + 8 * n * x + 8 * x2 + 4 * n * x2;
      e.h0 = (x - 2) * (x - 1) * (n * x - 2);
      break;
    case 3:
      e.h21 = 2 + 3 * x + 2 * n * x;
      e.h111 = -4 * (1 + n * x);
      e.h11 = -4 * (4 + 5 * x + 6 * n * x + x2 + n * x2);
      e.h1 = 4 * n - 2 + 3 * x + 6 * n * x + 8 * n2 * x - x2 + 8 * n * x2 + 4 * n2 * x2;
      e.h0 = -((x - 2) * (x - 1) * (2 * n * x - 4 - x));
      break;
    case 4:
      e.h2 = 2 + 3 * x + 2 * n * x;
      e.h1 = -(10 + 4 * n + 15 * x + 16 * n * x + 4 * n2 * x + 3 * x2 + 2 * n * x2);
      e.h0 = (n + 1) * (2 * n + 5) * (2 + 3 * x + 2 * n * x + 2 * x2);
      break;
    case 5:
      e.h21 = 3 * (2 + 3 * x + 2 * n * x);
      e.h11 = -3 * (10 + 4 * n + 15 * x + 16 * n * x + 4 * n2 * x + 3 * x2 + 2 * n * x2);
      e.h0 = 2 * n * (1 + 2 * n) * (5 + 2 * n) + n * (1 + 2 * n) * (3 + 2 * n) * (5 + 2 * n) * x +
             3 * n * (3 + 2 * n) * (5 + 2 * n) * x2;
      break;
    default: throw std::invalid_argument("equation index must be 1..5");
  }
  return e;
}

// The 5x5 system in the unknowns (H_3, H_21, H_111, H_2, H_11), as displayed.
inline PolyMatrix matrix_M(long n) {
  const Poly x = detail::X();
  const Poly x2 = x * x;
  const long n2 = n * n;
  PolyMatrix m(5);
  m(0, 3) = 2 * n * x + 3 * x + 2;
  m(0, 4) = -2 * n * x - x - 2;

  m(1, 0) = n * x + 2 * x + 1;
  m(1, 1) = -n * x - x - 1;
  m(1, 2) = n * x + 1;
  m(1, 3) = -n * x2 - 2 * x2 - 6 * n * x - 11 * x - 4;
  m(1, 4) = n * x2 + x2 + 6 * n * x + 5 * x + 4;

  m(2, 1) = 2 * n * x + 3 * x + 2;
  m(2, 2) = -4 * (n * x + 1);
  m(2, 4) = -4 * (n * x2 + x2 + 6 * n * x + 5 * x + 4);

  m(3, 3) = 2 * n * x + 3 * x + 2;

  m(4, 1) = 3 * (2 * n * x + 3 * x + 2);
  m(4, 4) = -3 * (4 * x * n2 + 2 * x2 * n + 16 * x * n + 4 * n + 3 * x2 + 15 * x + 10);
  return m;
}

inline Poly det_M(long n) {
  const Poly x = detail::X();
  const Poly p = 2 + 3 * x + 2 * n * x;
  return 12 * (1 + n * x) * (1 + 2 * x + n * x) * (2 + x + 2 * n * x) * p * p;
}

// ---------------------------------------------------------------------------
// Expansions: lead * H_lambda = h0 * H_0 + h1 * H_1.

struct Expansion {
  Poly lead, h0, h1;
};

inline Expansion expansion_H3(long n) {
  const Poly x = detail::X();
  const Poly x2 = x * x, x3 = x2 * x;
  const long n2 = n * n, n3 = n2 * n;
  Expansion e;
  e.lead = 3 * (2 + 3 * x + 2 * n * x);
  e.h0 = -2 * (n + 1) *
         (8 * x * n3 + 12 * x2 * n2 + 64 * x * n2 + 8 * n2 + 6 * x3 * n + 66 * x2 * n + 162 * x * n + 52 * n +
          15 * x3 + 90 * x2 + 126 * x + 84);
  e.h1 = 3 * (4 * x * n3 + 4 * x2 * n2 + 32 * x * n2 + 4 * n2 + 2 * x3 * n + 18 * x2 * n + 81 * x * n + 26 * n +
              3 * x3 + 18 * x2 + 63 * x + 42);
  return e;
}

inline Expansion expansion_H21(long n) {
  const Poly x = detail::X();
  const Poly x2 = x * x, x3 = x2 * x, x4 = x3 * x;
  const long n2 = n * n, n3 = n2 * n, n4 = n3 * n, n5 = n4 * n;
  Expansion e;
  e.lead = 3 * (2 + x + 2 * n * x) * (2 + 3 * x + 2 * n * x);
  e.h0 = -64 * x2 * n5 - 48 * x3 * n4 - 416 * x2 * n4 - 128 * x * n4 - 192 * x3 * n3 - 1040 * x2 * n3 -
         704 * x * n3 - 64 * n3 + 12 * x4 * n2 - 192 * x3 * n2 - 1192 * x2 * n2 - 1360 * x * n2 - 288 * n2 +
         24 * x4 * n + 24 * x3 * n - 480 * x2 * n - 1120 * x * n - 416 * n + 9 * x4 + 63 * x3 + 48 * x2 -
         300 * x - 240;
  e.h1 = 3 * (4 * x * n2 + 4 * x * n + 4 * n - x + 2) *
         (4 * x * n2 + 2 * x2 * n + 16 * x * n + 4 * n + 3 * x2 + 15 * x + 10);
  return e;
}

inline Expansion expansion_H111(long n) {
  const Poly x = detail::X();
  const Poly x2 = x * x, x3 = x2 * x;
  const long n2 = n * n, n3 = n2 * n, n4 = n3 * n;
  Expansion e;
  e.lead = 3 * (2 + x + 2 * n * x);
  e.h0 = -16 * x * n4 - 32 * x * n3 - 16 * n3 + 28 * x * n2 - 24 * n2 - 6 * x3 * n - 12 * x2 * n + 80 * x * n +
         16 * n - 3 * x3 - 12 * x2 + 12 * x + 48;
  e.h1 = 3 * (4 * x * n3 + 4 * n2 + 2 * x2 * n - 9 * x * n - 2 * n + x2 - 4);
  return e;
}

inline Expansion expansion_H2(long n) {
  const Poly x = detail::X();
  const Poly x2 = x * x;
  const long n2 = n * n;
  Expansion e;
  e.lead = 2 + 3 * x + 2 * n * x;
  e.h0 = -(n + 1) * (2 * n + 5) * (2 * x2 + 2 * n * x + 3 * x + 2);
  e.h1 = 4 * x * n2 + 2 * x2 * n + 16 * x * n + 4 * n + 3 * x2 + 15 * x + 10;
  return e;
}

inline Expansion expansion_H11(long n) {
  const Poly x = detail::X();
  const Poly x2 = x * x;
  const long n2 = n * n, n3 = n2 * n;
  Expansion e;
  e.lead = 2 + x + 2 * n * x;
  e.h0 = -4 * x * n3 - 12 * x * n2 - 4 * n2 + 2 * x2 * n - 9 * x * n - 10 * n + x2 + 2 * x - 8;
  e.h1 = 4 * x * n2 + 4 * x * n + 4 * n - x + 2;
  return e;
}

// ---------------------------------------------------------------------------
// Derivative system:
//   Q H_0'  = Q0 H_0 + Q1 H_1
//   U H_1'  = U0 H_0 + U1 H_1
//   R H_0'' = R0 H_0 + R1 H_1
// and the second-order equation S2 H_0'' + S1 H_0' + S0 H_0 = 0.

struct DerivativeCoefficients {
  Poly Q, Q0, Q1, U, U0, U1, R, R0, R1, S2, S1, S0;
};

inline DerivativeCoefficients derivative_coefficients(long n) {
  const Poly x = detail::X();
  const Poly x2 = x * x, x3 = x2 * x, x4 = x3 * x;
  const long n2 = n * n, n3 = n2 * n, n4 = n3 * n;
  DerivativeCoefficients d;
  d.Q = (x - 2) * (x + 2) * (2 * n * x + x + 2) * (2 * n * x + 3 * x + 2);
  d.Q0 = -(n + 1) * (16 * x2 * n3 + 4 * x3 * n2 + 48 * x2 * n2 + 32 * x * n2 + 8 * x3 * n + 36 * x2 * n +
                     80 * x * n + 16 * n + 3 * x3 + 12 * x2 + 12 * x + 48);
  d.Q1 = (2 * n + 3) * (4 * n2 * x2 + 4 * n * x2 + x2 + 8 * n * x + 4);

  d.U = (x - 2) * (x + 2) * (2 * n * x + x + 2) * (2 * n * x + 3 * x + 2);
  d.U0 = -2 * (n + 1) *
         (16 * x2 * n4 + 8 * x3 * n3 + 72 * x2 * n3 + 32 * x * n3 + 28 * x3 * n2 + 116 * x2 * n2 + 112 * x * n2 +
          16 * n2 + 26 * x3 * n + 86 * x2 * n + 104 * x * n + 56 * n + 7 * x3 + 22 * x2 + 20 * x + 56);
  d.U1 = 16 * x2 * n4 + 4 * x3 * n3 + 64 * x2 * n3 + 32 * x * n3 + 12 * x3 * n2 + 92 * x2 * n2 + 80 * x * n2 +
         16 * n2 + 11 * x3 * n + 56 * x2 * n + 44 * x * n + 32 * n + 3 * x3 + 10 * x2 - 4 * x + 24;

  d.R = (x - 2) * (x - 2) * (x + 2) * (x + 2) * (2 * n * x + x + 2) * (2 * n * x + 3 * x + 2);
  d.R0 = (n + 1) * (4 * n3 * x4 + 16 * n2 * x4 + 19 * n * x4 + 6 * x4 + 32 * n3 * x3 + 96 * n2 * x3 +
                    64 * n * x3 + 18 * x3 - 48 * n3 * x2 + 240 * n * x2 + 48 * x2 + 128 * n3 * x + 288 * n2 * x +
                    160 * n * x + 264 * x + 128 * n2 + 208 * n - 96);
  d.R1 = -2 * (2 * n + 3) *
         (4 * n2 * x3 + 4 * n * x3 + x3 - 4 * n2 * x2 + 8 * n * x2 - x2 + 16 * n2 * x + 8 * n * x + 12 * x +
          16 * n - 4);

  d.S2 = (x - 2) * (x + 2) * (4 * n2 * x2 + 4 * n * x2 + x2 + 8 * n * x + 4);
  d.S1 = 2 * (4 * n2 * x3 + 4 * n * x3 + x3 - 4 * n2 * x2 + 8 * n * x2 - x2 + 16 * n2 * x + 8 * n * x + 12 * x +
              16 * n - 4);
  d.S0 = -n * (n + 1) * (4 * n2 * x2 + 4 * n * x2 + x2 + 8 * n * x - 8 * x + 36);
  return d;
}

// Stated common factor of the eliminated coefficients.
inline Poly elimination_gcd(long n) {
  const Poly x = detail::X();
  return (2 * n + 3) * (x - 2) * (x + 2) * (2 * n * x + x + 2) * (2 * n * x + 3 * x + 2);
}

}  // namespace hankel_gamma::formulas
