#pragma once

// Closed-form right-hand sides for gamma_A applied to Hankel-type arguments,
// expressed in shifted Hankel determinants H_lambda, and their verification.

#include "hankel_gamma/exact.hpp"
#include "hankel_gamma/gamma.hpp"
#include "hankel_gamma/hankel.hpp"
#include "hankel_gamma/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace hankel_gamma {

/// coefficient(n) * [a_symbol] * H_lambda, where coefficient is a polynomial in n
/// (lowest power first) and symbol < 0 means no a_p factor.
struct RhsTerm {
  std::vector<long> n_coeffs;
  long symbol = -1;
  Partition lambda;

  Integer coefficient(long n) const {
    Integer acc = 0;
    for (auto it = n_coeffs.rbegin(); it != n_coeffs.rend(); ++it) acc = acc * n + *it;
    return acc;
  }
};

struct TableRow {
  int table = 0;
  std::string id;  // e.g. "t2:a1,ia2"
  std::vector<MatrixDescriptor> args;
  std::vector<RhsTerm> rhs;

  /// Smallest n at which the row is asserted.
  long floor() const {
    long f = static_cast<long>(args.size()) - 1;
    for (const auto& d : args) f = std::max(f, d.shift);
    for (const auto& t : rhs)
      if (!t.lambda.empty()) f = std::max(f, t.lambda.largest() + static_cast<long>(t.lambda.length()) - 1);
    return std::max(f, 0L);
  }

  // Total degree of lhs - rhs in the symbols a_0, a_1, ...
  long symbol_degree(long n) const {
    long d = n + 1;
    for (const auto& x : args)
      if (x.kind == ArgKind::conv_shift) return n + 2;
    return d;
  }
};

namespace detail {

using D = MatrixDescriptor;

inline RhsTerm T(std::vector<long> c, Partition lambda, long symbol = -1) { return {std::move(c), symbol, std::move(lambda)}; }

inline Partition P(std::initializer_list<long> parts) { return Partition(parts); }

inline TableRow row(int table, std::vector<D> prefix, D last, std::vector<RhsTerm> rhs) {
  TableRow r;
  r.table = table;
  prefix.push_back(std::move(last));
  r.args = std::move(prefix);
  r.id = "t" + std::to_string(table) + ":";
  for (std::size_t k = 0; k < r.args.size(); ++k) r.id += (k ? "," : "") + r.args[k].code();
  r.rhs = std::move(rhs);
  return r;
}

inline std::vector<TableRow> table1() {
  const std::vector<D> none;
  auto a = [](long k) { return D::Shift(k); };
  auto ia = [](long k) { return D::IndexWeightedShift(k); };
  auto c = [](long k) { return D::ConvShift(k); };
  const Partition h0;
  return {
      row(1, none, a(0), {T({1, 1}, h0)}),
      row(1, none, a(1), {T({1}, P({1}))}),
      row(1, none, a(2), {T({1}, P({2})), T({-1}, P({1, 1}))}),
      row(1, none, a(3), {T({1}, P({3})), T({-1}, P({2, 1})), T({1}, P({1, 1, 1}))}),
      row(1, none, a(4), {T({1}, P({4})), T({-1}, P({3, 1})), T({1}, P({2, 1, 1})), T({-1}, P({1, 1, 1, 1}))}),
      row(1, none, a(5),
          {T({1}, P({5})), T({-1}, P({4, 1})), T({1}, P({3, 1, 1})), T({-1}, P({2, 1, 1, 1})),
           T({1}, P({1, 1, 1, 1, 1}))}),
      row(1, none, ia(0), {T({0, 1, 1}, h0)}),
      row(1, none, ia(1), {T({0, 2}, P({1}))}),
      row(1, none, ia(2), {T({0, 2}, P({2})), T({2, -2}, P({1, 1}))}),
      row(1, none, ia(3), {T({0, 2}, P({3})), T({2, -2}, P({2, 1})), T({-4, 2}, P({1, 1, 1}))}),
      row(1, none, ia(4),
          {T({0, 2}, P({4})), T({2, -2}, P({3, 1})), T({-4, 2}, P({2, 1, 1})), T({6, -2}, P({1, 1, 1, 1}))}),
      row(1, none, ia(5),
          {T({0, 2}, P({5})), T({2, -2}, P({4, 1})), T({-4, 2}, P({3, 1, 1})), T({6, -2}, P({2, 1, 1, 1})),
           T({-8, 2}, P({1, 1, 1, 1, 1}))}),
      row(1, none, c(-1), {}),
      row(1, none, c(0), {T({1, 2}, h0, 0)}),
      row(1, none, c(1), {T({2}, P({1}), 0), T({0, 2}, h0, 1)}),
      row(1, none, c(2), {T({2}, P({2}), 0), T({-2}, P({1, 1}), 0), T({2}, P({1}), 1), T({-1, 2}, h0, 2)}),
      row(1, none, c(3),
          {T({2}, P({3}), 0), T({-2}, P({2, 1}), 0), T({2}, P({1, 1, 1}), 0), T({2}, P({2}), 1),
           T({-2}, P({1, 1}), 1), T({2}, P({1}), 2), T({-2, 2}, h0, 3)}),
  };
}

inline std::vector<TableRow> table2() {
  const std::vector<D> pre{D::Shift(1)};
  auto a = [](long k) { return D::Shift(k); };
  auto ia = [](long k) { return D::IndexWeightedShift(k); };
  auto c = [](long k) { return D::ConvShift(k); };
  const Partition h0;
  return {
      row(2, pre, a(0), {T({0, 1}, P({1}))}),
      row(2, pre, a(1), {T({2}, P({1, 1}))}),
      row(2, pre, a(2), {T({1}, P({2, 1})), T({-2}, P({1, 1, 1}))}),
      row(2, pre, a(3), {T({1}, P({3, 1})), T({-1}, P({2, 2})), T({-1}, P({2, 1, 1})), T({2}, P({1, 1, 1, 1}))}),
      row(2, pre, a(4),
          {T({1}, P({4, 1})), T({-1}, P({3, 2})), T({-1}, P({3, 1, 1})), T({1}, P({2, 2, 1})),
           T({1}, P({2, 1, 1, 1})), T({-2}, P({1, 1, 1, 1, 1}))}),
      row(2, pre, ia(0), {T({0, -1, 1}, P({1}))}),
      row(2, pre, ia(1), {T({-2, 4}, P({1, 1}))}),
      row(2, pre, ia(2), {T({0, 2}, P({2, 1})), T({6, -4}, P({1, 1, 1}))}),
      row(2, pre, ia(3),
          {T({0, 2}, P({3, 1})), T({2, -2}, P({2, 2})), T({2, -2}, P({2, 1, 1})), T({-10, 4}, P({1, 1, 1, 1}))}),
      row(2, pre, ia(4),
          {T({0, 2}, P({4, 1})), T({2, -2}, P({3, 2})), T({2, -2}, P({3, 1, 1})), T({-4, 2}, P({2, 2, 1})),
           T({-4, 2}, P({2, 1, 1, 1})), T({14, -4}, P({1, 1, 1, 1, 1}))}),
      row(2, pre, c(-1), {T({0, -2}, h0, 0)}),
      row(2, pre, c(0), {T({-1, 2}, P({1}), 0), T({1, -2}, h0, 1)}),
      row(2, pre, c(1), {T({4}, P({1, 1}), 0), T({-2, 2}, P({1}), 1), T({2, -2}, h0, 2)}),
      row(2, pre, c(2),
          {T({2}, P({2, 1}), 0), T({-4}, P({1, 1, 1}), 0), T({4}, P({1, 1}), 1), T({-3, 2}, P({1}), 2),
           T({3, -2}, h0, 3)}),
  };
}

inline std::vector<TableRow> table3() {
  const std::vector<D> pre{D::Shift(2)};
  auto a = [](long k) { return D::Shift(k); };
  auto ia = [](long k) { return D::IndexWeightedShift(k); };
  auto c = [](long k) { return D::ConvShift(k); };
  const Partition h0;
  return {
      row(3, pre, a(0), {T({0, 1}, P({2})), T({0, -1}, P({1, 1}))}),
      row(3, pre, a(1), {T({1}, P({2, 1})), T({-2}, P({1, 1, 1}))}),
      row(3, pre, a(2), {T({2}, P({2, 2})), T({-2}, P({2, 1, 1})), T({2}, P({1, 1, 1, 1}))}),
      row(3, pre, a(3),
          {T({1}, P({3, 2})), T({-1}, P({3, 1, 1})), T({-1}, P({2, 2, 1})), T({2}, P({2, 1, 1, 1})),
           T({-2}, P({1, 1, 1, 1, 1}))}),
      row(3, pre, ia(0), {T({0, -1, 1}, P({2})), T({-2, 1, -1}, P({1, 1}))}),
      row(3, pre, ia(1), {T({-2, 2}, P({2, 1})), T({4, -4}, P({1, 1, 1}))}),
      row(3, pre, ia(2), {T({-2, 4}, P({2, 2})), T({4, -4}, P({2, 1, 1})), T({-8, 4}, P({1, 1, 1, 1}))}),
      row(3, pre, ia(3),
          {T({0, 2}, P({3, 2})), T({0, -2}, P({3, 1, 1})), T({4, -2}, P({2, 2, 1})), T({-8, 4}, P({2, 1, 1, 1})),
           T({12, -4}, P({1, 1, 1, 1, 1}))}),
      row(3, pre, c(-1), {T({-2}, P({1}), 0), T({2, -2}, h0, 1)}),
      row(3, pre, c(0),
          {T({-1, 2}, P({2}), 0), T({1, -2}, P({1, 1}), 0), T({-2}, P({1}), 1), T({3, -2}, h0, 2)}),
  };
}

inline std::vector<TableRow> table4() {
  const std::vector<D> pre{D::Shift(1), D::Shift(1)};
  auto a = [](long k) { return D::Shift(k); };
  auto ia = [](long k) { return D::IndexWeightedShift(k); };
  auto c = [](long k) { return D::ConvShift(k); };
  const Partition h0;
  return {
      row(4, pre, a(0), {T({-2, 2}, P({1, 1}))}),
      row(4, pre, a(1), {T({6}, P({1, 1, 1}))}),
      row(4, pre, a(2), {T({2}, P({2, 1, 1})), T({-6}, P({1, 1, 1, 1}))}),
      row(4, pre, a(3),
          {T({2}, P({3, 1, 1})), T({-2}, P({2, 2, 1})), T({-2}, P({2, 1, 1, 1})), T({6}, P({1, 1, 1, 1, 1}))}),
      row(4, pre, ia(0), {T({4, -6, 2}, P({1, 1}))}),
      row(4, pre, ia(1), {T({-12, 12}, P({1, 1, 1}))}),
      row(4, pre, ia(2), {T({0, 4}, P({2, 1, 1})), T({24, -12}, P({1, 1, 1, 1}))}),
      row(4, pre, ia(3),
          {T({0, 4}, P({3, 1, 1})), T({4, -4}, P({2, 2, 1})), T({4, -4}, P({2, 1, 1, 1})),
           T({-36, 12}, P({1, 1, 1, 1, 1}))}),
      row(4, pre, c(-1), {T({4, -4}, P({1}), 0), T({-4, 4}, h0, 1)}),
      row(4, pre, c(0), {T({-6, 4}, P({1, 1}), 0), T({6, -4}, P({1}), 1), T({-6, 4}, h0, 2)}),
  };
}

}  // namespace detail

/// Rows of table 1..4, in printed order.
inline std::vector<TableRow> gamma_table(int table) {
  switch (table) {
    case 1: return detail::table1();
    case 2: return detail::table2();
    case 3: return detail::table3();
    case 4: return detail::table4();
    default: throw std::invalid_argument("table must be 1..4");
  }
}

inline std::vector<TableRow> all_gamma_tables() {
  std::vector<TableRow> out;
  for (int t = 1; t <= 4; ++t) {
    auto rows = gamma_table(t);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

inline std::optional<TableRow> find_row(const std::string& id) {
  for (auto& r : all_gamma_tables())
    if (r.id == id) return r;
  return std::nullopt;
}

// Number of sequence terms both sides of the row touch at size n+1.
inline long symbols_needed(const TableRow& row, long n) {
  long top = 2 * n + 1;
  for (const auto& d : row.args) top = std::max(top, d.max_index(n) + 1);
  for (const auto& t : row.rhs) {
    top = std::max(top, terms_needed(n, t.lambda));
    top = std::max(top, t.symbol + 1);
  }
  return top;
}

/// Evaluates the row's right-hand side over the given symbols.
template <class T>
T gamma_table_rhs(const TableRow& row, const SymbolSequence<T>& seq, long n) {
  if (n < row.floor()) throw NTooSmall(row.id + " holds for n >= " + std::to_string(row.floor()));
  const std::span<const T> a(seq.a);
  T total(0);
  for (const auto& term : row.rhs) {
    T v = determinant(shifted_hankel_matrix<T>(a, n, term.lambda));
    if (term.symbol >= 0) v *= seq.a.at(static_cast<std::size_t>(term.symbol));
    total += v * T(term.coefficient(n));
  }
  return total;
}

inline Poly gamma_table_rhs(const TableRow& row, FamilySpec spec, long n) {
  return gamma_table_rhs(row, family_symbols(spec, symbols_needed(row, n)), n);
}

template <class T>
T gamma_table_lhs(const TableRow& row, const SymbolSequence<T>& seq, long n) {
  return gamma_of(seq, n, row.args);
}

enum class VerifyMode { family, random_symbols };

struct RowReport {
  std::string row_id;
  std::string printed;  // argument list as printed, e.g. "[a_{i+j+1}],[c_{i+j-1}]"
  bool pass = false;
  std::string lhs;  // exact value; for random mode, the first failing (or last) trial
  std::string rhs;
};

struct TableReport {
  VerifyMode mode = VerifyMode::family;
  long n = 0;
  int trials = 0;
  // Upper bound on the probability that a false row passes every trial.
  double failure_bound = 0.0;
  std::vector<RowReport> rows;

  bool all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const RowReport& r) { return r.pass; });
  }
};

struct VerifyOptions {
  VerifyMode mode = VerifyMode::family;
  FamilySpec spec = kCentralFamily;
  int trials = 20;
  std::uint64_t seed = 0x5eedULL;
  // Symbols are p/q with p, q uniform in [1, symbol_range].
  long symbol_range = 10000;
};

inline SymbolSequence<Rational> random_symbols(std::mt19937_64& rng, long count, long range) {
  std::uniform_int_distribution<long> dist(1, range);
  SymbolSequence<Rational> s;
  s.a.reserve(static_cast<std::size_t>(count));
  for (long k = 0; k < count; ++k) {
    const long p = dist(rng);
    const long q = dist(rng);
    s.a.push_back(make_rational(Integer(p), Integer(q)));
  }
  return s;
}

// Any fixed rational is hit by p/q with probability <= range/range^2, so a nonzero
// polynomial of total degree d vanishes at a sample with probability <= d/range.
inline double random_failure_bound(long degree, int trials, long range) {
  const double per_trial = std::min(1.0, static_cast<double>(degree) / static_cast<double>(range));
  return std::pow(per_trial, trials);
}

inline std::string printed_args(const TableRow& row) {
  std::string s;
  for (std::size_t k = 0; k < row.args.size(); ++k) s += (k ? "," : "") + row.args[k].printed();
  return s;
}

/// Verifies the given rows at n. Rows are processed concurrently; the report
/// keeps their input order.
inline TableReport verify_rows(const std::vector<TableRow>& rows, long n, const VerifyOptions& opt = {}) {
  for (const auto& r : rows)
    if (n < r.floor()) throw NTooSmall(r.id + " holds for n >= " + std::to_string(r.floor()));
  TableReport report;
  report.mode = opt.mode;
  report.n = n;
  report.trials = opt.mode == VerifyMode::random_symbols ? opt.trials : 0;
  report.rows.resize(rows.size());

  long degree = 0;
  for (const auto& r : rows) degree = std::max(degree, r.symbol_degree(n));
  report.failure_bound =
      opt.mode == VerifyMode::random_symbols ? random_failure_bound(degree, opt.trials, opt.symbol_range) : 0.0;

  parallel_for(rows.size(), [&](std::size_t k) {
    const TableRow& row = rows[k];
    RowReport out;
    out.row_id = row.id;
    out.printed = printed_args(row);
    if (opt.mode == VerifyMode::family) {
      const auto seq = family_symbols(opt.spec, symbols_needed(row, n));
      const Poly lhs = gamma_table_lhs(row, seq, n);
      const Poly rhs = gamma_table_rhs(row, seq, n);
      out.pass = lhs == rhs;
      out.lhs = to_string(lhs);
      out.rhs = to_string(rhs);
    } else {
      // Seed per row so results do not depend on scheduling.
      std::mt19937_64 rng(opt.seed + 0x9e3779b97f4a7c15ULL * (k + 1));
      out.pass = true;
      for (int t = 0; t < opt.trials; ++t) {
        const auto seq = random_symbols(rng, symbols_needed(row, n), opt.symbol_range);
        const Rational lhs = gamma_table_lhs(row, seq, n);
        const Rational rhs = gamma_table_rhs(row, seq, n);
        out.lhs = to_fraction_string(lhs);
        out.rhs = to_fraction_string(rhs);
        if (lhs != rhs) {
          out.pass = false;
          break;
        }
      }
    }
    report.rows[k] = std::move(out);
  });
  return report;
}

inline TableReport verify_table(int table, long n, const VerifyOptions& opt = {}) {
  return verify_rows(gamma_table(table), n, opt);
}

}  // namespace hankel_gamma
