#pragma once

// Integer Hankel determinants F(n, r) = det[C(2(i+j)+r, i+j)]_{0<=i,j<=n},
// conjectured evaluation patterns, and a JSON-lines store of scan results.

#include "hankel_gamma/exact.hpp"
#include "hankel_gamma/matrix.hpp"
#include "hankel_gamma/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hankel_gamma {

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline IntegerMatrix f_matrix(long n, long r) {
  if (n < 0 || r < 0) throw std::invalid_argument("F(n, r) needs n, r >= 0");
  const auto size = static_cast<std::size_t>(n + 1);
  IntegerMatrix m(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      const long k = static_cast<long>(i + j);
      m(i, j) = binomial(2 * k + r, k);
    }
  return m;
}

inline Integer f_value(long n, long r) { return det_bareiss(f_matrix(n, r)); }

/// F(0, r), ..., F(n_max, r). Without row exchanges the Bareiss pivots are the
/// leading principal minors, so one elimination yields all of them; a zero pivot
/// falls back to separate determinants from that size on.
inline std::vector<Integer> f_values_upto(long n_max, long r) {
  IntegerMatrix m = f_matrix(n_max, r);
  const auto size = m.rows();
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 0; k < size; ++k) {
    if (m(k, k) == 0) {
      for (std::size_t s = k; s < size; ++s) out.push_back(f_value(static_cast<long>(s), r));
      return out;
    }
    out.push_back(m(k, k));
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(t);
      }
    }
    prev = m(k, k);
  }
  return out;
}

enum class PatternId { R3_TRIPLE, R7_SEVEN, ODD_RM, EVEN_RM_MOD4, ODD_HALF, EVEN_HALF, R5_M1, R7_M1, R9_M1 };

inline constexpr std::array<PatternId, 9> kAllPatterns{PatternId::R3_TRIPLE, PatternId::R7_SEVEN, PatternId::ODD_RM,
                                                       PatternId::EVEN_RM_MOD4, PatternId::ODD_HALF,
                                                       PatternId::EVEN_HALF, PatternId::R5_M1, PatternId::R7_M1,
                                                       PatternId::R9_M1};

inline std::string to_string(PatternId id) {
  switch (id) {
    case PatternId::R3_TRIPLE: return "R3_TRIPLE";
    case PatternId::R7_SEVEN: return "R7_SEVEN";
    case PatternId::ODD_RM: return "ODD_RM";
    case PatternId::EVEN_RM_MOD4: return "EVEN_RM_MOD4";
    case PatternId::ODD_HALF: return "ODD_HALF";
    case PatternId::EVEN_HALF: return "EVEN_HALF";
    case PatternId::R5_M1: return "R5_M1";
    case PatternId::R7_M1: return "R7_M1";
    case PatternId::R9_M1: return "R9_M1";
  }
  return "?";
}

inline PatternId parse_pattern(const std::string& s) {
  for (auto id : kAllPatterns)
    if (to_string(id) == s) return id;
  throw ParseError("unknown pattern id '" + s + "'");
}

/// One predicted value: F(n, r) = factor * cofactor, where cofactor is the value
/// of the printed non-product polynomial (1 when the formula is a pure product).
struct PatternInstance {
  PatternId id;
  long n = 0, r = 0, m = 0;
  std::string formula;  // e.g. "F(7m+1,7)"
  Rational factor;
  Integer printed_cofactor = 1;
  bool has_cofactor = false;

  Rational predicted() const { return factor * Rational(printed_cofactor); }
};

namespace detail {

inline Integer ip(long base, long e) {
  return e < 0 ? Integer(0) : ipow(Integer(base), static_cast<unsigned long>(e));
}

inline PatternInstance inst(PatternId id, long n, long r, long m, std::string formula, Rational factor) {
  PatternInstance p{id, n, r, m, std::move(formula), std::move(factor), 1, false};
  return p;
}

inline PatternInstance inst(PatternId id, long n, long r, long m, std::string formula, Rational factor, Integer cof) {
  PatternInstance p{id, n, r, m, std::move(formula), std::move(factor), std::move(cof), true};
  return p;
}

inline Rational q(const Integer& num, long den = 1) { return make_rational(num, Integer(den)); }

inline std::string rm(long r, const std::string& shift) { return "F(" + std::to_string(r) + "m" + shift + "," + std::to_string(r) + ")"; }

inline PatternInstance r7_m1(long m) {
  return inst(PatternId::R7_M1, 7 * m + 1, 7, m, rm(7, "+1"), q((m + 1) * ip(2 * m + 1, 2), 90),
              Integer(9604) * m * m * m + 9604 * m * m - 1323 * m - 2340);
}

}  // namespace detail

/// Instances of a pattern for the given m, for the r values it covers. Odd-r blocks
/// use r in odd_r, even-r blocks r in even_r.
inline std::vector<PatternInstance> pattern_instances(PatternId id, long m, const std::vector<long>& odd_r = {3, 5, 7, 9},
                                                      const std::vector<long>& even_r = {2, 4, 6, 8}) {
  using namespace detail;
  std::vector<PatternInstance> v;
  const Integer M(m);
  switch (id) {
    case PatternId::R3_TRIPLE:
      v.push_back(inst(id, 3 * m, 3, m, rm(3, ""), q(Integer(2 * m + 1))));
      v.push_back(inst(id, 3 * m + 1, 3, m, rm(3, "+1"), q(Integer(-4 * (m + 1)))));
      v.push_back(inst(id, 3 * m + 2, 3, m, rm(3, "+2"), q(Integer(2 * m + 3))));
      break;
    case PatternId::R7_SEVEN: {
      v.push_back(inst(id, 7 * m, 7, m, rm(7, ""), q(ip(2 * m + 1, 3))));
      auto one = r7_m1(m);
      one.id = id;
      v.push_back(one);
      v.push_back(inst(id, 7 * m + 2, 7, m, rm(7, "+2"), q(-ip(m + 1, 2) * (2 * m + 1), 45),
                       19208 * M * M * M + 67228 * M * M + 70854 * M + 23445));
      v.push_back(inst(id, 7 * m + 3, 7, m, rm(7, "+3"), q(64 * ip(m + 1, 3))));
      // The printed cubic ends in "32438m+3015m"; it is evaluated as written.
      v.push_back(inst(id, 7 * m + 4, 7, m, rm(7, "+4"), q(ip(m + 1, 2) * (2 * m + 3), 45),
                       19208 * M * M * M + 48020 * M * M + 32438 * M + 3015 * M));
      v.push_back(inst(id, 7 * m + 5, 7, m, rm(7, "+5"), q(-(m + 1) * ip(2 * m + 3, 2), 90),
                       9604 * M * M * M + 48020 * M * M + 75509 * M + 38110));
      v.push_back(inst(id, 7 * m + 6, 7, m, rm(7, "+6"), q(ip(2 * m + 3, 3))));
      break;
    }
    case PatternId::ODD_RM:
      for (long r : odd_r) {
        const Rational val = q(ip(2 * m + 1, (r - 1) / 2));
        v.push_back(inst(id, r * m, r, m, rm(r, ""), val));
        if (m >= 1) v.push_back(inst(id, r * m - 1, r, m, rm(r, "-1"), val));
      }
      break;
    case PatternId::EVEN_RM_MOD4:
      for (long r : even_r) {
        const Rational val = r % 4 == 0 ? Rational(1) : Rational(m % 2 == 0 ? 1 : -1);
        v.push_back(inst(id, r * m, r, m, rm(r, ""), val));
        if (m >= 1) v.push_back(inst(id, r * m - 1, r, m, rm(r, "-1"), val));
      }
      break;
    case PatternId::ODD_HALF:
      for (long r : odd_r)
        v.push_back(inst(id, r * m + (r - 1) / 2, r, m, rm(r, "+" + std::to_string((r - 1) / 2)),
                         q(ip(2, r - 1) * ip(m + 1, (r - 1) / 2))));
      break;
    case PatternId::EVEN_HALF:
      for (long r : even_r) {
        const long e = r % 4 == 0 ? r / 4 + 1 : (r + 2) / 4 + m;
        const Integer mag = ip(2 * r * (m + 1), r / 2 - 1);
        v.push_back(inst(id, r * m + r / 2, r, m, rm(r, "+" + std::to_string(r / 2)), q(e % 2 == 0 ? mag : -mag)));
      }
      break;
    case PatternId::R5_M1:
      v.push_back(inst(id, 5 * m + 1, 5, m, rm(5, "+1"), q(Integer(-(m + 1) * (2 * m + 1)), 3), Integer(50 * m + 39)));
      break;
    case PatternId::R7_M1: v.push_back(r7_m1(m)); break;
    case PatternId::R9_M1:
      v.push_back(inst(id, 9 * m + 1, 9, m, rm(9, "+1"), q(-(m + 1) * ip(2 * m + 1, 3) * (3 * m + 2), 70),
                       52488 * M * M * M * M + 69984 * M * M * M + 22518 * M * M + 1674 * M + 1505));
      break;
  }
  return v;
}

struct PatternCheck {
  PatternInstance instance;
  Integer actual;
  bool match = false;
  // actual / factor, the cofactor the printed polynomial would need to take.
  std::optional<Rational> actual_cofactor;
};

struct PatternReport {
  PatternId id;
  std::vector<PatternCheck> checks;

  long mismatches() const {
    return std::count_if(checks.begin(), checks.end(), [](const PatternCheck& c) { return !c.match; });
  }
};

inline PatternCheck check_instance(const PatternInstance& inst, const Integer& actual) {
  PatternCheck c{inst, actual, Rational(actual) == inst.predicted(), std::nullopt};
  if (inst.has_cofactor && inst.factor != 0) c.actual_cofactor = Rational(actual) / inst.factor;
  return c;
}

/// Compares every instance with m <= m_max against the exact determinant.
inline PatternReport verify_pattern(PatternId id, long m_max) {
  if (m_max < 0) throw std::invalid_argument("m_max must be non-negative");
  std::vector<PatternInstance> all;
  for (long m = 0; m <= m_max; ++m)
    for (auto& p : pattern_instances(id, m)) all.push_back(std::move(p));
  PatternReport report{id, std::vector<PatternCheck>(all.size())};
  parallel_for(all.size(), [&](std::size_t k) { report.checks[k] = check_instance(all[k], f_value(all[k].n, all[k].r)); });
  return report;
}

// ---------------------------------------------------------------------------
// Scan store

struct ConjectureRecord {
  long n = 0, r = 0;
  Integer value;
  std::vector<std::string> matched_patterns;
  std::string timestamp;
};

inline std::string iso8601_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline nlohmann::ordered_json to_json(const ConjectureRecord& rec) {
  return {{"n", rec.n}, {"r", rec.r}, {"value", rec.value.get_str()}, {"patterns", rec.matched_patterns},
          {"ts", rec.timestamp}};
}

inline ConjectureRecord record_from_json(const nlohmann::json& j) {
  ConjectureRecord rec;
  rec.n = j.at("n").get<long>();
  rec.r = j.at("r").get<long>();
  rec.value = Integer(j.at("value").get<std::string>());
  rec.matched_patterns = j.at("patterns").get<std::vector<std::string>>();
  rec.timestamp = j.at("ts").get<std::string>();
  return rec;
}

using RecordKey = std::pair<long, long>;

/// Records from a JSON-lines file; a missing file is an empty store.
inline std::map<RecordKey, ConjectureRecord> load_records(const std::filesystem::path& path) {
  std::map<RecordKey, ConjectureRecord> out;
  if (!std::filesystem::exists(path)) return out;
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot read " + path.string());
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      auto rec = record_from_json(nlohmann::json::parse(line));
      out[{rec.n, rec.r}] = std::move(rec);
    } catch (const std::exception& e) {
      throw IoFailure(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

/// Rewrites the whole store through a temporary file in the same directory.
inline void write_records(const std::filesystem::path& path, const std::map<RecordKey, ConjectureRecord>& records) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoFailure("cannot write " + tmp.string());
    for (const auto& [key, rec] : records) out << to_json(rec).dump() << '\n';
    if (!out.flush()) throw IoFailure("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoFailure("cannot replace " + path.string() + ": " + ec.message());
}

/// Ids of patterns whose prediction at (n, r) equals value.
/// Odd-r blocks are tagged for odd r >= 3, even-r blocks for even r >= 2.
inline std::vector<std::string> matched_patterns(long n, long r, const Integer& value) {
  const std::vector<long> odd = r % 2 == 1 && r >= 3 ? std::vector<long>{r} : std::vector<long>{};
  const std::vector<long> even = r % 2 == 0 && r >= 2 ? std::vector<long>{r} : std::vector<long>{};
  std::vector<std::string> ids;
  for (auto id : kAllPatterns) {
    bool hit = false;
    for (long m = 0; m <= n + 1 && !hit; ++m)
      for (const auto& p : pattern_instances(id, m, odd, even))
        if (p.n == n && p.r == r && p.predicted() == Rational(value)) hit = true;
    if (hit) ids.push_back(to_string(id));
  }
  return ids;
}

/// Computes every F(n, r) with n <= n_max, r <= r_max, tags matching patterns, and
/// merges them into the store at out (existing (n, r) entries are replaced).
/// Returns the number of records computed.
inline long scan(long n_max, long r_max, const std::filesystem::path& out) {
  if (n_max < 0 || r_max < 0) throw std::invalid_argument("scan bounds must be non-negative");
  auto records = load_records(out);
  std::vector<std::vector<Integer>> values(static_cast<std::size_t>(r_max) + 1);
  parallel_for(values.size(), [&](std::size_t r) { values[r] = f_values_upto(n_max, static_cast<long>(r)); });

  const auto cells = static_cast<std::size_t>((n_max + 1) * (r_max + 1));
  std::vector<ConjectureRecord> fresh(cells);
  const std::string ts = iso8601_now();
  parallel_for(cells, [&](std::size_t c) {
    const long r = static_cast<long>(c) / (n_max + 1);
    const long n = static_cast<long>(c) % (n_max + 1);
    const Integer& v = values[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)];
    fresh[c] = {n, r, v, matched_patterns(n, r, v), ts};
  });
  for (auto& rec : fresh) records[{rec.n, rec.r}] = std::move(rec);
  write_records(out, records);
  return static_cast<long>(cells);
}

inline void export_csv(const std::filesystem::path& in, std::ostream& out) {
  const auto records = load_records(in);
  out << "n,r,value,patterns,ts\n";
  for (const auto& [key, rec] : records) {
    std::string ids;
    for (const auto& p : rec.matched_patterns) ids += (ids.empty() ? "" : ";") + p;
    out << rec.n << ',' << rec.r << ',' << rec.value.get_str() << ',' << ids << ',' << rec.timestamp << '\n';
  }
}

}  // namespace hankel_gamma
