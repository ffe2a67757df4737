// hankel-gamma: command-line front end. Exit status: 0 all checks pass,
// 1 verification failure, 2 usage error, 3 I/O failure.

#include "hankel_gamma/closedform.hpp"
#include "hankel_gamma/conjectures.hpp"
#include "hankel_gamma/exact.hpp"
#include "hankel_gamma/gamma_tables.hpp"
#include "hankel_gamma/hankel.hpp"
#include "hankel_gamma/identities.hpp"
#include "hankel_gamma/json_io.hpp"
#include "hankel_gamma/zeros.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace hg = hankel_gamma;
using hg::Json;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kIo = 3 };

enum class Format { json, csv, human };

// Serializes records to stdout in the chosen format. CSV takes its header from
// the first record.
class Emitter {
 public:
  explicit Emitter(Format f) : format_(f) {}

  void emit(const Json& record, const std::string& human) {
    std::lock_guard lock(mutex_);
    switch (format_) {
      case Format::json: std::cout << record.dump() << '\n'; break;
      case Format::human: std::cout << human << '\n'; break;
      case Format::csv: {
        if (!header_done_) {
          std::string h;
          for (const auto& [k, v] : record.items()) h += (h.empty() ? "" : ",") + k;
          std::cout << h << '\n';
          header_done_ = true;
        }
        std::string line;
        bool first = true;
        for (const auto& [k, v] : record.items()) {
          line += (first ? "" : ",") + csv_cell(v);
          first = false;
        }
        std::cout << line << '\n';
        break;
      }
    }
  }

 private:
  static std::string csv_cell(const Json& v) {
    std::string s;
    if (v.is_string()) {
      s = v.get<std::string>();
    } else if (v.is_object() && v.contains("coeffs")) {
      s = csv_cell(v.at("coeffs"));
    } else if (v.is_array()) {
      for (const auto& e : v) s += (s.empty() ? "" : ";") + (e.is_string() ? e.get<std::string>() : e.dump());
    } else if (v.is_null()) {
      s = "";
    } else {
      s = v.dump();
    }
    if (s.find_first_of(",\"\n") != std::string::npos) {
      std::string q = "\"";
      for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
      return q + "\"";
    }
    return s;
  }

  Format format_;
  bool header_done_ = false;
  std::mutex mutex_;
};

std::string fraction_or_integer(const hg::Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

hg::Rational parse_rational_flag(const std::string& s) { return hg::parse_rational(s); }

// ---------------------------------------------------------------------------

int cmd_det(Emitter& out, long n, const std::string& lambda_text, std::vector<long> family, const std::string& engine) {
  if (family.size() != 2) throw CLI::ValidationError("--family", "expects two integers beta,alpha");
  const hg::FamilySpec spec{family[0], family[1]};
  const hg::Partition lambda = hg::Partition::parse(lambda_text);
  const auto eng = engine == "interpolation" ? hg::DetEngine::interpolation : hg::DetEngine::bareiss;
  const hg::Poly d = hg::shifted_hankel_det(spec, n, lambda, eng);
  Json rec{{"family", {spec.beta, spec.alpha}}, {"n", n}, {"lambda", lambda.parts()}, {"det", hg::poly_to_json(d)},
           {"text", hg::to_string(d)}};
  out.emit(rec, "H_" + lambda.label() + "(" + std::to_string(n) + ", x) = " + hg::to_string(d));
  return kOk;
}

int cmd_gamma_table(Emitter& out, const std::vector<int>& tables, long n, int random_trials, std::uint64_t seed) {
  hg::VerifyOptions opt;
  if (random_trials > 0) {
    opt.mode = hg::VerifyMode::random_symbols;
    opt.trials = random_trials;
  }
  opt.seed = seed;
  bool ok = true;
  for (int t : tables) {
    const auto report = hg::verify_table(t, n, opt);
    for (const auto& r : report.rows) {
      Json rec{{"row_id", r.row_id}, {"status", r.pass ? "pass" : "fail"}, {"lhs", r.lhs}, {"rhs", r.rhs}};
      if (opt.mode == hg::VerifyMode::random_symbols) rec["failure_bound"] = report.failure_bound;
      out.emit(rec, r.row_id + " " + r.printed + ": " + (r.pass ? "pass" : "FAIL"));
      ok = ok && r.pass;
    }
  }
  return ok ? kOk : kFail;
}

int emit_residuals(Emitter& out, const std::vector<hg::IdentityResidual>& rs) {
  bool ok = true;
  for (const auto& r : rs) {
    Json rec{{"n", r.n}, {"name", r.name}, {"pass", r.pass()}, {"residual", hg::poly_to_json(r.residual)}};
    out.emit(rec, "n=" + std::to_string(r.n) + " " + r.name + ": " + (r.pass() ? "0" : hg::to_string(r.residual)));
    ok = ok && r.pass();
  }
  return ok ? kOk : kFail;
}

int cmd_identities(Emitter& out, long n_max) { return emit_residuals(out, hg::verify_all_identities(n_max)); }

// One record per named check of the closed-form module.
std::vector<std::pair<std::string, bool>> closed_form_checks(long n_max, long gf_order) {
  const long top = std::max(n_max, gf_order);
  const auto h = hg::hankel_dets(top + 3);
  std::vector<std::pair<std::string, bool>> out;
  using hg::Center;
  using hg::ExpansionForm;
  for (long n = 0; n <= n_max; ++n) {
    const auto& d = h[static_cast<std::size_t>(n)];
    const std::string s = std::to_string(n);
    out.emplace_back("THM1_AT2 n=" + s, hg::thm1_expansion(n, Center::plus2, ExpansionForm::binomial) == d);
    out.emplace_back("HNATM2 n=" + s, hg::thm1_expansion(n, Center::plus2, ExpansionForm::rational) == d);
    out.emplace_back("THM1_ATM2 n=" + s, hg::thm1_expansion(n, Center::minus2, ExpansionForm::binomial) == d);
    out.emplace_back("HNAT2 n=" + s, hg::thm1_expansion(n, Center::minus2, ExpansionForm::rational) == d);
    out.emplace_back("SOL_AT0 n=" + s, hg::solution_at0(n) == d);
    for (long x0 : {2L, -2L, 0L, 1L}) {
      const auto v = hg::special_value(n, hg::Rational(x0));
      out.emplace_back("SPECIAL x=" + std::to_string(x0) + " n=" + s, v.computed == v.closed_form);
    }
    if (n >= 1) {
      out.emplace_back("PFAFF n=" + s, hg::pfaff_check(n));
      out.emplace_back("BK n=" + s, hg::series_recurrence_check(n, hg::SeriesCenter::BK));
      out.emplace_back("DK n=" + s, hg::series_recurrence_check(n, hg::SeriesCenter::DK));
      out.emplace_back("EK n=" + s, hg::series_recurrence_check(n, hg::SeriesCenter::EK));
    }
  }
  out.emplace_back("GF order=" + std::to_string(gf_order), hg::genfun_check(gf_order, &h));
  out.emplace_back("RECURSION n<=" + std::to_string(n_max), hg::recursion_check(n_max, &h));
  out.emplace_back("AK2 k<=" + std::to_string(2 * n_max), hg::ak_at2_identity(2 * n_max));
  return out;
}

int cmd_closed_verify(Emitter& out, long n_max, long gf_order) {
  bool ok = true;
  for (const auto& [name, pass] : closed_form_checks(n_max, gf_order)) {
    out.emit(Json{{"check", name}, {"pass", pass}}, name + ": " + (pass ? "pass" : "FAIL"));
    ok = ok && pass;
  }
  return ok ? kOk : kFail;
}

int cmd_closed_eval(Emitter& out, long n, const hg::Rational& x) {
  const hg::Poly d = hg::hankel_det(hg::kCentralFamily, n);
  const hg::Rational det_value = d.evaluate(x);
  const hg::Rational expansion = hg::thm1_expansion(n, hg::Center::plus2, hg::ExpansionForm::binomial).evaluate(x);
  Json rec{{"n", n}, {"x", hg::to_fraction_string(x)}, {"computed", hg::to_fraction_string(det_value)},
           {"closed_form", hg::to_fraction_string(expansion)}};
  std::optional<hg::Rational> special;
  if (x == 2 || x == -2 || x == 0 || x == 1) special = hg::special_value_closed(n, x);
  rec["special_value"] = special ? Json(hg::to_fraction_string(*special)) : Json(nullptr);
  out.emit(rec, fraction_or_integer(det_value));
  const bool ok = det_value == expansion && (!special || *special == det_value);
  return ok ? kOk : kFail;
}

int cmd_zeros(Emitter& out, long n, int digits, const hg::Rational& width, bool truncate) {
  const auto report = hg::isolate_roots(n, width);
  const hg::Poly p = hg::hankel_det(hg::kCentralFamily, n);
  long k = 0;
  for (const auto& iv : report.isolating_intervals) {
    const std::string approx =
        truncate ? hg::certified_truncation(p, iv, digits) : hg::round_decimal(iv.midpoint(), digits);
    Json rec{{"n", n}, {"index", k++}, {"approx", approx}, {"lo", hg::to_fraction_string(iv.lo)},
             {"hi", hg::to_fraction_string(iv.hi)}};
    out.emit(rec, approx + "  (" + hg::to_fraction_string(iv.lo) + ", " + hg::to_fraction_string(iv.hi) + ")");
  }
  return static_cast<long>(report.isolating_intervals.size()) == n ? kOk : kFail;
}

int cmd_scan(Emitter& out, long n_max, long r_max, const std::string& path) {
  const long count = hg::scan(n_max, r_max, path);
  out.emit(Json{{"records", count}, {"out", path}}, std::to_string(count) + " records written to " + path);
  return kOk;
}

// ---------------------------------------------------------------------------

struct SuiteResult {
  std::string suite;
  bool pass;
  std::string detail;
};

std::vector<SuiteResult> run_all(long n_max, bool quick) {
  std::vector<SuiteResult> out;
  auto timed = [&](const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    auto [ok, detail] = body();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back({name, ok, detail + " (" + std::to_string(s).substr(0, 5) + " s)"});
  };

  timed("hankel", [&] {
    const hg::Poly x = hg::Poly::x();
    const std::vector<hg::Poly> printed{hg::Poly(1), -1 - 3 * x, -1 - x + 5 * x * x,
                                        1 + 6 * x + 3 * x * x - 7 * x * x * x};
    bool ok = true;
    for (long n = 0; n <= 3; ++n) ok = ok && hg::hankel_det(hg::kCentralFamily, n) == printed[static_cast<std::size_t>(n)];
    for (long n = 0; n <= n_max; ++n)
      ok = ok && hg::hankel_det(hg::kCentralFamily, n, hg::DetEngine::bareiss) ==
                     hg::hankel_det(hg::kCentralFamily, n, hg::DetEngine::interpolation);
    return std::pair{ok, std::string("printed list and engine agreement")};
  });

  timed("gamma", [&] {
    bool ok = true;
    long rows = 0;
    const long top = quick ? 5 : std::max(5L, std::min(n_max, 7L));
    for (long n = 5; n <= top; ++n)
      for (int t = 1; t <= 4; ++t) {
        const auto r = hg::verify_table(t, n);
        rows += static_cast<long>(r.rows.size());
        ok = ok && r.all_pass();
      }
    return std::pair{ok, std::to_string(rows) + " table rows in family mode"};
  });

  timed("identities", [&] {
    const auto rs = hg::verify_all_identities(n_max);
    const bool ok = std::all_of(rs.begin(), rs.end(), [](const auto& r) { return r.pass(); });
    return std::pair{ok, std::to_string(rs.size()) + " residuals"};
  });

  timed("closedform", [&] {
    const auto cs = closed_form_checks(n_max, quick ? 10 : 25);
    const bool ok = std::all_of(cs.begin(), cs.end(), [](const auto& c) { return c.second; });
    return std::pair{ok, std::to_string(cs.size()) + " checks"};
  });

  timed("zeros", [&] {
    bool ok = true;
    for (long n = 1; n <= n_max; ++n)
      ok = ok && static_cast<long>(hg::isolate_roots(n, hg::ratio(1, 1000000)).isolating_intervals.size()) == n;
    if (n_max >= 2) ok = ok && hg::verify_interlacing(n_max);
    return std::pair{ok, std::string("root counts and interlacing")};
  });

  timed("conjectures", [&] {
    const auto r3 = hg::verify_pattern(hg::PatternId::R3_TRIPLE, quick ? 4 : 12);
    long reported = 0;
    for (auto id : hg::kAllPatterns)
      if (id != hg::PatternId::R3_TRIPLE) reported += hg::verify_pattern(id, quick ? 1 : 3).mismatches();
    return std::pair{r3.mismatches() == 0,
                     "R3_TRIPLE exact; " + std::to_string(reported) + " conjecture mismatches reported"};
  });
  return out;
}

int cmd_verify_all(Emitter& out, long n_max, bool quick) {
  if (quick) n_max = std::min(n_max, 6L);
  bool ok = true;
  for (const auto& s : run_all(n_max, quick)) {
    out.emit(Json{{"suite", s.suite}, {"pass", s.pass}, {"detail", s.detail}},
             s.suite + ": " + (s.pass ? "pass" : "FAIL") + " - " + s.detail);
    ok = ok && s.pass;
  }
  return ok ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hankel determinant and gamma-operator verification"};
  app.require_subcommand(1);
  std::string format_text = "json";
  app.add_option("--format", format_text, "Output format")
      ->check(CLI::IsMember({"json", "csv", "human"}))
      ->capture_default_str();

  std::function<int(Emitter&)> action;

  // det
  auto* det = app.add_subcommand("det", "Shifted Hankel determinant H_lambda(n, x)");
  long det_n = 0;
  std::string det_lambda = "0";
  std::vector<long> det_family{2, 2};
  std::string det_engine = "bareiss";
  det->add_option("--n", det_n, "Matrix size is n+1")->required()->check(CLI::NonNegativeNumber);
  det->add_option("--lambda", det_lambda, "Partition, e.g. 3,1,1 (0 for none)")->capture_default_str();
  det->add_option("--family", det_family, "beta alpha")->delimiter(',')->expected(2)->capture_default_str();
  det->add_option("--engine", det_engine)->check(CLI::IsMember({"bareiss", "interpolation"}))->capture_default_str();
  det->callback([&] { action = [&](Emitter& e) { return cmd_det(e, det_n, det_lambda, det_family, det_engine); }; });

  // gamma-table verify
  auto* gt = app.add_subcommand("gamma-table", "gamma-operator table rows");
  gt->require_subcommand(1);
  auto* gtv = gt->add_subcommand("verify", "Verify table rows at size n");
  std::vector<int> gt_tables;
  long gt_n = 5;
  int gt_random = 0;
  std::uint64_t gt_seed = 0x5eed;
  gtv->add_option("--table", gt_tables, "Table number(s) 1..4; default all")->check(CLI::Range(1, 4));
  gtv->add_option("--n", gt_n)->required()->check(CLI::NonNegativeNumber);
  gtv->add_option("--random-symbols", gt_random, "Random rational symbols with this many trials")
      ->check(CLI::PositiveNumber);
  gtv->add_option("--seed", gt_seed)->capture_default_str();
  gtv->callback([&] {
    if (gt_tables.empty()) gt_tables = {1, 2, 3, 4};
    action = [&](Emitter& e) { return cmd_gamma_table(e, gt_tables, gt_n, gt_random, gt_seed); };
  });

  // identities verify
  auto* id = app.add_subcommand("identities", "(2,2)-case identities");
  id->require_subcommand(1);
  auto* idv = id->add_subcommand("verify", "Residual of every relation for n <= n-max");
  long id_nmax = 8;
  idv->add_option("--n-max", id_nmax)->required()->check(CLI::NonNegativeNumber);
  idv->callback([&] { action = [&](Emitter& e) { return cmd_identities(e, id_nmax); }; });

  // closed-form verify | eval
  auto* cf = app.add_subcommand("closed-form", "Closed forms of H_0(n, x)");
  cf->require_subcommand(1);
  auto* cfv = cf->add_subcommand("verify", "All closed forms against the determinant");
  long cf_nmax = 10;
  long cf_order = 25;
  cfv->add_option("--n-max", cf_nmax)->required()->check(CLI::NonNegativeNumber);
  cfv->add_option("--order", cf_order, "Generating function order")->check(CLI::NonNegativeNumber)->capture_default_str();
  cfv->callback([&] { action = [&](Emitter& e) { return cmd_closed_verify(e, cf_nmax, cf_order); }; });
  auto* cfe = cf->add_subcommand("eval", "H_0(n, x) at a rational point");
  long cfe_n = 0;
  std::string cfe_x;
  cfe->add_option("--n", cfe_n)->required()->check(CLI::NonNegativeNumber);
  cfe->add_option("--x", cfe_x, "p/q or integer")->required();
  cfe->callback([&] {
    const hg::Rational x = parse_rational_flag(cfe_x);
    action = [&, x](Emitter& e) { return cmd_closed_eval(e, cfe_n, x); };
  });

  // zeros
  auto* zr = app.add_subcommand("zeros", "Isolate the real zeros of H_0(n, x)");
  long zr_n = 1;
  int zr_digits = 3;
  std::string zr_width = "1/1000000";
  bool zr_truncate = false;
  zr->add_option("--n", zr_n)->required()->check(CLI::PositiveNumber);
  zr->add_option("--digits", zr_digits)->check(CLI::Range(0, 60))->capture_default_str();
  zr->add_option("--width", zr_width, "Largest interval width, p/q")->capture_default_str();
  zr->add_flag("--truncate", zr_truncate, "Truncate toward zero instead of rounding the midpoint");
  zr->callback([&] {
    const hg::Rational w = parse_rational_flag(zr_width);
    if (w <= 0) throw CLI::ValidationError("--width", "must be positive");
    action = [&, w](Emitter& e) { return cmd_zeros(e, zr_n, zr_digits, w, zr_truncate); };
  });

  // scan | scan export
  auto* sc = app.add_subcommand("scan", "Compute F(n, r) and merge into a JSON-lines store");
  long sc_nmax = 10, sc_rmax = 3;
  std::string sc_out = "results.jsonl";
  sc->add_option("--n-max", sc_nmax)->check(CLI::NonNegativeNumber)->capture_default_str();
  sc->add_option("--r-max", sc_rmax)->check(CLI::NonNegativeNumber)->capture_default_str();
  sc->add_option("--out", sc_out)->capture_default_str();
  auto* sce = sc->add_subcommand("export", "Export a store");
  bool sce_csv = false;
  std::string sce_in = "results.jsonl";
  sce->add_flag("--csv", sce_csv, "CSV to standard output")->required();
  sce->add_option("--in", sce_in)->capture_default_str();
  sc->callback([&] {
    if (sce->parsed()) {
      action = [&](Emitter&) {
        hg::export_csv(sce_in, std::cout);
        return static_cast<int>(kOk);
      };
    } else {
      action = [&](Emitter& e) { return cmd_scan(e, sc_nmax, sc_rmax, sc_out); };
    }
  });

  // verify-all
  auto* va = app.add_subcommand("verify-all", "Run every module's default suite");
  long va_nmax = 8;
  bool va_quick = false;
  va->add_option("--n-max", va_nmax)->check(CLI::NonNegativeNumber)->capture_default_str();
  va->add_flag("--quick", va_quick, "n <= 6, tables at n = 5, generating function to order 10");
  va->callback([&] { action = [&](Emitter& e) { return cmd_verify_all(e, va_nmax, va_quick); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const hg::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  const Format format = format_text == "csv" ? Format::csv : format_text == "human" ? Format::human : Format::json;
  Emitter emitter(format);
  try {
    return action(emitter);
  } catch (const hg::IoFailure& e) {
    std::cerr << "I/O failure: " << e.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
}
