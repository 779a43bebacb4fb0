#include "bombieri/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "bombieri/errors.hpp"
#include "bombieri/scanner.hpp"
#include "bombieri/trig_core.hpp"
#include "bombieri/univalence.hpp"
#include "bombieri/variation.hpp"

namespace bombieri::cli {

namespace {

std::string g17(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", x);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view text, std::string_view whole) {
  const std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw ConfigError(fmt::format("cannot parse coefficient '{}'", whole));
  return v;
}

// Writes content to path only once it has been fully produced.
void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file " + path);
  f << content;
  if (!f) throw ConfigError("failed writing " + path);
}

std::string_view status_name(univalence::UnivalenceStatus s) {
  switch (s) {
    case univalence::UnivalenceStatus::kUnivalentSampled:
      return "UNIVALENT_SAMPLED";
    case univalence::UnivalenceStatus::kNotUnivalent:
      return "NOT_UNIVALENT";
    case univalence::UnivalenceStatus::kUncertain:
      return "UNCERTAIN";
  }
  return "?";
}

int status_exit(univalence::UnivalenceStatus s) {
  switch (s) {
    case univalence::UnivalenceStatus::kUnivalentSampled:
      return kSuccess;
    case univalence::UnivalenceStatus::kNotUnivalent:
      return kFail;
    case univalence::UnivalenceStatus::kUncertain:
      break;
  }
  return kUncertain;
}

int report_dieudonne(const univalence::ComplexPolynomial& p, int samples, std::ostream& out) {
  const auto v = univalence::dieudonne_check(p, samples);
  fmt::print(out, "status={}\nsamples={}\nworst_margin={}\nworst_t={}\n", status_name(v.status), v.samples,
             g17(v.worst_margin), g17(v.worst_t));
  if (v.witness_t) fmt::print(out, "witness_t={}\n", g17(*v.witness_t));
  return status_exit(v.status);
}

int report_starlike(const univalence::ComplexPolynomial& f, int samples, std::ostream& out) {
  const auto v = univalence::starlike_check(f, samples);
  fmt::print(out, "starlike={}\nboundary_samples={}\nmin_re={}\nat_angle={}\n", v.pass ? "PASS" : "FAIL", samples,
             g17(v.worst_margin), g17(v.witness_t));
  return v.pass ? kSuccess : kFail;
}

struct Options {
  // bnum
  int m = 0;
  int n = 0;
  int grid_mult = 64;
  double tol = 1e-7;
  bool json = false;
  // scan
  int max_m = 80;
  std::string out_path;
  std::string format = "csv";
  int threads = 0;
  // polynomials
  std::string coeffs;
  int samples = 0;
  bool normalized = false;
  std::string check = "roots";
  // qn / qq
  int max_n = 10;
  bool leung = false;
  double w = 0.0;
  bool numeric = false;
  std::string phi = "linear";
  // lemma3
  int grid = 100000;
};

int cmd_bnum(const Options& o, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const trig::MinimizeConfig cfg{o.grid_mult, 1e-13};
  const trig::MinResult r = trig::minimize_B(o.m, o.n, cfg);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto limits = trig::endpoint_limits(o.m, o.n);
  const auto verdict = scan::classify_value(r.value, limits.limit0.to_double(), o.tol);
  const auto cls = scan::classify(o.m, o.n);
  if (o.json) {
    nlohmann::json j;
    j["m"] = o.m;
    j["n"] = o.n;
    j["class"] = std::string(scan::to_string(cls));
    j["B"] = r.value;
    j["expected"] = limits.limit0.to_string();
    j["verdict"] = std::string(scan::to_string(verdict));
    j["argmin_t"] = r.argmin.to_string();
    j["margin"] = std::isinf(r.margin) ? nlohmann::json(nullptr) : nlohmann::json(r.margin);
    j["grid_points"] = r.grid_points;
    j["seconds"] = seconds;
    out << j.dump(2) << '\n';
  } else {
    fmt::print(out, "m={} n={} class={}\nB={}\nexpected={} ({})\nverdict={}\nargmin={}\nmargin={}\ngrid_points={}\n",
               o.m, o.n, scan::to_string(cls), g17(r.value), limits.limit0.to_string(),
               g17(limits.limit0.to_double()), scan::to_string(verdict), r.argmin.to_string(), g17(r.margin),
               r.grid_points);
  }
  return kSuccess;
}

int cmd_scan(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.format != "csv" && o.format != "json") throw ConfigError("--format must be csv or json");
  scan::ScanConfig cfg;
  cfg.max_m = o.max_m;
  cfg.minimize.grid_mult = o.grid_mult;
  cfg.tol = o.tol;
  cfg.threads = o.threads;
  const auto records = scan::scan(cfg);
  const std::string body = o.format == "csv" ? scan::to_csv(records) : scan::to_json(records).dump(2) + "\n";

  std::ostream& summary = o.out_path.empty() ? err : out;
  if (o.out_path.empty()) {
    out << body;
  } else {
    write_file(o.out_path, body);
  }

  int violations = 0;
  for (const auto& r : records) {
    const bool covered_bad = r.theorem_covers && r.verdict != scan::Verdict::kEqual;
    const bool zero_bad = r.pair_class == scan::PairClass::kEvenMOddN && r.B > 1e-10;
    if (covered_bad || zero_bad) {
      ++violations;
      fmt::print(summary, "violation: m={} n={} class={} B={} verdict={}\n", r.m, r.n, scan::to_string(r.pair_class),
                 g17(r.B), scan::to_string(r.verdict));
    }
  }
  fmt::print(summary, "{} pairs scanned, {} theorem violations\n", records.size(), violations);
  if (o.max_m >= 9) summary << scan::conjecture_report(records).to_text();
  return violations == 0 ? kSuccess : kFail;
}

int cmd_qn(const Options& o, std::ostream& out) {
  const auto series = variation::q_series_coefficients(o.max_n);
  bool consistent = true;
  out << (o.leung ? "n,q_n(Leung)\n" : "n,q_n(appendix),q_n(Leung)\n");
  for (int n = 2; n <= o.max_n; ++n) {
    const auto& q = series[n - 2];
    if (q != variation::q_n_closed(n)) consistent = false;
    if (o.leung) {
      fmt::print(out, "{},{}\n", n, variation::leung_qn(n).to_string());
    } else {
      fmt::print(out, "{},{},{}\n", n, q.to_string(), variation::leung_qn(n).to_string());
    }
  }
  return consistent ? kSuccess : kFail;
}

variation::PhiWeight parse_phi(const std::string& text) {
  if (text == "linear") return variation::PhiWeight::linear();
  if (text.rfind("const:", 0) == 0) {
    const std::string c = text.substr(6);
    return variation::PhiWeight::linear(parse_real(c, text));
  }
  throw ConfigError("--phi must be linear or const:C");
}

int cmd_qq(const Options& o, std::ostream& out) {
  const auto phi = parse_phi(o.phi);
  const double c = phi.scale();
  const double closed = c * c * variation::Q_closed(o.w);
  fmt::print(out, "w={}\nphi={}\nQ_closed={}\n", g17(o.w), o.phi, g17(closed));
  if (o.w > -0.25) {
    fmt::print(out, "J={}\nD={}\nQ_assembled={}\n", g17(variation::inner_integral_closed(o.w)),
               g17(variation::double_integral_closed(o.w)), g17(c * c * variation::Q_assembled(o.w)));
  }
  if (o.numeric) {
    const double numeric = variation::Q_numeric(o.w, phi);
    const double diff = std::abs(numeric - closed);
    fmt::print(out, "Q_numeric={}\nabs_diff={}\n", g17(numeric), g17(diff));
    return diff <= 1e-8 ? kSuccess : kFail;
  }
  return kSuccess;
}

int cmd_lemma3(const Options& o, std::ostream& out) {
  const auto r = trig::check_lemma3(o.n, o.grid);
  fmt::print(out, "lemma3 n={} grid={}: {}\nratio_worst_margin={} at t={}\nPhi_min={} at t={}\n", o.n, r.grid_points,
             r.pass ? "PASS" : "FAIL", g17(r.ratio.worst_margin), g17(r.ratio.witness_t), g17(r.Phi.worst_margin),
             g17(r.Phi.witness_t));
  return r.pass ? kSuccess : kFail;
}

int cmd_phi_plot(const Options& o, std::ostream& out) {
  if (o.samples < 100) throw ConfigError("--samples must be >= 100");
  const trig::RatioProfile profile(o.m, o.n);
  std::string body = "t,phi\n";
  body += fmt::format("0,{}\n", g17(profile.limit0().to_double()));
  for (int i = 1; i <= o.samples; ++i) {
    const double t = trig::kPi * i / (o.samples + 1);
    body += fmt::format("{},{}\n", g17(t), g17(trig::eval_phi(profile, t)));
  }
  body += fmt::format("pi,{}\n", g17(profile.limit_pi().to_double()));
  write_file(o.out_path, body);
  fmt::print(out, "wrote {} rows to {}\n", o.samples + 2, o.out_path);
  return kSuccess;
}

int cmd_family(const Options& o, std::ostream& out) {
  const auto f = univalence::family_poly(o.n);
  if (o.check == "roots") {
    const auto report = univalence::zeros_in_unit_disk(f.divide_by_z());
    const double closed = univalence::family_root_modulus(o.n);
    const double diff = std::abs(report.min_root_modulus - closed);
    fmt::print(out, "n={}\nmin_root_modulus={}\nclosed_form={}\nabs_diff={}\nzeros_inside={}\n", o.n,
               g17(report.min_root_modulus), g17(closed), g17(diff), report.count_inside);
    return diff <= 1e-8 && closed > 1.0 && report.count_inside == 0 ? kSuccess : kFail;
  }
  if (o.check == "dieudonne") {
    return report_dieudonne(f, o.samples > 0 ? o.samples : 64 * f.degree(), out);
  }
  if (o.check == "starlike") {
    return report_starlike(f, o.samples > 0 ? o.samples : univalence::default_boundary_samples(f), out);
  }
  throw ConfigError("--check must be roots, dieudonne or starlike");
}

}  // namespace

poly::Complex parse_complex(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw ConfigError("empty coefficient");
  if (s.back() != 'i' && s.back() != 'j') return {parse_real(s, text), 0.0};

  const std::string_view body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not an exponent sign and not leading.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string_view re_part = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view im_part = split == std::string_view::npos ? body : body.substr(split);
  double im = 0.0;
  if (im_part.empty() || im_part == "+") {
    im = 1.0;
  } else if (im_part == "-") {
    im = -1.0;
  } else {
    if (im_part.front() == '+') im_part.remove_prefix(1);
    im = parse_real(im_part, text);
  }
  const double re = re_part.empty() ? 0.0 : parse_real(re_part, text);
  return {re, im};
}

poly::ComplexPolynomial parse_polynomial(std::string_view list, bool normalized) {
  std::vector<poly::Complex> c{0.0};
  if (normalized) c.emplace_back(1.0);
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = list.find(',', start);
    const std::string_view item =
        list.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (!trim(item).empty() || comma != std::string_view::npos) c.push_back(parse_complex(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (c.size() < 2) throw ConfigError("coefficient list is empty");
  return poly::ComplexPolynomial(std::move(c));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trigonometric Bombieri numbers, univalent polynomial checks and second-variation coefficients",
               "bombieri"};
  app.require_subcommand(1, 1);
  Options o;

  auto* bnum = app.add_subcommand("bnum", "compute B_mn = min_t A_n(t)/A_m(t)");
  bnum->add_option("m", o.m, "larger index")->required();
  bnum->add_option("n", o.n, "smaller index")->required();
  bnum->add_option("--grid-mult", o.grid_mult, "grid points per unit of m (>= 8)");
  bnum->add_option("--tol", o.tol, "tolerance for comparing B with (n^3-n)/(m^3-m)");
  bnum->add_flag("--json", o.json, "emit JSON");

  auto* scan_cmd = app.add_subcommand("scan", "sweep all pairs 2 <= n < m <= M");
  scan_cmd->add_option("--max", o.max_m, "largest m");
  scan_cmd->add_option("--out", o.out_path, "output file (default: standard output)");
  scan_cmd->add_option("--format", o.format, "csv or json");
  scan_cmd->add_option("--threads", o.threads, "worker threads (0: all cores)");
  scan_cmd->add_option("--tol", o.tol, "EQUAL tolerance");
  scan_cmd->add_option("--grid-mult", o.grid_mult, "grid points per unit of m (>= 8)");

  auto* dieu = app.add_subcommand("dieudonne", "sampled Dieudonne univalence check");
  dieu->add_option("--coeffs", o.coeffs, "c_1,...,c_d (complex as a+bi)")->required();
  dieu->add_option("--samples", o.samples, "number of t samples (default 64 * degree)");
  dieu->add_flag("--normalized", o.normalized, "list starts at c_2; c_1 = 1 implied");

  auto* family = app.add_subcommand("family", "checks for z - 4/(3n-1) z^n + (n+1)/((2n-1)(3n-1)) z^(2n-1)");
  family->add_option("--n", o.n, "family index n >= 2")->required();
  family->add_option("--check", o.check, "roots, dieudonne or starlike")->required();
  family->add_option("--samples", o.samples, "sample count override");

  auto* star = app.add_subcommand("starlike", "Re(z f'/f) >= 0 on the unit circle");
  star->add_option("--coeffs", o.coeffs, "c_1,...,c_d (complex as a+bi)")->required();
  star->add_option("--samples", o.samples, "boundary samples (default 4096 * degree)");
  star->add_flag("--normalized", o.normalized, "list starts at c_2; c_1 = 1 implied");

  auto* qn = app.add_subcommand("qn", "second-variation coefficients q_n");
  qn->add_option("--max", o.max_n, "largest n")->required();
  qn->add_flag("--leung", o.leung, "print only the -4/9 (n-1)(2n^2-4n+3) normalization");

  auto* qq = app.add_subcommand("qq", "second variation Q(w) on the real ray");
  qq->add_option("--w", o.w, "w >= -1/4")->required();
  qq->add_flag("--numeric", o.numeric, "also integrate the variational formula numerically");
  qq->add_option("--phi", o.phi, "linear (1-u) or const:C for C(1-u)");

  auto* lemma3 = app.add_subcommand("lemma3", "grid check of A_n/(n^3-n) >= A_{n+2}/((n+2)^3-(n+2))");
  lemma3->add_option("--n", o.n, "n >= 2")->required();
  lemma3->add_option("--grid", o.grid, "grid points (>= 1000)");

  auto* plot = app.add_subcommand("phi-plot", "write t,phi samples of A_n/A_m");
  plot->add_option("--m", o.m, "larger index")->required();
  plot->add_option("--n", o.n, "smaller index")->required();
  plot->add_option("--samples", o.samples, "interior samples (>= 100)")->required();
  plot->add_option("--out", o.out_path, "output CSV")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (bnum->parsed()) return cmd_bnum(o, out);
    if (scan_cmd->parsed()) return cmd_scan(o, out, err);
    if (dieu->parsed()) {
      const auto p = parse_polynomial(o.coeffs, o.normalized);
      return report_dieudonne(p, o.samples > 0 ? o.samples : std::max(2, 64 * p.degree()), out);
    }
    if (family->parsed()) return cmd_family(o, out);
    if (star->parsed()) {
      const auto f = parse_polynomial(o.coeffs, o.normalized);
      return report_starlike(f, o.samples > 0 ? o.samples : univalence::default_boundary_samples(f), out);
    }
    if (qn->parsed()) return cmd_qn(o, out);
    if (qq->parsed()) return cmd_qq(o, out);
    if (lemma3->parsed()) return cmd_lemma3(o, out);
    if (plot->parsed()) return cmd_phi_plot(o, out);
  } catch (const PoleError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kUncertain;
  } catch (const DegenerateError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kUncertain;
  } catch (const Error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace bombieri::cli
