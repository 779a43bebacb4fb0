#include "bombieri/scanner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include <fmt/format.h>

#include "bombieri/errors.hpp"

namespace bombieri::scan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", x);
}

BigRational expected_value(int m, int n) {
  const std::int64_t mm = m;
  const std::int64_t nn = n;
  return BigRational(nn * nn * nn - nn, mm * mm * mm - mm);
}

bool same_argmin(const trig::Argmin& a, const trig::Argmin& b) {
  if (a.endpoint != b.endpoint) return false;
  return a.endpoint != trig::Endpoint::kNone || a.t == b.t;
}

nlohmann::json argmin_to_json(const trig::Argmin& a) {
  if (a.endpoint == trig::Endpoint::kNone) return a.t;
  return a.to_string();
}

trig::Argmin argmin_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "0") return {0.0, trig::Endpoint::kZero};
    if (s == "pi") return {trig::kPi, trig::Endpoint::kPi};
    throw ConfigError("unknown argmin tag '" + s + "'");
  }
  return {j.get<double>(), trig::Endpoint::kNone};
}

}  // namespace

std::string_view to_string(PairClass c) {
  switch (c) {
    case PairClass::kOddOdd:
      return "ODD_ODD";
    case PairClass::kEvenEven:
      return "EVEN_EVEN";
    case PairClass::kCaseC:
      return "CASE_C";
    case PairClass::kMixedOpen:
      return "MIXED_OPEN";
    case PairClass::kEvenMOddN:
      return "EVEN_M_ODD_N";
  }
  return "?";
}

PairClass pair_class_from_string(std::string_view s) {
  for (auto c : {PairClass::kOddOdd, PairClass::kEvenEven, PairClass::kCaseC, PairClass::kMixedOpen,
                 PairClass::kEvenMOddN}) {
    if (to_string(c) == s) return c;
  }
  throw ConfigError(fmt::format("unknown pair class '{}'", s));
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kEqual:
      return "EQUAL";
    case Verdict::kStrictlyLess:
      return "STRICTLY_LESS";
    case Verdict::kUncertain:
      return "UNCERTAIN";
  }
  return "?";
}

Verdict verdict_from_string(std::string_view s) {
  for (auto v : {Verdict::kEqual, Verdict::kStrictlyLess, Verdict::kUncertain}) {
    if (to_string(v) == s) return v;
  }
  throw ConfigError(fmt::format("unknown verdict '{}'", s));
}

PairClass classify(int m, int n) {
  if (n < 2 || m <= n) throw RangeError(fmt::format("expected 2 <= n < m, got m={}, n={}", m, n));
  const bool m_odd = m % 2 == 1;
  const bool n_odd = n % 2 == 1;
  if (m_odd && n_odd) return PairClass::kOddOdd;
  if (!m_odd && !n_odd) return PairClass::kEvenEven;
  if (!m_odd && n_odd) return PairClass::kEvenMOddN;
  return 2 * n <= m + 1 ? PairClass::kCaseC : PairClass::kMixedOpen;
}

bool theorem_covers(PairClass c) {
  return c == PairClass::kOddOdd || c == PairClass::kEvenEven || c == PairClass::kCaseC;
}

std::optional<bool> conjecture_predicts_equal(int m, int n) {
  if (m % 2 == 0 || n % 2 == 1) return std::nullopt;
  return 5 * n < 4 * m + 2;
}

bool operator==(const ScanRecord& a, const ScanRecord& b) {
  return a.m == b.m && a.n == b.n && a.pair_class == b.pair_class && a.B == b.B && a.expected == b.expected &&
         a.verdict == b.verdict && same_argmin(a.argmin, b.argmin) && a.margin == b.margin &&
         a.theorem_covers == b.theorem_covers && a.conjecture_predicts == b.conjecture_predicts;
}

Verdict classify_value(double B, double expected, double tol) {
  if (std::abs(B - expected) <= tol * std::max(1.0, expected)) return Verdict::kEqual;
  if (B < expected - tol) return Verdict::kStrictlyLess;
  return Verdict::kUncertain;
}

ScanRecord scan_pair(int m, int n, const trig::MinimizeConfig& minimize, double tol) {
  ScanRecord r;
  r.m = m;
  r.n = n;
  r.pair_class = classify(m, n);
  const trig::MinResult min = trig::minimize_B(m, n, minimize);
  r.B = min.value;
  r.expected = expected_value(m, n);
  r.verdict = classify_value(r.B, r.expected.to_double(), tol);
  r.argmin = min.argmin;
  r.margin = min.margin;
  r.theorem_covers = theorem_covers(r.pair_class);
  r.conjecture_predicts = conjecture_predicts_equal(m, n);
  return r;
}

std::vector<ScanRecord> scan(const ScanConfig& cfg) {
  if (cfg.max_m < 3) throw ConfigError(fmt::format("scan needs max_m >= 3, got {}", cfg.max_m));
  if (!(cfg.tol > 0.0)) throw ConfigError("scan tolerance must be positive");
  if (cfg.threads < 0) throw ConfigError("thread count must be nonnegative");

  std::vector<std::pair<int, int>> pairs;
  for (int m = 3; m <= cfg.max_m; ++m) {
    for (int n = 2; n < m; ++n) pairs.emplace_back(m, n);
  }
  std::vector<ScanRecord> records(pairs.size());

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = std::min<std::size_t>(cfg.threads > 0 ? static_cast<unsigned>(cfg.threads) : hw, pairs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      try {
        records[i] = scan_pair(pairs[i].first, pairs[i].second, cfg.minimize, cfg.tol);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = pairs.size();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::sort(records.begin(), records.end(),
            [](const ScanRecord& a, const ScanRecord& b) { return std::pair(a.m, a.n) < std::pair(b.m, b.n); });
  return records;
}

std::string to_csv(const std::vector<ScanRecord>& records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : records) {
    out += fmt::format("{},{},{},{},{},{},{},{},{},{}\n", r.m, r.n, to_string(r.pair_class), format_double(r.B),
                       format_double(r.expected.to_double()), to_string(r.verdict), r.argmin.to_string(),
                       format_double(r.margin), r.theorem_covers ? "true" : "false",
                       r.conjecture_predicts ? (*r.conjecture_predicts ? "true" : "false") : "");
  }
  return out;
}

nlohmann::json to_json(const std::vector<ScanRecord>& records) {
  auto arr = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["class"] = std::string(to_string(r.pair_class));
    j["B"] = r.B;
    j["expected"] = r.expected.to_double();
    j["verdict"] = std::string(to_string(r.verdict));
    j["argmin_t"] = argmin_to_json(r.argmin);
    j["margin"] = std::isinf(r.margin) ? nlohmann::json(nullptr) : nlohmann::json(r.margin);
    j["theorem_covers"] = r.theorem_covers;
    j["conjecture_predicts"] = r.conjecture_predicts ? nlohmann::json(*r.conjecture_predicts) : nlohmann::json(nullptr);
    arr.push_back(std::move(j));
  }
  return arr;
}

std::vector<ScanRecord> records_from_json(const nlohmann::json& j) {
  std::vector<ScanRecord> out;
  for (const auto& item : j) {
    ScanRecord r;
    r.m = item.at("m").get<int>();
    r.n = item.at("n").get<int>();
    r.pair_class = pair_class_from_string(item.at("class").get<std::string>());
    r.B = item.at("B").get<double>();
    // expected is a function of (m, n); the serialized double is a rounding of it.
    r.expected = expected_value(r.m, r.n);
    if (r.expected.to_double() != item.at("expected").get<double>()) {
      throw ConfigError(fmt::format("record ({}, {}) has an inconsistent expected value", r.m, r.n));
    }
    r.verdict = verdict_from_string(item.at("verdict").get<std::string>());
    r.argmin = argmin_from_json(item.at("argmin_t"));
    r.margin = item.at("margin").is_null() ? kInf : item.at("margin").get<double>();
    r.theorem_covers = item.at("theorem_covers").get<bool>();
    if (!item.at("conjecture_predicts").is_null()) r.conjecture_predicts = item.at("conjecture_predicts").get<bool>();
    out.push_back(std::move(r));
  }
  return out;
}

ConjectureReport conjecture_report(const std::vector<ScanRecord>& records) {
  int max_m = 0;
  for (const auto& r : records) max_m = std::max(max_m, r.m);
  if (max_m < 9) throw ConfigError("conjecture_report needs a scan reaching m >= 9");

  ConjectureReport report;
  for (const auto& r : records) {
    if (!r.conjecture_predicts) continue;
    ++report.pairs;
    const PairOutcome outcome{r.m, r.n, r.verdict, r.B, r.expected.to_double(), r.margin};
    if (r.verdict == Verdict::kUncertain) {
      report.uncertain.push_back(outcome);
    } else if ((r.verdict == Verdict::kEqual) == *r.conjecture_predicts) {
      ++report.agreements;
    } else if (*r.conjecture_predicts) {
      report.predicted_equal_but_less.push_back(outcome);
    } else {
      report.predicted_less_but_equal.push_back(outcome);
    }
  }
  return report;
}

std::string ConjectureReport::to_text() const {
  std::string out = fmt::format(
      "conjecture n < (4m+2)/5 over m odd, n even: {} pairs, {} agree, {} predicted EQUAL but less, "
      "{} predicted less but EQUAL, {} uncertain\n",
      pairs, agreements, predicted_equal_but_less.size(), predicted_less_but_equal.size(), uncertain.size());
  auto list = [&out](std::string_view title, const std::vector<PairOutcome>& items) {
    for (const auto& o : items) {
      out += fmt::format("  {} (m={}, n={}): B={} expected={} verdict={} margin={}\n", title, o.m, o.n,
                         format_double(o.B), format_double(o.expected), to_string(o.verdict),
                         format_double(o.margin));
    }
  };
  list("predicted-equal-but-less", predicted_equal_but_less);
  list("predicted-less-but-equal", predicted_less_but_equal);
  list("uncertain", uncertain);
  return out;
}

}  // namespace bombieri::scan
