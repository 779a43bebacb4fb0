#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "bombieri/rational.hpp"
#include "bombieri/trig_core.hpp"

namespace bombieri::scan {

enum class PairClass {
  kOddOdd,     // both odd
  kEvenEven,   // both even
  kCaseC,      // m odd, n even, n <= (m+1)/2
  kMixedOpen,  // m odd, n even, n > (m+1)/2
  kEvenMOddN,  // B_mn = 0
};

std::string_view to_string(PairClass c);
PairClass pair_class_from_string(std::string_view s);

/// Throws RangeError unless 2 <= n < m.
PairClass classify(int m, int n);

/// Both odd, both even, or CASE_C: the endpoint value (n^3-n)/(m^3-m) is the minimum.
bool theorem_covers(PairClass c);

/// n < (4m+2)/5 for m odd, n even; nullopt for other parities.
std::optional<bool> conjecture_predicts_equal(int m, int n);

enum class Verdict { kEqual, kStrictlyLess, kUncertain };

std::string_view to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

struct ScanRecord {
  int m = 0;
  int n = 0;
  PairClass pair_class = PairClass::kOddOdd;
  double B = 0.0;
  BigRational expected;
  Verdict verdict = Verdict::kUncertain;
  trig::Argmin argmin;
  double margin = 0.0;
  bool theorem_covers = false;
  std::optional<bool> conjecture_predicts;

  friend bool operator==(const ScanRecord& a, const ScanRecord& b);
};

struct ScanConfig {
  int max_m = 80;
  trig::MinimizeConfig minimize;
  double tol = 1e-7;
  int threads = 0;  // 0: hardware concurrency
};

/// EQUAL iff |B - expected| <= tol * max(1, expected); STRICTLY_LESS iff
/// B < expected - tol; UNCERTAIN otherwise.
Verdict classify_value(double B, double expected, double tol);

ScanRecord scan_pair(int m, int n, const trig::MinimizeConfig& minimize, double tol);

/// One record per pair 2 <= n < m <= max_m, sorted by (m, n). Pairs are
/// distributed over a worker pool; the output does not depend on the number
/// of workers. Throws ConfigError for max_m < 3 and propagates errors from
/// minimize_B.
std::vector<ScanRecord> scan(const ScanConfig& cfg);

inline constexpr std::string_view kCsvHeader =
    "m,n,class,B,expected,verdict,argmin_t,margin,theorem_covers,conjecture_predicts";

/// Header line followed by one line per record; doubles with 17 significant
/// digits, "inf" for an infinite margin, empty conjecture_predicts when the
/// prediction is undefined.
std::string to_csv(const std::vector<ScanRecord>& records);

/// Array of objects with the CSV field names. Endpoint argmins are the
/// strings "0" / "pi", an infinite margin and an undefined prediction are null.
nlohmann::json to_json(const std::vector<ScanRecord>& records);
std::vector<ScanRecord> records_from_json(const nlohmann::json& j);

struct PairOutcome {
  int m = 0;
  int n = 0;
  Verdict verdict = Verdict::kUncertain;
  double B = 0.0;
  double expected = 0.0;
  double margin = 0.0;
};

/// Conjectured boundary n < (4m+2)/5 against the scan, over m odd / n even.
struct ConjectureReport {
  int pairs = 0;
  int agreements = 0;
  /// predicted EQUAL but the scan found a smaller interior value
  std::vector<PairOutcome> predicted_equal_but_less;
  /// predicted failure (on or above the line) but the endpoint value is the minimum
  std::vector<PairOutcome> predicted_less_but_equal;
  std::vector<PairOutcome> uncertain;

  std::string to_text() const;
};

/// Throws ConfigError unless the records reach m >= 9.
ConjectureReport conjecture_report(const std::vector<ScanRecord>& records);

}  // namespace bombieri::scan
