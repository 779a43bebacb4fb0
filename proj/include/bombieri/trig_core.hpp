#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bombieri/rational.hpp"

namespace bombieri::trig {

inline constexpr double kPi = 3.14159265358979323846;

/// sin(n t) / sin(t) evaluated as the cosine sum
///   sum_{k=0}^{n-1} cos((n-1-2k) t),
/// i.e. the Chebyshev polynomial U_{n-1}(cos t). Total in t: at t = l*pi the
/// continuous limit (+-n) is returned without dividing. O(n).
double kernel_sum(int n, double t);

/// A_n(t) = n - sin(nt)/sin(t), summed as 4 * sum sin^2(j t / 2) over
/// j = n-1, n-3, ... > 0. Every term is nonnegative, so the result is >= 0
/// and keeps full relative accuracy as t -> 0 where A_n ~ (n^3 - n) t^2 / 6.
double eval_A(int n, double t);

/// Phi(t) = 2(N^2-1) sin t - 3N sin(Nt) cos t + (N^2+2) cos(Nt) sin t, with
/// N = n + 1. Nonnegative on [0, pi] exactly when the step n -> n+2 of the
/// A_n / (n^3 - n) chain is monotone.
double eval_Phi(int N, double t);

/// +infinity or an exact rational.
struct ExtendedRational {
  BigRational value;
  bool infinite = false;

  double to_double() const;
  std::string to_string() const;  // "inf" when infinite
};

/// phi_mn(t) = A_n(t) / A_m(t) for a fixed pair 2 <= n < m, together with its
/// analytic limits at t = 0 and t = pi.
class RatioProfile {
 public:
  RatioProfile(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  const BigRational& limit0() const { return limit0_; }
  const ExtendedRational& limit_pi() const { return limit_pi_; }

  /// Interior evaluation; throws DomainError unless 0 < t < pi.
  double operator()(double t) const;

 private:
  int m_;
  int n_;
  BigRational limit0_;
  ExtendedRational limit_pi_;
};

struct EndpointLimits {
  BigRational limit0;
  ExtendedRational limit_pi;
};

/// (n^3 - n)/(m^3 - m) at t = 0; at t = pi: 0 for even m / odd n, +inf for odd
/// m / even n, limit0 when both odd, n/m when both even.
EndpointLimits endpoint_limits(int m, int n);

/// phi_mn at an interior point. Throws DomainError at or outside the endpoints.
double eval_phi(const RatioProfile& profile, double t);

enum class Endpoint { kNone, kZero, kPi };

/// Location of a minimum: an interior angle, or one of the two endpoints.
struct Argmin {
  double t = 0.0;
  Endpoint endpoint = Endpoint::kNone;

  /// "0", "pi" or the angle with 17 significant digits.
  std::string to_string() const;
};

struct MinimizeConfig {
  int grid_mult = 64;
  double refine_tol = 1e-13;
};

struct MinResult {
  double value = 0.0;
  Argmin argmin;
  int grid_points = 0;
  double refine_tol = 0.0;
  /// Second-lowest candidate minimum minus value; +inf with a single candidate.
  double margin = 0.0;
};

/// B_mn = min over t of phi_mn(t).
///
/// phi_mn is sampled on max(1024, grid_mult * m) interior points of (0, pi);
/// the two endpoint limits are added as candidates and every strict interior
/// local minimum of the samples is refined by golden-section search down to a
/// bracket of width refine_tol. Candidates within refine_tol of the lowest
/// value are tie-broken towards the smallest t.
///
/// Throws RangeError unless 2 <= n < m, ConfigError for grid_mult < 8 or
/// refine_tol <= 0.
MinResult minimize_B(int m, int n, const MinimizeConfig& cfg = {});

/// Result of a one-sided grid check.
struct Verdict {
  bool pass = true;
  double worst_margin = 0.0;  // smallest observed (lhs - rhs)
  double witness_t = 0.0;     // where worst_margin occurred
};

struct Lemma3Report {
  bool pass = true;
  Verdict ratio;  // A_n/(n^3-n) - A_{n+2}/((n+2)^3-(n+2)) >= -ratio_tol
  Verdict Phi;    // Phi(t) >= -phi_tol with N = n+1
  int grid_points = 0;
};

inline constexpr double kLemma3RatioTol = 1e-12;
inline constexpr double kLemma3PhiTol = 1e-10;

/// Sweeps grid_points interior points t_i = pi i / (grid_points + 1).
/// Throws RangeError for n < 2 and ConfigError for grid_points < 1000.
Lemma3Report check_lemma3(int n, int grid_points);

}  // namespace bombieri::trig
