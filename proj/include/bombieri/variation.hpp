#pragma once

#include <functional>
#include <vector>

#include "bombieri/rational.hpp"

namespace bombieri::variation {

/// Weight function phi(u) on [0, 1] fed into the second-variation formula.
class PhiWeight {
 public:
  /// scale * (1 - u)
  static PhiWeight linear(double scale = 1.0);
  /// Piecewise-linear interpolation of samples at u_k = k / (size - 1).
  static PhiWeight tabulated(std::vector<double> samples, double scale = 1.0);

  double operator()(double u) const;
  double at_zero() const;
  PhiWeight scaled(double c) const;
  double scale() const { return scale_; }
  /// 0, the interior table knots, 1: the weight is linear between neighbours.
  std::vector<double> pieces() const;

 private:
  PhiWeight() = default;
  std::vector<double> samples_;  // empty for the linear weight
  double scale_ = 1.0;
};

struct QuadratureConfig {
  double tolerance = 1e-10;  // absolute
  int max_depth = 30;
  int rule_order = 15;  // Kronrod points per panel; 15 is the only rule provided
};

/// Adaptive Gauss-Kronrod (7/15) quadrature of f over [a, b]: panels are
/// bisected until the Kronrod-Gauss difference on each is below its share of
/// the absolute tolerance. Throws ConvergenceError when a panel still fails at
/// max_depth and ConfigError for an invalid cfg.
double integrate(const std::function<double(double)>& f, double a, double b, const QuadratureConfig& cfg = {});

/// J(w) = int_0^1 (1-u) / sqrt(1+4uw) du in closed form (power series for
/// |w| < kSeriesSwitch). Throws DomainError for w <= -1/4.
double inner_integral_closed(double w);

/// D(w) = int_0^1 int_0^u phi(u) phi'(v) / sqrt((1+4uw)(1+4vw)) dv du for
/// phi = 1-u, closed form with the same small-|w| series switch.
double double_integral_closed(double w);

/// Closed forms switch to their Taylor series below this |w|.
inline constexpr double kSeriesSwitch = 0.05;

/// Q(w) = (1+4w)/6 (sqrt(1+4w) - 1 - 2w). Throws DomainError for w < -1/4.
double Q_closed(double w);

/// -w^2 [phi(0) J + 3w J^2 + D], the rearranged second variation for
/// phi = 1-u assembled from the two closed-form integrals.
double Q_assembled(double w);

/// Direct quadrature of the second variation
///   Q(w) = -w^2 int_0^1 phi(u)^2/U du
///          - 2w^3 int_0^1 int_0^u (3 + 1/V) phi(u) phi(v)/sqrt(UV) dv du,
/// U = 1+4uw, V = 1+4vw. The inner integral runs at tolerance/10.
/// Throws DomainError for w <= -1/4.
double Q_numeric(double w, const PhiWeight& phi, const QuadratureConfig& cfg = {});

/// q_2..q_N read off q(z) = -z^2 (1+z)^2 / (3 (1-z)^4) through the series
/// 1/(1-z)^4 = sum (k+1)(k+2)(k+3)/6 z^k. Element i holds q_{i+2}.
std::vector<BigRational> q_series_coefficients(int N);

/// -(n-1)(2n^2-4n+3)/9
BigRational q_n_closed(int n);

/// -4(n-1)(2n^2-4n+3)/9, four times q_n_closed.
BigRational leung_qn(int n);

struct RatioBound {
  BigRational ratio;     // q_n / q_m
  BigRational expected;  // (n^3-n) / (m^3-m)
  bool strict = false;   // ratio < expected
};

/// Throws RangeError unless 2 <= n < m.
RatioBound sigma_ratio_bound(int m, int n);

struct GrowthSample {
  double value = 0.0;
  double derivative = 0.0;
};

/// (2x^2-4x+3)/(x(x+1)) and its derivative 3(2x^2-2x-1)/(x^2(x+1)^2).
GrowthSample varphi_growth(double x);

/// Known value of the (3,2) Bombieri number, (e-1)/(4e); reference only.
double sigma32_reference();

}  // namespace bombieri::variation
