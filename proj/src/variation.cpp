#include "bombieri/variation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "bombieri/errors.hpp"

namespace bombieri::variation {

namespace {

// Kronrod 15-point abscissae on [0, 1] (mirrored), weights, and the embedded
// 7-point Gauss weights for the odd-indexed abscissae.
constexpr std::array<double, 8> kKronrodX = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodW = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussW = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
  double kronrod;
  double gauss;
};

PanelEstimate gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double k = fc * kKronrodW[7];
  double g = fc * kGaussW[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodX[i];
    const double pair = f(center - dx) + f(center + dx);
    k += kKronrodW[i] * pair;
    if (i % 2 == 1) g += kGaussW[i / 2] * pair;
  }
  return {k * half, g * half};
}

double adaptive(const std::function<double(double)>& f, double a, double b, double tol, int depth_left) {
  const PanelEstimate est = gk15(f, a, b);
  if (std::abs(est.kronrod - est.gauss) <= tol) return est.kronrod;
  if (depth_left == 0) {
    throw ConvergenceError(fmt::format("quadrature did not converge on [{}, {}]", a, b));
  }
  const double mid = 0.5 * (a + b);
  return adaptive(f, a, mid, 0.5 * tol, depth_left - 1) + adaptive(f, mid, b, 0.5 * tol, depth_left - 1);
}

void require_w(double w) {
  if (!(w > -0.25)) throw DomainError(fmt::format("need w > -1/4, got {}", w));
}

// sum_{k>=first} (-1)^k C(2k, k) w^(k-shift) / ((k+1)(k+2)): the Taylor
// coefficients of (1+4w)^(-1/2) integrated against (1-u) u^k on [0, 1].
double binomial_series(double w, int first, int shift) {
  double coeff = 1.0;
  for (int k = 0; k < first; ++k) coeff *= -2.0 * (2.0 * k + 1.0) / (k + 1.0);

  double sum = 0.0;
  double base = coeff * std::pow(w, first - shift);
  for (int k = first; k < first + 120; ++k) {
    const double term = base / ((k + 1.0) * (k + 2.0));
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    base *= -w * 2.0 * (2.0 * k + 1.0) / (k + 1.0);
  }
  return sum;
}

BigRational tetrahedral(int k) {
  // (k+1)(k+2)(k+3)/6, the coefficients of 1/(1-z)^4; zero for k < 0.
  if (k < 0) return BigRational(0);
  const std::int64_t kk = k;
  return BigRational((kk + 1) * (kk + 2) * (kk + 3) / 6);
}

}  // namespace

PhiWeight PhiWeight::linear(double scale) {
  PhiWeight w;
  w.scale_ = scale;
  return w;
}

PhiWeight PhiWeight::tabulated(std::vector<double> samples, double scale) {
  if (samples.size() < 2) throw ConfigError("tabulated weight needs at least two samples");
  PhiWeight w;
  w.samples_ = std::move(samples);
  w.scale_ = scale;
  return w;
}

double PhiWeight::operator()(double u) const {
  if (samples_.empty()) return scale_ * (1.0 - u);
  const double pos = std::clamp(u, 0.0, 1.0) * static_cast<double>(samples_.size() - 1);
  const auto i = std::min(static_cast<std::size_t>(pos), samples_.size() - 2);
  const double frac = pos - static_cast<double>(i);
  return scale_ * (samples_[i] + frac * (samples_[i + 1] - samples_[i]));
}

std::vector<double> PhiWeight::pieces() const {
  if (samples_.empty()) return {0.0, 1.0};
  std::vector<double> knots(samples_.size());
  for (std::size_t k = 0; k < knots.size(); ++k) knots[k] = static_cast<double>(k) / static_cast<double>(knots.size() - 1);
  return knots;
}

double PhiWeight::at_zero() const { return samples_.empty() ? scale_ : scale_ * samples_.front(); }

PhiWeight PhiWeight::scaled(double c) const {
  PhiWeight w = *this;
  w.scale_ *= c;
  return w;
}

double integrate(const std::function<double(double)>& f, double a, double b, const QuadratureConfig& cfg) {
  if (!(cfg.tolerance > 0.0)) throw ConfigError("quadrature tolerance must be positive");
  if (cfg.max_depth < 0) throw ConfigError("quadrature max_depth must be nonnegative");
  if (cfg.rule_order != 15) throw ConfigError(fmt::format("unsupported Kronrod rule order {}", cfg.rule_order));
  if (a == b) return 0.0;
  return adaptive(f, a, b, cfg.tolerance, cfg.max_depth);
}

double inner_integral_closed(double w) {
  require_w(w);
  if (std::abs(w) < kSeriesSwitch) return binomial_series(w, 0, 0);
  return (std::pow(1.0 + 4.0 * w, 1.5) - 6.0 * w - 1.0) / (12.0 * w * w);
}

double double_integral_closed(double w) {
  require_w(w);
  // D = (J - 1/2) / (2w), and J - 1/2 is the series without its k = 0 term.
  if (std::abs(w) < kSeriesSwitch) return 0.5 * binomial_series(w, 1, 1);
  return (std::pow(1.0 + 4.0 * w, 1.5) - 6.0 * w * w - 6.0 * w - 1.0) / (24.0 * w * w * w);
}

double Q_closed(double w) {
  if (!(w >= -0.25)) throw DomainError(fmt::format("Q_closed needs w >= -1/4, got {}", w));
  const double s = 1.0 + 4.0 * w;
  return s / 6.0 * (std::sqrt(s) - 1.0 - 2.0 * w);
}

double Q_assembled(double w) {
  const double J = inner_integral_closed(w);
  const double D = double_integral_closed(w);
  return -w * w * (J + 3.0 * w * J * J + D);
}

namespace {

// Integral over [a, b] split at the knots inside it, so each panel sees a
// smooth integrand.
double integrate_pieces(const std::function<double(double)>& f, const std::vector<double>& knots, double a, double b,
                        const QuadratureConfig& cfg) {
  double sum = 0.0;
  double left = a;
  for (double k : knots) {
    if (k <= left) continue;
    if (k >= b) break;
    sum += integrate(f, left, k, cfg);
    left = k;
  }
  return sum + integrate(f, left, b, cfg);
}

}  // namespace

double Q_numeric(double w, const PhiWeight& phi, const QuadratureConfig& cfg) {
  require_w(w);
  QuadratureConfig inner_cfg = cfg;
  inner_cfg.tolerance = cfg.tolerance / 10.0;
  const std::vector<double> knots = phi.pieces();

  const double single = integrate_pieces(
      [&](double u) {
        const double p = phi(u);
        return p * p / (1.0 + 4.0 * u * w);
      },
      knots, 0.0, 1.0, cfg);

  const double nested = integrate_pieces(
      [&](double u) {
        const double inner = integrate_pieces(
            [&](double v) {
              const double V = 1.0 + 4.0 * v * w;
              return (3.0 + 1.0 / V) * phi(v) / std::sqrt(V);
            },
            knots, 0.0, u, inner_cfg);
        return phi(u) / std::sqrt(1.0 + 4.0 * u * w) * inner;
      },
      knots, 0.0, 1.0, cfg);

  return -w * w * single - 2.0 * w * w * w * nested;
}

std::vector<BigRational> q_series_coefficients(int N) {
  if (N < 2) throw RangeError(fmt::format("q_series_coefficients needs N >= 2, got {}", N));
  // -(1/3) (z^2 + 2z^3 + z^4) * sum C(k) z^k
  const BigRational third(1, 3);
  std::vector<BigRational> out;
  out.reserve(N - 1);
  for (int n = 2; n <= N; ++n) {
    out.push_back(-third * (tetrahedral(n - 2) + BigRational(2) * tetrahedral(n - 3) + tetrahedral(n - 4)));
  }
  return out;
}

BigRational q_n_closed(int n) {
  if (n < 2) throw RangeError(fmt::format("q_n_closed needs n >= 2, got {}", n));
  const std::int64_t k = n;
  return BigRational(-(k - 1) * (2 * k * k - 4 * k + 3), 9);
}

BigRational leung_qn(int n) {
  if (n < 2) throw RangeError(fmt::format("leung_qn needs n >= 2, got {}", n));
  const std::int64_t k = n;
  return BigRational(-4 * (k - 1) * (2 * k * k - 4 * k + 3), 9);
}

RatioBound sigma_ratio_bound(int m, int n) {
  if (n < 2 || m <= n) throw RangeError(fmt::format("expected 2 <= n < m, got m={}, n={}", m, n));
  const std::int64_t mm = m;
  const std::int64_t nn = n;
  RatioBound out;
  out.ratio = q_n_closed(n) / q_n_closed(m);
  out.expected = BigRational(nn * nn * nn - nn, mm * mm * mm - mm);
  out.strict = out.ratio < out.expected;
  return out;
}

GrowthSample varphi_growth(double x) {
  if (!(x > 0.0)) throw DomainError(fmt::format("varphi_growth needs x > 0, got {}", x));
  const double xp1 = x + 1.0;
  return {(2.0 * x * x - 4.0 * x + 3.0) / (x * xp1), 3.0 * (2.0 * x * x - 2.0 * x - 1.0) / (x * x * xp1 * xp1)};
}

double sigma32_reference() { return (std::numbers::e - 1.0) / (4.0 * std::numbers::e); }

}  // namespace bombieri::variation
