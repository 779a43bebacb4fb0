#include "bombieri/trig_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <fmt/format.h>

#include "bombieri/errors.hpp"

namespace bombieri::trig {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_pair(int m, int n) {
  if (n < 2 || m <= n) throw RangeError(fmt::format("expected 2 <= n < m, got m={}, n={}", m, n));
}

BigRational cubic_minus_linear(int k) {
  const std::int64_t kk = k;
  return BigRational(kk * kk * kk - kk);
}

struct Candidate {
  double value;
  Argmin where;
};

double argmin_t(const Argmin& a) {
  switch (a.endpoint) {
    case Endpoint::kZero:
      return 0.0;
    case Endpoint::kPi:
      return kPi;
    case Endpoint::kNone:
      break;
  }
  return a.t;
}

// Golden-section search for a minimum of f inside (lo, hi). Only interior
// abscissae are ever evaluated.
template <class F>
Candidate golden_section(const F& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int iter = 0; iter < 400 && (b - a) > tol; ++iter) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? Candidate{fc, {c, Endpoint::kNone}} : Candidate{fd, {d, Endpoint::kNone}};
}

}  // namespace

double kernel_sum(int n, double t) {
  // Pair the terms +-j; the middle term j = 0 exists only for odd n.
  double sum = (n % 2 == 1) ? 1.0 : 0.0;
  for (int j = n - 1; j > 0; j -= 2) sum += 2.0 * std::cos(j * t);
  return sum;
}

double eval_A(int n, double t) {
  // n - sum cos(j t) = sum (1 - cos(j t)) = sum 2 sin^2(j t / 2).
  const double half = 0.5 * t;
  double sum = 0.0;
  for (int j = n - 1; j > 0; j -= 2) {
    const double s = std::sin(j * half);
    sum += s * s;
  }
  return 4.0 * sum;
}

double eval_Phi(int N, double t) {
  const double NN = static_cast<double>(N) * N;
  const double st = std::sin(t);
  return 2.0 * (NN - 1.0) * st - 3.0 * N * std::sin(N * t) * std::cos(t) +
         (NN + 2.0) * std::cos(N * t) * st;
}

double ExtendedRational::to_double() const { return infinite ? kInf : value.to_double(); }

std::string ExtendedRational::to_string() const { return infinite ? "inf" : value.to_string(); }

EndpointLimits endpoint_limits(int m, int n) {
  require_pair(m, n);
  EndpointLimits out{cubic_minus_linear(n) / cubic_minus_linear(m), {}};
  const bool m_odd = m % 2 == 1;
  const bool n_odd = n % 2 == 1;
  if (m_odd && !n_odd) {
    out.limit_pi.infinite = true;
  } else if (!m_odd && n_odd) {
    out.limit_pi.value = BigRational(0);
  } else if (m_odd && n_odd) {
    out.limit_pi.value = out.limit0;
  } else {
    out.limit_pi.value = BigRational(n, m);
  }
  return out;
}

RatioProfile::RatioProfile(int m, int n) : m_(m), n_(n) {
  auto limits = endpoint_limits(m, n);
  limit0_ = std::move(limits.limit0);
  limit_pi_ = std::move(limits.limit_pi);
}

double RatioProfile::operator()(double t) const {
  if (!(t > 0.0 && t < kPi)) throw DomainError(fmt::format("phi_mn needs 0 < t < pi, got t={}", t));
  return eval_A(n_, t) / eval_A(m_, t);
}

double eval_phi(const RatioProfile& profile, double t) { return profile(t); }

std::string Argmin::to_string() const {
  switch (endpoint) {
    case Endpoint::kZero:
      return "0";
    case Endpoint::kPi:
      return "pi";
    case Endpoint::kNone:
      break;
  }
  return fmt::format("{:.17g}", t);
}

MinResult minimize_B(int m, int n, const MinimizeConfig& cfg) {
  require_pair(m, n);
  if (cfg.grid_mult < 8) throw ConfigError(fmt::format("grid_mult must be >= 8, got {}", cfg.grid_mult));
  if (!(cfg.refine_tol > 0.0)) throw ConfigError("refine_tol must be positive");

  const RatioProfile profile(m, n);
  const int grid = std::max(1024, cfg.grid_mult * m);
  const double h = kPi / (grid + 1);

  // samples[0] and samples[grid + 1] hold the endpoint limits.
  std::vector<double> samples(grid + 2);
  samples[0] = profile.limit0().to_double();
  samples[grid + 1] = profile.limit_pi().to_double();
  for (int i = 1; i <= grid; ++i) samples[i] = eval_A(n, i * h) / eval_A(m, i * h);

  const auto phi = [&](double t) { return eval_A(n, t) / eval_A(m, t); };

  std::vector<Candidate> candidates;
  candidates.push_back({samples[0], {0.0, Endpoint::kZero}});
  if (!profile.limit_pi().infinite) candidates.push_back({samples[grid + 1], {kPi, Endpoint::kPi}});
  for (int i = 1; i <= grid; ++i) {
    if (samples[i] < samples[i - 1] && samples[i] <= samples[i + 1]) {
      Candidate refined = golden_section(phi, (i - 1) * h, (i + 1) * h, cfg.refine_tol);
      if (samples[i] < refined.value) refined = {samples[i], {i * h, Endpoint::kNone}};
      candidates.push_back(refined);
    }
  }

  const double lowest =
      std::min_element(candidates.begin(), candidates.end(),
                       [](const Candidate& a, const Candidate& b) { return a.value < b.value; })
          ->value;
  std::size_t chosen = 0;
  bool found = false;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (candidates[k].value > lowest + cfg.refine_tol) continue;
    if (!found || argmin_t(candidates[k].where) < argmin_t(candidates[chosen].where)) {
      chosen = k;
      found = true;
    }
  }

  MinResult result;
  result.value = candidates[chosen].value;
  result.argmin = candidates[chosen].where;
  result.grid_points = grid;
  result.refine_tol = cfg.refine_tol;
  result.margin = kInf;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (k != chosen) result.margin = std::min(result.margin, candidates[k].value - result.value);
  }
  return result;
}

Lemma3Report check_lemma3(int n, int grid_points) {
  if (n < 2) throw RangeError(fmt::format("check_lemma3 needs n >= 2, got {}", n));
  if (grid_points < 1000) throw ConfigError(fmt::format("grid_points must be >= 1000, got {}", grid_points));

  const double scale_n = static_cast<double>(n) * n * n - n;
  const double n2 = n + 2.0;
  const double scale_n2 = n2 * n2 * n2 - n2;
  const int N = n + 1;
  const double h = kPi / (grid_points + 1);

  Lemma3Report report;
  report.grid_points = grid_points;
  report.ratio.worst_margin = kInf;
  report.Phi.worst_margin = kInf;
  for (int i = 1; i <= grid_points; ++i) {
    const double t = i * h;
    const double ratio_margin = eval_A(n, t) / scale_n - eval_A(n + 2, t) / scale_n2;
    if (ratio_margin < report.ratio.worst_margin) report.ratio = {true, ratio_margin, t};
    const double phi_value = eval_Phi(N, t);
    if (phi_value < report.Phi.worst_margin) report.Phi = {true, phi_value, t};
  }
  report.ratio.pass = report.ratio.worst_margin >= -kLemma3RatioTol;
  report.Phi.pass = report.Phi.worst_margin >= -kLemma3PhiTol;
  report.pass = report.ratio.pass && report.Phi.pass;
  return report;
}

}  // namespace bombieri::trig
