#include "bombieri/univalence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "bombieri/errors.hpp"
#include "bombieri/rational.hpp"

namespace bombieri::univalence {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTrimTol = 1e-14;
constexpr double kStarlikeTol = 1e-10;
constexpr double kPoleSeparation = 1e-9;

void require_normalized(const ComplexPolynomial& p) {
  if (std::abs(p.coeff(0)) > 1e-15 || std::abs(p.coeff(1) - Complex(1.0)) > 1e-15) {
    throw NormalizationError("polynomial must be of the form z + a_2 z^2 + ...");
  }
}

}  // namespace

DiskZeroReport zeros_in_unit_disk(const ComplexPolynomial& p_in) {
  if (p_in.is_zero()) throw DomainError("zeros_in_unit_disk: zero polynomial");
  const ComplexPolynomial p = p_in.trimmed(kTrimTol);

  DiskZeroReport report;
  report.min_root_modulus = kInf;
  report.certified_margin = kInf;
  if (p.degree() == 0) return report;

  const auto roots = poly::aberth_roots(p);
  report.roots_converged = roots.converged;
  int aberth_count = 0;
  for (const auto& z : roots.roots) {
    const double r = std::abs(z);
    report.min_root_modulus = std::min(report.min_root_modulus, r);
    report.certified_margin = std::min(report.certified_margin, std::abs(r - 1.0));
    if (r < 1.0 - kCircleSeparation) ++aberth_count;
  }

  const auto sc = poly::schur_cohn_count(p, kCircleSeparation);
  if (!sc.degenerate) {
    report.method = ZeroMethod::kSchurCohn;
    report.count_inside = sc.count_inside;
    return report;
  }
  if (!roots.converged) {
    throw DegenerateError("zeros_in_unit_disk: degenerate Schur-Cohn step and Aberth did not converge");
  }
  report.method = ZeroMethod::kAberth;
  report.count_inside = aberth_count;
  return report;
}

ComplexPolynomial dieudonne_associated(const ComplexPolynomial& p, double t) {
  require_normalized(p);
  std::vector<Complex> q(std::max(1, p.degree()));
  q[0] = 1.0;
  for (int k = 2; k <= p.degree(); ++k) q[k - 1] = p.coeff(k) * trig::kernel_sum(k, t);
  return ComplexPolynomial(std::move(q));
}

UnivalenceVerdict dieudonne_check(const ComplexPolynomial& p, int t_samples, double margin_tol) {
  require_normalized(p);
  const int d = p.degree();
  if (t_samples < 64 * d || t_samples < 2) {
    throw ConfigError(fmt::format("t_samples must be >= 64 * degree = {}, got {}", 64 * d, t_samples));
  }

  UnivalenceVerdict verdict;
  verdict.samples = t_samples;
  verdict.worst_margin = kInf;
  bool degenerate_sample = false;
  for (int j = 0; j < t_samples; ++j) {
    const double t = trig::kPi * j / (t_samples - 1);
    const ComplexPolynomial q = dieudonne_associated(p, t);
    double min_modulus = kInf;
    try {
      const DiskZeroReport report = zeros_in_unit_disk(q);
      min_modulus = report.min_root_modulus;
      // A positive count not backed by a root modulus below the witness
      // threshold means the count is unreliable at this t.
      if (report.count_inside > 0 && min_modulus >= 1.0 - kInteriorWitness) degenerate_sample = true;
    } catch (const DegenerateError&) {
      degenerate_sample = true;
      continue;
    }
    const double margin = min_modulus - 1.0;
    if (margin < verdict.worst_margin) {
      verdict.worst_margin = margin;
      verdict.worst_t = t;
    }
    if (min_modulus < 1.0 - kInteriorWitness && !verdict.witness_t) verdict.witness_t = t;
  }

  if (verdict.witness_t) {
    verdict.status = UnivalenceStatus::kNotUnivalent;
  } else if (!degenerate_sample && verdict.worst_margin >= margin_tol) {
    verdict.status = UnivalenceStatus::kUnivalentSampled;
  } else {
    verdict.status = UnivalenceStatus::kUncertain;
  }
  return verdict;
}

ComplexPolynomial family_poly(int n) {
  if (n < 2) throw RangeError(fmt::format("family_poly needs n >= 2, got {}", n));
  const BigRational a_n(-4, 3 * n - 1);
  const BigRational a_2n1(n + 1, static_cast<std::int64_t>(2 * n - 1) * (3 * n - 1));
  std::vector<Complex> c(2 * n, 0.0);
  c[1] = 1.0;
  c[n] = a_n.to_double();
  c[2 * n - 1] = a_2n1.to_double();
  return ComplexPolynomial(std::move(c));
}

double family_root_modulus(int n) {
  if (n < 2) throw RangeError(fmt::format("family_root_modulus needs n >= 2, got {}", n));
  const double nn = n;
  const double power = (2.0 * nn - 1.0) * (3.0 * nn * nn + 2.0 * nn - 1.0) / ((nn + 1.0) * (nn + 1.0));
  return std::pow(power, 1.0 / (2.0 * nn - 2.0));
}

IdentitySides starlike_identity(int n, double theta) {
  const long double nn = n;
  const long double c = std::cos(static_cast<long double>(theta));
  const long double s = std::sin(static_cast<long double>(theta));
  const long double lhs = 2.0L * nn * (c - 1.0L) * ((3.0L * nn * nn - 2.0L * nn + 1.0L) * c - 2.0L * (2.0L * nn - 1.0L)) +
                          3.0L * nn * (nn - 1.0L) * (nn - 1.0L) * s * s;
  const long double rhs = nn * (nn + 1.0L) * (3.0L * nn - 1.0L) * (c - 1.0L) * (c - 1.0L);
  return {lhs, rhs};
}

int default_boundary_samples(const ComplexPolynomial& f) { return 4096 * std::max(1, f.degree()); }

trig::Verdict starlike_check(const ComplexPolynomial& f, int boundary_samples) {
  if (f.is_zero() || f.coeff(0) != Complex(0.0) || f.coeff(1) == Complex(0.0)) {
    throw NormalizationError("starlike_check needs f(0) = 0 and f'(0) != 0");
  }
  if (boundary_samples < 1) throw ConfigError("boundary_samples must be positive");

  const ComplexPolynomial g = f.divide_by_z();
  if (g.degree() > 0) {
    const auto roots = poly::aberth_roots(g.trimmed(kTrimTol));
    double min_modulus = kInf;
    for (const auto& z : roots.roots) min_modulus = std::min(min_modulus, std::abs(z));
    if (!(min_modulus > 1.0 + kPoleSeparation)) {
      throw PoleError(fmt::format("f(z)/z has a zero of modulus {} inside or near the closed disk", min_modulus));
    }
  }

  const ComplexPolynomial df = f.derivative();
  trig::Verdict verdict;
  verdict.worst_margin = kInf;
  for (int k = 0; k < boundary_samples; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / boundary_samples;
    const Complex z = std::polar(1.0, angle);
    const double re = (z * df(z) / f(z)).real();
    if (re < verdict.worst_margin) {
      verdict.worst_margin = re;
      verdict.witness_t = angle;
    }
  }
  verdict.pass = verdict.worst_margin >= -kStarlikeTol;
  return verdict;
}

}  // namespace bombieri::univalence
