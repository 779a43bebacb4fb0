#include "bombieri/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "bombieri/errors.hpp"

namespace bombieri::poly {

namespace {

double max_abs(std::span<const Complex> c) {
  double m = 0.0;
  for (const auto& x : c) m = std::max(m, std::abs(x));
  return m;
}

// Newton correction p(z)/p'(z). For |z| > 1 it is evaluated through the
// reversed polynomial in y = 1/z to avoid overflow and loss of accuracy.
Complex newton_ratio(std::span<const Complex> c, Complex z) {
  const int d = static_cast<int>(c.size()) - 1;
  if (std::abs(z) <= 1.0) {
    Complex p = c[d];
    Complex dp = 0.0;
    for (int k = d - 1; k >= 0; --k) {
      dp = dp * z + p;
      p = p * z + c[k];
    }
    if (dp == Complex(0.0)) return p == Complex(0.0) ? Complex(0.0) : Complex(std::numeric_limits<double>::infinity());
    return p / dp;
  }
  // rev(y) = sum_k c_k y^(d-k); p/p' = z / (d - y rev'(y) / rev(y)).
  const Complex y = 1.0 / z;
  Complex r = c[0];
  Complex dr = 0.0;
  for (int k = 1; k <= d; ++k) {
    dr = dr * y + r;
    r = r * y + c[k];
  }
  if (r == Complex(0.0)) return 0.0;
  return z / (static_cast<double>(d) - y * dr / r);
}

}  // namespace

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == Complex(0.0)) coeffs_.pop_back();
}

Complex ComplexPolynomial::coeff(int k) const {
  return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Complex(0.0);
}

Complex ComplexPolynomial::operator()(Complex z) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ComplexPolynomial ComplexPolynomial::derivative() const {
  std::vector<Complex> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(static_cast<double>(k) * coeffs_[k]);
  return ComplexPolynomial(std::move(d));
}

ComplexPolynomial ComplexPolynomial::trimmed(double rel_tol) const {
  const double cutoff = rel_tol * max_abs(coeffs_);
  std::vector<Complex> c = coeffs_;
  while (!c.empty() && std::abs(c.back()) <= cutoff) c.pop_back();
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::divide_by_z() const {
  if (coeffs_.size() <= 1) return {};
  return ComplexPolynomial(std::vector<Complex>(coeffs_.begin() + 1, coeffs_.end()));
}

Complex polynomial_eval(const ComplexPolynomial& p, Complex z) { return p(z); }

RootsResult aberth_roots(const ComplexPolynomial& p, const AberthConfig& cfg) {
  if (p.is_zero()) throw DomainError("aberth_roots: zero polynomial");
  RootsResult out;

  std::span<const Complex> all = p.coeffs();
  std::size_t lead_zeros = 0;
  while (all[lead_zeros] == Complex(0.0)) ++lead_zeros;
  out.roots.assign(lead_zeros, Complex(0.0));
  const std::span<const Complex> c = all.subspan(lead_zeros);
  const int d = static_cast<int>(c.size()) - 1;
  if (d <= 0) return out;

  if (d == 1) {
    out.roots.push_back(-c[0] / c[1]);
    return out;
  }

  const double radius = cfg.radius_scale * std::pow(std::abs(c[0] / c[d]), 1.0 / d);
  std::vector<Complex> z(d);
  for (int k = 0; k < d; ++k) {
    // The offset keeps the start off any symmetry axis of real polynomials.
    z[k] = std::polar(radius, 2.0 * std::numbers::pi * k / d + 0.4);
  }

  out.converged = false;
  for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
    bool done = true;
    for (int i = 0; i < d; ++i) {
      const Complex ratio = newton_ratio(c, z[i]);
      if (ratio == Complex(0.0)) continue;
      Complex repulsion = 0.0;
      for (int j = 0; j < d; ++j) {
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      }
      const Complex step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[i] -= step;
      if (std::abs(step) > cfg.tolerance * std::max(1.0, std::abs(z[i]))) done = false;
    }
    out.iterations = iter;
    if (done) {
      out.converged = true;
      break;
    }
  }
  out.roots.insert(out.roots.end(), z.begin(), z.end());
  return out;
}

SchurCohnResult schur_cohn_count(const ComplexPolynomial& p, double degenerate_tol) {
  if (p.is_zero()) throw DomainError("schur_cohn_count: zero polynomial");
  SchurCohnResult out;
  out.min_gap = std::numeric_limits<double>::infinity();

  std::vector<Complex> c(p.coeffs().begin(), p.coeffs().end());
  // Exact zeros at the origin lie inside the disk.
  int base = 0;
  while (c.front() == Complex(0.0)) {
    c.erase(c.begin());
    ++base;
  }
  // count(original) = base + sign * count(current)
  int sign = 1;
  while (c.size() > 1) {
    const int d = static_cast<int>(c.size()) - 1;
    const double a = std::abs(c.front());
    const double b = std::abs(c.back());
    const double gap = std::abs(a - b) / std::max(a, b);
    out.min_gap = std::min(out.min_gap, gap);
    if (gap <= degenerate_tol) {
      out.degenerate = true;
      return out;
    }
    std::vector<Complex> q(d);
    const Complex c0_conj = std::conj(c.front());
    const Complex cd = c.back();
    for (int k = 0; k < d; ++k) q[k] = c0_conj * c[k] - cd * std::conj(c[d - k]);

    if (a < b) {
      base += sign * d;
      sign = -sign;
    }
    const double scale = max_abs(q);
    if (scale == 0.0) {
      out.degenerate = true;
      return out;
    }
    for (auto& x : q) x /= scale;
    // Leading terms that cancelled to rounding level are roots at infinity.
    while (q.size() > 1 && std::abs(q.back()) <= 1e-14) q.pop_back();
    c = std::move(q);
  }
  out.count_inside = base;
  return out;
}

}  // namespace bombieri::poly
