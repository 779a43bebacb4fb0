#pragma once

#include <complex>
#include <span>
#include <vector>

namespace bombieri::poly {

using Complex = std::complex<double>;

/// Dense polynomial c_0 + c_1 z + ... + c_d z^d with complex coefficients.
/// Exact trailing zeros are dropped on construction, so the leading
/// coefficient is nonzero unless the polynomial is identically zero.
class ComplexPolynomial {
 public:
  ComplexPolynomial() = default;
  explicit ComplexPolynomial(std::vector<Complex> coeffs);
  ComplexPolynomial(std::initializer_list<Complex> coeffs)
      : ComplexPolynomial(std::vector<Complex>(coeffs)) {}

  std::span<const Complex> coeffs() const { return coeffs_; }
  /// Coefficient of z^k; zero beyond the degree.
  Complex coeff(int k) const;
  int degree() const { return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Complex operator()(Complex z) const;
  ComplexPolynomial derivative() const;
  /// Drops leading coefficients with |c| <= rel_tol * max_k |c_k|.
  ComplexPolynomial trimmed(double rel_tol) const;
  /// (p(z) - p(0)) / z, i.e. the coefficients shifted down by one.
  ComplexPolynomial divide_by_z() const;

  friend bool operator==(const ComplexPolynomial&, const ComplexPolynomial&) = default;

 private:
  std::vector<Complex> coeffs_;
};

/// Horner evaluation.
Complex polynomial_eval(const ComplexPolynomial& p, Complex z);

struct AberthConfig {
  int max_iterations = 200;
  double tolerance = 1e-13;
  double radius_scale = 1.1;
};

struct RootsResult {
  std::vector<Complex> roots;
  bool converged = true;
  int iterations = 0;
};

/// All roots of p by Aberth-Ehrlich simultaneous iteration, started on a
/// circle of radius radius_scale * |c_0 / c_d|^(1/d). Exact roots at the
/// origin are split off first. Throws DomainError for the zero polynomial.
RootsResult aberth_roots(const ComplexPolynomial& p, const AberthConfig& cfg = {});

struct SchurCohnResult {
  bool degenerate = false;
  int count_inside = 0;
  /// min over reduction steps of ||c_0| - |c_d|| / max(|c_0|, |c_d|).
  double min_gap = 0.0;
};

/// Counts zeros in |z| < 1 with the Cohn rule: with P* the conjugate
/// reciprocal and T P = conj(c_0) P - c_d P* (degree < d),
///   count(P) = count(T P)       if |c_0| > |c_d|,
///   count(P) = d - count(T P)   if |c_0| < |c_d|.
/// A step with relative gap below degenerate_tol stops the reduction and sets
/// degenerate.
SchurCohnResult schur_cohn_count(const ComplexPolynomial& p, double degenerate_tol = 1e-10);

}  // namespace bombieri::poly
