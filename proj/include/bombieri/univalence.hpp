#pragma once

#include <optional>

#include "bombieri/polynomial.hpp"
#include "bombieri/trig_core.hpp"

namespace bombieri::univalence {

using poly::Complex;
using poly::ComplexPolynomial;

/// Roots closer than this to |z| = 1 are not considered separated from it.
inline constexpr double kCircleSeparation = 1e-10;
/// A root certifies non-univalence only when its modulus is below 1 - this.
inline constexpr double kInteriorWitness = 1e-9;

enum class ZeroMethod { kSchurCohn, kAberth };

struct DiskZeroReport {
  int count_inside = 0;
  /// +inf for constant polynomials.
  double min_root_modulus = 0.0;
  ZeroMethod method = ZeroMethod::kSchurCohn;
  /// min_k ||z_k| - 1| over the computed roots; +inf for constants.
  double certified_margin = 0.0;
  bool roots_converged = true;

  bool separated() const { return certified_margin >= kCircleSeparation; }
};

/// Number of zeros in |z| < 1 (with multiplicity).
///
/// Leading coefficients below 1e-14 of the largest one are dropped first.
/// The count comes from the Schur-Cohn reduction; when a reduction step is
/// within 1e-10 of degeneracy (|c_0| ~ |c_d|), it falls back to counting
/// Aberth roots of modulus < 1 - 1e-10, so roots on the circle are not
/// counted and show up as certified_margin ~ 0. Roots are always computed so
/// that min_root_modulus is available.
///
/// Throws DomainError for the zero polynomial, DegenerateError when the
/// reduction is degenerate and the root iteration did not converge either.
DiskZeroReport zeros_in_unit_disk(const ComplexPolynomial& p);

/// q(z; t) = 1 + sum_{k>=2} a_k sin(kt)/sin(t) z^(k-1), with the quotients
/// taken from the cosine-sum kernel so t = 0 gives p'(z) and t = pi the
/// alternating-sign limit. Throws NormalizationError unless p(0) = 0 and
/// p'(0) = 1.
ComplexPolynomial dieudonne_associated(const ComplexPolynomial& p, double t);

enum class UnivalenceStatus { kUnivalentSampled, kNotUnivalent, kUncertain };

struct UnivalenceVerdict {
  UnivalenceStatus status = UnivalenceStatus::kUncertain;
  std::optional<double> witness_t;  // set iff kNotUnivalent
  /// min over sampled t of (min root modulus of q(.; t)) - 1.
  double worst_margin = 0.0;
  double worst_t = 0.0;
  int samples = 0;
};

/// Default acceptance threshold: associated polynomials whose roots touch the
/// unit circle to rounding level (as p'(z) does at t = 0 for extremal
/// polynomials) still count as zero-free in the open disk.
inline constexpr double kDefaultMarginTol = -kInteriorWitness;

/// Dieudonne's criterion on t_samples equispaced t in [0, pi].
///
/// NOT_UNIVALENT as soon as some q(.; t) has a root of modulus below
/// 1 - 1e-9 (witness = smallest such t). Otherwise UNIVALENT_SAMPLED when
/// every sampled minimum root modulus is >= 1 + margin_tol, else UNCERTAIN.
/// Samples whose zero count is degenerate also make the result UNCERTAIN.
///
/// Throws NormalizationError for unnormalized p and ConfigError when
/// t_samples < 64 * degree(p).
UnivalenceVerdict dieudonne_check(const ComplexPolynomial& p, int t_samples,
                                  double margin_tol = kDefaultMarginTol);

/// f(z) = z - 4/(3n-1) z^n + (n+1)/((2n-1)(3n-1)) z^(2n-1).
ComplexPolynomial family_poly(int n);

/// ((2n-1)(3n^2+2n-1)/(n+1)^2)^(1/(2n-2)), the common modulus of all zeros of
/// family_poly(n)(z) / z.
double family_root_modulus(int n);

/// Both sides in extended precision: for n <= 100 the terms reach ~1e7, where
/// double rounding alone exceeds 1e-10.
struct IdentitySides {
  long double lhs = 0.0L;
  long double rhs = 0.0L;
};

/// lhs = 2n(cos th - 1)[(3n^2-2n+1) cos th - 2(2n-1)] + 3n(n-1)^2 sin^2 th,
/// rhs = n(n+1)(3n-1)(cos th - 1)^2.
IdentitySides starlike_identity(int n, double theta);

/// Re(z f'(z)/f(z)) >= -1e-10 at boundary_samples points of |z| = 1.
///
/// Requires f(0) = 0, f'(0) != 0 (NormalizationError) and every zero of
/// f(z)/z to have modulus > 1 + 1e-9 (PoleError), so that z f'/f is analytic
/// on the closed disk. worst_margin is the smallest sampled real part.
trig::Verdict starlike_check(const ComplexPolynomial& f, int boundary_samples);

/// 4096 * degree(f), at least 4096.
int default_boundary_samples(const ComplexPolynomial& f);

}  // namespace bombieri::univalence
