#include <cmath>
#include <random>

#include "doctest.h"

#include "bombieri/errors.hpp"
#include "bombieri/trig_core.hpp"

using namespace bombieri;
using namespace bombieri::trig;

namespace {

// Independent oracle: the textbook quotient, used only away from its poles.
double direct_quotient(int n, double t) { return std::sin(n * t) / std::sin(t); }

double direct_phi(int m, int n, double t) {
  return (n * std::sin(t) - std::sin(n * t)) / (m * std::sin(t) - std::sin(m * t));
}

// Brute-force minimum of the direct quotient on a fine grid of
// [0.01, pi - 0.01]; closer to the endpoints the quotient cancels badly and the
// exact endpoint limits take over.
double brute_force_min(int m, int n, int points) {
  double best = INFINITY;
  for (int i = 0; i < points; ++i) best = std::min(best, direct_phi(m, n, 0.01 + (kPi - 0.02) * i / (points - 1)));
  return best;
}

}  // namespace

TEST_CASE("kernel_sum examples") {
  CHECK(kernel_sum(2, kPi / 3) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(kernel_sum(3, 0.0) == 3.0);
  // L'Hopital limit at pi, checked against the quotient just off the pole.
  const double left = direct_quotient(4, kPi - 1e-6);
  const double right = direct_quotient(4, kPi + 1e-6);
  CHECK(kernel_sum(4, kPi) == doctest::Approx(-4.0).epsilon(1e-14));
  CHECK(std::abs(kernel_sum(4, kPi) - left) < 1e-8);
  CHECK(std::abs(kernel_sum(4, kPi) - right) < 1e-8);
  CHECK(std::abs(kernel_sum(5, 1.0) - std::sin(5.0) / std::sin(1.0)) < 1e-12);
}

TEST_CASE("kernel_sum matches the quotient wherever sin t is not small") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  for (int trial = 0; trial < 20000; ++trial) {
    const double t = angle(rng);
    if (std::abs(std::sin(t)) <= 1e-3) continue;
    const int n = 1 + trial % 100;
    CHECK(std::abs(kernel_sum(n, t) - direct_quotient(n, t)) <= 1e-10);
  }
}

TEST_CASE("eval_A examples") {
  CHECK(eval_A(2, kPi) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(std::abs(eval_A(3, kPi)) < 1e-25);
  CHECK(eval_A(3, kPi / 2) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(eval_A(7, 0.0) == 0.0);
}

TEST_CASE("eval_A is nonnegative and symmetric") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  for (int n = 2; n <= 100; ++n) {
    for (int trial = 0; trial < 10000; ++trial) {
      const double t = angle(rng);
      const double a = eval_A(n, t);
      REQUIRE(a >= 0.0);
      if (trial % 10 == 0) REQUIRE(std::abs(eval_A(n, 2 * kPi - t) - a) <= 1e-12 * std::max(1.0, a));
    }
  }
}

TEST_CASE("A_n zero classification") {
  for (int n = 2; n <= 100; ++n) {
    const bool odd = n % 2 == 1;
    if (odd) {
      CHECK(eval_A(n, kPi) < 1e-20);
    } else {
      CHECK(eval_A(n, kPi) == doctest::Approx(2.0 * n).epsilon(1e-13));
    }
    CHECK(eval_A(n, 0.0) == 0.0);
    CHECK(eval_A(n, 2 * kPi) < 1e-20);
    for (int i = 0; i <= 2000; ++i) {
      const double t = 1e-2 + (kPi - 2e-2) * i / 2000.0;
      REQUIRE(eval_A(n, t) > 1e-12);
    }
  }
}

TEST_CASE("A_n / (n^3 - n) is non-increasing along steps of two") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> angle(1e-3, kPi - 1e-3);
  for (int trial = 0; trial < 500; ++trial) {
    const double t = angle(rng);
    for (int start = 2; start <= 3; ++start) {
      double prev = INFINITY;
      for (int k = start; k <= 80; k += 2) {
        const double kk = k;
        const double value = eval_A(k, t) / (kk * kk * kk - kk);
        REQUIRE(value <= prev + 1e-12);
        prev = value;
      }
    }
  }
}

TEST_CASE("endpoint limits follow the parity table") {
  auto l = endpoint_limits(3, 2);
  CHECK(l.limit0 == BigRational(1, 4));
  CHECK(l.limit_pi.infinite);
  CHECK(l.limit_pi.to_string() == "inf");

  l = endpoint_limits(4, 3);
  CHECK(l.limit0 == BigRational(2, 5));
  CHECK_FALSE(l.limit_pi.infinite);
  CHECK(l.limit_pi.value == BigRational(0));

  l = endpoint_limits(5, 3);
  CHECK(l.limit0 == BigRational(1, 5));
  CHECK(l.limit_pi.value == BigRational(1, 5));

  l = endpoint_limits(6, 4);
  CHECK(l.limit_pi.value == BigRational(2, 3));

  CHECK_THROWS_AS(endpoint_limits(2, 2), RangeError);
  CHECK_THROWS_AS(endpoint_limits(5, 1), RangeError);
}

TEST_CASE("endpoint limits agree with the quotient near the endpoints") {
  for (int m = 3; m <= 12; ++m) {
    for (int n = 2; n < m; ++n) {
      const auto l = endpoint_limits(m, n);
      CHECK(direct_phi(m, n, 1e-4) == doctest::Approx(l.limit0.to_double()).epsilon(1e-5));
      if (l.limit_pi.infinite) {
        CHECK(direct_phi(m, n, kPi - 1e-4) > 1e5);
      } else {
        CHECK(std::abs(eval_phi(RatioProfile(m, n), kPi - 1e-4) - l.limit_pi.to_double()) < 1e-5);
      }
    }
  }
}

TEST_CASE("eval_phi examples and domain") {
  CHECK(eval_phi(RatioProfile(3, 2), kPi / 2) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(eval_phi(RatioProfile(4, 2), kPi / 2) == doctest::Approx(0.5).epsilon(1e-15));
  // A_n ~ (n^3 - n) t^2 / 6 near 0, so phi_53(1e-4) ~ 24/120 = 0.2.
  CHECK(std::abs(eval_phi(RatioProfile(5, 3), 1e-4) - 0.2) < 1e-7);
  CHECK_THROWS_AS(eval_phi(RatioProfile(3, 2), 0.0), DomainError);
  CHECK_THROWS_AS(eval_phi(RatioProfile(3, 2), kPi), DomainError);
}

TEST_CASE("minimize_B examples") {
  auto r = minimize_B(3, 2);
  CHECK(std::abs(r.value - 0.25) < 1e-12);
  CHECK(r.argmin.endpoint == Endpoint::kZero);
  CHECK(r.grid_points == 1024);

  r = minimize_B(4, 3);
  CHECK(r.value == 0.0);
  CHECK(r.argmin.endpoint == Endpoint::kPi);

  CHECK(std::abs(minimize_B(5, 3).value - 0.2) < 1e-12);
  CHECK(std::abs(minimize_B(4, 2).value - 0.1) < 1e-12);
  CHECK(std::abs(minimize_B(7, 4).value - 5.0 / 28.0) < 1e-12);
  CHECK(minimize_B(40, 3).grid_points == 64 * 40);
}

TEST_CASE("minimize_B agrees with a brute-force grid on the direct quotient") {
  for (auto [m, n] : {std::pair{7, 6}, {9, 8}, {17, 14}, {11, 10}, {6, 5}, {13, 4}}) {
    const double brute = brute_force_min(m, n, 400000);
    const auto r = minimize_B(m, n);
    const auto limits = endpoint_limits(m, n);
    double expected = std::min(brute, limits.limit0.to_double());
    if (!limits.limit_pi.infinite) expected = std::min(expected, limits.limit_pi.to_double());
    CHECK(r.value <= expected + 1e-12);
    CHECK(r.value >= expected - 1e-6);  // grid spacing ~ 8e-6, quadratic error ~ m^2 h^2
  }
}

TEST_CASE("minimize_B interior minima and ties") {
  const auto r = minimize_B(7, 6);
  CHECK(r.argmin.endpoint == Endpoint::kNone);
  CHECK(r.value < 0.625 - 0.05);
  CHECK(r.margin > 0.0);
  // (5,4): an interior minimum at 2pi/3 ties the endpoint value 1/2; the
  // smallest argmin (t = 0) wins.
  const auto tie = minimize_B(5, 4);
  CHECK(tie.argmin.endpoint == Endpoint::kZero);
  CHECK(std::abs(tie.value - 0.5) < 1e-15);
  CHECK(std::abs(tie.margin) < 1e-12);
}

TEST_CASE("minimize_B is deterministic and validates its config") {
  const auto a = minimize_B(23, 18);
  const auto b = minimize_B(23, 18);
  CHECK(a.value == b.value);
  CHECK(a.argmin.t == b.argmin.t);
  CHECK_THROWS_AS(minimize_B(5, 3, {4, 1e-13}), ConfigError);
  CHECK_THROWS_AS(minimize_B(5, 3, {64, 0.0}), ConfigError);
  CHECK_THROWS_AS(minimize_B(3, 3), RangeError);
}

TEST_CASE("minimize_B never exceeds the t -> 0 candidate") {
  for (int m = 3; m <= 30; ++m) {
    for (int n = 2; n < m; ++n) {
      const auto r = minimize_B(m, n);
      REQUIRE(r.value >= 0.0);
      REQUIRE(r.value <= endpoint_limits(m, n).limit0.to_double() + r.refine_tol);
    }
  }
}

TEST_CASE("eval_Phi examples") {
  CHECK(eval_Phi(3, 0.0) == 0.0);
  CHECK(eval_Phi(3, kPi / 2) == doctest::Approx(16.0).epsilon(1e-14));
  for (int N = 3; N <= 40; ++N) {
    CHECK(eval_Phi(N, kPi / 2) >= N * N - 4.0 - 1e-12);
    for (int k = 1; 2 * k < N; ++k) {
      const double tk = 2.0 * kPi * k / N;
      CHECK(eval_Phi(N, tk) == doctest::Approx(3.0 * N * N * std::sin(tk)).epsilon(1e-11));
    }
  }
}

TEST_CASE("check_lemma3") {
  // With an odd grid the midpoint is pi/2, where the two sides are 1/3 and 1/15.
  CHECK(eval_A(2, kPi / 2) / 6.0 == doctest::Approx(1.0 / 3.0));
  CHECK(eval_A(4, kPi / 2) / 60.0 == doctest::Approx(1.0 / 15.0));
  const auto r = check_lemma3(2, 1001);
  CHECK(r.pass);
  CHECK(r.ratio.worst_margin > -kLemma3RatioTol);

  // Odd n: both sides vanish at pi, so the margin there is ~0.
  const auto odd = check_lemma3(3, 10001);
  CHECK(odd.pass);
  CHECK(std::abs(odd.ratio.worst_margin) < 1e-9);

  CHECK_THROWS_AS(check_lemma3(2, 999), ConfigError);
  CHECK_THROWS_AS(check_lemma3(1, 1000), RangeError);
}
