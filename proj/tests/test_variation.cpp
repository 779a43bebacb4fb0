#include <cmath>

#include "doctest.h"

#include "bombieri/errors.hpp"
#include "bombieri/variation.hpp"

using namespace bombieri;
using namespace bombieri::variation;

namespace {

// Quadrature oracles for the two closed-form integrals, straight from their
// definitions with phi(u) = 1 - u, phi'(v) = -1.
double inner_oracle(double w) {
  return integrate([w](double u) { return (1.0 - u) / std::sqrt(1.0 + 4.0 * u * w); }, 0.0, 1.0, {1e-13, 40});
}

double double_oracle(double w) {
  return integrate(
      [w](double u) {
        const double inner =
            integrate([w](double v) { return -1.0 / std::sqrt(1.0 + 4.0 * v * w); }, 0.0, u, {1e-14, 40});
        return (1.0 - u) / std::sqrt(1.0 + 4.0 * u * w) * inner;
      },
      0.0, 1.0, {1e-13, 40});
}

}  // namespace

TEST_CASE("integrate handles polynomials and smooth functions") {
  CHECK(integrate([](double x) { return x * x; }, 0.0, 3.0) == doctest::Approx(9.0).epsilon(1e-14));
  CHECK(integrate([](double x) { return std::exp(x); }, 0.0, 1.0) == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
  CHECK(integrate([](double) { return 1.0; }, 0.5, 0.5) == 0.0);
  CHECK_THROWS_AS(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, {1e-12, 3}), ConvergenceError);
  CHECK_THROWS_AS(integrate([](double x) { return x; }, 0.0, 1.0, {0.0, 30}), ConfigError);
  CHECK_THROWS_AS(integrate([](double x) { return x; }, 0.0, 1.0, {1e-10, 30, 21}), ConfigError);
}

TEST_CASE("inner integral closed form") {
  CHECK(inner_integral_closed(2.0) == doctest::Approx(7.0 / 24.0).epsilon(1e-15));
  CHECK(inner_integral_closed(0.0) == 0.5);
  CHECK(inner_integral_closed(1e-9) == doctest::Approx(0.5).epsilon(1e-8));
  for (double w : {-0.2, -0.1, -0.03, 0.01, 0.049, 0.051, 0.5, 1.0, 2.0, 10.0}) {
    CHECK(std::abs(inner_integral_closed(w) - inner_oracle(w)) < 1e-12);
  }
  CHECK_THROWS_AS(inner_integral_closed(-0.25), DomainError);
}

TEST_CASE("double integral closed form") {
  CHECK(double_integral_closed(2.0) == doctest::Approx(-5.0 / 96.0).epsilon(1e-14));
  CHECK(double_integral_closed(0.0) == doctest::Approx(-1.0 / 6.0).epsilon(1e-15));
  CHECK(double_integral_closed(1.0) == doctest::Approx((5.0 * std::sqrt(5.0) - 13.0) / 24.0).epsilon(1e-14));
  for (double w : {-0.2, -0.1, -0.03, 1e-5, 0.01, 0.049, 0.051, 0.5, 1.0, 2.0, 10.0}) {
    CHECK(std::abs(double_integral_closed(w) - double_oracle(w)) < 1e-12);
  }
}

TEST_CASE("series and closed branches meet at the switch point") {
  const double below = std::nextafter(kSeriesSwitch, 0.0);
  CHECK(std::abs(inner_integral_closed(below) - inner_integral_closed(kSeriesSwitch)) < 1e-13);
  CHECK(std::abs(double_integral_closed(below) - double_integral_closed(kSeriesSwitch)) < 1e-12);
  CHECK(std::abs(double_integral_closed(-below) - double_integral_closed(-kSeriesSwitch)) < 1e-12);
}

TEST_CASE("Q closed form") {
  CHECK(Q_closed(0.0) == 0.0);
  CHECK(Q_closed(2.0) == doctest::Approx(-3.0).epsilon(1e-15));
  CHECK(Q_closed(-0.25) == 0.0);
  CHECK_THROWS_AS(Q_closed(-0.3), DomainError);
}

TEST_CASE("assembled second variation equals the closed form") {
  for (double w : {-0.2, -0.1, -0.01, 0.001, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    CHECK(std::abs(Q_assembled(w) - Q_closed(w)) <= 1e-10);
  }
}

TEST_CASE("Q_numeric reproduces the closed form") {
  for (double w : {-0.2, -0.1, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    CHECK(std::abs(Q_numeric(w, PhiWeight::linear()) - Q_closed(w)) <= 1e-8);
  }
  CHECK(Q_numeric(0.7, PhiWeight::linear(0.0)) == 0.0);
  CHECK_THROWS_AS(Q_numeric(-0.25, PhiWeight::linear()), DomainError);
}

TEST_CASE("Q_numeric scales quadratically in the weight") {
  const double base = Q_numeric(1.3, PhiWeight::linear());
  for (double c : {-2.0, 0.5, 3.0}) {
    CHECK(std::abs(Q_numeric(1.3, PhiWeight::linear().scaled(c)) - c * c * base) <= 1e-9);
  }
  // Also for a non-linear tabulated weight.
  const auto tab = PhiWeight::tabulated({1.0, 0.9, 0.5, 0.4, 0.0});
  const double t1 = Q_numeric(0.8, tab);
  CHECK(std::abs(Q_numeric(0.8, tab.scaled(3.0)) - 9.0 * t1) <= 1e-9);
}

TEST_CASE("tabulated weight interpolates") {
  const auto w = PhiWeight::tabulated({1.0, 0.0});
  CHECK(w(0.25) == doctest::Approx(0.75));
  CHECK(w.at_zero() == 1.0);
  // Sampling 1 - u reproduces the linear weight exactly.
  CHECK(std::abs(Q_numeric(2.0, w) - Q_closed(2.0)) <= 1e-8);
  CHECK_THROWS_AS(PhiWeight::tabulated({1.0}), ConfigError);
}

TEST_CASE("BigRational rounds to nearest") {
  CHECK(BigRational(2, 5).to_double() == 0.4);
  CHECK(BigRational(1, 10).to_double() == 0.1);
  CHECK(BigRational(-7, 3).to_double() == -7.0 / 3.0);
  // Both operands exact in double, so IEEE division is the correctly rounded oracle.
  for (std::int64_t num = -300; num <= 300; num += 7) {
    for (std::int64_t den = 1; den <= 400; den += 3) {
      REQUIRE(BigRational(num, den).to_double() == static_cast<double>(num) / static_cast<double>(den));
    }
  }
  const std::int64_t big = (std::int64_t{1} << 53) + 1;  // not representable
  CHECK(BigRational(big, 3).to_double() == 3002399751580331.0);
  CHECK(BigRational(1, big).to_double() == 1.1102230246251564e-16);
}

TEST_CASE("q_n from the series and from the closed form") {
  const auto q = q_series_coefficients(200);
  REQUIRE(q.size() == 199);
  CHECK(q[0] == BigRational(-1, 3));
  CHECK(q[1] == BigRational(-2));
  CHECK(q[2] == BigRational(-19, 3));
  CHECK(q_n_closed(10) == BigRational(-163));
  for (int n = 2; n <= 200; ++n) REQUIRE(q[n - 2] == q_n_closed(n));
  CHECK_THROWS_AS(q_series_coefficients(1), RangeError);
}

TEST_CASE("Leung normalization") {
  CHECK(leung_qn(2) == BigRational(-4, 3));
  CHECK(leung_qn(3) == BigRational(-8));
  for (int n = 2; n <= 100; ++n) REQUIRE(leung_qn(n) / q_n_closed(n) == BigRational(4));
}

TEST_CASE("sigma ratio bound") {
  auto b = sigma_ratio_bound(3, 2);
  CHECK(b.ratio == BigRational(1, 6));
  CHECK(b.expected == BigRational(1, 4));
  CHECK(b.strict);
  b = sigma_ratio_bound(4, 2);
  CHECK(b.ratio == BigRational(1, 19));
  CHECK(b.expected == BigRational(1, 10));
  CHECK(b.strict);
  for (int m = 3; m <= 100; ++m) {
    for (int n = 2; n < m; ++n) REQUIRE(sigma_ratio_bound(m, n).strict);
  }
  CHECK(sigma32_reference() == doctest::Approx(0.15803).epsilon(1e-4));
  CHECK(sigma32_reference() <= BigRational(1, 6).to_double());
  CHECK_THROWS_AS(sigma_ratio_bound(2, 2), RangeError);
}

TEST_CASE("varphi growth") {
  const auto g = varphi_growth(2.0);
  CHECK(g.value == doctest::Approx(0.5));
  CHECK(g.derivative == doctest::Approx(0.25));
  CHECK(std::abs(varphi_growth((1.0 + std::sqrt(3.0)) / 2.0).derivative) < 1e-15);
  const double h = 1e-5;
  for (double x : {2.0, 5.0, 10.0}) {
    const double fd = (varphi_growth(x + h).value - varphi_growth(x - h).value) / (2 * h);
    CHECK(std::abs(fd - varphi_growth(x).derivative) <= 1e-6 * std::abs(varphi_growth(x).derivative));
  }
  for (double x = 1.4; x < 100.0; x += 0.37) CHECK(varphi_growth(x).derivative > 0.0);
}
