#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "qosc/errors.hpp"
#include "qosc/qcalc.hpp"

using namespace qosc;

TEST_CASE("q-numbers at a root of unity match the geometric sum") {
  for (int order : {2, 3, 4, 5, 7, 12}) {
    const QParameter p = q_from_root(order);
    for (int x = 0; x <= 2 * order + 1; ++x) {
      CHECK(std::abs(q_number(p, x) - oracle::qnum(oracle::root_q(order), x)) < 1e-12);
    }
  }
}

TEST_CASE("[N] and [N]! vanish exactly at order N") {
  for (int order : {2, 3, 5, 7}) {
    const QParameter p = q_from_root(order);
    CHECK(q_number(p, order) == complex{0.0, 0.0});
    CHECK(q_factorial(p, order) == complex{0.0, 0.0});
    CHECK(q_factorial(p, order + 3) == complex{0.0, 0.0});
    CHECK(std::abs(q_factorial(p, order - 1)) > 1e-6);
  }
}

TEST_CASE("real q: [x] and [n]! against closed forms") {
  for (double q : {0.3, 0.5, 0.9}) {
    const QParameter p = q_real(q);
    for (int x = 0; x <= 12; ++x) {
      const double closed = (std::pow(q, x) - 1.0) / (q - 1.0);
      CHECK(std::abs(q_number(p, x) - closed) < 1e-12 * std::max(1.0, closed));
    }
  }
  CHECK(std::abs(q_factorial(q_real(0.5), 3) - 2.625) < 1e-15);
  CHECK(q_number(q_real(0.5), -1).real() == doctest::Approx(-2.0));
}

TEST_CASE("q-exponential satisfies its difference equation") {
  for (double q : {0.3, 0.5, 0.9}) {
    const QParameter p = q_real(q);
    for (double x : {0.1, 0.5, 1.0}) {
      // (e_q(x) - e_q(qx)) / ((1-q) x) = e_q(x)
      const complex lhs = (q_exponential(p, x) - q_exponential(p, q * x)) / ((1.0 - q) * x);
      CHECK(std::abs(lhs - q_exponential(p, x)) < 1e-10);
    }
  }
  CHECK(std::abs(q_exponential(q_real(0.5), 0.0) - 1.0) < 1e-15);
}

TEST_CASE("q-exponential is rejected at a root of unity") {
  CHECK_THROWS_AS(q_exponential(q_from_root(5), 1.0), Error);
}

TEST_CASE("Jackson integral of x^m over [0,1] is 1/[m+1]") {
  for (double q : {0.3, 0.5, 0.9}) {
    const QParameter p = q_real(q);
    for (int m = 0; m <= 6; ++m) {
      const complex v = jackson_integral(p, [m](double x) { return complex{std::pow(x, m), 0.0}; },
                                         1.0, 2000);
      const double expected = (1.0 - q) / (1.0 - std::pow(q, m + 1));
      CHECK(std::abs(v - expected) < 1e-10);
    }
  }
}

TEST_CASE("Jackson integral reports a non-finite integrand") {
  CHECK_THROWS_AS(
      jackson_integral(q_real(0.5), [](double x) { return complex{1.0 / (x - 0.5), 0.0}; }, 1.0),
      Error);
}

TEST_CASE("half powers square to q and close after 2N steps") {
  for (int order : {2, 3, 5, 7}) {
    const QParameter p = q_from_root(order);
    CHECK(std::abs(half_power(p, 1) - oracle::root_w(order)) < 1e-15);
    CHECK(std::abs(half_power(p, 2) - p.q()) < 1e-15);
    CHECK(half_power(p, 2 * order) == complex{1.0, 0.0});
    for (int m = -3 * order; m <= 3 * order; ++m) {
      CHECK(std::abs(half_power(p, m) * half_power(p, -m) - 1.0) < 1e-15);
    }
  }
  const QParameter r = q_real(0.25);
  CHECK(half_power(r, 1).real() == doctest::Approx(0.5));
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(q_from_root(1), Error);
  CHECK_THROWS_AS(q_real(1.0), Error);
  CHECK_THROWS_AS(q_real(0.0), Error);
  CHECK_THROWS_AS(q_real(-0.5), Error);
  CHECK_THROWS_AS(q_factorial(q_real(0.5), -1), Error);
}

TEST_CASE("unit_root uses exact values on quarter turns") {
  CHECK(unit_root(1, 4) == complex{0.0, 1.0});
  CHECK(unit_root(2, 4) == complex{-1.0, 0.0});
  CHECK(unit_root(3, 4) == complex{0.0, -1.0});
  CHECK(unit_root(-1, 4) == complex{0.0, -1.0});
  CHECK(unit_root(1, 6) == std::conj(unit_root(5, 6)));
}

TEST_CASE("Jackson truncation bounds the geometric tail") {
  CHECK(jackson_truncation(q_real(0.3), 1.0 / 0.7) == kDefaultTruncation);
  const QParameter p = q_real(0.9);
  const int k = jackson_truncation(p, 10.0);
  CHECK(10.0 * std::pow(0.9, k) <= 1e-14);
  CHECK(10.0 * std::pow(0.9, k - 1) > 1e-14);
  CHECK_THROWS_AS(jackson_truncation(q_from_root(5), 1.0), Error);
}
