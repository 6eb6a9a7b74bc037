#include <doctest.h>

#include "oracle.hpp"
#include "qosc/cyclic.hpp"
#include "qosc/errors.hpp"
#include "qosc/relations.hpp"

using namespace qosc;

TEST_CASE("shift and clock operators satisfy their commutation table") {
  for (int n : {1, 2, 3}) {
    for (int order : {2, 3, 5}) {
      const QParameter p = q_from_root(order);
      const RepAssignment ops = build_shift_ops(p, n);
      for (const auto& rec : check_suite(ops, relation_suite_shift(p, n), 1e-12)) {
        CHECK_MESSAGE(rec.passed, rec.relation_id);
      }
    }
  }
}

TEST_CASE("single-mode clock is diagonal q^k and shift is a permutation") {
  const QParameter p = q_from_root(5);
  const RepAssignment ops = build_shift_ops(p, 1);
  const Matrix& g = ops.at(shift_g(1)).matrix;
  const Matrix& h = ops.at(shift_h(1)).matrix;
  const Matrix gh = g * h;
  const Matrix hg = h * g;
  CHECK(oracle::distance(matrix_power(h, 5), Matrix::identity(5)) < 1e-14);
  CHECK(oracle::distance(matrix_power(g, 5), Matrix::identity(5)) < 1e-13);
  CHECK(oracle::distance(hg, p.q() * gh) < 1e-14);
}

TEST_CASE("exactly one exponent mode realizes a single mode") {
  for (int order : {2, 3, 5}) {
    const auto outcomes = compare_exponent_modes(q_from_root(order), 1, all_exponent_modes());
    int winners = 0;
    for (const auto& o : outcomes) {
      if (o.conforms) {
        ++winners;
        CHECK(o.mode == ExponentMode::Linear);
      }
    }
    CHECK(winners == 1);
  }
}

TEST_CASE("the conforming single-mode realization has abar^N = 1 and a^N = 0") {
  for (int order : {2, 3, 5}) {
    const auto real = build_cyclic_rep(q_from_root(order), 1, ExponentMode::Linear);
    CHECK(real.conforms);
    const Matrix& abar = real.rep.at(sym::abar(1)).matrix;
    const Matrix& a = real.rep.at(sym::a(1)).matrix;
    CHECK(oracle::distance(matrix_power(abar, order), Matrix::identity(real.rep.dim())) < 1e-12);
    CHECK(max_abs(matrix_power(a, order)) < 1e-12);
    OscillatorSuiteOptions opts = default_oscillator_options(1, order);
    opts.number_operators = false;
    for (const auto& rec : check_suite(real.rep, relation_suite_oscillator(real.rep.params(), opts))) {
      if (rec.expected) CHECK_MESSAGE(rec.passed, rec.relation_id);
    }
  }
}

TEST_CASE("no mode realizes the cross-mode exchange for two or more modes") {
  for (int order : {3, 5}) {
    for (const auto& o : compare_exponent_modes(q_from_root(order), 2, all_exponent_modes())) {
      CHECK_FALSE(o.conforms);
    }
  }
}

TEST_CASE("mode names parse and invalid input is rejected") {
  for (auto m : all_exponent_modes()) CHECK(parse_exponent_mode(to_string(m)) == m);
  CHECK_THROWS_AS(parse_exponent_mode("quadratic"), Error);
  CHECK_THROWS_AS(build_shift_ops(q_real(0.5), 1), Error);
}
