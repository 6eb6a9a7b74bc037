#include <doctest.h>

#include "oracle.hpp"
#include "qosc/bargmann.hpp"
#include "qosc/cyclic.hpp"
#include "qosc/errors.hpp"
#include "qosc/fock.hpp"
#include "qosc/virasoro.hpp"

using namespace qosc;

TEST_CASE("l_m is abar^{m+1} a and L_m removes the scale product") {
  const RepAssignment rep = build_fock_rep(2, 5);
  const Matrix& a = rep.at(sym::a(1)).matrix;
  const Matrix& abar = rep.at(sym::abar(1)).matrix;
  CHECK(oracle::distance(build_l(rep, 1, 2), abar * abar * abar * a) < 1e-14);
  CHECK(oracle::distance(build_l(rep, 1, -1), a) < 1e-15);
  const Matrix scale = rep.at(sym::scale(1)).matrix * rep.at(sym::scale(2)).matrix;
  CHECK(oracle::distance(scale_product(rep, 1), scale) < 1e-15);
  CHECK(oracle::distance(scale * build_L(rep, 1, 1), build_l(rep, 1, 1)) < 1e-14);
}

TEST_CASE("rescaling round trip") {
  const RepAssignment rep = build_fock_rep(2, 5);
  for (int i = 1; i <= 2; ++i) {
    for (int m = -1; m <= 3; ++m) {
      CHECK(oracle::distance(l_from_L(rep, i, build_L(rep, i, m)), build_l(rep, i, m)) < 1e-12);
    }
  }
}

TEST_CASE("negative generators need an invertible abar") {
  const RepAssignment fock = build_fock_rep(1, 3);
  CHECK_THROWS_AS(build_l(fock, 1, -2), Error);
  const auto cyclic = build_cyclic_rep(q_from_root(5), 1, ExponentMode::Linear);
  CHECK_NOTHROW(build_l(cyclic.rep, 1, -3));
}

TEST_CASE("q-Virasoro relations hold on Fock for one and two modes") {
  for (int n : {1, 2}) {
    const RepAssignment rep = build_fock_rep(n, 5);
    const auto result = check_virasoro(rep, {-1, 0, 1, 2, 3}, 1e-9);
    CHECK_FALSE(result.records.empty());
    for (const auto& rec : result.records) CHECK_MESSAGE(rec.passed, rec.relation_id);
    if (n == 2) CHECK_FALSE(result.braiding.empty());
  }
}

TEST_CASE("q-Virasoro relations hold on the conforming cyclic realization") {
  const auto real = build_cyclic_rep(q_from_root(5), 1, ExponentMode::Linear);
  for (const auto& rec : check_virasoro(real.rep, {-1, 0, 1, 2, 3}, 1e-9).records) {
    CHECK_MESSAGE(rec.passed, rec.relation_id);
  }
}

TEST_CASE("diagonal commutator against an explicit q-number coefficient") {
  // [l_0, l_1] = q^{-1}[1] Q l_1 on a single Fock mode
  const RepAssignment rep = build_fock_rep(1, 5);
  const Matrix l0 = build_l(rep, 1, 0), l1 = build_l(rep, 1, 1);
  const Matrix lhs = l0 * l1 - l1 * l0;
  const complex coeff = 1.0 / oracle::root_q(5);
  const Matrix rhs = coeff * (rep.at(sym::scale(1)).matrix * l1);
  CHECK(oracle::distance(lhs, rhs) < 1e-13);
}

TEST_CASE("classical limit residual shrinks linearly in 1-q") {
  const auto rows = classical_limit_probe({0.9, 0.99, 0.999}, 10, 2);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].residual > rows[1].residual);
  CHECK(rows[1].residual > rows[2].residual);
  const double ratio = rows[1].residual / rows[2].residual;
  CHECK(ratio >= 5.0);
  CHECK(ratio <= 20.0);
}

TEST_CASE("default windows respect nilpotency") {
  CHECK(default_window(build_fock_rep(1, 5)) == std::vector<int>{-1, 0, 1, 2, 3});
  CHECK(default_window(build_fock_rep(1, 3)) == std::vector<int>{-1, 0, 1});
  CHECK(default_window(build_bargmann_rep(q_real(0.5), 1, 8)).back() == 3);
}
