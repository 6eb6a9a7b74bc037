#include <doctest.h>

#include "oracle.hpp"
#include "qosc/errors.hpp"
#include "qosc/fock.hpp"
#include "qosc/relations.hpp"

using namespace qosc;

TEST_CASE("Fock matrices match the entrywise construction") {
  for (int n : {1, 2, 3}) {
    for (int order : {2, 3, 5}) {
      const RepAssignment rep = build_fock_rep(n, order);
      for (int i = 1; i <= n; ++i) {
        CHECK(oracle::distance(rep.at(sym::a(i)).matrix, oracle::fock_op(n, order, i, false)) < 1e-14);
        CHECK(oracle::distance(rep.at(sym::abar(i)).matrix, oracle::fock_op(n, order, i, true)) < 1e-14);
      }
    }
  }
}

TEST_CASE("Q_i = q^{N_i} and N_i counts occupation") {
  const RepAssignment rep = build_fock_rep(2, 5);
  const complex q = oracle::root_q(5);
  for (std::size_t r = 0; r < rep.dim(); ++r) {
    const auto d = oracle::digits(r, 2, 5);
    for (int i = 1; i <= 2; ++i) {
      const int k = d[static_cast<std::size_t>(i - 1)];
      CHECK(rep.at(sym::number(i)).matrix(r, r) == complex{double(k), 0.0});
      CHECK(std::abs(rep.at(sym::scale(i)).matrix(r, r) - std::pow(q, k)) < 1e-14);
    }
  }
}

TEST_CASE("the full oscillator suite holds on Fock except documented abar^N readings") {
  for (int n : {1, 2}) {
    for (int order : {2, 3, 4, 5}) {
      const RepAssignment rep = build_fock_rep(n, order);
      for (const auto& rec : check_suite(rep, relation_suite_oscillator(rep.params(), n, order))) {
        if (rec.expected) {
          CHECK_MESSAGE(rec.passed, rec.relation_id);
        }
      }
    }
  }
}

TEST_CASE("abar^N vanishes on the truncated Fock space") {
  const RepAssignment rep = build_fock_rep(1, 5);
  CHECK(max_abs(matrix_power(rep.at(sym::abar(1)).matrix, 5)) < 1e-14);
  CHECK(max_abs(matrix_power(rep.at(sym::a(1)).matrix, 5)) < 1e-14);
  CHECK(max_abs(matrix_power(rep.at(sym::a(1)).matrix, 4)) > 0.1);
}

TEST_CASE("normalized states land on basis vectors up to a phase of modulus one") {
  const RepAssignment rep = build_fock_rep(2, 5);
  for (std::size_t r = 0; r < rep.dim(); ++r) {
    const auto d = oracle::digits(r, 2, 5);
    const FockState s = build_state(rep, FockIndex{d});
    CHECK(s.rank == r);
    CHECK(std::abs(std::abs(s.phase) - 1.0) < 1e-12);
    for (std::size_t k = 0; k < s.vector.size(); ++k) {
      if (k != r) CHECK(std::abs(s.vector[k]) < 1e-14);
    }
  }
}

TEST_CASE("invalid Fock parameters") {
  CHECK_THROWS_AS(build_fock_rep(0, 5), Error);
  CHECK_THROWS_AS(build_fock_rep(4, 9), Error);
  const RepAssignment rep = build_fock_rep(1, 3);
  CHECK_THROWS_AS(build_state(rep, FockIndex{{3}}), Error);
}
