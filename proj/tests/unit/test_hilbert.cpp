#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pxp/error.hpp"
#include "pxp/hilbert.hpp"
#include "pxp/linalg.hpp"

using namespace pxp;

TEST_SUITE("hilbert") {
  TEST_CASE("dimensions follow the recurrences and brute-force filtering") {
    for (int L = 2; L <= 20; ++L) {
      for (bool periodic : {true, false}) {
        const FockBasis basis(L, periodic ? BoundaryCondition::Periodic : BoundaryCondition::Open);
        const auto brute = oracle::filtered_states(L, periodic);
        CAPTURE(L);
        CAPTURE(periodic);
        CHECK(basis.dimension() == oracle::recurrence_dimension(L, periodic));
        REQUIRE(basis.dimension() == brute.size());
        CHECK(basis.states() == brute);
      }
    }
  }

  TEST_CASE("known small dimensions") {
    CHECK(FockBasis(12, BoundaryCondition::Periodic).dimension() == 322);
    CHECK(FockBasis(12, BoundaryCondition::Open).dimension() == 377);
    CHECK(FockBasis(3, BoundaryCondition::Periodic).dimension() == 4);
    CHECK(FockBasis(2, BoundaryCondition::Periodic).dimension() == 3);
  }

  TEST_CASE("index_of inverts state and rejects blockaded masks") {
    const FockBasis basis(10, BoundaryCondition::Periodic);
    for (std::size_t i = 0; i < basis.dimension(); ++i) CHECK(basis.index_of(basis.state(i)) == i);
    CHECK_FALSE(basis.index_of(0b11u).has_value());
    CHECK_FALSE(basis.index_of((1u << 9) | 1u).has_value());
    CHECK(FockBasis(10, BoundaryCondition::Open).index_of((1u << 9) | 1u).has_value());
  }

  TEST_CASE("neighbours and edges") {
    const FockBasis pbc(6, BoundaryCondition::Periodic);
    const FockBasis obc(6, BoundaryCondition::Open);
    CHECK(pbc.left_of(0) == 5);
    CHECK(pbc.right_of(5) == 0);
    CHECK(obc.left_of(0) == -1);
    CHECK(obc.right_of(5) == -1);
    CHECK(pbc.neighbours(0, 5));
    CHECK_FALSE(obc.neighbours(0, 5));
    CHECK(obc.neighbours(2, 3));
  }

  TEST_CASE("labels and magnetisation") {
    const FockBasis basis(4, BoundaryCondition::Open);
    const auto i = basis.index_of(0b0101u).value();
    CHECK(basis.label(i) == "0101");
    CHECK(basis.sz_total(i) == doctest::Approx(0.0));
    CHECK(basis.sz_total(basis.index_of(0u).value()) == doctest::Approx(-4.0));
    const StateVector down = all_down_state(basis);
    CHECK(down.norm() == doctest::Approx(1.0));
    CHECK(std::abs(down(basis.index_of(0u).value())) == doctest::Approx(1.0));
  }

  TEST_CASE("size limits") {
    CHECK_THROWS_AS(FockBasis(1, BoundaryCondition::Periodic), SizeError);
    CHECK_THROWS_AS(FockBasis(25, BoundaryCondition::Open), SizeError);
    CHECK_NOTHROW(FockBasis(kMinChainLength, BoundaryCondition::Open));
  }

  TEST_CASE("property: admissibility agrees with the pairwise definition") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
      const int L = 2 + static_cast<int>(rng() % 19);
      const auto mask = static_cast<Bitmask>(rng() & ((1u << L) - 1));
      const bool periodic = rng() & 1;
      bool ok = true;
      for (int j = 0; j < L; ++j) {
        const int k = (j + 1) % L;
        if (!periodic && k == 0) continue;
        if (((mask >> j) & 1) && ((mask >> k) & 1) && j != k) ok = false;
      }
      CHECK(is_admissible(mask, L, periodic ? BoundaryCondition::Periodic : BoundaryCondition::Open) == ok);
    }
  }

  TEST_CASE("boundary tokens") {
    CHECK(parse_boundary("pbc") == BoundaryCondition::Periodic);
    CHECK(parse_boundary("obc") == BoundaryCondition::Open);
    CHECK_FALSE(parse_boundary("xyz").has_value());
    CHECK(to_string(BoundaryCondition::Open) == "obc");
  }
}
