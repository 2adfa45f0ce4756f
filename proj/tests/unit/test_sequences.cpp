#include <doctest.h>

#include <bit>
#include <set>

#include "pxp/sequences.hpp"

using namespace pxp;

namespace {

// Level K+1 = level K followed by its complement.
SymbolSequence tm_by_doubling(int level) {
  SymbolSequence s{1};
  for (int k = 1; k < level; ++k) {
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i) s.push_back(3 - s[i]);
  }
  return s;
}

}  // namespace

TEST_SUITE("sequences") {
  TEST_CASE("Thue-Morse levels match the doubling construction") {
    for (int K = 1; K <= 14; ++K) {
      CAPTURE(K);
      CHECK(thue_morse_level(K) == tm_by_doubling(K));
      CHECK(thue_morse_level(K).size() == (std::size_t{1} << (K - 1)));
    }
    CHECK(thue_morse_level(3) == SymbolSequence{1, 2, 2, 1});
  }

  TEST_CASE("Thue-Morse symbol is one plus the bit parity") {
    for (std::uint64_t n = 0; n < 5000; ++n) CHECK(thue_morse_symbol(n) == 1 + std::popcount(n) % 2);
    const auto prefix = thue_morse_prefix(100);
    for (std::size_t i = 0; i < prefix.size(); ++i) CHECK(prefix[i] == thue_morse_symbol(i));
  }

  TEST_CASE("Fibonacci words concatenate and have Fibonacci lengths") {
    CHECK(fibonacci_level(1) == SymbolSequence{1});
    CHECK(fibonacci_level(2) == SymbolSequence{1, 2});
    CHECK(fibonacci_level(3) == SymbolSequence{1, 2, 1});
    CHECK(fibonacci_level(4) == SymbolSequence{1, 2, 1, 1, 2});
    std::uint64_t a = 1, b = 2;
    for (int K = 3; K <= 25; ++K) {
      const std::uint64_t c = a + b;
      a = b;
      b = c;
      CHECK(fibonacci_length(K) == b);
      CHECK(fibonacci_level(K).size() == b);
    }
    for (int K = 3; K <= 15; ++K) {
      SymbolSequence joined = fibonacci_level(K - 1);
      const auto tail = fibonacci_level(K - 2);
      joined.insert(joined.end(), tail.begin(), tail.end());
      CHECK(fibonacci_level(K) == joined);
    }
    const auto prefix = fibonacci_prefix(200);
    const auto level = fibonacci_level(12);
    CHECK(std::equal(prefix.begin(), prefix.end(), level.begin()));
  }

  TEST_CASE("seeded streams are reproducible and distinct") {
    DriveRng a(42), b(42), c(43);
    bool differs = false;
    for (int i = 0; i < 64; ++i) {
      const double x = a.unit();
      CHECK(x == b.unit());
      CHECK(x >= 0.0);
      CHECK(x < 1.0);
      differs |= x != c.unit();
    }
    CHECK(differs);
    std::set<std::uint64_t> seeds;
    for (std::uint64_t k = 0; k < 1000; ++k) seeds.insert(derive_seed(9, k));
    CHECK(seeds.size() == 1000);
    CHECK(derive_seed(9, 3) == derive_seed(9, 3));
  }

  TEST_CASE("property: signs and symbols take their two values evenly") {
    DriveRng rng(5);
    int plus = 0, two = 0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
      const int s = rng.sign();
      CHECK((s == 1 || s == -1));
      plus += s == 1;
      const int y = rng.symbol();
      CHECK((y == 1 || y == 2));
      two += y == 2;
    }
    CHECK(std::abs(plus - n / 2) < 500);
    CHECK(std::abs(two - n / 2) < 500);
  }
}
