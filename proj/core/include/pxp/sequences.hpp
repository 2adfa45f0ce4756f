#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace pxp {

using SymbolSequence = std::vector<int>;  // application order over {1, 2}

// 1 + parity of the set bits of n.
int thue_morse_symbol(std::uint64_t n);
SymbolSequence thue_morse_prefix(std::size_t m);
// Level K has length 2^(K-1): [1], [1,2], [1,2,2,1], ...
SymbolSequence thue_morse_level(int level);

// w_1 = [1], w_2 = [1,2], w_K = w_(K-1) ++ w_(K-2).
SymbolSequence fibonacci_level(int level);
SymbolSequence fibonacci_prefix(std::size_t m);
// F_1 = 1, F_2 = 2, F_K = F_(K-1) + F_(K-2): the length of level K.
std::uint64_t fibonacci_length(int level);

// splitmix64 finaliser; used to derive independent per-cell streams.
std::uint64_t mix_seed(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// Seeded generator whose draws do not depend on the standard library's
// distribution implementations.
class DriveRng {
 public:
  explicit DriveRng(std::uint64_t seed) : engine_(seed) {}

  int sign() { return (engine_() >> 63) ? 1 : -1; }
  int symbol() { return 1 + static_cast<int>(engine_() >> 63); }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform_pm1() { return 2.0 * unit() - 1.0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pxp
