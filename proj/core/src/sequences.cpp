#include "pxp/sequences.hpp"

#include <bit>
#include <string>

#include "pxp/error.hpp"

namespace pxp {

int thue_morse_symbol(std::uint64_t n) { return 1 + (std::popcount(n) & 1); }

SymbolSequence thue_morse_prefix(std::size_t m) {
  SymbolSequence out(m);
  for (std::size_t n = 0; n < m; ++n) out[n] = thue_morse_symbol(n);
  return out;
}

SymbolSequence thue_morse_level(int level) {
  if (level < 1 || level > 40) throw ValidationError("Thue-Morse level must be in [1, 40]");
  return thue_morse_prefix(std::size_t{1} << (level - 1));
}

std::uint64_t fibonacci_length(int level) {
  if (level < 1 || level > 90) throw ValidationError("Fibonacci level must be in [1, 90]");
  std::uint64_t prev = 1, cur = 2;
  if (level == 1) return prev;
  for (int k = 2; k < level; ++k) {
    const std::uint64_t next = cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

SymbolSequence fibonacci_level(int level) {
  if (level < 1 || level > 40) throw ValidationError("Fibonacci level must be in [1, 40]");
  SymbolSequence older{1};
  SymbolSequence newer{1, 2};
  if (level == 1) return older;
  for (int k = 2; k < level; ++k) {
    SymbolSequence next = newer;
    next.insert(next.end(), older.begin(), older.end());
    older = std::move(newer);
    newer = std::move(next);
  }
  return newer;
}

SymbolSequence fibonacci_prefix(std::size_t m) {
  // Every level is a prefix of the next, so the shortest covering level suffices.
  int level = 1;
  while (fibonacci_length(level) < m) ++level;
  SymbolSequence word = fibonacci_level(level);
  word.resize(m);
  return word;
}

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix_seed(mix_seed(master) ^ mix_seed(index + 0x632be59bd9b4e019ULL));
}

}  // namespace pxp
