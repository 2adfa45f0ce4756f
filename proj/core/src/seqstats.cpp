#include "pxp/seqstats.hpp"

#include <string>
#include <thread>
#include <vector>

#include "pxp/error.hpp"

namespace pxp {

ReductionReport reduce_sequence(const SymbolSequence& seq) {
  ReductionReport report;
  report.input_length = seq.size();
  for (int s : seq) {
    if (s != 1 && s != 2) throw ValidationError("reduce_sequence: symbols must be 1 or 2");
  }
  std::size_t i = 0;
  const std::size_t n = seq.size();
  while (i < n) {
    if (i + 1 == n) {
      report.reduced.push_back(seq[i]);
      ++i;
    } else if (seq[i] == seq[i + 1]) {
      report.reduced.push_back(seq[i]);
      ++i;
    } else {
      i += 2;
    }
  }
  return report;
}

namespace {

// Same recursion on the bits of `mask` (bit i = symbol i).
unsigned reduced_length_of_mask(std::uint32_t mask, int n) {
  unsigned kept = 0;
  int i = 0;
  while (i < n) {
    if (i + 1 == n) {
      ++kept;
      ++i;
    } else if (((mask >> i) & 1u) == ((mask >> (i + 1)) & 1u)) {
      ++kept;
      ++i;
    } else {
      i += 2;
    }
  }
  return kept;
}

}  // namespace

Rational avg_reduced_length_bruteforce(int n, unsigned threads) {
  if (n < 1 || n > kMaxBruteForceLength) {
    throw ValidationError("avg_reduced_length_bruteforce: N=" + std::to_string(n) +
                          " outside [1, " + std::to_string(kMaxBruteForceLength) + "]");
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, 64));
  std::vector<std::uint64_t> partial(workers, 0);
  auto block = [&](unsigned w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    std::uint64_t acc = 0;
    for (std::uint64_t m = begin; m < end; ++m) {
      acc += reduced_length_of_mask(static_cast<std::uint32_t>(m), n);
    }
    partial[w] = acc;
  };
  if (workers == 1) {
    block(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(block, w);
  }
  std::uint64_t sum = 0;
  for (auto p : partial) sum += p;
  return Rational(boost::multiprecision::cpp_int(sum), boost::multiprecision::cpp_int(total));
}

Rational avg_reduced_length_closed(int n) {
  if (n < 2) throw ValidationError("avg_reduced_length_closed: N must be at least 2");
  const boost::multiprecision::cpp_int pow2 = boost::multiprecision::cpp_int(1) << n;
  const Rational half_power(n % 2 == 0 ? 1 : -1, pow2);  // (-1/2)^N
  return Rational(n, 3) + Rational(4, 9) * (Rational(1) - half_power);
}

std::string_view to_string(SequenceFamily family) {
  switch (family) {
    case SequenceFamily::ThueMorse: return "tm";
    case SequenceFamily::Fibonacci: return "fib";
    case SequenceFamily::Periodic: return "periodic";
    case SequenceFamily::Random: return "random";
  }
  return "?";
}

std::optional<SequenceFamily> parse_family(std::string_view token) {
  for (auto f : {SequenceFamily::ThueMorse, SequenceFamily::Fibonacci, SequenceFamily::Periodic,
                 SequenceFamily::Random}) {
    if (to_string(f) == token) return f;
  }
  return std::nullopt;
}

SymbolSequence family_sequence(SequenceFamily family, int level_or_length, std::uint64_t seed) {
  if (level_or_length < 1) throw ValidationError("sequence level/length must be positive");
  switch (family) {
    case SequenceFamily::ThueMorse: return thue_morse_level(level_or_length);
    case SequenceFamily::Fibonacci: return fibonacci_level(level_or_length);
    case SequenceFamily::Periodic: return SymbolSequence(static_cast<std::size_t>(level_or_length), 1);
    case SequenceFamily::Random: {
      DriveRng rng(seed);
      SymbolSequence out(static_cast<std::size_t>(level_or_length));
      for (int& s : out) s = rng.symbol();
      return out;
    }
  }
  throw ValidationError("unknown sequence family");
}

ReductionReport protocol_reduced_lengths(SequenceFamily family, int level_or_length,
                                         std::uint64_t seed) {
  return reduce_sequence(family_sequence(family, level_or_length, seed));
}

}  // namespace pxp
