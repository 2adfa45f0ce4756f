#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "pxp/sequences.hpp"

namespace pxp {

using Rational = boost::multiprecision::cpp_rational;

struct ReductionReport {
  std::size_t input_length = 0;
  SymbolSequence reduced;

  std::size_t reduced_length() const { return reduced.size(); }
};

// Scan from the front: an equal leading pair keeps its first symbol and
// moves on by one; an unequal pair cancels and moves on by two.
ReductionReport reduce_sequence(const SymbolSequence& seq);

inline constexpr int kMaxBruteForceLength = 20;

// Exact mean reduced length over all 2^N sequences.
Rational avg_reduced_length_bruteforce(int n, unsigned threads = 1);

// N/3 + (4/9)(1 - (-1/2)^N).
Rational avg_reduced_length_closed(int n);

enum class SequenceFamily { ThueMorse, Fibonacci, Periodic, Random };

std::string_view to_string(SequenceFamily family);
std::optional<SequenceFamily> parse_family(std::string_view token);

// Thue-Morse and Fibonacci take a level K; periodic and random a length N.
SymbolSequence family_sequence(SequenceFamily family, int level_or_length, std::uint64_t seed = 0);
ReductionReport protocol_reduced_lengths(SequenceFamily family, int level_or_length,
                                         std::uint64_t seed = 0);

}  // namespace pxp
