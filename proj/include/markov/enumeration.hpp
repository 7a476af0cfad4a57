#pragma once

#include <cstdint>
#include <span>

#include "markov/errors.hpp"

namespace markov {

// Brute-force operations refuse to enumerate more than this many sequences.
inline constexpr std::uint64_t kEnumerationCap = 1'000'000;

namespace detail {

// base^length with saturation, so oversize requests still report a count.
inline std::uint64_t saturating_pow(std::uint64_t base, int length) {
  std::uint64_t count = 1;
  for (int i = 0; i < length; ++i) {
    if (base != 0 && count > UINT64_MAX / base) return UINT64_MAX;
    count *= base;
  }
  return count;
}

// Number of length-`length` sequences over `base` symbols, or
// EnumerationTooLarge if it exceeds `cap`.
inline std::uint64_t checked_sequence_count(int base, int length,
                                            std::uint64_t cap) {
  std::uint64_t count = saturating_pow(static_cast<std::uint64_t>(base),
                                       length);
  if (count > cap) throw EnumerationTooLarge(count, cap);
  return count;
}

// Decodes `rank` into the rank-th sequence in lexicographic order, first
// element most significant. This is the fixed enumeration order shared by the
// serial and parallel engines.
inline void sequence_from_rank(std::uint64_t rank, int base,
                               std::span<int> out) {
  for (int t = static_cast<int>(out.size()) - 1; t >= 0; --t) {
    out[t] = static_cast<int>(rank % base);
    rank /= base;
  }
}

}  // namespace detail

}  // namespace markov
