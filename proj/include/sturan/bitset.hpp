#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace sturan::bits {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t n) noexcept { return (n + kWordBits - 1) / kWordBits; }

inline bool test(std::span<const Word> set, std::size_t i) noexcept {
  return (set[i / kWordBits] >> (i % kWordBits)) & 1U;
}

inline void set(std::span<Word> set, std::size_t i) noexcept {
  set[i / kWordBits] |= Word{1} << (i % kWordBits);
}

inline void reset(std::span<Word> set, std::size_t i) noexcept {
  set[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
}

inline std::size_t count(std::span<const Word> set) noexcept {
  std::size_t total = 0;
  for (Word w : set) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

/// |a & b|
inline std::size_t count_and(std::span<const Word> a, std::span<const Word> b) noexcept {
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

/// |a & ~b|
inline std::size_t count_and_not(std::span<const Word> a, std::span<const Word> b) noexcept {
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += static_cast<std::size_t>(std::popcount(a[i] & ~b[i]));
  return total;
}

/// out = a & b
inline void intersect(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) noexcept {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] & b[i];
}

/// Fill the first n bits; the tail of the last word stays clear.
inline void fill(std::span<Word> set, std::size_t n) noexcept {
  for (Word& w : set) w = 0;
  for (std::size_t i = 0; i < n / kWordBits; ++i) set[i] = ~Word{0};
  if (n % kWordBits != 0) set[n / kWordBits] = (Word{1} << (n % kWordBits)) - 1;
}

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// Smallest set bit at or after `from`, or npos.
inline std::size_t next(std::span<const Word> set, std::size_t from) noexcept {
  std::size_t wi = from / kWordBits;
  if (wi >= set.size()) return npos;
  Word w = set[wi] & (~Word{0} << (from % kWordBits));
  while (w == 0) {
    if (++wi == set.size()) return npos;
    w = set[wi];
  }
  return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
}

/// Calls f(i) for every set bit i at or after `from`, in ascending order.
template <typename F>
void for_each_from(std::span<const Word> set, std::size_t from, F&& f) {
  std::size_t wi = from / kWordBits;
  if (wi >= set.size()) return;
  Word w = set[wi] & (~Word{0} << (from % kWordBits));
  for (;;) {
    while (w != 0) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(w));
      f(wi * kWordBits + bit);
      w &= w - 1;
    }
    if (++wi == set.size()) return;
    w = set[wi];
  }
}

template <typename F>
void for_each(std::span<const Word> set, F&& f) {
  for_each_from(set, 0, std::forward<F>(f));
}

}  // namespace sturan::bits
