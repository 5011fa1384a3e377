#pragma once

// Bit-packed state for generating reduced words letter by letter.
//
// A prefix x_1..x_k of a reduced word of w leaves the remaining element
// r = s_{x_k} ... s_{x_1} w; the next letter must be a left descent of r.
// The state tracks the inverse one-line notation of r (so applying s_x is a
// swap of two entries), the descent set as a bitmask, and the set of
// letters whose addition would break lexicographic minimality of the
// prefix within its commutation class.
//
// Appending x makes every later y with y < x-1 unplaceable until a letter in
// {y-1, y, y+1} shows up, since y could then slide left past x.  Appending x
// also re-enables x-1, x and x+1.

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "commclass/coxeter.hpp"

namespace commclass::detail {

inline constexpr Rank kMaxWalkRank = 63;

struct WalkState {
  std::array<std::uint8_t, kMaxWalkRank + 2> pos{};  // pos[v] = r^{-1}(v)
  std::uint64_t descents = 0;                         // bit i: i is a left descent of r
  std::uint64_t forbidden = 0;                        // bit y: y would break canonicity
  std::uint32_t remaining = 0;                        // l(r)
  Rank n = 1;

  static WalkState start(const Permutation& w) {
    if (w.rank() > kMaxWalkRank)
      throw std::invalid_argument("rank " + std::to_string(w.rank()) +
                                  " exceeds the word generator limit of " +
                                  std::to_string(kMaxWalkRank));
    WalkState s;
    s.n = w.rank();
    for (int k = 1; k <= s.n; ++k) s.pos[static_cast<std::size_t>(w(k))] = static_cast<std::uint8_t>(k);
    for (Generator i = 1; i < s.n; ++i) s.refresh_descent(i);
    s.remaining = static_cast<std::uint32_t>(coxeter_length(w));
    return s;
  }

  std::uint64_t candidates(bool canonical_only) const {
    return canonical_only ? (descents & ~forbidden) : descents;
  }

  void refresh_descent(Generator i) {
    if (i < 1 || i >= n) return;
    const auto bit = std::uint64_t{1} << i;
    if (pos[static_cast<std::size_t>(i)] > pos[static_cast<std::size_t>(i) + 1])
      descents |= bit;
    else
      descents &= ~bit;
  }

  /// Requires x to be a current descent. Caller keeps descents/forbidden to undo.
  void push(Generator x) {
    const auto ux = static_cast<std::size_t>(x);
    std::swap(pos[ux], pos[ux + 1]);
    refresh_descent(x - 1);
    refresh_descent(x);
    refresh_descent(x + 1);
    const std::uint64_t below = ((std::uint64_t{1} << (x - 1)) - 1) & ~std::uint64_t{1};
    const std::uint64_t neighbourhood = std::uint64_t{7} << (x - 1);
    forbidden = (forbidden | below) & ~neighbourhood;
    --remaining;
  }

  void pop(Generator x, std::uint64_t saved_descents, std::uint64_t saved_forbidden) {
    const auto ux = static_cast<std::size_t>(x);
    std::swap(pos[ux], pos[ux + 1]);
    descents = saved_descents;
    forbidden = saved_forbidden;
    ++remaining;
  }
};

inline Generator lowest_letter(std::uint64_t mask) { return std::countr_zero(mask); }

} // namespace commclass::detail
