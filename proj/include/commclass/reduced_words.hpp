#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "commclass/bigcount.hpp"
#include "commclass/coxeter.hpp"
#include "commclass/detail/walk_state.hpp"

namespace commclass {

/// Demand-driven generator of reduced words of a permutation, in
/// lexicographic order. With canonical_only set, only the lexicographically
/// least word of each commutation class is produced.
class ReducedWordStream {
public:
  explicit ReducedWordStream(const Permutation& w, bool canonical_only = false);

  std::optional<Word> next();

private:
  struct Frame {
    std::uint64_t pending;
  };
  struct Undo {
    Generator letter;
    std::uint64_t descents;
    std::uint64_t forbidden;
  };

  void undo_last();

  detail::WalkState state_;
  bool canonical_only_;
  bool started_ = false;
  bool finished_ = false;
  std::vector<Frame> frames_;
  std::vector<Undo> undo_;
  std::vector<Generator> letters_;
};

/// Every reduced word of w exactly once, lexicographically increasing.
ReducedWordStream enumerate_reduced_words(const Permutation& w);

/// R(w) = sum over left descents i of R(s_i w), memoized, R(e) = 1.
BigCount count_reduced_words(const Permutation& w);

/// Hook-length count for the staircase shape:
/// R(w0) = C(n,2)! / prod_{k=1}^{n-1} (2k-1)^{n-k}.
BigCount count_reduced_words_longest(Rank n);

} // namespace commclass
