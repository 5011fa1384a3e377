#include "commclass/reduced_words.hpp"

#include <map>
#include <unordered_map>

namespace commclass {

ReducedWordStream::ReducedWordStream(const Permutation& w, bool canonical_only)
    : state_(detail::WalkState::start(w)), canonical_only_(canonical_only) {
  frames_.reserve(state_.remaining + 1);
  undo_.reserve(state_.remaining);
  letters_.reserve(state_.remaining);
}

void ReducedWordStream::undo_last() {
  const auto u = undo_.back();
  undo_.pop_back();
  letters_.pop_back();
  state_.pop(u.letter, u.descents, u.forbidden);
}

std::optional<Word> ReducedWordStream::next() {
  if (finished_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (state_.remaining == 0) {
      finished_ = true;
      return Word({}, state_.n);
    }
    frames_.push_back({state_.candidates(canonical_only_)});
  } else {
    // The previous call returned at a leaf; step back off it.
    undo_last();
  }

  while (!frames_.empty()) {
    auto& frame = frames_.back();
    if (frame.pending == 0) {
      frames_.pop_back();
      if (!letters_.empty()) undo_last();
      continue;
    }
    const Generator x = detail::lowest_letter(frame.pending);
    frame.pending &= frame.pending - 1;
    undo_.push_back({x, state_.descents, state_.forbidden});
    letters_.push_back(x);
    state_.push(x);
    if (state_.remaining == 0) return Word(letters_, state_.n);
    frames_.push_back({state_.candidates(canonical_only_)});
  }
  finished_ = true;
  return std::nullopt;
}

ReducedWordStream enumerate_reduced_words(const Permutation& w) { return ReducedWordStream(w); }

namespace {

template <typename Memo, typename KeyFn>
const BigCount& count_memoized(const Permutation& w, Memo& memo, KeyFn key_of) {
  auto key = key_of(w);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  BigCount total = 0;
  if (w.is_identity()) {
    total = 1;
  } else {
    for (auto i : left_descents(w)) total += count_memoized(w.left_multiply_generator(i), memo, key_of);
  }
  return memo.emplace(std::move(key), std::move(total)).first->second;
}

} // namespace

BigCount count_reduced_words(const Permutation& w) {
  if (w.compact_key()) {
    std::unordered_map<std::uint64_t, BigCount> memo;
    return count_memoized(w, memo, [](const Permutation& p) { return *p.compact_key(); });
  }
  std::map<std::vector<int>, BigCount> memo;
  return count_memoized(w, memo, [](const Permutation& p) { return p.images(); });
}

BigCount count_reduced_words_longest(Rank n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  const long cells = static_cast<long>(n) * (n - 1) / 2;
  BigCount numerator = 1;
  for (long k = 2; k <= cells; ++k) numerator *= k;
  BigCount hooks = 1;
  for (long k = 1; k < n; ++k)
    for (long rep = 0; rep < n - k; ++rep) hooks *= (2 * k - 1);
  return numerator / hooks;
}

} // namespace commclass
