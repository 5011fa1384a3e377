#pragma once

// Commutation classes of reduced words: moves, the canonical representative,
// the pruned enumeration that counts classes, and a brute-force partition
// kept as ground truth.

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "commclass/bigcount.hpp"
#include "commclass/coxeter.hpp"
#include "commclass/reduced_words.hpp"

namespace commclass {

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(const BigCount& required, std::uint64_t budget);
  std::uint64_t budget() const { return budget_; }

private:
  std::uint64_t budget_;
};

/// Swaps the letters at 1-based positions pos and pos+1; they must commute.
Word apply_commutation(const Word& word, std::size_t pos);
/// Rewrites i j i at 1-based positions pos..pos+2 to j i j, |i-j| = 1.
Word apply_braid(const Word& word, std::size_t pos);

/// Closure of a reduced word under commutations, sorted.
std::vector<Word> commutation_class_of(const Word& word);

/// True iff no letter could slide left past a larger letter it commutes
/// with, i.e. the word is the least member of its commutation class.
bool is_canonical(const Word& word);
Word canonicalize(const Word& word);

struct CountOptions {
  int threads = 1;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct CountResult {
  BigCount count;
  bool complete = true;  // false when the deadline cut the search short
};

/// Pruned depth-first count of canonical reduced words (one per class).
/// Parallel over disjoint subtrees with OpenMP; the result does not depend on
/// the thread count.
CountResult count_commutation_classes(const Permutation& w, const CountOptions& options);
BigCount count_commutation_classes(const Permutation& w, int threads = 1);

/// Serial reference: recursive generation with the canonical test evaluated
/// directly on each prefix. Slow; kept to check the bitmask kernel.
BigCount count_commutation_classes_reference(const Permutation& w);

struct CommutationClass {
  Word canonical;
  BigCount size;
  Rank rank = 1;
  std::vector<Word> members;  // filled only when membership is requested
};

/// Classes in lexicographic order of canonical word.
class ClassStream {
public:
  ClassStream(const Permutation& w, bool with_members);
  std::optional<CommutationClass> next();

private:
  ReducedWordStream canonical_words_;
  bool with_members_;
};

ClassStream enumerate_classes(const Permutation& w, bool with_members = false);

/// Brute force: every reduced word, union-find over single commutations.
/// Classes and their members are sorted lexicographically.
std::vector<std::vector<Word>> partition_reduced_words(const Permutation& w,
                                                       std::uint64_t budget = kDefaultOracleBudget);

enum class MoveKind { commutation, braid };

struct MatsumotoGraph {
  struct Edge {
    std::size_t from;
    std::size_t to;
    MoveKind kind;
  };
  std::vector<Word> nodes;
  std::vector<Edge> edges;

  /// Connected components using edges of the given kinds.
  std::size_t component_count(bool use_commutations, bool use_braids) const;
  bool is_connected() const { return component_count(true, true) <= 1; }
};

MatsumotoGraph matsumoto_graph(const Permutation& w, std::uint64_t budget = kDefaultOracleBudget);

} // namespace commclass
