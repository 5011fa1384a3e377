#include "commclass/engine.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "commclass/detail/walk_state.hpp"
#include "commclass/heap.hpp"

namespace commclass {

BudgetExceeded::BudgetExceeded(const BigCount& required, std::uint64_t budget)
    : std::runtime_error("oracle budget of " + std::to_string(budget) + " reduced words exceeded (" +
                         to_decimal(required) + " required)"),
      budget_(budget) {}

Word apply_commutation(const Word& word, std::size_t pos) {
  if (pos < 1 || pos >= word.size()) throw std::out_of_range("commutation position out of range");
  const auto a = word[pos - 1], b = word[pos];
  if (!generators_commute(a, b))
    throw std::invalid_argument("letters " + std::to_string(a) + "," + std::to_string(b) + " at position " +
                                std::to_string(pos) + " do not commute");
  auto letters = word.letters();
  std::swap(letters[pos - 1], letters[pos]);
  return Word(std::move(letters), word.rank());
}

Word apply_braid(const Word& word, std::size_t pos) {
  if (pos < 1 || pos + 2 > word.size()) throw std::out_of_range("braid position out of range");
  const auto i = word[pos - 1], j = word[pos], k = word[pos + 1];
  if (i != k || std::abs(i - j) != 1)
    throw std::invalid_argument("no braid pattern at position " + std::to_string(pos));
  auto letters = word.letters();
  letters[pos - 1] = j;
  letters[pos] = i;
  letters[pos + 1] = j;
  return Word(std::move(letters), word.rank());
}

std::vector<Word> commutation_class_of(const Word& word) {
  if (!is_reduced(word)) throw std::invalid_argument("commutation class requires a reduced word");
  std::set<Word> seen{word};
  std::deque<Word> queue{word};
  while (!queue.empty()) {
    auto current = std::move(queue.front());
    queue.pop_front();
    for (std::size_t p = 1; p < current.size(); ++p) {
      if (!generators_commute(current[p - 1], current[p])) continue;
      auto neighbour = apply_commutation(current, p);
      if (seen.insert(neighbour).second) queue.push_back(std::move(neighbour));
    }
  }
  return {seen.begin(), seen.end()};
}

bool is_canonical(const Word& word) {
  for (std::size_t k = 0; k < word.size(); ++k) {
    const auto x = word[k];
    for (std::size_t j = k; j-- > 0;) {
      if (!generators_commute(word[j], x)) break;
      if (word[j] > x) return false;
    }
  }
  return true;
}

Word canonicalize(const Word& word) { return greedy_linear_extension(heap_of_word(word)); }

namespace {

struct SearchControl {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::atomic<bool> stopped{false};
};

// Count canonical completions of the current prefix.
class SubtreeCounter {
public:
  explicit SubtreeCounter(SearchControl& control) : control_(control) {}

  std::uint64_t count(detail::WalkState& s) {
    if (s.remaining == 0) return 1;
    std::uint64_t pending = s.candidates(true);
    if (s.remaining == 1) return static_cast<std::uint64_t>(std::popcount(pending));
    if (control_.deadline) {
      if (halted_) return 0;
      if ((++visits_ & 0x3FFF) == 0 && poll_deadline()) {
        halted_ = true;
        return 0;
      }
    }
    std::uint64_t total = 0;
    const auto saved_descents = s.descents;
    const auto saved_forbidden = s.forbidden;
    while (pending) {
      const Generator x = detail::lowest_letter(pending);
      pending &= pending - 1;
      s.push(x);
      total += count(s);
      s.pop(x, saved_descents, saved_forbidden);
    }
    return total;
  }

private:
  bool poll_deadline() {
    if (control_.stopped.load(std::memory_order_relaxed)) return true;
    if (std::chrono::steady_clock::now() >= *control_.deadline) {
      control_.stopped.store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }

  SearchControl& control_;
  std::uint64_t visits_ = 0;
  bool halted_ = false;
};

// Breadth-first split of the search tree into disjoint subtrees. Leaves met on
// the way are tallied directly.
std::vector<detail::WalkState> split_frontier(const detail::WalkState& root, std::size_t target,
                                              BigCount& leaves) {
  std::vector<detail::WalkState> level{root};
  while (level.size() < target) {
    std::vector<detail::WalkState> next;
    bool expanded = false;
    for (const auto& s : level) {
      if (s.remaining <= 2) {
        next.push_back(s);
        continue;
      }
      expanded = true;
      for (auto pending = s.candidates(true); pending; pending &= pending - 1) {
        auto child = s;
        child.push(detail::lowest_letter(pending));
        next.push_back(child);
      }
    }
    level = std::move(next);
    if (!expanded) break;
  }
  std::erase_if(level, [&](const detail::WalkState& s) {
    if (s.remaining != 0) return false;
    leaves += 1;
    return true;
  });
  return level;
}

void prefix_reference(const Permutation& rest, std::vector<Generator>& prefix, BigCount& total) {
  if (rest.is_identity()) {
    total += 1;
    return;
  }
  for (auto i : left_descents(rest)) {
    prefix.push_back(i);
    // Only the newest letter can introduce a violation.
    bool ok = true;
    for (std::size_t j = prefix.size() - 1; j-- > 0;) {
      if (!generators_commute(prefix[j], i)) break;
      if (prefix[j] > i) {
        ok = false;
        break;
      }
    }
    if (ok) prefix_reference(rest.left_multiply_generator(i), prefix, total);
    prefix.pop_back();
  }
}

} // namespace

CountResult count_commutation_classes(const Permutation& w, const CountOptions& options) {
  if (options.threads < 1) throw std::invalid_argument("thread count must be >= 1");
  SearchControl control;
  control.deadline = options.deadline;
  auto root = detail::WalkState::start(w);

  CountResult result;
  if (options.threads == 1) {
    SubtreeCounter counter(control);
    result.count = counter.count(root);
    result.complete = !control.stopped.load();
    return result;
  }

  BigCount leaves = 0;
  const auto tasks =
      split_frontier(root, static_cast<std::size_t>(options.threads) * 256, leaves);
  std::vector<std::uint64_t> partial(tasks.size(), 0);
  const auto task_count = static_cast<std::int64_t>(tasks.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(options.threads)
  for (std::int64_t t = 0; t < task_count; ++t) {
    if (control.stopped.load(std::memory_order_relaxed)) continue;
    auto state = tasks[static_cast<std::size_t>(t)];
    SubtreeCounter counter(control);
    partial[static_cast<std::size_t>(t)] = counter.count(state);
  }

  result.count = leaves;
  for (auto p : partial) result.count += p;
  result.complete = !control.stopped.load();
  return result;
}

BigCount count_commutation_classes(const Permutation& w, int threads) {
  return count_commutation_classes(w, CountOptions{threads, std::nullopt}).count;
}

BigCount count_commutation_classes_reference(const Permutation& w) {
  std::vector<Generator> prefix;
  BigCount total = 0;
  prefix_reference(w, prefix, total);
  return total;
}

ClassStream::ClassStream(const Permutation& w, bool with_members)
    : canonical_words_(w, /*canonical_only=*/true), with_members_(with_members) {}

std::optional<CommutationClass> ClassStream::next() {
  auto word = canonical_words_.next();
  if (!word) return std::nullopt;
  CommutationClass cls;
  cls.rank = word->rank();
  cls.size = linear_extension_count(heap_of_word(*word));
  if (with_members_) cls.members = commutation_class_of(*word);
  cls.canonical = std::move(*word);
  return cls;
}

ClassStream enumerate_classes(const Permutation& w, bool with_members) { return ClassStream(w, with_members); }

namespace {

struct ReducedWordIndex {
  std::vector<Word> words;
  std::unordered_map<Word, std::size_t> index;

  ReducedWordIndex(const Permutation& w, std::uint64_t budget) {
    const auto total = count_reduced_words(w);
    if (total > budget) throw BudgetExceeded(total, budget);
    words.reserve(static_cast<std::size_t>(total));
    auto stream = enumerate_reduced_words(w);
    while (auto word = stream.next()) {
      index.emplace(*word, words.size());
      words.push_back(std::move(*word));
    }
  }

  std::size_t at(const Word& word) const { return index.at(word); }
};

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<std::size_t> parent_;
};

} // namespace

std::vector<std::vector<Word>> partition_reduced_words(const Permutation& w, std::uint64_t budget) {
  const ReducedWordIndex all(w, budget);
  DisjointSets sets(all.words.size());
  for (std::size_t id = 0; id < all.words.size(); ++id) {
    const auto& word = all.words[id];
    for (std::size_t p = 1; p < word.size(); ++p)
      if (generators_commute(word[p - 1], word[p])) sets.unite(id, all.at(apply_commutation(word, p)));
  }
  // Words are in lexicographic order and each root is the least id of its
  // set, so classes come out ordered by their least member.
  std::vector<std::vector<Word>> classes;
  std::unordered_map<std::size_t, std::size_t> slot;
  for (std::size_t id = 0; id < all.words.size(); ++id) {
    const auto root = sets.find(id);
    auto [it, inserted] = slot.emplace(root, classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(all.words[id]);
  }
  return classes;
}

MatsumotoGraph matsumoto_graph(const Permutation& w, std::uint64_t budget) {
  ReducedWordIndex all(w, budget);
  MatsumotoGraph graph;
  for (std::size_t id = 0; id < all.words.size(); ++id) {
    const auto& word = all.words[id];
    for (std::size_t p = 1; p < word.size(); ++p) {
      if (generators_commute(word[p - 1], word[p])) {
        const auto other = all.at(apply_commutation(word, p));
        if (id < other) graph.edges.push_back({id, other, MoveKind::commutation});
      }
      if (p + 1 < word.size() && word[p - 1] == word[p + 1] && std::abs(word[p - 1] - word[p]) == 1) {
        const auto other = all.at(apply_braid(word, p));
        if (id < other) graph.edges.push_back({id, other, MoveKind::braid});
      }
    }
  }
  graph.nodes = std::move(all.words);
  return graph;
}

std::size_t MatsumotoGraph::component_count(bool use_commutations, bool use_braids) const {
  DisjointSets sets(nodes.size());
  for (const auto& e : edges) {
    if ((e.kind == MoveKind::commutation && use_commutations) || (e.kind == MoveKind::braid && use_braids))
      sets.unite(e.from, e.to);
  }
  std::size_t components = 0;
  for (std::size_t id = 0; id < nodes.size(); ++id)
    if (sets.find(id) == id) ++components;
  return components;
}

} // namespace commclass
