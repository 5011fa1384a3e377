#include "commclass/heap.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace commclass {

std::vector<std::size_t> Heap::lower_covers(std::size_t id) const {
  std::vector<std::size_t> out;
  for (const auto& [lo, hi] : covers)
    if (hi == id) out.push_back(lo);
  return out;
}

Heap heap_of_word(const Word& word) {
  if (!is_reduced(word)) throw std::invalid_argument("heap requires a reduced word: " + word.to_string());
  const auto m = word.size();
  Heap heap;
  heap.rank = word.rank();

  // below[j][i]: element i < element j in the heap order.
  std::vector<std::vector<bool>> below(m, std::vector<bool>(m, false));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (generators_commute(word[i], word[j])) continue;
      below[j][i] = true;
      for (std::size_t k = 0; k < i; ++k)
        if (below[i][k]) below[j][k] = true;
    }
  }

  for (std::size_t j = 0; j < m; ++j) {
    int column = -1;
    for (std::size_t i = 0; i < j; ++i) {
      if (!below[j][i]) continue;
      bool direct = true;
      for (std::size_t k = i + 1; k < j && direct; ++k)
        if (below[j][k] && below[k][i]) direct = false;
      if (direct) {
        heap.covers.emplace_back(i, j);
        column = std::max(column, heap.elements[i].column + 1);
      }
    }
    const Generator label = word[j];
    if (column < 0) column = (label + 1) % 2;
    heap.elements.push_back({j, label, label, column});
  }
  return heap;
}

namespace {

struct IdealLayout {
  std::vector<std::vector<std::size_t>> chains;  // element ids per label, bottom-up
  std::vector<std::size_t> index_in_chain;
  std::vector<std::vector<std::size_t>> lower;

  explicit IdealLayout(const Heap& heap)
      : chains(static_cast<std::size_t>(heap.rank)), index_in_chain(heap.size()), lower(heap.size()) {
    for (std::size_t id = 0; id < heap.size(); ++id) {
      auto& chain = chains[static_cast<std::size_t>(heap.elements[id].label)];
      index_in_chain[id] = chain.size();
      chain.push_back(id);
    }
    for (const auto& [lo, hi] : heap.covers) lower[hi].push_back(lo);
  }

  // Element at the head of chain `label` given the ideal, if it can be added.
  std::optional<std::size_t> addable(const Heap& heap, const std::u16string& ideal, std::size_t label) const {
    const auto taken = static_cast<std::size_t>(ideal[label]);
    if (taken == chains[label].size()) return std::nullopt;
    const auto id = chains[label][taken];
    for (auto lo : lower[id]) {
      const auto l = static_cast<std::size_t>(heap.elements[lo].label);
      if (index_in_chain[lo] >= static_cast<std::size_t>(ideal[l]))
        return std::nullopt;
    }
    return id;
  }
};

const BigCount& extensions_from(const Heap& heap, const IdealLayout& layout, std::u16string& ideal,
                                std::size_t placed, std::unordered_map<std::u16string, BigCount>& memo) {
  if (auto it = memo.find(ideal); it != memo.end()) return it->second;
  BigCount total = 0;
  if (placed == heap.size()) {
    total = 1;
  } else {
    for (std::size_t label = 1; label < layout.chains.size(); ++label) {
      if (!layout.addable(heap, ideal, label)) continue;
      ++ideal[label];
      total += extensions_from(heap, layout, ideal, placed + 1, memo);
      --ideal[label];
    }
  }
  return memo.emplace(ideal, std::move(total)).first->second;
}

} // namespace

BigCount linear_extension_count(const Heap& heap) {
  if (heap.size() == 0) return 1;
  const IdealLayout layout(heap);
  std::u16string ideal(static_cast<std::size_t>(heap.rank), u'\0');
  std::unordered_map<std::u16string, BigCount> memo;
  return extensions_from(heap, layout, ideal, 0, memo);
}

Word greedy_linear_extension(const Heap& heap) {
  const IdealLayout layout(heap);
  std::u16string ideal(static_cast<std::size_t>(heap.rank), u'\0');
  std::vector<Generator> letters;
  letters.reserve(heap.size());
  while (letters.size() < heap.size()) {
    bool advanced = false;
    for (std::size_t label = 1; label < layout.chains.size(); ++label) {
      if (!layout.addable(heap, ideal, label)) continue;
      ++ideal[label];
      letters.push_back(static_cast<Generator>(label));
      advanced = true;
      break;
    }
    if (!advanced) throw std::logic_error("heap cover relation is cyclic");
  }
  return Word(std::move(letters), heap.rank);
}

Word representation_roundtrip(const Heap& heap) { return greedy_linear_extension(heap); }

bool heaps_isomorphic(const Heap& a, const Heap& b) {
  return a.rank == b.rank && a.size() == b.size() && greedy_linear_extension(a) == greedy_linear_extension(b);
}

} // namespace commclass
