#pragma once

// Heaps of pieces: the labeled poset on the positions of a reduced word in
// which position i lies below position j (i < j) whenever their letters do
// not commute. Two reduced words are commutation equivalent iff their heaps
// are isomorphic; the words in a class are the heap's linear extensions.

#include <cstddef>
#include <utility>
#include <vector>

#include "commclass/bigcount.hpp"
#include "commclass/coxeter.hpp"

namespace commclass {

struct HeapElement {
  std::size_t position;  // 0-based index into the source word
  Generator label;
  int row;     // == label
  int column;  // lattice column; covers sit in adjacent rows and columns
};

struct Heap {
  Rank rank = 1;
  std::vector<HeapElement> elements;                    // in word order
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper)

  std::size_t size() const { return elements.size(); }
  /// Ids of elements covered by the given element.
  std::vector<std::size_t> lower_covers(std::size_t id) const;
};

/// Throws std::invalid_argument if the word is not reduced.
Heap heap_of_word(const Word& word);

/// Counts linear extensions by dynamic programming over order ideals. An
/// ideal is recorded by how many elements of each label it contains, since
/// equal labels always form a chain.
BigCount linear_extension_count(const Heap& heap);

/// Repeatedly removes the minimal element with the smallest label. The result
/// is the lexicographically least linear extension.
Word greedy_linear_extension(const Heap& heap);

/// Inverse of heap_of_word up to commutation: the canonical word of the class.
Word representation_roundtrip(const Heap& heap);

/// Labeled-heap isomorphism, decided by comparing canonical words.
bool heaps_isomorphic(const Heap& a, const Heap& b);

} // namespace commclass
