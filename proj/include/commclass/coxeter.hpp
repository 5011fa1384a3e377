#pragma once

// Permutation and word algebra for the type A_{n-1} Coxeter system (the
// symmetric group S_n generated by adjacent transpositions s_1..s_{n-1}).
//
// Conventions used throughout the library:
//   * one-line notation with values 1..n, images[k-1] = w(k);
//   * generator indices are 1-based, s_i exchanges the values i and i+1;
//   * products compose as functions, (u*v)(k) = u(v(k)), and a word
//     x_1 x_2 ... x_m evaluates to s_{x_1} * s_{x_2} * ... * s_{x_m}.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace commclass {

using Rank = int;
using Generator = int;

class Permutation {
public:
  /// Identity of S_n.
  explicit Permutation(Rank n = 1);

  /// Throws std::invalid_argument unless values is a bijection on {1..n}.
  static Permutation from_one_line(std::span<const int> values);
  static Permutation from_one_line(std::initializer_list<int> values) {
    return from_one_line(std::span<const int>(values.begin(), values.size()));
  }

  Rank rank() const { return static_cast<Rank>(images_.size()); }
  /// w(k) for 1 <= k <= n.
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// s_i * w: swaps the values i and i+1 in the one-line notation.
  Permutation left_multiply_generator(Generator i) const;
  /// w * s_i: swaps the entries at positions i and i+1.
  Permutation right_multiply_generator(Generator i) const;

  /// 4 bits per image; available for n <= 16.
  std::optional<std::uint64_t> compact_key() const;

  std::string to_string() const;

  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& w);

/// Parses "[4,3,2,1]" (brackets optional, whitespace ignored).
Permutation parse_permutation(std::string_view text);

class Word {
public:
  Word() = default;
  /// Throws std::invalid_argument if a letter lies outside 1..rank-1.
  Word(std::vector<Generator> letters, Rank rank);

  Rank rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Generator operator[](std::size_t k) const { return letters_[k]; }
  const std::vector<Generator>& letters() const { return letters_; }

  Word concat(const Word& other) const;

  /// Digit string for rank <= 10, comma-separated integers otherwise.
  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  /// Lexicographic on letters.
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

private:
  std::vector<Generator> letters_;
  Rank rank_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Word& word);

/// Accepts "321323" (one digit per letter) or "3,2,1,3,2,3". When rank is
/// not given it is taken as one more than the largest letter.
Word parse_word(std::string_view text, std::optional<Rank> rank = std::nullopt);

Permutation permutation_from_one_line(std::span<const int> values);
Permutation longest_element(Rank n);
std::size_t coxeter_length(const Permutation& w);
/// { i : l(s_i * w) < l(w) }, ascending.
std::vector<Generator> left_descents(const Permutation& w);
Permutation evaluate_word(const Word& word);
bool is_reduced(const Word& word);
bool generators_commute(Generator i, Generator j);

} // namespace commclass

template <>
struct std::hash<commclass::Word> {
  std::size_t operator()(const commclass::Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : w.letters()) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};
