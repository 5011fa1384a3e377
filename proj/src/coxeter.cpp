#include "commclass/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace commclass {

Permutation::Permutation(Rank n) {
  if (n < 1) throw std::invalid_argument("permutation rank must be >= 1");
  images_.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) images_[static_cast<std::size_t>(k)] = k + 1;
}

Permutation Permutation::from_one_line(std::span<const int> values) {
  if (values.empty()) throw std::invalid_argument("one-line notation must be nonempty");
  const auto n = values.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : values) {
    if (v < 1 || static_cast<std::size_t>(v) > n)
      throw std::invalid_argument("one-line value " + std::to_string(v) + " out of range 1.." +
                                  std::to_string(n));
    if (seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("duplicate one-line value " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = true;
  }
  Permutation w(static_cast<Rank>(n));
  w.images_.assign(values.begin(), values.end());
  return w;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k)
    if (images_[k] != static_cast<int>(k + 1)) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv(rank());
  for (std::size_t k = 0; k < images_.size(); ++k)
    inv.images_[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k + 1);
  return inv;
}

Permutation Permutation::left_multiply_generator(Generator i) const {
  if (i < 1 || i >= rank()) throw std::invalid_argument("generator index out of range");
  Permutation r = *this;
  for (auto& v : r.images_) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return r;
}

Permutation Permutation::right_multiply_generator(Generator i) const {
  if (i < 1 || i >= rank()) throw std::invalid_argument("generator index out of range");
  Permutation r = *this;
  std::swap(r.images_[static_cast<std::size_t>(i - 1)], r.images_[static_cast<std::size_t>(i)]);
  return r;
}

std::optional<std::uint64_t> Permutation::compact_key() const {
  if (rank() > 16) return std::nullopt;
  std::uint64_t key = 0;
  for (std::size_t k = 0; k < images_.size(); ++k)
    key |= static_cast<std::uint64_t>(images_[k] - 1) << (4 * k);
  return key;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(images_[k]);
  }
  return s + "]";
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.rank() != rhs.rank()) throw std::invalid_argument("rank mismatch in product");
  Permutation r(lhs.rank());
  for (std::size_t k = 0; k < rhs.images_.size(); ++k)
    r.images_[k] = lhs(rhs.images_[k]);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Permutation& w) { return os << w.to_string(); }

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    values.push_back(std::stoi(token));
    token.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      token += c;
    } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else if (c != '[' && c != ']') {
      throw std::invalid_argument("unexpected character in permutation: '" + std::string(1, c) + "'");
    }
  }
  flush();
  return Permutation::from_one_line(values);
}

Word::Word(std::vector<Generator> letters, Rank rank) : letters_(std::move(letters)), rank_(rank) {
  if (rank < 1) throw std::invalid_argument("word rank must be >= 1");
  for (auto x : letters_)
    if (x < 1 || x >= rank)
      throw std::invalid_argument("letter " + std::to_string(x) + " out of range for rank " +
                                  std::to_string(rank));
}

Word Word::concat(const Word& other) const {
  if (rank_ != other.rank_) throw std::invalid_argument("rank mismatch in concatenation");
  auto letters = letters_;
  letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(letters), rank_);
}

std::string Word::to_string() const {
  std::string s;
  if (rank_ <= 10) {
    for (auto x : letters_) s += static_cast<char>('0' + x);
    return s;
  }
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(letters_[k]);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Word& word) { return os << word.to_string(); }

Word parse_word(std::string_view text, std::optional<Rank> rank) {
  std::vector<Generator> letters;
  if (text.find(',') != std::string_view::npos) {
    std::string token;
    for (char c : text) {
      if (c == ',') {
        if (token.empty()) throw std::invalid_argument("empty letter in word");
        letters.push_back(std::stoi(token));
        token.clear();
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        token += c;
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("unexpected character in word: '" + std::string(1, c) + "'");
      }
    }
    if (token.empty()) throw std::invalid_argument("empty letter in word");
    letters.push_back(std::stoi(token));
  } else {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("unexpected character in word: '" + std::string(1, c) + "'");
      letters.push_back(c - '0');
    }
  }
  Rank r = 1;
  if (rank) {
    r = *rank;
  } else {
    for (auto x : letters) r = std::max(r, x + 1);
  }
  return Word(std::move(letters), r);
}

Permutation permutation_from_one_line(std::span<const int> values) {
  return Permutation::from_one_line(values);
}

Permutation longest_element(Rank n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) values[static_cast<std::size_t>(k)] = n - k;
  return Permutation::from_one_line(values);
}

std::size_t coxeter_length(const Permutation& w) {
  const auto& v = w.images();
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++inversions;
  return inversions;
}

std::vector<Generator> left_descents(const Permutation& w) {
  // l(s_i w) < l(w) iff the value i+1 appears before the value i.
  const auto inv = w.inverse();
  std::vector<Generator> out;
  for (Generator i = 1; i < w.rank(); ++i)
    if (inv(i) > inv(i + 1)) out.push_back(i);
  return out;
}

Permutation evaluate_word(const Word& word) {
  // s_{x1} ... s_{xm} = id * s_{x1} * ... * s_{xm}; right multiplication
  // by s_i swaps positions i and i+1.
  Permutation w(word.rank());
  for (auto x : word.letters()) w = w.right_multiply_generator(x);
  return w;
}

bool is_reduced(const Word& word) { return word.size() == coxeter_length(evaluate_word(word)); }

bool generators_commute(Generator i, Generator j) { return std::abs(i - j) >= 2; }

} // namespace commclass
