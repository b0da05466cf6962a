// Copyright 2026 The wordrep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WORDREP_WORD_HPP_
#define WORDREP_WORD_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

// Finite sequence of letters over an alphabet. Empty words and words that
// miss some letters are valid values; representant checks live in verify.
class Word {
 public:
  Word() : alphabet_(make_alphabet({})) {}
  // Throws InputError if a letter is out of range.
  Word(AlphabetPtr alphabet, std::vector<VertexId> letters);

  // Whitespace-separated labels. When every label is one character, longer
  // tokens are read letter by letter ("42535214421").
  static Word parse(AlphabetPtr alphabet, std::string_view text);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  std::span<const VertexId> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  VertexId operator[](std::size_t i) const { return letters_[i]; }

  // Space separated; `compact` drops the separators when the alphabet is
  // single-character.
  std::string to_string(bool compact = false) const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_ && *a.alphabet_ == *b.alphabet_;
  }

 private:
  AlphabetPtr alphabet_;
  std::vector<VertexId> letters_;
};

// Concatenation; both words must share an alphabet.
Word operator+(const Word& a, const Word& b);
Word concat(std::span<const Word> parts);

// A word in which every letter of the alphabet occurs exactly once.
class Permutation {
 public:
  // Throws InputError unless `w` is a permutation of its alphabet.
  explicit Permutation(Word w);
  static Permutation parse(AlphabetPtr alphabet, std::string_view text) {
    return Permutation(Word::parse(std::move(alphabet), text));
  }
  static Permutation identity(AlphabetPtr alphabet);

  const Word& word() const noexcept { return word_; }
  operator const Word&() const noexcept { return word_; }
  const AlphabetPtr& alphabet() const noexcept { return word_.alphabet(); }
  int size() const noexcept { return static_cast<int>(word_.length()); }
  VertexId operator[](std::size_t i) const { return word_[i]; }
  // position()[v] is the index of letter v.
  const std::vector<int>& position() const noexcept { return position_; }
  bool before(VertexId x, VertexId y) const { return position_[x] < position_[y]; }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.word_ == b.word_;
  }

 private:
  Word word_;
  std::vector<int> position_;
};

// w|{x,y}: the copies of x and y in w, in order. x must differ from y.
Word induced_subword(const Word& w, VertexId x, VertexId y);
Word induced_subword(const Word& w, std::string_view x, std::string_view y);

// pi(w): leftmost occurrences in order of first appearance. Throws
// InputError if some letter of the alphabet does not occur.
Permutation initial_permutation(const Word& w);

Word reverse(const Word& w);

// Occurrences of the factors xx and yy in w|{x,y}.
int count_pattern_11(const Word& w, VertexId x, VertexId y);
int count_pattern_11(const Word& w, std::string_view x, std::string_view y);

// counts[x * n + y] = count_pattern_11(w, x, y) for all pairs, in one pass.
std::vector<int> pattern_11_matrix(const Word& w);

int multiplicity(const Word& w, VertexId x);
std::vector<int> multiplicities(const Word& w);
bool contains_every_letter(const Word& w);

// Drops the letters of `w` that are not in `sub` and rewrites the rest over
// `sub`. Every label of `sub` must exist in w's alphabet.
Word restrict_word(const Word& w, const AlphabetPtr& sub);
// Same letters written over another alphabet with the same labels.
Word relabel(const Word& w, const AlphabetPtr& target);

}  // namespace wordrep

#endif  // WORDREP_WORD_HPP_
