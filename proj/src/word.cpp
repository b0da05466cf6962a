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

#include "wordrep/word.hpp"

#include <algorithm>
#include <sstream>

#include "wordrep/errors.hpp"

namespace wordrep {

Word::Word(AlphabetPtr alphabet, std::vector<VertexId> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  if (!alphabet_) throw InputError("word without alphabet");
  for (VertexId v : letters_) {
    if (v < 0 || v >= alphabet_->size()) throw InputError("letter out of range");
  }
}

Word Word::parse(AlphabetPtr alphabet, std::string_view text) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(text)};
  for (std::string tok; in >> tok;) tokens.push_back(tok);

  std::vector<VertexId> letters;
  for (const auto& tok : tokens) {
    if (alphabet->single_character() && tok.size() > 1) {
      for (char c : tok) letters.push_back(alphabet->index(std::string_view(&c, 1)));
    } else {
      letters.push_back(alphabet->index(tok));
    }
  }
  return Word(std::move(alphabet), std::move(letters));
}

std::string Word::to_string(bool compact) const {
  const bool tight = compact && alphabet_->single_character();
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0 && !tight) out += ' ';
    out += alphabet_->label(letters_[i]);
  }
  return out;
}

Word operator+(const Word& a, const Word& b) {
  if (*a.alphabet() != *b.alphabet()) throw InputError("concatenating words over different alphabets");
  std::vector<VertexId> letters(a.letters().begin(), a.letters().end());
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return Word(a.alphabet(), std::move(letters));
}

Word concat(std::span<const Word> parts) {
  if (parts.empty()) return Word();
  std::vector<VertexId> letters;
  for (const Word& p : parts) {
    if (*p.alphabet() != *parts.front().alphabet()) {
      throw InputError("concatenating words over different alphabets");
    }
    letters.insert(letters.end(), p.letters().begin(), p.letters().end());
  }
  return Word(parts.front().alphabet(), std::move(letters));
}

Permutation::Permutation(Word w) : word_(std::move(w)) {
  const int n = word_.alphabet()->size();
  if (static_cast<int>(word_.length()) != n) {
    throw InputError("permutation length " + std::to_string(word_.length()) +
                     " differs from alphabet size " + std::to_string(n));
  }
  position_.assign(n, -1);
  for (std::size_t i = 0; i < word_.length(); ++i) {
    if (position_[word_[i]] >= 0) {
      throw InputError("repeated letter in permutation: " + word_.alphabet()->label(word_[i]));
    }
    position_[word_[i]] = static_cast<int>(i);
  }
}

Permutation Permutation::identity(AlphabetPtr alphabet) {
  std::vector<VertexId> letters(alphabet->size());
  for (int i = 0; i < alphabet->size(); ++i) letters[i] = i;
  return Permutation(Word(std::move(alphabet), std::move(letters)));
}

namespace {

void check_pair(const Word& w, VertexId x, VertexId y) {
  const int n = w.alphabet()->size();
  if (x < 0 || y < 0 || x >= n || y >= n) throw InputError("vertex out of range");
  if (x == y) throw InputError("pair letters must differ");
}

}  // namespace

Word induced_subword(const Word& w, VertexId x, VertexId y) {
  check_pair(w, x, y);
  std::vector<VertexId> out;
  for (VertexId v : w.letters()) {
    if (v == x || v == y) out.push_back(v);
  }
  return Word(w.alphabet(), std::move(out));
}

Word induced_subword(const Word& w, std::string_view x, std::string_view y) {
  return induced_subword(w, w.alphabet()->index(x), w.alphabet()->index(y));
}

Permutation initial_permutation(const Word& w) {
  const int n = w.alphabet()->size();
  std::vector<bool> seen(n, false);
  std::vector<VertexId> order;
  order.reserve(n);
  for (VertexId v : w.letters()) {
    if (!seen[v]) {
      seen[v] = true;
      order.push_back(v);
    }
  }
  if (static_cast<int>(order.size()) != n) {
    auto missing = std::find(seen.begin(), seen.end(), false) - seen.begin();
    throw InputError("letter " + w.alphabet()->label(static_cast<VertexId>(missing)) +
                     " does not occur in the word");
  }
  return Permutation(Word(w.alphabet(), std::move(order)));
}

Word reverse(const Word& w) {
  std::vector<VertexId> letters(w.letters().rbegin(), w.letters().rend());
  return Word(w.alphabet(), std::move(letters));
}

int count_pattern_11(const Word& w, VertexId x, VertexId y) {
  check_pair(w, x, y);
  int count = 0;
  VertexId previous = -1;
  for (VertexId v : w.letters()) {
    if (v != x && v != y) continue;
    if (v == previous) ++count;
    previous = v;
  }
  return count;
}

int count_pattern_11(const Word& w, std::string_view x, std::string_view y) {
  return count_pattern_11(w, w.alphabet()->index(x), w.alphabet()->index(y));
}

std::vector<int> pattern_11_matrix(const Word& w) {
  // Placing v adds a 11 to every pair {v, y} whose induced subword currently
  // ends in v, i.e. every y last seen before v's last occurrence.
  const int n = w.alphabet()->size();
  std::vector<int> counts(static_cast<std::size_t>(n) * n, 0);
  std::vector<long> last(n, -1);
  for (std::size_t pos = 0; pos < w.length(); ++pos) {
    const VertexId v = w[pos];
    if (last[v] >= 0) {
      for (VertexId y = 0; y < n; ++y) {
        if (y != v && last[y] < last[v]) {
          ++counts[v * n + y];
          ++counts[y * n + v];
        }
      }
    }
    last[v] = static_cast<long>(pos);
  }
  return counts;
}

int multiplicity(const Word& w, VertexId x) {
  return static_cast<int>(std::count(w.letters().begin(), w.letters().end(), x));
}

std::vector<int> multiplicities(const Word& w) {
  std::vector<int> m(w.alphabet()->size(), 0);
  for (VertexId v : w.letters()) ++m[v];
  return m;
}

bool contains_every_letter(const Word& w) {
  auto m = multiplicities(w);
  return std::all_of(m.begin(), m.end(), [](int c) { return c > 0; });
}

Word restrict_word(const Word& w, const AlphabetPtr& sub) {
  std::vector<VertexId> map(w.alphabet()->size(), -1);
  for (VertexId i = 0; i < sub->size(); ++i) map[w.alphabet()->index(sub->label(i))] = i;
  std::vector<VertexId> letters;
  for (VertexId v : w.letters()) {
    if (map[v] >= 0) letters.push_back(map[v]);
  }
  return Word(sub, std::move(letters));
}

Word relabel(const Word& w, const AlphabetPtr& target) {
  if (!w.alphabet()->same_labels(*target)) throw InputError("alphabets have different labels");
  return restrict_word(w, target);
}

}  // namespace wordrep
