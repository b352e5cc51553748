#include "geolab/word.hpp"

#include <algorithm>

namespace geolab {

char to_char(Letter x) noexcept {
  static constexpr char table[4] = {'a', 'A', 'b', 'B'};
  return table[static_cast<std::uint8_t>(x)];
}

Letter letter_from_char(char c) {
  switch (c) {
    case 'a': return Letter::a;
    case 'A': return Letter::A;
    case 'b': return Letter::b;
    case 'B': return Letter::B;
    default: throw ParseError(std::string("invalid letter '") + c + "' (expected a, A, b or B)");
  }
}

std::vector<Letter> parse_letters(std::string_view text) {
  std::vector<Letter> out;
  out.reserve(text.size());
  for (char c : text) out.push_back(letter_from_char(c));
  return out;
}

std::string to_string(std::span<const Letter> letters) {
  std::string s;
  s.reserve(letters.size());
  for (Letter x : letters) s.push_back(to_char(x));
  return s;
}

Word Word::reduce(std::span<const Letter> letters) {
  Word w;
  w.letters_.reserve(letters.size());
  for (Letter x : letters) {
    if (!w.letters_.empty() && w.letters_.back() == inverse(x)) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(x);
    }
  }
  return w;
}

Word Word::inverted() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    w.letters_.push_back(inverse(*it));
  }
  return w;
}

Word operator*(const Word& lhs, const Word& rhs) {
  Word w = lhs;
  for (Letter x : rhs.letters_) {
    if (!w.letters_.empty() && w.letters_.back() == inverse(x)) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(x);
    }
  }
  return w;
}

Word pow(const Word& w, int n) {
  const Word base = n < 0 ? w.inverted() : w;
  Word out;
  const unsigned reps = n < 0 ? static_cast<unsigned>(-(long long)n) : static_cast<unsigned>(n);
  for (unsigned i = 0; i < reps; ++i) out = out * base;
  return out;
}

std::size_t least_rotation(std::span<const Letter> letters) {
  const std::size_t n = letters.size();
  std::vector<std::ptrdiff_t> failure(2 * n, -1);
  std::size_t best = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const Letter cur = letters[j % n];
    std::ptrdiff_t i = failure[j - best - 1];
    while (i != -1 && cur != letters[(best + i + 1) % n]) {
      if (cur < letters[(best + i + 1) % n]) best = j - i - 1;
      i = failure[i];
    }
    if (cur != letters[(best + i + 1) % n]) {
      if (cur < letters[best % n]) best = j;
      failure[j - best] = -1;
    } else {
      failure[j - best] = i + 1;
    }
  }
  return best % n;
}

namespace {

std::vector<Letter> rotate_to(std::span<const Letter> letters, std::size_t start) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    out.push_back(letters[(start + i) % letters.size()]);
  }
  return out;
}

}  // namespace

CyclicWord CyclicWord::cyclic_reduce(const Word& w) {
  std::vector<Letter> letters(w.letters().begin(), w.letters().end());
  std::size_t lo = 0, hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == inverse(letters[hi - 1])) {
    ++lo;
    --hi;
  }
  letters.assign(letters.begin() + lo, letters.begin() + hi);
  if (letters.empty()) {
    throw ParseError("word reduces to the identity; no essential closed curve");
  }
  return CyclicWord(rotate_to(letters, least_rotation(letters)));
}

Word CyclicWord::rotation(std::size_t start) const {
  Word w;
  w.letters_ = rotate_to(letters_, start % letters_.size());
  return w;
}

Word CyclicWord::prefix(std::size_t count) const {
  if (count > letters_.size()) throw Error("prefix length out of range");
  Word w;
  w.letters_.assign(letters_.begin(), letters_.begin() + count);
  return w;
}

std::vector<Word> CyclicWord::shifts() const {
  std::vector<Word> out;
  out.reserve(letters_.size());
  for (std::size_t i = 0; i < letters_.size(); ++i) out.push_back(rotation(i));
  return out;
}

CyclicWord CyclicWord::inverted() const {
  std::vector<Letter> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.push_back(inverse(*it));
  return CyclicWord(rotate_to(inv, least_rotation(inv)));
}

bool CyclicWord::primitive() const {
  const std::size_t n = letters_.size();
  for (std::size_t d = 1; d <= n / 2; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i < n && periodic; ++i) {
      periodic = letters_[i] == letters_[(i + d) % n];
    }
    if (periodic) return false;
  }
  return true;
}

CyclicWord CyclicWord::canonical_class() const {
  CyclicWord inv = inverted();
  return letters_ <= inv.letters_ ? *this : inv;
}

}  // namespace geolab
