#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geolab/errors.hpp"

namespace geolab {

/// Generators of the rank-2 free group. The numeric values fix the internal
/// letter order a < A < b < B used for every canonical form; it carries no
/// geometric meaning.
enum class Letter : std::uint8_t { a = 0, A = 1, b = 2, B = 3 };

constexpr Letter inverse(Letter x) noexcept {
  return static_cast<Letter>(static_cast<std::uint8_t>(x) ^ 1u);
}

char to_char(Letter x) noexcept;
Letter letter_from_char(char c);  // throws ParseError

/// Text grammar used by the CLI and all file formats: a, A (= a inverse),
/// b, B (= b inverse), concatenated without separators.
std::vector<Letter> parse_letters(std::string_view text);  // throws ParseError
std::string to_string(std::span<const Letter> letters);

/// A freely reduced word. The empty word is the identity.
class Word {
 public:
  Word() = default;

  /// Free reduction of an arbitrary letter sequence; idempotent.
  static Word reduce(std::span<const Letter> letters);
  static Word parse(std::string_view text) { return reduce(parse_letters(text)); }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::span<const Letter> letters() const noexcept { return letters_; }
  Letter operator[](std::size_t i) const noexcept { return letters_[i]; }

  Word inverted() const;

  /// Reduced product in the free group.
  friend Word operator*(const Word& lhs, const Word& rhs);

  std::string str() const { return to_string(letters_); }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) {
    return lhs.letters_ <=> rhs.letters_;
  }

 private:
  friend class CyclicWord;
  std::vector<Letter> letters_;  // invariant: freely reduced
};

/// w^n for n in Z (n = 0 gives the identity).
Word pow(const Word& w, int n);

/// A nonempty cyclically reduced word stored in its lexicographically least
/// rotation, representing a conjugacy class of the free group (equivalently a
/// free homotopy class of an essential closed curve).
class CyclicWord {
 public:
  /// Strips matching first/last inverse pairs after free reduction.
  /// Throws ParseError when the input reduces to the identity.
  static CyclicWord cyclic_reduce(const Word& w);
  static CyclicWord parse(std::string_view text) { return cyclic_reduce(Word::parse(text)); }

  std::size_t length() const noexcept { return letters_.size(); }
  std::span<const Letter> letters() const noexcept { return letters_; }
  Letter at(std::size_t i) const noexcept { return letters_[i % letters_.size()]; }

  /// Rotation starting at position `start` (0-based), as a reduced Word.
  Word rotation(std::size_t start) const;

  /// The first `count` letters of the stored rotation, count in [0, L].
  Word prefix(std::size_t count) const;  // throws Error on out-of-range

  /// All L rotations in order, each cyclically reduced.
  std::vector<Word> shifts() const;

  CyclicWord inverted() const;

  /// True iff the word is not a proper power u^m, m >= 2.
  bool primitive() const;

  /// Representative of {rotations of w} ∪ {rotations of inverse(w)}:
  /// the lexicographically least under the internal letter order.
  CyclicWord canonical_class() const;

  std::string str() const { return to_string(letters_); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend std::strong_ordering operator<=>(const CyclicWord& lhs, const CyclicWord& rhs) {
    return lhs.letters_ <=> rhs.letters_;
  }

 private:
  explicit CyclicWord(std::vector<Letter> canonical) : letters_(std::move(canonical)) {}
  std::vector<Letter> letters_;  // invariant: cyclically reduced, least rotation
};

/// Index of the lexicographically least rotation (Booth).
std::size_t least_rotation(std::span<const Letter> letters);

}  // namespace geolab
