#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pgrowth {

struct Letter {
  std::uint16_t generator = 0;
  bool inverse = false;

  Letter inverted() const { return {generator, !inverse}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word over the generators of a group and their formal inverses.
/// The empty word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }

  void append(const Word& other);
  void push_back(Letter letter) { letters_.push_back(letter); }

  /// Cancels adjacent s s^-1 pairs; no relations are used.
  Word freely_reduced() const;
  /// Byte string identifying the letter sequence; used as a hash key.
  std::string key() const;

  friend Word operator*(const Word& lhs, const Word& rhs);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Reversed word with every letter inverted.
Word inverse_word(const Word& word);

/// Parses the text syntax: generator symbols (longest match), optional
/// whitespace, `^-1` or `^k` exponents, parentheses for grouping, and `1`
/// for the identity.
Word parse_word(std::span<const std::string> symbols, std::string_view text);

/// Inverse of parse_word. Single-character symbols are juxtaposed, longer ones
/// are space separated, and the empty word prints as "1".
std::string format_word(std::span<const std::string> symbols, const Word& word);

}  // namespace pgrowth
