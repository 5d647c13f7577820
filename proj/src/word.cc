#include "pgrowth/word.h"

#include <algorithm>
#include <cctype>

#include "pgrowth/error.h"

namespace pgrowth {

void Word::append(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

Word Word::freely_reduced() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (const Letter& letter : letters_) {
    if (!out.empty() && out.back() == letter.inverted())
      out.pop_back();
    else
      out.push_back(letter);
  }
  return Word(std::move(out));
}

std::string Word::key() const {
  std::string out;
  out.reserve(letters_.size() * 2);
  for (const Letter& letter : letters_) {
    std::uint32_t code = (static_cast<std::uint32_t>(letter.generator) << 1) | (letter.inverse ? 1u : 0u);
    // Codes below 128 take one byte; larger ones are escaped into two.
    if (code < 0x80) {
      out.push_back(static_cast<char>(code));
    } else {
      out.push_back(static_cast<char>(0x80 | (code >> 8)));
      out.push_back(static_cast<char>(code & 0xff));
    }
  }
  return out;
}

Word operator*(const Word& lhs, const Word& rhs) {
  Word out = lhs;
  out.append(rhs);
  return out;
}

Word inverse_word(const Word& word) {
  std::vector<Letter> out;
  out.reserve(word.size());
  for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it) out.push_back(it->inverted());
  return Word(std::move(out));
}

namespace {

class WordParser {
 public:
  WordParser(std::span<const std::string> symbols, std::string_view text) : symbols_(symbols), text_(text) {}

  Word parse() {
    Word word = parse_sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return word;
  }

 private:
  Word parse_sequence() {
    Word word;
    while (true) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ')') return word;
      Word item = parse_item();
      word.append(apply_exponent(std::move(item)));
    }
  }

  Word parse_item() {
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word inner = parse_sequence();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (c == '1') {
      ++pos_;
      return Word();
    }
    std::size_t best = symbols_.size();
    std::size_t best_length = 0;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      const std::string& symbol = symbols_[i];
      if (symbol.size() > best_length && text_.substr(pos_, symbol.size()) == symbol) {
        best = i;
        best_length = symbol.size();
      }
    }
    if (best == symbols_.size())
      throw Error(ErrorKind::UnknownSymbol, "no generator matches at position " + std::to_string(pos_) + " of '" +
                                                std::string(text_) + "'");
    pos_ += best_length;
    return Word({Letter{static_cast<std::uint16_t>(best), false}});
  }

  Word apply_exponent(Word base) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != '^') return base;
    ++pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("bad exponent");
    long exponent = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      exponent = exponent * 10 + (text_[pos_] - '0');
      if (exponent > 1'000'000) fail("exponent too large");
      ++pos_;
    }
    Word unit = negative ? inverse_word(base) : base;
    Word out;
    for (long i = 0; i < exponent; ++i) out.append(unit);
    return out;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorKind::ParseError, message + " in word '" + std::string(text_) + "'");
  }

  std::span<const std::string> symbols_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::span<const std::string> symbols, std::string_view text) {
  return WordParser(symbols, text).parse();
}

std::string format_word(std::span<const std::string> symbols, const Word& word) {
  if (word.empty()) return "1";
  bool spaced = std::any_of(symbols.begin(), symbols.end(), [](const std::string& s) { return s.size() != 1; });
  std::string out;
  for (const Letter& letter : word.letters()) {
    if (spaced && !out.empty()) out.push_back(' ');
    out += symbols[letter.generator];
    if (letter.inverse) out += "^-1";
  }
  return out;
}

}  // namespace pgrowth
