#pragma once

// The free involutive Hom-semigroup H(X) on a set of named generators.
//
// A word is a nonempty sequence of letters <x>^(k), k in {0,1}. The
// involution alpha flips every bit; the product is the twisted product
// with closed form
//
//   (l_1 ... l_i) <> w' = a(l_1) ... a(l_{i-1}) l_i  a^{i-1}(w').
//
// Words are immutable values.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace homfree {

/// Generator name, validated against `[A-Za-z_][A-Za-z0-9_]*`.
class GeneratorId {
 public:
  explicit GeneratorId(std::string name);

  const std::string& name() const noexcept { return name_; }

  static bool is_valid(std::string_view name) noexcept;

  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
  friend std::strong_ordering operator<=>(const GeneratorId& a, const GeneratorId& b) {
    return a.name_ <=> b.name_;
  }

 private:
  std::string name_;
};

/// <gen>^(bit). The bit is always stored reduced mod 2.
struct BracketedLetter {
  GeneratorId gen;
  std::uint8_t bit = 0;

  BracketedLetter(GeneratorId g, unsigned k) : gen(std::move(g)), bit(static_cast<std::uint8_t>(k & 1U)) {}

  BracketedLetter flipped() const { return BracketedLetter(gen, bit ^ 1U); }

  friend bool operator==(const BracketedLetter&, const BracketedLetter&) = default;
  // name first, bit as tiebreak (0 < 1)
  friend std::strong_ordering operator<=>(const BracketedLetter& a, const BracketedLetter& b) {
    if (auto c = a.gen <=> b.gen; c != 0) return c;
    return a.bit <=> b.bit;
  }
};

class Word {
 public:
  /// Throws EmptyWordError if `letters` is empty.
  explicit Word(std::vector<BracketedLetter> letters);

  std::size_t size() const noexcept { return letters_.size(); }
  std::span<const BracketedLetter> letters() const noexcept { return letters_; }
  const BracketedLetter& operator[](std::size_t i) const { return letters_[i]; }
  const BracketedLetter& front() const { return letters_.front(); }
  const BracketedLetter& back() const { return letters_.back(); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<BracketedLetter> letters_;
};

/// Graded lexicographic order: shorter words first, then letterwise.
struct GradedLexLess {
  bool operator()(const Word& a, const Word& b) const;
};

/// The inclusion X -> H(X).
Word embed(const GeneratorId& g);
Word embed(std::string_view name);

Word make_word(std::span<const BracketedLetter> letters);

std::size_t word_length(const Word& w) noexcept;

/// Plain concatenation in the underlying free semigroup on X~ (not the product).
Word concat(const Word& a, const Word& b);

/// alpha applied `times` times; only the parity matters.
Word alpha_word(const Word& w);
Word alpha_power(const Word& w, std::size_t times);

/// The product, by its defining recursion on the left factor.
Word diamond(const Word& w, const Word& w2);

/// The product, by the closed form. Kept independent of `diamond`.
Word diamond_closed(const Word& w, const Word& w2);

// Text form: `x` is bit 0, `[x]` is bit 1, atoms separated by single spaces.
std::string render(const BracketedLetter& l);
std::string render(const Word& w);

/// Inverse of render. Atoms may be separated by any run of whitespace.
Word parse_word(std::string_view text);

/// Every word of length 1..max_len over `alphabet`, graded-lex order.
std::vector<Word> all_words(std::span<const GeneratorId> alphabet, std::size_t max_len);

/// Words of exactly length `len` over `alphabet`.
std::vector<Word> words_of_length(std::span<const GeneratorId> alphabet, std::size_t len);

}  // namespace homfree
