#include "homfree/terms.hpp"

#include <algorithm>
#include <cctype>

#include "homfree/error.hpp"

namespace homfree {

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

bool GeneratorId::is_valid(std::string_view name) noexcept {
  if (name.empty() || !is_name_start(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(), is_name_char);
}

GeneratorId::GeneratorId(std::string name) : name_(std::move(name)) {
  if (!is_valid(name_)) throw NameFormatError("invalid generator name '" + name_ + "'");
}

Word::Word(std::vector<BracketedLetter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw EmptyWordError();
}

bool GradedLexLess::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.letters().begin(), a.letters().end(), b.letters().begin(),
                                      b.letters().end());
}

Word embed(const GeneratorId& g) { return Word({BracketedLetter(g, 0)}); }

Word embed(std::string_view name) { return embed(GeneratorId(std::string(name))); }

Word make_word(std::span<const BracketedLetter> letters) {
  return Word(std::vector<BracketedLetter>(letters.begin(), letters.end()));
}

std::size_t word_length(const Word& w) noexcept { return w.size(); }

Word concat(const Word& a, const Word& b) {
  std::vector<BracketedLetter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.letters().begin(), a.letters().end());
  out.insert(out.end(), b.letters().begin(), b.letters().end());
  return Word(std::move(out));
}

Word alpha_word(const Word& w) {
  std::vector<BracketedLetter> out;
  out.reserve(w.size());
  for (const auto& l : w.letters()) out.push_back(l.flipped());
  return Word(std::move(out));
}

Word alpha_power(const Word& w, std::size_t times) { return times % 2 == 0 ? w : alpha_word(w); }

namespace {

// l_1 ... l_i <> w' with i >= 2 is <l_1 flipped> (l_2 ... l_i <> a(w')).
// `done` collects the emitted prefix; `rest` indexes the remaining left factor.
Word diamond_rec(std::vector<BracketedLetter> done, std::span<const BracketedLetter> rest,
                 const Word& right) {
  if (rest.size() == 1) {
    done.push_back(rest.front());
    done.insert(done.end(), right.letters().begin(), right.letters().end());
    return Word(std::move(done));
  }
  done.push_back(rest.front().flipped());
  return diamond_rec(std::move(done), rest.subspan(1), alpha_word(right));
}

}  // namespace

Word diamond(const Word& w, const Word& w2) {
  std::vector<BracketedLetter> prefix;
  prefix.reserve(w.size() + w2.size());
  return diamond_rec(std::move(prefix), w.letters(), w2);
}

Word diamond_closed(const Word& w, const Word& w2) {
  const std::size_t i = w.size();
  const unsigned twist = static_cast<unsigned>((i - 1) % 2);
  std::vector<BracketedLetter> out;
  out.reserve(i + w2.size());
  for (std::size_t p = 0; p < i; ++p) {
    const auto& l = w[p];
    out.emplace_back(l.gen, p + 1 < i ? l.bit ^ 1U : l.bit);
  }
  for (const auto& l : w2.letters()) out.emplace_back(l.gen, l.bit ^ twist);
  return Word(std::move(out));
}

std::string render(const BracketedLetter& l) {
  return l.bit ? "[" + l.gen.name() + "]" : l.gen.name();
}

std::string render(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += render(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  std::vector<BracketedLetter> letters;
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError("word literal, column " + std::to_string(pos + 1) + ": " + msg, 1, pos + 1);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_name = [&]() -> std::string {
    const std::size_t start = pos;
    if (pos >= text.size() || !is_name_start(text[pos])) throw fail("expected generator name");
    while (pos < text.size() && is_name_char(text[pos])) ++pos;
    return std::string(text.substr(start, pos - start));
  };

  skip_ws();
  while (pos < text.size()) {
    if (!letters.empty() && !std::isspace(static_cast<unsigned char>(text[pos - 1])))
      throw fail("atoms must be separated by whitespace");
    if (text[pos] == '[') {
      ++pos;
      auto name = read_name();
      if (pos >= text.size() || text[pos] != ']') throw fail("expected ']'");
      ++pos;
      letters.emplace_back(GeneratorId(std::move(name)), 1);
    } else {
      letters.emplace_back(GeneratorId(read_name()), 0);
    }
    skip_ws();
  }
  if (letters.empty()) throw EmptyWordError();
  return Word(std::move(letters));
}

std::vector<Word> words_of_length(std::span<const GeneratorId> alphabet, std::size_t len) {
  std::vector<Word> out;
  if (alphabet.empty() || len == 0) return out;
  std::vector<BracketedLetter> letters;
  for (const auto& g : alphabet) {
    letters.emplace_back(g, 0);
    letters.emplace_back(g, 1);
  }
  std::sort(letters.begin(), letters.end());
  // odometer over letter indices
  std::vector<std::size_t> digits(len, 0);
  while (true) {
    std::vector<BracketedLetter> w;
    w.reserve(len);
    for (auto d : digits) w.push_back(letters[d]);
    out.emplace_back(std::move(w));
    std::size_t k = len;
    while (k > 0 && ++digits[k - 1] == letters.size()) digits[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

std::vector<Word> all_words(std::span<const GeneratorId> alphabet, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    auto layer = words_of_length(alphabet, len);
    out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
  }
  return out;
}

}  // namespace homfree
