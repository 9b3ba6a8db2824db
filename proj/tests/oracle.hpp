#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.

#include <cstdint>
#include <string>
#include <vector>

#include "homfree/terms.hpp"

namespace oracle {

// Straight-loop law checks on a raw n*n table and n-entry map.
struct Raw {
  std::size_t n;
  std::vector<std::uint32_t> mul;
  std::vector<std::uint32_t> alpha;
  std::uint32_t m(std::uint32_t a, std::uint32_t b) const { return mul[a * n + b]; }
};

inline bool hom_associative(const Raw& s) {
  for (std::uint32_t a = 0; a < s.n; ++a)
    for (std::uint32_t b = 0; b < s.n; ++b)
      for (std::uint32_t c = 0; c < s.n; ++c)
        if (s.m(s.alpha[a], s.m(b, c)) != s.m(s.m(a, b), s.alpha[c])) return false;
  return true;
}

inline bool associative(const Raw& s) {
  for (std::uint32_t a = 0; a < s.n; ++a)
    for (std::uint32_t b = 0; b < s.n; ++b)
      for (std::uint32_t c = 0; c < s.n; ++c)
        if (s.m(s.m(a, b), c) != s.m(a, s.m(b, c))) return false;
  return true;
}

inline bool multiplicative(const Raw& s) {
  for (std::uint32_t a = 0; a < s.n; ++a)
    for (std::uint32_t b = 0; b < s.n; ++b)
      if (s.alpha[s.m(a, b)] != s.m(s.alpha[a], s.alpha[b])) return false;
  return true;
}

inline bool involutive(const Raw& s) {
  for (std::uint32_t a = 0; a < s.n; ++a)
    if (s.alpha[s.alpha[a]] != a) return false;
  return true;
}

// All (table, map) pairs of order n, odometer order, first entry slowest.
template <typename Fn>
void for_each_structure(std::size_t n, Fn fn) {
  Raw s{n, std::vector<std::uint32_t>(n * n, 0), std::vector<std::uint32_t>(n, 0)};
  std::vector<std::uint32_t> digits(n * n + n, 0);
  while (true) {
    for (std::size_t i = 0; i < n * n; ++i) s.mul[i] = digits[i];
    for (std::size_t i = 0; i < n; ++i) s.alpha[i] = digits[n * n + i];
    fn(s);
    std::size_t k = digits.size();
    while (k > 0 && ++digits[k - 1] == n) digits[--k] = 0;
    if (k == 0) return;
  }
}

// alpha on H(X), letter by letter: each one-letter factor is flipped on its own.
inline homfree::Word alpha_letterwise(const homfree::Word& w) {
  std::vector<homfree::BracketedLetter> out;
  for (const auto& l : w.letters()) {
    homfree::BracketedLetter flipped = l;
    flipped.bit = static_cast<std::uint8_t>(flipped.bit == 0 ? 1 : 0);
    out.push_back(flipped);
  }
  return homfree::Word(std::move(out));
}

// Builds a word from text like "x [y] z" without using parse_word.
inline homfree::Word w(const std::string& text) {
  std::vector<homfree::BracketedLetter> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    const bool bracket = text[i] == '[';
    if (bracket) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != ']') ++j;
    out.emplace_back(homfree::GeneratorId(text.substr(i, j - i)), bracket ? 1U : 0U);
    i = bracket ? j + 1 : j;
  }
  return homfree::Word(std::move(out));
}

}  // namespace oracle
