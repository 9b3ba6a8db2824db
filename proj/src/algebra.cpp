#include "homfree/algebra.hpp"

#include <omp.h>

#include <cctype>
#include <vector>

#include "homfree/error.hpp"

namespace homfree {

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return ParseError("invalid rational literal '" + std::string(text) + "'", 1, 1); };
  const auto slash = text.find('/');
  auto digits = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  const auto num = text.substr(0, slash);
  if (!digits(num, true)) throw bad();
  using boost::multiprecision::cpp_int;
  if (slash == std::string_view::npos) return Rational(cpp_int(std::string(num)));
  const auto den = text.substr(slash + 1);
  if (!digits(den, false)) throw bad();
  cpp_int d{std::string(den)};
  if (d == 0) throw bad();
  return Rational(cpp_int(std::string(num)), d);
}

std::string render_rational(const Rational& r) {
  const auto& num = boost::multiprecision::numerator(r);
  const auto& den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

AlgebraElement::AlgebraElement(const Word& w, Rational coeff) {
  if (coeff != 0) terms_.emplace(w, std::move(coeff));
}

AlgebraElement AlgebraElement::from_terms(const std::vector<std::pair<Word, Rational>>& terms) {
  AlgebraElement out;
  for (const auto& [w, c] : terms) out.accumulate(w, c);
  return out;
}

Rational AlgebraElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::accumulate(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out = a;
  for (const auto& [w, c] : b.terms()) out.accumulate(w, c);
  return out;
}

AlgebraElement subtract(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out = a;
  for (const auto& [w, c] : b.terms()) out.accumulate(w, -c);
  return out;
}

AlgebraElement scale(const Rational& c, const AlgebraElement& a) {
  AlgebraElement out;
  if (c == 0) return out;
  for (const auto& [w, coeff] : a.terms()) out.accumulate(w, c * coeff);
  return out;
}

AlgebraElement alpha_alg(const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& [w, c] : a.terms()) out.accumulate(alpha_word(w), c);
  return out;
}

bool equals(const AlgebraElement& a, const AlgebraElement& b) { return a == b; }

namespace serial {

AlgebraElement diamond_alg(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) out.accumulate(diamond(u, v), cu * cv);
  }
  return out;
}

}  // namespace serial

namespace parallel {

// Each thread accumulates the products of a slice of the left terms; the
// partial sums are merged afterwards. Addition of exact rationals is
// associative, so the result equals the serial one.
AlgebraElement diamond_alg(const AlgebraElement& a, const AlgebraElement& b) {
  const std::vector<std::pair<Word, Rational>> left(a.terms().begin(), a.terms().end());
  const std::vector<std::pair<Word, Rational>> right(b.terms().begin(), b.terms().end());
  std::vector<AlgebraElement> partial;

#pragma omp parallel
  {
#pragma omp single
    partial.resize(static_cast<std::size_t>(omp_get_num_threads()));
    AlgebraElement& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(left.size()); ++i) {
      const auto& [u, cu] = left[i];
      for (const auto& [v, cv] : right) mine.accumulate(diamond(u, v), cu * cv);
    }
  }

  AlgebraElement out;
  for (const auto& p : partial) {
    for (const auto& [w, c] : p.terms()) out.accumulate(w, c);
  }
  return out;
}

}  // namespace parallel

AlgebraElement diamond_alg(const AlgebraElement& a, const AlgebraElement& b) {
  // below a few thousand term pairs the thread team is not worth starting
  if (a.size() * b.size() < 4096) return serial::diamond_alg(a, b);
  return parallel::diamond_alg(a, b);
}

std::string render(const AlgebraElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : a.terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1) out += render_rational(mag) + " . ";
    out += render(w);
    first = false;
  }
  return out;
}

}  // namespace homfree
