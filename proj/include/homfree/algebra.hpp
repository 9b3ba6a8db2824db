#pragma once

// kH(X): finite formal sums of words with exact rational coefficients. The
// product and alpha extend from H(X) bilinearly and linearly.

#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "homfree/terms.hpp"

namespace homfree {

/// Always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Accepts `p`, `-p`, `p/q` with q > 0.
Rational parse_rational(std::string_view text);
/// `p` when the denominator is 1, otherwise `p/q`.
std::string render_rational(const Rational& r);

class AlgebraElement {
 public:
  using Terms = std::map<Word, Rational, GradedLexLess>;

  AlgebraElement() = default;
  explicit AlgebraElement(const Word& w, Rational coeff = 1);

  /// Merges duplicates and drops zero coefficients.
  static AlgebraElement from_terms(const std::vector<std::pair<Word, Rational>>& terms);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coefficient(const Word& w) const;

  /// Adds c*w in place, erasing the entry if it cancels.
  void accumulate(const Word& w, const Rational& c);

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  Terms terms_;
};

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement subtract(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const Rational& c, const AlgebraElement& a);
AlgebraElement alpha_alg(const AlgebraElement& a);
AlgebraElement diamond_alg(const AlgebraElement& a, const AlgebraElement& b);
bool equals(const AlgebraElement& a, const AlgebraElement& b);

namespace serial {
AlgebraElement diamond_alg(const AlgebraElement& a, const AlgebraElement& b);
}
namespace parallel {
AlgebraElement diamond_alg(const AlgebraElement& a, const AlgebraElement& b);
}

/// Terms in graded-lex order: `x + 5/6 . [y] z - 2 . x y`. Zero renders as `0`.
std::string render(const AlgebraElement& a);

}  // namespace homfree
