#include <doctest.h>

#include <array>

#include "homfree/algebra.hpp"
#include "homfree/error.hpp"
#include "homfree/random.hpp"
#include "oracle.hpp"

using namespace homfree;
using oracle::w;

namespace {

AlgebraElement el(const char* word, Rational c = 1) { return AlgebraElement(w(word), std::move(c)); }

Rational q(long p, long d = 1) { return Rational(p, d); }

}  // namespace

TEST_CASE("rationals") {
  CHECK(parse_rational("3/6") == q(1, 2));
  CHECK(parse_rational("-4") == q(-4));
  CHECK(render_rational(q(-6, 4)) == "-3/2");
  CHECK(render_rational(q(0)) == "0");
  CHECK(render_rational(parse_rational("123456789012345678901234567890/2")) == "61728394506172839450617283945");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("add") {
  CHECK(add(el("x"), AlgebraElement{}) == el("x"));
  CHECK(add(el("x"), el("x", -1)).is_zero());
  CHECK(add(el("x", q(1, 2)), el("x", q(1, 3))) == el("x", q(5, 6)));
}

TEST_CASE("scale") {
  const auto a = add(el("x", q(1, 2)), el("[y] z", 3));
  CHECK(scale(0, a).is_zero());
  CHECK(scale(1, a) == a);
  CHECK(scale(2, el("x", q(1, 2))) == el("x"));
}

TEST_CASE("diamond_alg") {
  CHECK(diamond_alg(add(el("x"), el("y")), el("z")) == add(el("x z"), el("y z")));
  CHECK(diamond_alg(el("x"), el("x")) == el("x x"));
  CHECK(diamond_alg(el("x y"), el("z")) == el("[x] y [z]"));
  CHECK(diamond_alg(AlgebraElement{}, el("z")).is_zero());
}

TEST_CASE("alpha_alg") {
  CHECK(alpha_alg(el("x", 2)) == el("[x]", 2));
  CHECK(alpha_alg(add(el("x"), el("[y]"))) == add(el("[x]"), el("y")));
}

TEST_CASE("equals") {
  CHECK(equals(add(el("x"), el("y")), add(el("y"), el("x"))));
  CHECK_FALSE(equals(el("x"), el("x", 2)));
}

TEST_CASE("canonical form") {
  const auto a = AlgebraElement::from_terms({{w("x"), 1}, {w("x"), -1}, {w("y"), 0}, {w("z"), 2}});
  CHECK(a.size() == 1);
  CHECK(a.coefficient(w("z")) == 2);
  CHECK(a.coefficient(w("x")) == 0);
}

TEST_CASE("render") {
  CHECK(render(AlgebraElement{}) == "0");
  const auto a = AlgebraElement::from_terms(
      {{w("x y"), -2}, {w("[y] z"), q(5, 6)}, {w("x"), 1}, {w("[x]"), -1}, {w("b"), q(-1, 3)}});
  CHECK(render(a) == "-1/3 . b + x - [x] - 2 . x y + 5/6 . [y] z");
  CHECK(render(el("x", -1)) == "-x");
}

TEST_CASE("algebra laws on random combinations") {
  const std::array<GeneratorId, 3> abc{GeneratorId("a"), GeneratorId("b"), GeneratorId("c")};
  SplitMix64 rng(2024);
  auto rnd = [&] {
    AlgebraElement e;
    for (int i = 0; i < 3; ++i) {
      const long num = static_cast<long>(rng.below(19)) - 9;
      const long den = static_cast<long>(1 + rng.below(9));
      e.accumulate(random_word(rng, abc, 4), Rational(num, den));
    }
    return e;
  };
  for (int i = 0; i < 200; ++i) {
    const auto a = rnd(), a2 = rnd(), b = rnd(), c = rnd();
    const Rational k(static_cast<long>(rng.below(7)) - 3, 2);
    CHECK(diamond_alg(add(a, a2), b) == add(diamond_alg(a, b), diamond_alg(a2, b)));
    CHECK(diamond_alg(b, add(a, a2)) == add(diamond_alg(b, a), diamond_alg(b, a2)));
    CHECK(diamond_alg(scale(k, a), b) == scale(k, diamond_alg(a, b)));
    CHECK(diamond_alg(a, scale(k, b)) == scale(k, diamond_alg(a, b)));
    CHECK(alpha_alg(add(a, scale(k, b))) == add(alpha_alg(a), scale(k, alpha_alg(b))));
    CHECK(alpha_alg(alpha_alg(a)) == a);
    CHECK(alpha_alg(diamond_alg(a, b)) == diamond_alg(alpha_alg(a), alpha_alg(b)));
    CHECK(diamond_alg(alpha_alg(a), diamond_alg(b, c)) == diamond_alg(diamond_alg(a, b), alpha_alg(c)));
  }
}

TEST_CASE("basis compatibility") {
  const std::array<GeneratorId, 2> ab{GeneratorId("a"), GeneratorId("b")};
  const auto words = all_words(ab, 3);
  for (const auto& u : words) {
    CHECK(alpha_alg(AlgebraElement(u)) == AlgebraElement(alpha_word(u)));
    for (const auto& v : words) CHECK(diamond_alg(AlgebraElement(u), AlgebraElement(v)) == AlgebraElement(diamond(u, v)));
  }
}
