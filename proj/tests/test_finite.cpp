#include <doctest.h>

#include "homfree/error.hpp"
#include "homfree/finite.hpp"

using namespace homfree;

namespace {

using Labels = std::vector<std::string>;

FiniteHomMagma trivial() { return FiniteHomMagma({"e"}, {0}, {0}); }

// a.b = a on {a, b}
FiniteHomMagma left_zero(std::vector<Element> alpha = {0, 1}) {
  return FiniteHomMagma({"a", "b"}, {0, 0, 1, 1}, std::move(alpha));
}

// {0, 1} under multiplication
FiniteHomMagma min_semigroup() { return FiniteHomMagma({"0", "1"}, {0, 0, 0, 1}, {1, 0}); }

}  // namespace

TEST_CASE("fixtures carry the tables") {
  const auto h = fixture("hom_not_sg");
  const auto inv = fixture("involutive");
  const auto x = *h.find("x"), y = *h.find("y"), z = *h.find("z");
  CHECK(h.mul(x, x) == y);
  CHECK(h.mul(y, x) == y);
  CHECK(h.alpha(x) == z);
  CHECK(inv.mul(y, y) == x);
  CHECK(inv.alpha(x) == y);
  CHECK(inv.alpha(y) == x);
  CHECK(inv.alpha(z) == z);
  CHECK_THROWS_AS(fixture("nope"), PreconditionError);
}

TEST_CASE("construction rejects bad tables") {
  CHECK_THROWS_AS(FiniteHomMagma({"a", "a"}, {0, 0, 0, 0}, {0, 0}), PreconditionError);
  CHECK_THROWS_AS(FiniteHomMagma({"a"}, {1}, {0}), PreconditionError);
  CHECK_THROWS_AS(FiniteHomMagma({"a"}, {0}, {3}), PreconditionError);
  CHECK_THROWS_AS(FiniteHomMagma({"a", "b"}, {0, 0, 0}, {0, 0}), PreconditionError);
  CHECK_THROWS_AS(FiniteHomMagma({""}, {0}, {0}), PreconditionError);
}

TEST_CASE("check_hom_associative") {
  CHECK_FALSE(check_hom_associative(fixture("hom_not_sg")));
  CHECK_FALSE(check_hom_associative(fixture("involutive")));
  CHECK_FALSE(check_hom_associative(trivial()));
}

TEST_CASE("check_associative") {
  const auto h = fixture("hom_not_sg");
  // lexicographically first failing triple
  CHECK(check_associative(h) == Triple{0, 0, 0});
  // the triple (x, y, x) fails as well: (xy)x = xx = y, x(yx) = xy = x
  CHECK(h.mul(h.mul(0, 1), 0) == 1);
  CHECK(h.mul(0, h.mul(1, 0)) == 0);
  CHECK(check_associative(fixture("involutive")) == Triple{0, 0, 0});
  // Z/3
  CHECK_FALSE(check_associative(FiniteHomMagma({"0", "1", "2"}, {0, 1, 2, 1, 2, 0, 2, 0, 1}, {2, 0, 1})));
}

TEST_CASE("check_multiplicative") {
  CHECK_FALSE(check_multiplicative(fixture("involutive")));
  CHECK_FALSE(check_multiplicative(fixture("hom_not_sg")));
  // every product is a, alpha swaps: alpha(aa) = b but alpha(a)alpha(a) = a
  const FiniteHomMagma const_first({"a", "b"}, {0, 0, 0, 0}, {1, 0});
  CHECK(check_multiplicative(const_first) == Pair{0, 0});
}

TEST_CASE("check_involutive_alpha") {
  CHECK_FALSE(check_involutive_alpha(fixture("involutive")));
  CHECK(check_involutive_alpha(fixture("hom_not_sg")) == Element{0});
  CHECK_FALSE(check_involutive_alpha(left_zero()));
}

TEST_CASE("classify") {
  const auto r = classify(fixture("hom_not_sg"));
  CHECK(r.hom_associative());
  CHECK_FALSE(r.associative());
  CHECK(r.multiplicative());
  CHECK_FALSE(r.involutive_alpha());
  CHECK(*r.associative_witness == Labels{"x", "x", "x"});
  CHECK(*r.involutive_alpha_witness == Labels{"x"});
  CHECK_FALSE(r.hom_associative_witness);

  const auto inv = classify(fixture("involutive"));
  CHECK(inv.hom_associative());
  CHECK_FALSE(inv.associative());
  CHECK(inv.multiplicative());
  CHECK(inv.involutive_alpha());
  CHECK(inv.involutive_hom_semigroup());

  const auto t = classify(trivial());
  CHECK(t == LawReport{});
}

TEST_CASE("spot case in the involutive example") {
  const auto m = fixture("involutive");
  const Element x = 0, y = 1;
  CHECK(m.mul(m.alpha(x), m.mul(y, x)) == x);
  CHECK(m.mul(m.mul(x, y), m.alpha(x)) == x);
}

TEST_CASE("format_report") {
  CHECK(format_report(classify(fixture("hom_not_sg"))) ==
        "hom_associative   true\n"
        "associative       false  (x,x,x)\n"
        "multiplicative    true\n"
        "involutive_alpha  false  (x)\n");
}

TEST_CASE("has_zero") {
  CHECK(has_zero(fixture("hom_not_sg")) == Element{2});
  CHECK_FALSE(has_zero(trivial()));
  CHECK_FALSE(has_zero(left_zero()));
  CHECK(has_zero(min_semigroup()) == Element{0});
}

TEST_CASE("adjoin_zero") {
  SUBCASE("semigroup without zero grows by one") {
    const auto s0 = adjoin_zero(left_zero());
    REQUIRE(s0.order() == 3);
    CHECK(s0.label(2) == "0");
    CHECK(s0.alpha_map() == std::vector<Element>{2, 2, 2});
    CHECK(s0.mul(0, 1) == 0);
    CHECK(s0.mul(2, 1) == 2);
    CHECK(s0.mul(1, 2) == 2);
    CHECK_FALSE(check_hom_associative(s0));
    CHECK_FALSE(check_associative(s0));
    CHECK(has_zero(s0) == Element{2});
  }
  SUBCASE("existing zero keeps the carrier") {
    const auto s0 = adjoin_zero(min_semigroup());
    CHECK(s0.order() == 2);
    CHECK(s0.mul_table() == min_semigroup().mul_table());
    CHECK(s0.alpha_map() == std::vector<Element>{0, 0});
    CHECK_FALSE(check_hom_associative(s0));
    CHECK(adjoin_zero(s0) == s0);
  }
  SUBCASE("order 1 becomes order 2") {
    const auto s0 = adjoin_zero(trivial());
    CHECK(s0.order() == 2);
    CHECK_FALSE(check_hom_associative(s0));
  }
  SUBCASE("fresh label avoids collisions") {
    const FiniteHomMagma s({"0", "0'"}, {0, 0, 1, 1}, {0, 1});
    CHECK(adjoin_zero(s).label(2) == "0''");
  }
  SUBCASE("non-associative input") {
    try {
      adjoin_zero(fixture("hom_not_sg"));
      FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
      CHECK(std::string(e.what()).find("(x,x,x)") != std::string::npos);
    }
  }
}

TEST_CASE("relabel") {
  const auto m = fixture("involutive");
  const std::vector<Element> perm{2, 0, 1};
  const auto r = relabel(m, perm);
  CHECK(r.label(2) == "x");
  CHECK(r.mul(perm[1], perm[1]) == perm[m.mul(1, 1)]);
  // flags survive relabeling; witnesses need not, since index order changes
  const auto a = classify(r), b = classify(m);
  CHECK(a.hom_associative() == b.hom_associative());
  CHECK(a.associative() == b.associative());
  CHECK(a.multiplicative() == b.multiplicative());
  CHECK(a.involutive_alpha() == b.involutive_alpha());
  CHECK_THROWS_AS(relabel(m, std::vector<Element>{0, 0, 1}), PreconditionError);
}

TEST_CASE("structure json") {
  const auto m = fixture("hom_not_sg");
  CHECK(magma_from_json(magma_to_json(m)) == m);
  CHECK(magma_from_json(magma_to_json(m, 2)) == m);

  auto error_at = [](const char* text) -> std::pair<std::size_t, std::size_t> {
    try {
      magma_from_json(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(error_at(R"({"labels":["a","b"],"mul":[["a","b"],["a"]],"alpha":["a","b"]})") ==
        std::pair<std::size_t, std::size_t>{2, 2});
  CHECK(error_at(R"({"labels":["a","b"],"mul":[["a","b"],["a","q"]],"alpha":["a","b"]})") ==
        std::pair<std::size_t, std::size_t>{2, 2});
  CHECK(error_at(R"({"labels":["a"],"mul":[["a"]],"alpha":["c"]})") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK_THROWS_AS(magma_from_json("{"), ParseError);
  CHECK_THROWS_AS(magma_from_json(R"({"labels":["a"],"mul":[["a"]]})"), ParseError);
  CHECK_THROWS_AS(magma_from_json(R"({"labels":["a","a"],"mul":[["a","a"],["a","a"]],"alpha":["a","a"]})"),
                  ParseError);
}
