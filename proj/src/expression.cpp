#include "homfree/expression.hpp"

#include <cctype>
#include <optional>

#include "homfree/error.hpp"

namespace homfree {

namespace {

enum class Tok { Name, Int, Alpha, LBracket, RBracket, LParen, RParen, Star, Plus, Minus, Slash, Dot, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Name: return "name '" + t.text + "'";
    case Tok::Int: return "integer '" + t.text + "'";
    case Tok::End: return "end of input";
    default: return "'" + t.text + "'";
  }
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t k) {
    for (; k > 0; --k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t l = line, cl = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      std::string name(s.substr(i, j - i));
      out.push_back({name == "A" ? Tok::Alpha : Tok::Name, name, l, cl});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Int, std::string(s.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    Tok kind;
    switch (c) {
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '*': kind = Tok::Star; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '/': kind = Tok::Slash; break;
      case '.': kind = Tok::Dot; break;
      default:
        throw ParseError(std::to_string(l) + ":" + std::to_string(cl) + ": unexpected character '" +
                             std::string(1, c) + "'",
                         l, cl);
    }
    out.push_back({kind, std::string(1, c), l, cl});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

ExprPtr make(Expr::Atom a, const Token& at) {
  return std::make_shared<const Expr>(Expr{std::move(a), at.line, at.column});
}

template <typename Node>
ExprPtr make(Node n, std::size_t line, std::size_t col) {
  return std::make_shared<const Expr>(Expr{std::move(n), line, col});
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExprPtr parse() {
    auto e = expr();
    if (peek().kind != Tok::End) fail({"'+'", "'-'", "'*'", "end of input"});
    return e;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& take() { return toks_[pos_++]; }

  [[noreturn]] void fail(std::initializer_list<const char*> expected) const {
    const auto& t = peek();
    std::string msg = std::to_string(t.line) + ":" + std::to_string(t.column) + ": expected ";
    std::size_t i = 0;
    if (expected.size() > 1) msg += "one of ";
    for (const char* e : expected) {
      if (i++) msg += ", ";
      msg += e;
    }
    msg += "; found " + describe(t);
    throw ParseError(msg, t.line, t.column);
  }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail({what});
    return take();
  }

  ExprPtr expr() {
    const auto& start = peek();
    Expr::Sum sum;
    bool negated = false;
    if (peek().kind == Tok::Minus) {
      take();
      negated = true;
    }
    sum.terms.emplace_back(negated, term());
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      negated = take().kind == Tok::Minus;
      sum.terms.emplace_back(negated, term());
    }
    if (sum.terms.size() == 1 && !sum.terms.front().first) return sum.terms.front().second;
    return make(std::move(sum), start.line, start.column);
  }

  ExprPtr term() {
    const auto& start = peek();
    std::optional<Rational> coeff;
    if (peek().kind == Tok::Int) {
      std::string lit = take().text;
      if (peek().kind == Tok::Slash) {
        take();
        lit += "/" + expect(Tok::Int, "positive integer").text;
      }
      expect(Tok::Dot, "'.'");
      try {
        coeff = parse_rational(lit);
      } catch (const ParseError&) {
        throw ParseError(std::to_string(start.line) + ":" + std::to_string(start.column) +
                             ": invalid scalar '" + lit + "'",
                         start.line, start.column);
      }
    }
    ExprPtr acc = factor();
    while (peek().kind == Tok::Star) {
      const auto& star = take();
      acc = make(Expr::Product{acc, factor()}, star.line, star.column);
    }
    if (coeff) return make(Expr::Scaled{std::move(*coeff), acc}, start.line, start.column);
    return acc;
  }

  bool at_atom() const { return peek().kind == Tok::Name || peek().kind == Tok::LBracket; }

  BracketedLetter atom() {
    if (peek().kind == Tok::LBracket) {
      take();
      const auto& name = expect(Tok::Name, "generator name");
      expect(Tok::RBracket, "']'");
      return BracketedLetter(GeneratorId(name.text), 1);
    }
    return BracketedLetter(GeneratorId(take().text), 0);
  }

  ExprPtr factor() {
    const auto& start = peek();
    switch (start.kind) {
      case Tok::Name:
      case Tok::LBracket: {
        std::vector<BracketedLetter> letters;
        letters.push_back(atom());
        while (at_atom()) letters.push_back(atom());
        if (letters.size() == 1) return make(Expr::Atom{std::move(letters.front())}, start);
        return make(Expr::Literal{Word(std::move(letters))}, start.line, start.column);
      }
      case Tok::Alpha: {
        take();
        expect(Tok::LParen, "'(' after A");
        auto inner = expr();
        expect(Tok::RParen, "')'");
        return make(Expr::Alpha{inner}, start.line, start.column);
      }
      case Tok::LParen: {
        take();
        auto inner = expr();
        expect(Tok::RParen, "')'");
        return make(Expr::Paren{inner}, start.line, start.column);
      }
      default: fail({"generator name", "'['", "'A('", "'('"});
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

ExprPtr parse_expression(std::string_view text) {
  auto toks = tokenize(text);
  if (toks.size() == 1) throw EmptyWordError();
  return Parser(std::move(toks)).parse();
}

bool is_word_expression(const Expr& e) {
  return std::visit(overloaded{
                        [](const Expr::Atom&) { return true; },
                        [](const Expr::Literal&) { return true; },
                        [](const Expr::Alpha& a) { return is_word_expression(*a.arg); },
                        [](const Expr::Product& p) {
                          return is_word_expression(*p.left) && is_word_expression(*p.right);
                        },
                        [](const Expr::Sum&) { return false; },
                        [](const Expr::Scaled&) { return false; },
                        [](const Expr::Paren& p) { return is_word_expression(*p.inner); },
                    },
                    e.node);
}

Word eval_word(const Expr& e) {
  auto mode_error = [&](const char* what) -> ModeError {
    return ModeError(std::to_string(e.line) + ":" + std::to_string(e.column) + ": " + what +
                     " not allowed in a word expression (use algebra mode)");
  };
  return std::visit(overloaded{
                        [](const Expr::Atom& a) { return Word({a.letter}); },
                        [](const Expr::Literal& l) { return l.word; },
                        [](const Expr::Alpha& a) { return alpha_word(eval_word(*a.arg)); },
                        [](const Expr::Product& p) { return diamond(eval_word(*p.left), eval_word(*p.right)); },
                        [&](const Expr::Sum&) -> Word { throw mode_error("sum"); },
                        [&](const Expr::Scaled&) -> Word { throw mode_error("scalar"); },
                        [](const Expr::Paren& p) { return eval_word(*p.inner); },
                    },
                    e.node);
}

AlgebraElement eval_algebra(const Expr& e) {
  return std::visit(overloaded{
                        [](const Expr::Atom& a) { return AlgebraElement(Word({a.letter})); },
                        [](const Expr::Literal& l) { return AlgebraElement(l.word); },
                        [](const Expr::Alpha& a) { return alpha_alg(eval_algebra(*a.arg)); },
                        [](const Expr::Product& p) {
                          return diamond_alg(eval_algebra(*p.left), eval_algebra(*p.right));
                        },
                        [](const Expr::Sum& s) {
                          AlgebraElement acc;
                          for (const auto& [neg, t] : s.terms) {
                            auto v = eval_algebra(*t);
                            acc = neg ? subtract(acc, v) : add(acc, v);
                          }
                          return acc;
                        },
                        [](const Expr::Scaled& s) { return scale(s.coeff, eval_algebra(*s.arg)); },
                        [](const Expr::Paren& p) { return eval_algebra(*p.inner); },
                    },
                    e.node);
}

std::string echo(const Expr& e) {
  return std::visit(overloaded{
                        [](const Expr::Atom& a) { return render(a.letter); },
                        [](const Expr::Literal& l) { return render(l.word); },
                        [](const Expr::Alpha& a) { return "A(" + echo(*a.arg) + ")"; },
                        [](const Expr::Product& p) { return "(" + echo(*p.left) + " * " + echo(*p.right) + ")"; },
                        [](const Expr::Sum& s) {
                          std::string out = "(";
                          for (std::size_t i = 0; i < s.terms.size(); ++i) {
                            const auto& [neg, t] = s.terms[i];
                            if (i) out += neg ? " - " : " + ";
                            else if (neg) out += "-";
                            out += echo(*t);
                          }
                          return out + ")";
                        },
                        [](const Expr::Scaled& s) {
                          return "(" + render_rational(s.coeff) + " . " + echo(*s.arg) + ")";
                        },
                        [](const Expr::Paren& p) { return echo(*p.inner); },
                    },
                    e.node);
}

std::string generating_expression(const Word& w) {
  auto letter = [](const BracketedLetter& l) { return l.bit ? "A(" + l.gen.name() + ")" : l.gen.name(); };
  std::string out = letter(w.back());
  for (std::size_t i = w.size() - 1; i-- > 0;) {
    out = letter(w[i]) + " * " + (i + 2 < w.size() ? "(" + out + ")" : out);
  }
  return out;
}

}  // namespace homfree
