#include "mmlab/parse.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace mmlab {

namespace {

enum class Tok { End, Int, Ident, Plus, Minus, Star, Caret, LParen, RParen,
                 LBracket, RBracket, Comma, Semi, Equals };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, tok_.line, tok_.col);
  }

 private:
  void advance() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '#') {  // line comment
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
        continue;
      }
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
        continue;
      }
      break;
    }
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= s_.size()) {
      tok_ = Token{Tok::End, "", line_, col_};
      return;
    }
    char c = s_[pos_];
    auto single = [&](Tok k) {
      tok_ = Token{k, std::string(1, c), line_, col_};
      ++pos_;
      ++col_;
    };
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      tok_ = Token{Tok::Int, s_.substr(start, pos_ - start), line_, col_};
      col_ += int(pos_ - start);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '_'))
        ++pos_;
      tok_ = Token{Tok::Ident, s_.substr(start, pos_ - start), line_, col_};
      col_ += int(pos_ - start);
      return;
    }
    switch (c) {
      case '+': single(Tok::Plus); return;
      case '-': single(Tok::Minus); return;
      case '*': single(Tok::Star); return;
      case '^': single(Tok::Caret); return;
      case '(': single(Tok::LParen); return;
      case ')': single(Tok::RParen); return;
      case '[': single(Tok::LBracket); return;
      case ']': single(Tok::RBracket); return;
      case ',': single(Tok::Comma); return;
      case ';': single(Tok::Semi); return;
      case '=': single(Tok::Equals); return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'",
                         line_, col_);
    }
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

class PolyParser {
 public:
  PolyParser(Lexer& lex, const RingPtr& ring) : lex_(lex), ring_(ring) {}

  // expression := ['-'] term (('+'|'-') term)*
  Polynomial expression() {
    bool neg = false;
    if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      neg = true;
    }
    Polynomial acc = term();
    if (neg) acc = -acc;
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      bool minus = lex_.take().kind == Tok::Minus;
      Polynomial t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

 private:
  // term := factor ('*' factor)*
  Polynomial term() {
    Polynomial acc = factor();
    while (lex_.peek().kind == Tok::Star) {
      lex_.take();
      acc = acc * factor();
    }
    return acc;
  }

  // factor := base ('^' nonneg-int)?
  Polynomial factor() {
    Polynomial b = base();
    if (lex_.peek().kind == Tok::Caret) {
      lex_.take();
      Token e = lex_.peek();
      if (e.kind == Tok::Minus)
        lex_.fail("malformed exponent: negative exponents not allowed");
      if (e.kind != Tok::Int) lex_.fail("malformed exponent: integer expected");
      lex_.take();
      unsigned long n = std::stoul(e.text);
      Polynomial p = Polynomial::constant(ring_, ring_->field().one());
      for (unsigned long k = 0; k < n; ++k) p = p * b;
      return p;
    }
    return b;
  }

  // base := int | ident | '(' expression ')' | '-' base
  Polynomial base() {
    Token t = lex_.peek();
    switch (t.kind) {
      case Tok::Int: {
        lex_.take();
        return Polynomial::constant(ring_, Scalar(mpz_class(t.text)));
      }
      case Tok::Ident: {
        lex_.take();
        auto idx = ring_->var_index(t.text);
        if (!idx)
          throw ParseError("unknown identifier '" + t.text + "'", t.line,
                           t.col);
        return Polynomial::variable(ring_, *idx);
      }
      case Tok::LParen: {
        Token open = lex_.take();
        Polynomial e = expression();
        if (lex_.peek().kind != Tok::RParen)
          throw ParseError("unbalanced parentheses (opened here)", open.line,
                           open.col);
        lex_.take();
        return e;
      }
      case Tok::Minus: {
        lex_.take();
        return -base();
      }
      default:
        lex_.fail("expected integer, variable or '('");
    }
  }

  Lexer& lex_;
  const RingPtr& ring_;
};

const std::set<std::string> kKnownClaims = {
    "theorem1", "prop4",  "prop5",   "lemma2",    "lemma2_colon",
    "lemma3",   "prop6",  "heights", "identities", "all"};

RingPtr parse_ring_decl(Lexer& lex) {
  // after 'ring': Q[...] or Fp(7)[...]
  Token f = lex.take();
  if (f.kind != Tok::Ident) throw ParseError("expected field name", f.line, f.col);
  FieldSpec field = FieldSpec::rationals();
  if (f.text == "Q") {
    // rationals
  } else if (f.text == "Fp") {
    if (lex.take().kind != Tok::LParen)
      throw ParseError("expected '(' after Fp", f.line, f.col);
    Token p = lex.take();
    if (p.kind != Tok::Int) throw ParseError("expected prime", p.line, p.col);
    field = FieldSpec::prime_field(std::stoul(p.text));
    Token close = lex.take();
    if (close.kind != Tok::RParen)
      throw ParseError("expected ')'", close.line, close.col);
  } else {
    throw ParseError("unknown field '" + f.text + "' (expected Q or Fp(p))",
                     f.line, f.col);
  }
  Token open = lex.take();
  if (open.kind != Tok::LBracket)
    throw ParseError("expected '['", open.line, open.col);
  std::vector<std::string> vars;
  for (;;) {
    Token v = lex.take();
    if (v.kind != Tok::Ident)
      throw ParseError("expected variable name", v.line, v.col);
    vars.push_back(v.text);
    Token sep = lex.take();
    if (sep.kind == Tok::RBracket) break;
    if (sep.kind != Tok::Comma)
      throw ParseError("expected ',' or ']'", sep.line, sep.col);
  }
  return RingSpec::make(std::move(vars), field);
}

void expect_semi(Lexer& lex) {
  Token t = lex.take();
  if (t.kind != Tok::Semi) throw ParseError("expected ';'", t.line, t.col);
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  Lexer lex(text);
  PolyParser parser(lex, ring);
  Polynomial p = parser.expression();
  const Token& t = lex.peek();
  if (t.kind != Tok::End)
    throw ParseError("unexpected trailing input", t.line, t.col);
  return p;
}

const std::vector<Polynomial>* SessionFile::find_ideal(
    const std::string& name) const {
  for (const auto& [n, gens] : ideals)
    if (n == name) return &gens;
  return nullptr;
}

const Polynomial* SessionFile::find_poly(const std::string& name) const {
  for (const auto& [n, p] : polys)
    if (n == name) return &p;
  return nullptr;
}

SessionFile parse_session(const std::string& text) {
  Lexer lex(text);
  SessionFile session;
  std::set<std::string> names;
  while (lex.peek().kind != Tok::End) {
    Token kw = lex.take();
    if (kw.kind != Tok::Ident)
      throw ParseError("expected declaration keyword", kw.line, kw.col);
    if (kw.text == "ring") {
      if (session.ring)
        throw ParseError("ring redeclared", kw.line, kw.col);
      session.ring = parse_ring_decl(lex);
      expect_semi(lex);
    } else if (kw.text == "ideal" || kw.text == "poly") {
      if (!session.ring)
        throw ParseError("missing ring declaration before '" + kw.text + "'",
                         kw.line, kw.col);
      Token name = lex.take();
      if (name.kind != Tok::Ident)
        throw ParseError("expected name", name.line, name.col);
      if (!names.insert(name.text).second)
        throw ParseError("redeclaration of '" + name.text + "'", name.line,
                         name.col);
      Token eq = lex.take();
      if (eq.kind != Tok::Equals)
        throw ParseError("expected '='", eq.line, eq.col);
      PolyParser parser(lex, session.ring);
      if (kw.text == "poly") {
        session.polys.emplace_back(name.text, parser.expression());
        expect_semi(lex);
      } else {
        std::vector<Polynomial> gens;
        for (;;) {
          gens.push_back(parser.expression());
          Token sep = lex.take();
          if (sep.kind == Tok::Semi) break;
          if (sep.kind != Tok::Comma)
            throw ParseError("expected ',' or ';'", sep.line, sep.col);
        }
        session.ideals.emplace_back(name.text, std::move(gens));
      }
    } else if (kw.text == "task") {
      Token kind = lex.take();
      if (kind.kind != Tok::Ident)
        throw ParseError("expected task name", kind.line, kind.col);
      if (kind.text != "verify")
        throw ParseError("unknown task name '" + kind.text + "'", kind.line,
                         kind.col);
      Token claim = lex.take();
      if (claim.kind != Tok::Ident)
        throw ParseError("expected claim name", claim.line, claim.col);
      if (!kKnownClaims.count(claim.text))
        throw ParseError("unknown claim '" + claim.text + "'", claim.line,
                         claim.col);
      TaskDirective task;
      task.kind = kind.text;
      task.claim = claim.text;
      task.line = kind.line;
      while (lex.peek().kind == Tok::Ident) {
        Token key = lex.take();
        Token eq = lex.take();
        if (eq.kind != Tok::Equals)
          throw ParseError("expected '=' in task parameter", eq.line, eq.col);
        Token val = lex.take();
        if (val.kind != Tok::Int && val.kind != Tok::Ident)
          throw ParseError("expected task parameter value", val.line, val.col);
        task.params[key.text] = val.text;
      }
      expect_semi(lex);
      session.tasks.push_back(std::move(task));
    } else {
      throw ParseError("unknown declaration '" + kw.text + "'", kw.line,
                       kw.col);
    }
  }
  return session;
}

std::string render(const Scalar& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

std::string render(const Monomial& m, const RingPtr& ring) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << "*";
    os << ring->var_name(i);
    if (m[i] > 1) os << "^" << m[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

std::string render(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    Scalar c = t.coeff;
    bool negative = sgn(c) < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    Scalar a = abs(c);
    if (t.mono.is_one()) {
      os << render(a);
    } else {
      if (a != 1) os << render(a) << "*";
      os << render(t.mono, f.ring());
    }
    first = false;
  }
  return os.str();
}

std::string render_ideal(const std::vector<Polynomial>& gens) {
  std::ostringstream os;
  for (size_t i = 0; i < gens.size(); ++i) os << (i ? ", " : "") << render(gens[i]);
  return os.str();
}

std::string render_session(const SessionFile& s) {
  std::ostringstream os;
  os << "ring " << s.ring->to_string() << ";\n";
  for (const auto& [name, p] : s.polys)
    os << "poly " << name << " = " << render(p) << ";\n";
  for (const auto& [name, gens] : s.ideals)
    os << "ideal " << name << " = " << render_ideal(gens) << ";\n";
  for (const auto& t : s.tasks) {
    os << "task " << t.kind << " " << t.claim;
    for (const auto& [k, v] : t.params) os << " " << k << "=" << v;
    os << ";\n";
  }
  return os.str();
}

}  // namespace mmlab
