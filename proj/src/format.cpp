#include "exppell/format.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "exppell/error.hpp"

namespace exppell {

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  explicit Lexer(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& msg) {
    std::ostringstream os;
    os << msg << " at position " << pos;
    throw Error(ErrorCode::SyntaxError, os.str());
  }
  bool starts_ident(const std::string& kw) {
    skip_ws();
    if (s.compare(pos, kw.size(), kw) != 0) return false;
    size_t end = pos + kw.size();
    if (end < s.size() &&
        (std::isalnum(static_cast<unsigned char>(s[end])) || s[end] == '_'))
      return false;
    pos = end;
    return true;
  }
  Int nat() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected a number");
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    return Int(s.substr(start, pos - start));
  }
};

struct Parser {
  Lexer lex;

  explicit Parser(const std::string& text) : lex(text) {}

  ExpPoly parse() {
    ExpPoly e = expr();
    if (!lex.eof()) lex.fail("trailing input");
    return e;
  }

  ExpPoly expr() {
    bool neg = lex.accept('-');
    ExpPoly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (lex.accept('+'))
        acc += term();
      else if (lex.accept('-'))
        acc += -term();
      else
        return acc;
    }
  }

  ExpPoly term() {
    ExpPoly acc = factor();
    while (lex.accept('*')) acc *= factor();
    return acc;
  }

  ExpPoly factor() {
    ExpPoly base = atom();
    if (lex.accept('^')) {
      Int e = lex.nat();
      if (e > 100000) lex.fail("exponent too large");
      long k = e.convert_to<long>();
      ExpPoly r = ExpPoly::one();
      ExpPoly b = base;
      for (; k > 0; k >>= 1) {
        if (k & 1) r *= b;
        if (k > 1) b *= b;
      }
      return r;
    }
    return base;
  }

  ExpPoly atom() {
    char c = lex.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int n = lex.nat();
      Rat r(n);
      if (lex.accept('/')) {
        Int d = lex.nat();
        if (d == 0) lex.fail("zero denominator");
        r = Rat(n, d);
      }
      if (lex.accept('i'))
        return ExpPoly::from_poly(Poly(GRat(Rat(0), r)));
      return ExpPoly::from_poly(Poly(GRat(r)));
    }
    if (lex.starts_ident("exp")) {
      lex.expect('(');
      ExpPoly arg = expr();
      lex.expect(')');
      if (!arg.is_poly())
        lex.fail("exponent of exp must be a polynomial");
      return ExpPoly::exp_of(arg.poly_part());
    }
    if (lex.starts_ident("i"))
      return ExpPoly::from_poly(Poly(GRat(Rat(0), Rat(1))));
    if (lex.starts_ident("z"))
      return ExpPoly::from_poly(Poly::var());
    if (lex.accept('(')) {
      ExpPoly e = expr();
      lex.expect(')');
      return e;
    }
    if (lex.accept('-')) return -atom();
    lex.fail("expected a value");
  }
};

std::string rat_body(const Rat& r) { return rat_to_string(r); }

// Coefficient text without any leading sign; `neg` reports whether the
// caller should render a minus.
std::string coeff_body(const GRat& c, bool* neg) {
  *neg = false;
  if (c.im == 0) {
    if (c.re < 0) {
      *neg = true;
      return rat_body(-c.re);
    }
    return rat_body(c.re);
  }
  std::ostringstream os;
  os << '(';
  if (c.re != 0) {
    os << rat_body(c.re) << (c.im < 0 ? " - " : " + ");
    Rat a = c.im < 0 ? Rat(-c.im) : c.im;
    if (a != 1) os << rat_body(a);
    os << "i)";
  } else {
    if (c.im < 0) *neg = true;
    Rat a = c.im < 0 ? Rat(-c.im) : c.im;
    if (a != 1) os << rat_body(a);
    os << "i)";
  }
  return os.str();
}

struct Piece {
  bool neg;
  std::string body;
};

std::string join(const std::vector<Piece>& pieces) {
  if (pieces.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0) {
      if (pieces[i].neg) os << '-';
    } else {
      os << (pieces[i].neg ? " - " : " + ");
    }
    os << pieces[i].body;
  }
  return os.str();
}

Piece poly_term_piece(int k, const GRat& c) {
  bool neg = false;
  std::string cs = coeff_body(c, &neg);
  std::ostringstream os;
  if (k == 0) {
    os << cs;
  } else {
    if (cs != "1") os << cs << '*';
    os << 'z';
    if (k > 1) os << '^' << k;
  }
  return {neg, os.str()};
}

std::vector<Piece> poly_pieces(const Poly& p) {
  std::vector<Piece> pieces;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    pieces.push_back(poly_term_piece(it->first, it->second));
  return pieces;
}

// A polynomial coefficient in front of exp(...): single monomials attach
// with '*', anything else gets parenthesized.
Piece exp_coeff_piece(const Poly& p, const std::string& exp_str) {
  if (p == Poly::one()) return {false, exp_str};
  if (p == Poly(-1)) return {true, exp_str};
  if (p.terms().size() == 1) {
    Piece t = poly_term_piece(p.terms().begin()->first,
                              p.terms().begin()->second);
    return {t.neg, t.body + "*" + exp_str};
  }
  return {false, "(" + to_string(p) + ")*" + exp_str};
}

}  // namespace

ExpPoly parse_exppoly(const std::string& text) {
  return Parser(text).parse();
}

Poly parse_poly(const std::string& text) {
  ExpPoly e = Parser(text).parse();
  if (!e.is_poly())
    throw Error(ErrorCode::SyntaxError, "expected a polynomial");
  return e.poly_part();
}

std::string to_string(const GRat& c) {
  bool neg = false;
  std::string body = coeff_body(c, &neg);
  return neg ? "-" + body : body;
}

std::string to_string(const Poly& p) { return join(poly_pieces(p)); }

std::string to_string(const ExpPoly& e) {
  std::vector<Piece> pieces;
  for (const auto& t : e.terms()) {
    if (t.exponent.is_zero()) {
      auto pp = poly_pieces(t.coeff);
      pieces.insert(pieces.end(), pp.begin(), pp.end());
    } else {
      pieces.push_back(
          exp_coeff_piece(t.coeff, "exp(" + to_string(t.exponent) + ")"));
    }
  }
  return join(pieces);
}

}  // namespace exppell
