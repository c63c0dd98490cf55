#include "hopfcell/parse.hpp"

#include <cctype>
#include <memory>

namespace hopfcell {

namespace {

enum class Tok { Int, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, Hash, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, src.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      out.push_back({Tok::Name, src.substr(i, j - i), i});
      i = j;
      continue;
    }
    Tok k;
    switch (ch) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '#': k = Tok::Hash; break;
      default:
        throw ParseError("unexpected character '" + std::string(1, ch) + "' at position " +
                         std::to_string(i));
    }
    out.push_back({k, std::string(1, ch), i});
    ++i;
  }
  out.push_back({Tok::End, "", src.size()});
  return out;
}

class Parser {
 public:
  Parser(const std::string& src, AlphabetPtr alph, FieldCtx ctx)
      : toks_(lex(src)), alph_(std::move(alph)), ctx_(ctx) {}

  const Token& peek() const { return toks_[i_]; }
  Token take() { return toks_[i_++]; }
  bool at(Tok k) const { return toks_[i_].kind == k; }

  void switch_alphabet(AlphabetPtr a) { alph_ = std::move(a); }

  NCPoly parse_expr() {
    NCPoly acc = parse_signed_term();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      bool minus = take().kind == Tok::Minus;
      NCPoly t = parse_term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  NCPoly parse_signed_term() {
    bool minus = false;
    while (at(Tok::Plus) || at(Tok::Minus)) minus ^= (take().kind == Tok::Minus);
    NCPoly t = parse_term();
    return minus ? -t : t;
  }

  NCPoly parse_term() {
    NCPoly acc = parse_factor();
    while (true) {
      if (at(Tok::Star)) {
        take();
        acc = acc * parse_factor();
      } else if (at(Tok::Slash)) {
        std::size_t pos = peek().pos;
        take();
        NCPoly d = parse_factor();
        acc = as_scalar(d, pos).inverse() * acc;
      } else if (at(Tok::Int) || at(Tok::Name) || at(Tok::LParen)) {
        acc = acc * parse_factor();  // juxtaposition
      } else {
        break;
      }
    }
    return acc;
  }

  NCPoly parse_factor() {
    const Token t = take();
    switch (t.kind) {
      case Tok::Int: {
        NCPoly base = NCPoly::constant(alph_, Scalar::integer(ctx_, Int(t.text)));
        long e;
        if (try_exponent(e)) return pow_poly(base, e, t.pos);
        return base;
      }
      case Tok::Name: {
        int g = alph_ ? alph_->index_of(t.text) : -1;
        if (g >= 0) {
          long e = 1;
          try_exponent(e);
          if (e == 0) return NCPoly::constant(alph_, Scalar::integer(ctx_, 1));
          std::int32_t letter = static_cast<std::int32_t>(g);
          if (e < 0) {
            std::int32_t inv = alph_->inverse_of(letter);
            if (inv < 0)
              throw ParseError("generator " + t.text + " has no inverse (position " +
                               std::to_string(t.pos) + ")");
            letter = inv;
            e = -e;
          }
          Word w;
          w.letters.assign(static_cast<std::size_t>(e), letter);
          return NCPoly::monomial(alph_, std::move(w), Scalar::integer(ctx_, 1));
        }
        if (t.text == "q" && ctx_.has_q()) {
          long e = 1;
          try_exponent(e);
          return NCPoly::constant(alph_, Scalar::q_power(ctx_, e));
        }
        throw ParseError("unknown generator name '" + t.text + "' at position " +
                         std::to_string(t.pos));
      }
      case Tok::LParen: {
        NCPoly inner = parse_expr();
        if (!at(Tok::RParen))
          throw ParseError("expected ')' at position " + std::to_string(peek().pos));
        take();
        long e;
        if (try_exponent(e)) return pow_poly(inner, e, t.pos);
        return inner;
      }
      default:
        throw ParseError("unexpected token '" + t.text + "' at position " +
                         std::to_string(t.pos));
    }
  }

  Scalar as_scalar(const NCPoly& p, std::size_t pos) const {
    if (p.is_zero()) return Scalar::integer(ctx_, 0);
    if (p.term_count() == 1 && p.terms()[0].first.empty()) return p.terms()[0].second;
    throw ParseError("expected a scalar value at position " + std::to_string(pos));
  }

  NCPoly pow_poly(const NCPoly& base, long e, std::size_t pos) {
    if (e < 0) return NCPoly::constant(alph_, as_scalar(base, pos).pow(e));
    NCPoly r = NCPoly::constant(alph_, Scalar::integer(ctx_, 1));
    for (long k = 0; k < e; ++k) r = r * base;
    return r;
  }

  bool try_exponent(long& e) {
    if (!at(Tok::Caret)) return false;
    take();
    bool neg = false;
    while (at(Tok::Minus)) {
      neg = !neg;
      take();
    }
    if (!at(Tok::Int))
      throw ParseError("expected integer exponent at position " + std::to_string(peek().pos));
    e = std::stol(take().text);
    if (neg) e = -e;
    return true;
  }

  void expect_end() const {
    if (!at(Tok::End))
      throw ParseError("trailing input at position " + std::to_string(peek().pos));
  }

 private:
  std::vector<Token> toks_;
  std::size_t i_ = 0;
  AlphabetPtr alph_;
  FieldCtx ctx_;
};

}  // namespace

NCPoly parse_poly(const std::string& src, AlphabetPtr alph, const FieldCtx& ctx) {
  Parser p(src, std::move(alph), ctx);
  NCPoly r = p.parse_expr();
  p.expect_end();
  return r;
}

Scalar parse_scalar(const std::string& src, const FieldCtx& ctx) {
  static const AlphabetPtr empty = std::make_shared<Alphabet>(std::vector<std::string>{});
  Parser p(src, empty, ctx);
  NCPoly r = p.parse_expr();
  p.expect_end();
  if (r.is_zero()) return Scalar::integer(ctx, 0);
  if (r.term_count() == 1 && r.terms()[0].first.empty()) return r.terms()[0].second;
  throw ParseError("expression is not a scalar: " + src);
}

std::vector<std::pair<NCPoly, NCPoly>> parse_tensor_terms(const std::string& src,
                                                          AlphabetPtr left,
                                                          AlphabetPtr right,
                                                          const FieldCtx& ctx) {
  Parser p(src, left, ctx);
  std::vector<std::pair<NCPoly, NCPoly>> out;
  bool first = true;
  while (true) {
    bool minus = false;
    if (first) {
      while (p.at(Tok::Plus) || p.at(Tok::Minus)) minus ^= (p.take().kind == Tok::Minus);
    } else {
      if (p.at(Tok::End)) break;
      if (!p.at(Tok::Plus) && !p.at(Tok::Minus))
        throw ParseError("expected '+' or '-' between tensor terms at position " +
                         std::to_string(p.peek().pos));
      minus = p.take().kind == Tok::Minus;
    }
    first = false;
    p.switch_alphabet(left);
    NCPoly l = p.parse_term();
    if (!p.at(Tok::Hash))
      throw ParseError("expected '#' in tensor term at position " +
                       std::to_string(p.peek().pos));
    p.take();
    p.switch_alphabet(right);
    NCPoly r = p.parse_term();
    if (minus) l = -l;
    out.emplace_back(std::move(l), std::move(r));
    if (p.at(Tok::End)) break;
  }
  return out;
}

}  // namespace hopfcell
