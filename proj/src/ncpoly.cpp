#include "hopfcell/ncpoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hopfcell {

namespace {

void check_compatible(const NCPoly& a, const NCPoly& b) {
  if (a.alphabet() && b.alphabet() && !(*a.alphabet() == *b.alphabet()))
    throw std::invalid_argument("polynomials over different alphabets");
  if (!(a.ctx() == b.ctx()))
    throw FieldError("polynomials over different field contexts");
}

}  // namespace

NCPoly NCPoly::monomial(AlphabetPtr alph, Word w, Scalar coeff) {
  NCPoly p(std::move(alph), coeff.ctx());
  if (!coeff.is_zero()) p.terms_.emplace_back(std::move(w), std::move(coeff));
  return p;
}

NCPoly NCPoly::constant(AlphabetPtr alph, Scalar coeff) {
  return monomial(std::move(alph), Word::one(), std::move(coeff));
}

NCPoly NCPoly::generator(AlphabetPtr alph, FieldCtx ctx, std::int32_t g) {
  Scalar one = Scalar::integer(ctx, 1);
  return monomial(std::move(alph), Word::single(g), std::move(one));
}

int NCPoly::max_word_length() const {
  return terms_.empty() ? 0 : static_cast<int>(terms_.back().first.size());
}

Scalar NCPoly::coeff(const Word& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [&](const Term& t, const Word& key) {
                               return word_less(*alph_, t.first, key);
                             });
  if (it != terms_.end() && it->first == w) return it->second;
  return Scalar::integer(ctx_, 0);
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [&](const Term& t, const Word& key) {
                               return word_less(*alph_, t.first, key);
                             });
  if (it != terms_.end() && it->first == w) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, Term{w, c});
  }
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NCPoly operator+(const NCPoly& a, const NCPoly& b) {
  if (a.terms_.empty()) return b.terms_.empty() ? a : b;
  if (b.terms_.empty()) return a;
  check_compatible(a, b);
  NCPoly r(a.alph_ ? a.alph_ : b.alph_, a.ctx_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  const Alphabet& alph = *r.alph_;
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() ||
        (i < a.terms_.size() && word_less(alph, a.terms_[i].first, b.terms_[j].first))) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || word_less(alph, b.terms_[j].first, a.terms_[i].first)) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      Scalar c = a.terms_[i].second + b.terms_[j].second;
      if (!c.is_zero()) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
      ++i, ++j;
    }
  }
  return r;
}

NCPoly operator-(const NCPoly& a, const NCPoly& b) { return a + (-b); }

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  check_compatible(a, b);
  NCPoly r(a.alph_ ? a.alph_ : b.alph_, a.ctx_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  struct Cmp {
    const Alphabet* alph;
    bool operator()(const Word& u, const Word& v) const { return word_less(*alph, u, v); }
  };
  std::map<Word, Scalar, Cmp> acc(Cmp{r.alph_.get()});
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa * wb;
      Scalar c = ca * cb;
      auto [it, fresh] = acc.emplace(std::move(w), c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  r.terms_.assign(acc.begin(), acc.end());
  return r;
}

NCPoly operator*(const Scalar& c, const NCPoly& a) {
  NCPoly r(a.alph_, a.ctx_);
  if (c.is_zero()) return r;
  r.terms_ = a.terms_;
  for (auto& [w, s] : r.terms_) s = c * s;
  return r;
}

bool NCPoly::operator==(const NCPoly& b) const {
  if (!(ctx_ == b.ctx_)) return false;
  return terms_ == b.terms_;
}

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [w, c] = *it;
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (neg) cs = cs.substr(1);
    bool coeff_is_one = (cs == "1");
    if (w.empty()) {
      out += coeff_is_one ? "1" : cs;
    } else {
      if (!coeff_is_one) {
        Scalar abs_c = neg ? -c : c;
        out += abs_c.needs_parens() ? "(" + cs + ")" : cs;
        out += "*";
      }
      out += word_str(*alph_, w);
    }
  }
  return out;
}

}  // namespace hopfcell
