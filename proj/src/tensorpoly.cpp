#include "hopfcell/tensorpoly.hpp"

#include "hopfcell/parse.hpp"

#include <algorithm>

namespace hopfcell {

NCPoly PresentedAlgebra::parse(const std::string& src) const {
  return nf(parse_poly(src, alphabet, ctx));
}

int TensorPoly::cmp_key(const Key& a, const Key& b) const {
  int c = word_cmp(*left_->alphabet, a.first, b.first);
  if (c != 0) return c;
  return word_cmp(*right_->alphabet, a.second, b.second);
}

void TensorPoly::add_irreducible(Word u, Word v, const Scalar& c) {
  if (c.is_zero()) return;
  Key key{std::move(u), std::move(v)};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [&](const Term& t, const Key& k) { return cmp_key(t.first, k) < 0; });
  if (it != terms_.end() && it->first == key) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, Term{std::move(key), c});
  }
}

void TensorPoly::add(const Word& u, const Word& v, const Scalar& c) {
  if (c.is_zero()) return;
  NCPoly nu = normal_form(left_->rws, u);
  NCPoly nv = normal_form(right_->rws, v);
  for (const auto& [wu, cu] : nu.terms())
    for (const auto& [wv, cv] : nv.terms()) add_irreducible(wu, wv, c * cu * cv);
}

void TensorPoly::add(const NCPoly& u, const NCPoly& v, const Scalar& c) {
  if (c.is_zero()) return;
  NCPoly nu = left_->nf(u);
  NCPoly nv = right_->nf(v);
  for (const auto& [wu, cu] : nu.terms())
    for (const auto& [wv, cv] : nv.terms()) add_irreducible(wu, wv, c * cu * cv);
}

TensorPoly TensorPoly::operator-() const {
  TensorPoly r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

TensorPoly operator+(const TensorPoly& a, const TensorPoly& b) {
  TensorPoly r = a.terms_.empty() ? b : a;
  if (a.terms_.empty()) return r;
  for (const auto& [k, c] : b.terms_) r.add_irreducible(k.first, k.second, c);
  return r;
}

TensorPoly operator-(const TensorPoly& a, const TensorPoly& b) { return a + (-b); }

TensorPoly operator*(const TensorPoly& a, const TensorPoly& b) {
  TensorPoly r(a.left_ ? a.left_ : b.left_, a.right_ ? a.right_ : b.right_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r.add(ka.first * kb.first, ka.second * kb.second, ca * cb);
  return r;
}

TensorPoly operator*(const Scalar& c, const TensorPoly& a) {
  TensorPoly r(a.left_, a.right_);
  if (c.is_zero()) return r;
  r.terms_ = a.terms_;
  for (auto& [k, s] : r.terms_) s = c * s;
  return r;
}

std::string TensorPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (neg) cs = cs.substr(1);
    if (cs != "1") {
      Scalar abs_c = neg ? -c : c;
      out += abs_c.needs_parens() ? "(" + cs + ")*" : cs + "*";
    }
    out += word_str(*left_->alphabet, k.first) + "#" + word_str(*right_->alphabet, k.second);
  }
  return out;
}

void TriplePoly::add(const NCPoly& a, const NCPoly& b, const NCPoly& c, const Scalar& s) {
  if (s.is_zero()) return;
  NCPoly na = alg_->nf(a), nb = alg_->nf(b), nc = alg_->nf(c);
  for (const auto& [wa, ca] : na.terms())
    for (const auto& [wb, cb] : nb.terms())
      for (const auto& [wc, cc] : nc.terms()) {
        Key key{wa, wb, wc};
        Scalar coeff = s * ca * cb * cc;
        auto cmp = [&](const Key& x, const Key& y) {
          for (int i = 0; i < 3; ++i) {
            int c2 = word_cmp(*alg_->alphabet, x[i], y[i]);
            if (c2 != 0) return c2;
          }
          return 0;
        };
        auto it = std::lower_bound(
            terms_.begin(), terms_.end(), key,
            [&](const Term& t, const Key& k) { return cmp(t.first, k) < 0; });
        if (it != terms_.end() && it->first == key) {
          it->second += coeff;
          if (it->second.is_zero()) terms_.erase(it);
        } else {
          terms_.insert(it, Term{key, coeff});
        }
      }
}

TriplePoly operator-(const TriplePoly& a, const TriplePoly& b) {
  TriplePoly r = a.terms_.empty() ? b : a;
  if (a.terms_.empty()) {
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }
  for (const auto& [k, c] : b.terms_) {
    NCPoly pa = NCPoly::monomial(r.alg_->alphabet, k[0], Scalar::integer(r.alg_->ctx, 1));
    NCPoly pb = NCPoly::monomial(r.alg_->alphabet, k[1], Scalar::integer(r.alg_->ctx, 1));
    NCPoly pc = NCPoly::monomial(r.alg_->alphabet, k[2], Scalar::integer(r.alg_->ctx, 1));
    r.add(pa, pb, pc, -c);
  }
  return r;
}

std::string TriplePoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    if (!out.empty()) out += " + ";
    out += c.str() + "*" + word_str(*alg_->alphabet, k[0]) + "#" +
           word_str(*alg_->alphabet, k[1]) + "#" + word_str(*alg_->alphabet, k[2]);
  }
  return out;
}

}  // namespace hopfcell
