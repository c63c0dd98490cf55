#include "hopfcell/scalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace hopfcell {

namespace {

Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

// ---------------------------------------------------------------- ZPoly

ZPoly::ZPoly(Int constant) {
  if (constant != 0) c.push_back(std::move(constant));
}

ZPoly ZPoly::monomial(Int coeff, std::size_t deg) {
  ZPoly p;
  if (coeff != 0) {
    p.c.assign(deg + 1, Int(0));
    p.c[deg] = std::move(coeff);
  }
  return p;
}

void ZPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

ZPoly operator-(const ZPoly& a) {
  ZPoly r = a;
  for (auto& x : r.c) x = -x;
  return r;
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  ZPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

Int content(const ZPoly& a) {
  Int g = 0;
  for (const auto& x : a.c) g = gcd_int(g, x);
  if (!a.is_zero() && a.lc() < 0) g = -g;
  return g;
}

namespace {

ZPoly divide_by_int(const ZPoly& a, const Int& d) {
  ZPoly r = a;
  for (auto& x : r.c) {
    if (x % d != 0) throw FieldError("non-exact integer division in Z[q]");
    x /= d;
  }
  return r;
}

// Pseudo-remainder of a by b (b nonzero); result is c*a mod b for some
// integer c != 0, which is all the primitive-part gcd needs.
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
  const int db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    const int shift = a.degree() - db;
    const Int la = a.lc(), lb = b.lc();
    ZPoly scaled;
    scaled.c.assign(a.c.size(), Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) scaled.c[i] = a.c[i] * lb;
    for (std::size_t i = 0; i < b.c.size(); ++i) scaled.c[i + shift] -= la * b.c[i];
    scaled.trim();
    a = std::move(scaled);
  }
  return a;
}

ZPoly primitive_part(const ZPoly& a) {
  if (a.is_zero()) return a;
  return divide_by_int(a, content(a));
}

}  // namespace

ZPoly divide_exact(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw FieldError("polynomial division by zero");
  if (a.is_zero()) return {};
  // Long division over Q, then certify the quotient is integral and exact.
  std::vector<Rat> rem(a.c.begin(), a.c.end());
  const int db = b.degree();
  std::vector<Rat> quot(a.c.size(), Rat(0));
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    if (rem[i] == 0) continue;
    Rat f = rem[i] / Rat(b.lc());
    quot[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * Rat(b.c[j]);
  }
  for (const auto& r : rem)
    if (r != 0) throw FieldError("non-exact polynomial division in Z[q]");
  ZPoly q;
  q.c.resize(quot.size());
  for (std::size_t i = 0; i < quot.size(); ++i) {
    if (denominator(quot[i]) != 1) throw FieldError("non-integral quotient in Z[q]");
    q.c[i] = numerator(quot[i]);
  }
  q.trim();
  return q;
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero()) {
    ZPoly r = b;
    if (!r.is_zero() && r.lc() < 0) r = -r;
    return r;
  }
  if (b.is_zero()) {
    ZPoly r = a;
    if (r.lc() < 0) r = -r;
    return r;
  }
  Int ca = content(a), cb = content(b);
  if (ca < 0) ca = -ca;
  if (cb < 0) cb = -cb;
  ZPoly pa = primitive_part(a), pb = primitive_part(b);
  while (!pb.is_zero()) {
    ZPoly r = pseudo_rem(pa, pb);
    pa = std::move(pb);
    pb = primitive_part(r);
  }
  ZPoly g;
  Int cg = gcd_int(ca, cb);
  g.c.resize(pa.c.size());
  for (std::size_t i = 0; i < pa.c.size(); ++i) g.c[i] = pa.c[i] * cg;
  return g;
}

std::string to_string(const ZPoly& a, const std::string& var) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = a.degree(); i >= 0; --i) {
    const Int& coeff = a.c[i];
    if (coeff == 0) continue;
    Int abs_coeff = coeff < 0 ? Int(-coeff) : coeff;
    if (first) {
      if (coeff < 0) os << "-";
      first = false;
    } else {
      os << (coeff < 0 ? "-" : "+");
    }
    if (i == 0) {
      os << abs_coeff;
    } else {
      if (abs_coeff != 1) os << abs_coeff << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

ZPoly cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
  static std::map<unsigned, ZPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // q^n - 1
  ZPoly num = ZPoly::monomial(1, n) - ZPoly(Int(1));
  ZPoly den(Int(1));
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto jt = cache.find(d);
    ZPoly phi_d;
    if (jt != cache.end()) {
      phi_d = jt->second;
    } else {
      ZPoly nd = ZPoly::monomial(1, d) - ZPoly(Int(1));
      ZPoly dd(Int(1));
      for (unsigned e = 1; e < d; ++e)
        if (d % e == 0) dd = dd * cache.at(e);  // filled in increasing order below
      phi_d = divide_exact(nd, dd);
      cache.emplace(d, phi_d);
    }
    den = den * phi_d;
  }
  ZPoly phi = divide_exact(num, den);
  cache.emplace(n, phi);
  return phi;
}

// ---------------------------------------------------------------- FieldCtx

FieldCtx FieldCtx::cyclotomic(unsigned n) {
  if (n < 2) throw std::invalid_argument("cyclotomic field order must be >= 2");
  return {FieldKind::Cyclotomic, n};
}

std::string to_string(const FieldCtx& ctx) {
  switch (ctx.kind) {
    case FieldKind::Rational: return "Q";
    case FieldKind::RationalFunction: return "Q(q)";
    case FieldKind::Cyclotomic: return "Q[q]/Phi_" + std::to_string(ctx.order);
  }
  return "?";
}

// ---------------------------------------------------------------- Scalar

namespace {

void check_same_ctx(const FieldCtx& a, const FieldCtx& b) {
  if (!(a == b))
    throw FieldError("field context mismatch: " + to_string(a) + " vs " + to_string(b));
}

std::string qpoly_str(const std::vector<Rat>& c) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    Rat coeff = c[i];
    bool neg = coeff < 0;
    if (neg) coeff = -coeff;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? "-" : "+");
    }
    std::ostringstream cs;
    cs << coeff;
    if (i == 0) {
      os << cs.str();
    } else {
      if (coeff != 1) os << cs.str() << "*";
      os << "q";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

int nonzero_terms(const ZPoly& p) {
  int n = 0;
  for (const auto& x : p.c)
    if (x != 0) ++n;
  return n;
}

}  // namespace

Scalar Scalar::integer(const FieldCtx& ctx, const Int& n) {
  return of_rational(ctx, Rat(n));
}

Scalar Scalar::of_rational(const FieldCtx& ctx, const Rat& r) {
  switch (ctx.kind) {
    case FieldKind::Rational: return Scalar(ctx, r);
    case FieldKind::RationalFunction: {
      RatFun f = normalize(ZPoly(numerator(r)), ZPoly(denominator(r)));
      return Scalar(ctx, std::move(f));
    }
    case FieldKind::Cyclotomic: {
      CycElem e;
      if (r != 0) e.c.push_back(r);
      return Scalar(ctx, std::move(e));
    }
  }
  throw FieldError("bad field kind");
}

Scalar Scalar::q(const FieldCtx& ctx) {
  if (!ctx.has_q()) throw FieldError("q is not an element of " + to_string(ctx));
  if (ctx.kind == FieldKind::RationalFunction)
    return Scalar(ctx, RatFun{ZPoly::monomial(1, 1), ZPoly(Int(1))});
  return Scalar(ctx, reduce_mod_phi({Rat(0), Rat(1)}, ctx.order));
}

Scalar Scalar::q_power(const FieldCtx& ctx, long e) { return q(ctx).pow(e); }

bool Scalar::is_zero() const {
  switch (ctx_.kind) {
    case FieldKind::Rational: return std::get<Rat>(v_) == 0;
    case FieldKind::RationalFunction: return std::get<RatFun>(v_).num.is_zero();
    case FieldKind::Cyclotomic: return std::get<CycElem>(v_).c.empty();
  }
  return false;
}

bool Scalar::is_one() const {
  switch (ctx_.kind) {
    case FieldKind::Rational: return std::get<Rat>(v_) == 1;
    case FieldKind::RationalFunction: {
      const auto& f = std::get<RatFun>(v_);
      return f.num == ZPoly(Int(1)) && f.den == ZPoly(Int(1));
    }
    case FieldKind::Cyclotomic: {
      const auto& e = std::get<CycElem>(v_);
      return e.c.size() == 1 && e.c[0] == 1;
    }
  }
  return false;
}

Scalar::RatFun Scalar::normalize(ZPoly num, ZPoly den) {
  if (den.is_zero()) throw FieldError("division by zero in Q(q)");
  if (num.is_zero()) return RatFun{ZPoly{}, ZPoly(Int(1))};
  ZPoly g = gcd(num, den);
  num = divide_exact(num, g);
  den = divide_exact(den, g);
  if (den.lc() < 0) {
    num = -num;
    den = -den;
  }
  return RatFun{std::move(num), std::move(den)};
}

Scalar::CycElem Scalar::reduce_mod_phi(std::vector<Rat> coeffs, unsigned n) {
  ZPoly phi = cyclotomic_polynomial(n);
  const int d = phi.degree();
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= d; --i) {
    if (coeffs[i] == 0) continue;
    Rat f = coeffs[i];  // phi is monic
    for (int j = 0; j <= d; ++j) coeffs[i - d + j] -= f * Rat(phi.c[j]);
  }
  coeffs.resize(std::min<std::size_t>(coeffs.size(), d));
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return CycElem{std::move(coeffs)};
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  check_same_ctx(a.ctx_, b.ctx_);
  switch (a.ctx_.kind) {
    case FieldKind::Rational:
      return Scalar(a.ctx_, std::get<Rat>(a.v_) + std::get<Rat>(b.v_));
    case FieldKind::RationalFunction: {
      const auto& x = std::get<Scalar::RatFun>(a.v_);
      const auto& y = std::get<Scalar::RatFun>(b.v_);
      return Scalar(a.ctx_,
                    Scalar::normalize(x.num * y.den + y.num * x.den, x.den * y.den));
    }
    case FieldKind::Cyclotomic: {
      const auto& x = std::get<Scalar::CycElem>(a.v_).c;
      const auto& y = std::get<Scalar::CycElem>(b.v_).c;
      std::vector<Rat> r(std::max(x.size(), y.size()), Rat(0));
      for (std::size_t i = 0; i < x.size(); ++i) r[i] += x[i];
      for (std::size_t i = 0; i < y.size(); ++i) r[i] += y[i];
      while (!r.empty() && r.back() == 0) r.pop_back();
      return Scalar(a.ctx_, Scalar::CycElem{std::move(r)});
    }
  }
  throw FieldError("bad field kind");
}

Scalar Scalar::operator-() const {
  switch (ctx_.kind) {
    case FieldKind::Rational: return Scalar(ctx_, -std::get<Rat>(v_));
    case FieldKind::RationalFunction: {
      auto f = std::get<RatFun>(v_);
      f.num = -f.num;
      return Scalar(ctx_, std::move(f));
    }
    case FieldKind::Cyclotomic: {
      auto e = std::get<CycElem>(v_);
      for (auto& x : e.c) x = -x;
      return Scalar(ctx_, std::move(e));
    }
  }
  throw FieldError("bad field kind");
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  check_same_ctx(a.ctx_, b.ctx_);
  switch (a.ctx_.kind) {
    case FieldKind::Rational:
      return Scalar(a.ctx_, std::get<Rat>(a.v_) * std::get<Rat>(b.v_));
    case FieldKind::RationalFunction: {
      const auto& x = std::get<Scalar::RatFun>(a.v_);
      const auto& y = std::get<Scalar::RatFun>(b.v_);
      return Scalar(a.ctx_, Scalar::normalize(x.num * y.num, x.den * y.den));
    }
    case FieldKind::Cyclotomic: {
      const auto& x = std::get<Scalar::CycElem>(a.v_).c;
      const auto& y = std::get<Scalar::CycElem>(b.v_).c;
      if (x.empty() || y.empty()) return Scalar(a.ctx_, Scalar::CycElem{});
      std::vector<Rat> r(x.size() + y.size() - 1, Rat(0));
      for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
      return Scalar(a.ctx_, Scalar::reduce_mod_phi(std::move(r), a.ctx_.order));
    }
  }
  throw FieldError("bad field kind");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw FieldError("division by zero in " + to_string(ctx_));
  switch (ctx_.kind) {
    case FieldKind::Rational: return Scalar(ctx_, Rat(1) / std::get<Rat>(v_));
    case FieldKind::RationalFunction: {
      const auto& f = std::get<RatFun>(v_);
      return Scalar(ctx_, normalize(f.den, f.num));
    }
    case FieldKind::Cyclotomic: {
      // extended Euclid in Q[q] against Phi_N (irreducible over Q)
      ZPoly phi = cyclotomic_polynomial(ctx_.order);
      std::vector<Rat> r0(phi.c.size());
      for (std::size_t i = 0; i < phi.c.size(); ++i) r0[i] = Rat(phi.c[i]);
      std::vector<Rat> r1 = std::get<CycElem>(v_).c;
      std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};  // coefficients of the element
      auto deg = [](const std::vector<Rat>& p) { return static_cast<int>(p.size()) - 1; };
      auto trim = [](std::vector<Rat>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
      };
      while (!r1.empty()) {
        // divide r0 by r1
        std::vector<Rat> quot(std::max<std::size_t>(r0.size(), 1), Rat(0));
        std::vector<Rat> rem = r0;
        while (static_cast<int>(rem.size()) - 1 >= deg(r1) && !rem.empty()) {
          int shift = deg(rem) - deg(r1);
          Rat f = rem.back() / r1.back();
          quot[shift] += f;
          for (std::size_t j = 0; j < r1.size(); ++j) rem[shift + j] -= f * r1[j];
          trim(rem);
        }
        // s_{k+1} = s0 - quot * s1
        std::vector<Rat> s2(std::max(s0.size(), quot.size() + s1.size()), Rat(0));
        for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
        for (std::size_t i = 0; i < quot.size(); ++i) {
          if (quot[i] == 0) continue;
          for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= quot[i] * s1[j];
        }
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
      }
      // r0 = gcd (a nonzero constant since Phi_N is irreducible and v != 0)
      if (deg(r0) != 0)
        throw FieldError("non-invertible element mod Phi_" + std::to_string(ctx_.order) +
                         " (shares factor " + qpoly_str(r0) + ")");
      Rat inv_g = Rat(1) / r0[0];
      for (auto& x : s0) x *= inv_g;
      return Scalar(ctx_, reduce_mod_phi(std::move(s0), ctx_.order));
    }
  }
  throw FieldError("bad field kind");
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::pow(long e) const {
  Scalar base = *this;
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  Scalar r = Scalar::integer(ctx_, 1);
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& b) const {
  if (!(ctx_ == b.ctx_)) return false;
  return v_ == b.v_;
}

const Rat& Scalar::rational() const {
  if (ctx_.kind != FieldKind::Rational)
    throw FieldError("scalar is not a plain rational");
  return std::get<Rat>(v_);
}

std::string Scalar::str() const {
  switch (ctx_.kind) {
    case FieldKind::Rational: {
      std::ostringstream os;
      os << std::get<Rat>(v_);
      return os.str();
    }
    case FieldKind::RationalFunction: {
      const auto& f = std::get<RatFun>(v_);
      if (f.den == ZPoly(Int(1))) return to_string(f.num);
      std::string ns = to_string(f.num);
      std::string ds = to_string(f.den);
      if (nonzero_terms(f.num) > 1) ns = "(" + ns + ")";
      if (nonzero_terms(f.den) > 1) ds = "(" + ds + ")";
      return ns + "/" + ds;
    }
    case FieldKind::Cyclotomic: return qpoly_str(std::get<CycElem>(v_).c);
  }
  return "?";
}

bool Scalar::needs_parens() const {
  std::string s = str();
  for (std::size_t i = 1; i < s.size(); ++i)
    if ((s[i] == '+' || s[i] == '-' || s[i] == '/') && s[i - 1] != '(' && s[i - 1] != '^')
      return true;
  return false;
}

Scalar specialize(const Scalar& x, unsigned n) {
  if (x.ctx().kind != FieldKind::RationalFunction)
    throw FieldError("specialize expects an element of Q(q)");
  FieldCtx target = FieldCtx::cyclotomic(n);
  const auto& f = x.ratfun();
  auto lift = [&](const ZPoly& p) {
    std::vector<Rat> c(p.c.size());
    for (std::size_t i = 0; i < p.c.size(); ++i) c[i] = Rat(p.c[i]);
    return Scalar(target, Scalar::reduce_mod_phi(std::move(c), n));
  };
  Scalar num = lift(f.num);
  Scalar den = lift(f.den);
  if (den.is_zero()) {
    ZPoly g = gcd(f.den, cyclotomic_polynomial(n));
    throw FieldError("denominator " + to_string(f.den) +
                     " is not invertible mod Phi_" + std::to_string(n) +
                     " (vanishing factor: " + to_string(g) + ")");
  }
  return num * den.inverse();
}

}  // namespace hopfcell
