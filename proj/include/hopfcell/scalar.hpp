#ifndef HOPFCELL_SCALAR_HPP
#define HOPFCELL_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hopfcell {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial in q with integer coefficients,
/// stored low degree first, no trailing zeros.
struct ZPoly {
  std::vector<Int> c;

  ZPoly() = default;
  explicit ZPoly(Int constant);
  static ZPoly monomial(Int coeff, std::size_t deg);

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for 0
  const Int& lc() const { return c.back(); }
  void trim();
  bool operator==(const ZPoly&) const = default;
};

ZPoly operator+(const ZPoly& a, const ZPoly& b);
ZPoly operator-(const ZPoly& a, const ZPoly& b);
ZPoly operator*(const ZPoly& a, const ZPoly& b);
ZPoly operator-(const ZPoly& a);
Int content(const ZPoly& a);                       // gcd of coefficients, sign of lc
ZPoly divide_exact(const ZPoly& a, const ZPoly& b);  // throws if not exact
ZPoly gcd(const ZPoly& a, const ZPoly& b);         // primitive Euclid, positive lc
std::string to_string(const ZPoly& a, const std::string& var = "q");

/// N-th cyclotomic polynomial, via Phi_N = (q^N - 1) / prod_{d|N, d<N} Phi_d.
ZPoly cyclotomic_polynomial(unsigned n);

enum class FieldKind : std::uint8_t {
  Rational,          // Q
  RationalFunction,  // Q(q)
  Cyclotomic,        // Q[q]/(Phi_N)
};

struct FieldCtx {
  FieldKind kind = FieldKind::Rational;
  unsigned order = 0;  // N for Cyclotomic, else 0

  static FieldCtx rational() { return {FieldKind::Rational, 0}; }
  static FieldCtx rational_function() { return {FieldKind::RationalFunction, 0}; }
  static FieldCtx cyclotomic(unsigned n);

  bool has_q() const { return kind != FieldKind::Rational; }
  bool operator==(const FieldCtx&) const = default;
};

std::string to_string(const FieldCtx& ctx);

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An exact field element.  Representations:
///   Rational          -> reduced fraction of big integers
///   RationalFunction  -> num/den in Z[q], gcd 1, den with positive leading
///                        coefficient (zero is 0/1)
///   Cyclotomic        -> residue mod Phi_N with rational coefficients,
///                        degree < phi(N)
class Scalar {
 public:
  Scalar() : ctx_(FieldCtx::rational()), v_(Rat(0)) {}

  static Scalar integer(const FieldCtx& ctx, const Int& n);
  static Scalar of_rational(const FieldCtx& ctx, const Rat& r);
  static Scalar q(const FieldCtx& ctx);  // requires ctx.has_q()
  static Scalar q_power(const FieldCtx& ctx, long e);

  const FieldCtx& ctx() const { return ctx_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;  // throws FieldError on zero
  Scalar pow(long e) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  bool operator==(const Scalar& b) const;
  bool operator!=(const Scalar& b) const { return !(*this == b); }

  /// Canonical textual form, parseable by parse_scalar.
  std::string str() const;
  /// True when str() needs parentheses before '*word' in a polynomial term.
  bool needs_parens() const;

  /// The rational value when ctx is Rational (throws otherwise).
  const Rat& rational() const;

  struct RatFun {
    ZPoly num, den;
    bool operator==(const RatFun&) const = default;
  };
  struct CycElem {
    std::vector<Rat> c;  // coefficients, degree < phi(N), no trailing zeros
    bool operator==(const CycElem&) const = default;
  };

  const RatFun& ratfun() const { return std::get<RatFun>(v_); }
  const CycElem& cyc() const { return std::get<CycElem>(v_); }

 private:
  Scalar(FieldCtx ctx, Rat r) : ctx_(ctx), v_(std::move(r)) {}
  Scalar(FieldCtx ctx, RatFun f) : ctx_(ctx), v_(std::move(f)) {}
  Scalar(FieldCtx ctx, CycElem e) : ctx_(ctx), v_(std::move(e)) {}

  static RatFun normalize(ZPoly num, ZPoly den);
  static CycElem reduce_mod_phi(std::vector<Rat> coeffs, unsigned n);

  FieldCtx ctx_;
  std::variant<Rat, RatFun, CycElem> v_;

  friend Scalar specialize(const Scalar& x, unsigned n);
};

/// Image of x in Q(q) under q -> class of q in Q[q]/(Phi_N).
/// Throws FieldError when the denominator vanishes mod Phi_N.
Scalar specialize(const Scalar& x, unsigned n);

/// Parse a scalar expression: integers, fractions, +-*/^() and the symbol q.
Scalar parse_scalar(const std::string& src, const FieldCtx& ctx);

}  // namespace hopfcell

#endif
