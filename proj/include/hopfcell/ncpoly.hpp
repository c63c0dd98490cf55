#ifndef HOPFCELL_NCPOLY_HPP
#define HOPFCELL_NCPOLY_HPP

#include "hopfcell/scalar.hpp"
#include "hopfcell/word.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace hopfcell {

/// Noncommutative polynomial: a finite sum of scalar-weighted words over a
/// fixed alphabet.  Terms are kept sorted in increasing degree-lex order with
/// no zero coefficients.
class NCPoly {
 public:
  using Term = std::pair<Word, Scalar>;

  NCPoly() = default;
  NCPoly(AlphabetPtr alph, FieldCtx ctx) : alph_(std::move(alph)), ctx_(ctx) {}

  static NCPoly zero(AlphabetPtr alph, FieldCtx ctx) { return NCPoly(std::move(alph), ctx); }
  static NCPoly monomial(AlphabetPtr alph, Word w, Scalar coeff);
  static NCPoly constant(AlphabetPtr alph, Scalar coeff);
  static NCPoly generator(AlphabetPtr alph, FieldCtx ctx, std::int32_t g);

  const AlphabetPtr& alphabet() const { return alph_; }
  const FieldCtx& ctx() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  /// Largest word (degree-lex); polynomial must be nonzero.
  const Word& leading_word() const { return terms_.back().first; }
  const Scalar& leading_coeff() const { return terms_.back().second; }
  int max_word_length() const;

  /// Coefficient of w (zero scalar if absent).
  Scalar coeff(const Word& w) const;

  void add_term(const Word& w, const Scalar& c);

  NCPoly operator-() const;
  friend NCPoly operator+(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator-(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const Scalar& c, const NCPoly& a);
  NCPoly& operator+=(const NCPoly& b) { return *this = *this + b; }
  NCPoly& operator-=(const NCPoly& b) { return *this = *this - b; }
  NCPoly& operator*=(const NCPoly& b) { return *this = *this * b; }

  bool operator==(const NCPoly& b) const;
  bool operator!=(const NCPoly& b) const { return !(*this == b); }

  std::string str() const;

 private:
  AlphabetPtr alph_;
  FieldCtx ctx_;
  std::vector<Term> terms_;
};

}  // namespace hopfcell

#endif
