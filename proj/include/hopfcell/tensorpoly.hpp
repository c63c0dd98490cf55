#ifndef HOPFCELL_TENSORPOLY_HPP
#define HOPFCELL_TENSORPOLY_HPP

#include "hopfcell/rewrite.hpp"

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace hopfcell {

/// A finitely presented algebra: alphabet, field and confluent-up-to-degree
/// rewrite rules.  Hopf structure is layered on top in hopf.hpp.
struct PresentedAlgebra {
  FieldCtx ctx;
  AlphabetPtr alphabet;
  RewriteSystem rws;
  std::string label = "custom";

  NCPoly nf(const NCPoly& p) const { return normal_form(rws, p); }
  NCPoly parse(const std::string& src) const;
  NCPoly zero() const { return NCPoly::zero(alphabet, ctx); }
  NCPoly one() const { return NCPoly::constant(alphabet, Scalar::integer(ctx, 1)); }
  NCPoly gen(std::int32_t g) const { return NCPoly::generator(alphabet, ctx, g); }
  Scalar scalar(long n) const { return Scalar::integer(ctx, n); }
};

using AlgebraPtr = std::shared_ptr<const PresentedAlgebra>;

/// Element of A (x) B with both legs kept in normal form.
class TensorPoly {
 public:
  using Key = std::pair<Word, Word>;
  using Term = std::pair<Key, Scalar>;

  TensorPoly() = default;
  TensorPoly(AlgebraPtr left, AlgebraPtr right)
      : left_(std::move(left)), right_(std::move(right)) {}

  const AlgebraPtr& left() const { return left_; }
  const AlgebraPtr& right() const { return right_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * (u (x) v), normalizing both legs.
  void add(const Word& u, const Word& v, const Scalar& c);
  void add(const NCPoly& u, const NCPoly& v, const Scalar& c);
  /// Adds a term whose legs are already irreducible.
  void add_irreducible(Word u, Word v, const Scalar& c);

  TensorPoly operator-() const;
  friend TensorPoly operator+(const TensorPoly& a, const TensorPoly& b);
  friend TensorPoly operator-(const TensorPoly& a, const TensorPoly& b);
  friend TensorPoly operator*(const TensorPoly& a, const TensorPoly& b);
  friend TensorPoly operator*(const Scalar& c, const TensorPoly& a);

  bool operator==(const TensorPoly& b) const { return terms_ == b.terms_; }
  bool operator!=(const TensorPoly& b) const { return !(*this == b); }

  std::string str() const;

 private:
  int cmp_key(const Key& a, const Key& b) const;

  AlgebraPtr left_, right_;
  std::vector<Term> terms_;  // sorted by (left word, right word)
};

/// Element of A (x) A (x) A, used for coassociativity and the two-fold
/// comultiplication.
class TriplePoly {
 public:
  using Key = std::array<Word, 3>;
  using Term = std::pair<Key, Scalar>;

  TriplePoly() = default;
  explicit TriplePoly(AlgebraPtr alg) : alg_(std::move(alg)) {}

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const NCPoly& a, const NCPoly& b, const NCPoly& c, const Scalar& s);

  friend TriplePoly operator-(const TriplePoly& a, const TriplePoly& b);
  bool operator==(const TriplePoly& b) const { return terms_ == b.terms_; }
  std::string str() const;

 private:
  AlgebraPtr alg_;
  std::vector<Term> terms_;
};

}  // namespace hopfcell

#endif
