#ifndef HOPFCELL_WEIGHT_HPP
#define HOPFCELL_WEIGHT_HPP

#include "hopfcell/hopf.hpp"

namespace hopfcell {

/// Reduced word in a free or free-abelian group: syllables (generator,
/// nonzero exponent); free words keep adjacent syllables distinct, abelian
/// words are sorted by generator.
class WeightWord {
 public:
  WeightWord() = default;
  explicit WeightWord(bool abelian) : abelian_(abelian) {}
  static WeightWord one(const GroupPresentation& g) {
    return WeightWord(g.kind == GroupPresentation::Kind::FreeAbelian);
  }
  static WeightWord generator(const GroupPresentation& g, int gen, long exp = 1);

  bool abelian() const { return abelian_; }
  bool is_identity() const { return syl_.empty(); }
  const std::vector<std::pair<int, long>>& syllables() const { return syl_; }
  /// Total letter count (sum of |exponents|).
  long length() const;
  /// One (generator, +-1) entry per letter, in order.
  std::vector<std::pair<int, int>> letters() const;
  /// Exponent vector (abelian only).
  std::vector<long> exponents(int rank) const;

  WeightWord operator*(const WeightWord& o) const;
  WeightWord inverse() const;
  WeightWord pow(long e) const;

  bool operator==(const WeightWord&) const = default;
  bool operator<(const WeightWord& o) const;  // for use as a map key

  std::string str(const GroupPresentation& g) const;

  void push(int gen, long exp);  // multiply by gen^exp on the right

 private:
  bool abelian_ = false;
  std::vector<std::pair<int, long>> syl_;
};

/// Parse products like "t^-1", "u1*u2^-1", "z*t^2".
WeightWord parse_weight(const std::string& src, const GroupPresentation& g);

/// Conversions against the group_algebra letter convention
/// (letter 2k = generator k, letter 2k+1 = its inverse).
WeightWord word_to_weight(const GroupPresentation& g, const Word& w);
Word weight_to_word(const GroupPresentation& g, const WeightWord& lambda);

/// Enumerate all reduced weight words of length <= max_len (identity first,
/// then by length).
std::vector<WeightWord> weight_words_up_to(const GroupPresentation& g, int max_len);

}  // namespace hopfcell

#endif
