#ifndef HOPFCELL_REWRITE_HPP
#define HOPFCELL_REWRITE_HPP

#include "hopfcell/ncpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hopfcell {

/// Oriented rewrite rule lhs -> rhs with every rhs term strictly smaller than
/// lhs in the degree-lex order.
struct RewriteRule {
  Word lhs;
  NCPoly rhs;
};

struct RewriteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An unresolved overlap ambiguity: reducing `overlap` starting with the left
/// rule and with the right rule gives distinct normal forms.
struct CriticalPair {
  Word overlap;
  std::size_t rule_left = 0, rule_right = 0;
  NCPoly difference;  // nf_left - nf_right, nonzero
};

class RewriteSystem {
 public:
  RewriteSystem() = default;
  /// Validates: rules decrease the term order, lhs's are distinct, and no lhs
  /// contains another lhs as a subword.  Throws RewriteError otherwise.
  RewriteSystem(AlphabetPtr alph, FieldCtx ctx, std::vector<RewriteRule> rules);

  const AlphabetPtr& alphabet() const { return alph_; }
  const FieldCtx& ctx() const { return ctx_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }

  /// Leftmost reducible position in w, with the matching rule.
  std::optional<std::pair<std::size_t, std::size_t>> find_redex(const Word& w) const;
  bool is_irreducible(const Word& w) const { return !find_redex(w).has_value(); }

 private:
  AlphabetPtr alph_;
  FieldCtx ctx_;
  std::vector<RewriteRule> rules_;
};

/// The unique irreducible polynomial equal to p modulo the rules.
NCPoly normal_form(const RewriteSystem& rws, const NCPoly& p);
NCPoly normal_form(const RewriteSystem& rws, const Word& w);

/// All irreducible words of length <= max_len, in increasing term order.
std::vector<Word> monomials_up_to(const RewriteSystem& rws, int max_len);

/// Overlap ambiguities whose overlap word has length <= max_deg and whose two
/// reductions differ.  Empty result certifies unique normal forms up to that
/// degree.
std::vector<CriticalPair> local_confluence_report(const RewriteSystem& rws, int max_deg);

/// Bounded completion: repeatedly orients unresolved critical pairs of
/// overlap degree <= max_deg into new rules until the report is empty.
/// Interreduces right-hand sides.  Used to build preset rule sets whose
/// defining relations are not already confluent.
RewriteSystem complete_up_to(const RewriteSystem& rws, int max_deg, int max_rules = 4096);

/// Orient a relator (= 0) into a rule: leading word becomes the lhs.
RewriteRule orient_relator(const RewriteSystem& rws_so_far, const NCPoly& relator);

}  // namespace hopfcell

#endif
