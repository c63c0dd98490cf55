#include "hopfcell/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace hopfcell {

namespace {

struct WordLess {
  const Alphabet* alph;
  bool operator()(const Word& u, const Word& v) const { return word_less(*alph, u, v); }
};

bool matches_at(const Word& w, std::size_t pos, const Word& pat) {
  if (pos + pat.size() > w.size()) return false;
  for (std::size_t j = 0; j < pat.size(); ++j)
    if (w.letters[pos + j] != pat.letters[j]) return false;
  return true;
}

}  // namespace

RewriteSystem::RewriteSystem(AlphabetPtr alph, FieldCtx ctx, std::vector<RewriteRule> rules)
    : alph_(std::move(alph)), ctx_(ctx), rules_(std::move(rules)) {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const auto& r = rules_[i];
    if (r.lhs.empty()) throw RewriteError("rule lhs must be a nonempty word");
    for (const auto& [w, c] : r.rhs.terms())
      if (!word_less(*alph_, w, r.lhs))
        throw RewriteError("rule does not decrease the term order: " +
                           word_str(*alph_, r.lhs) + " -> ... " + word_str(*alph_, w));
    for (std::size_t j = 0; j < rules_.size(); ++j) {
      if (i == j) continue;
      if (rules_[j].lhs == r.lhs && j < i)
        throw RewriteError("duplicate rule lhs: " + word_str(*alph_, r.lhs));
      if (rules_[j].lhs.size() < r.lhs.size() && contains_subword(r.lhs, rules_[j].lhs))
        throw RewriteError("rule lhs " + word_str(*alph_, r.lhs) +
                           " is reducible by rule lhs " + word_str(*alph_, rules_[j].lhs));
    }
  }
}

std::optional<std::pair<std::size_t, std::size_t>> RewriteSystem::find_redex(
    const Word& w) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    for (std::size_t k = 0; k < rules_.size(); ++k)
      if (matches_at(w, pos, rules_[k].lhs)) return std::make_pair(pos, k);
  return std::nullopt;
}

NCPoly normal_form(const RewriteSystem& rws, const NCPoly& p) {
  std::map<Word, Scalar, WordLess> work(WordLess{rws.alphabet().get()});
  for (const auto& [w, c] : p.terms()) work.emplace(w, c);
  NCPoly result(rws.alphabet(), rws.ctx());
  std::vector<NCPoly::Term> finished;  // strictly decreasing order
  while (!work.empty()) {
    auto it = std::prev(work.end());
    Word w = it->first;
    Scalar c = it->second;
    work.erase(it);
    if (c.is_zero()) continue;
    auto redex = rws.find_redex(w);
    if (!redex) {
      finished.emplace_back(std::move(w), std::move(c));
      continue;
    }
    const auto& [pos, k] = *redex;
    const RewriteRule& rule = rws.rules()[k];
    for (const auto& [u, s] : rule.rhs.terms()) {
      Word nw = splice(w, pos, rule.lhs.size(), u);
      Scalar nc = c * s;
      auto [jt, fresh] = work.emplace(std::move(nw), nc);
      if (!fresh) {
        jt->second += nc;
        if (jt->second.is_zero()) work.erase(jt);
      }
    }
  }
  std::reverse(finished.begin(), finished.end());
  NCPoly out(rws.alphabet(), rws.ctx());
  for (auto& t : finished) out.add_term(t.first, t.second);
  return out;
}

NCPoly normal_form(const RewriteSystem& rws, const Word& w) {
  return normal_form(rws, NCPoly::monomial(rws.alphabet(), w,
                                           Scalar::integer(rws.ctx(), 1)));
}

std::vector<Word> monomials_up_to(const RewriteSystem& rws, int max_len) {
  const Alphabet& alph = *rws.alphabet();
  std::vector<std::int32_t> letters(alph.size());
  for (std::size_t i = 0; i < alph.size(); ++i) letters[i] = static_cast<std::int32_t>(i);
  std::sort(letters.begin(), letters.end(),
            [&](std::int32_t x, std::int32_t y) { return alph.rank(x) < alph.rank(y); });

  std::vector<Word> out{Word::one()};
  std::vector<Word> level{Word::one()};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& u : level)
      for (auto g : letters) {
        Word w = u;
        w.letters.push_back(g);
        // The prefix is irreducible, so any redex must end at the last letter.
        bool reducible = false;
        for (const auto& rule : rws.rules()) {
          if (rule.lhs.size() > w.size()) continue;
          if (matches_at(w, w.size() - rule.lhs.size(), rule.lhs)) {
            reducible = true;
            break;
          }
        }
        if (!reducible) next.push_back(std::move(w));
      }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

std::vector<CriticalPair> local_confluence_report(const RewriteSystem& rws, int max_deg) {
  std::vector<CriticalPair> pairs;
  const auto& rules = rws.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word& li = rules[i].lhs;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& lj = rules[j].lhs;
      std::size_t max_o = std::min(li.size(), lj.size()) - 1;
      for (std::size_t o = 1; o <= max_o; ++o) {
        if (static_cast<int>(li.size() + lj.size() - o) > max_deg) continue;
        // suffix of li of length o == prefix of lj of length o?
        bool ok = true;
        for (std::size_t t = 0; t < o; ++t)
          if (li.letters[li.size() - o + t] != lj.letters[t]) {
            ok = false;
            break;
          }
        if (!ok) continue;
        Word overlap = li;
        overlap.letters.insert(overlap.letters.end(), lj.letters.begin() + o, lj.letters.end());
        // reduce via rule i at position 0
        NCPoly left(rws.alphabet(), rws.ctx());
        for (const auto& [u, s] : rules[i].rhs.terms())
          left.add_term(splice(overlap, 0, li.size(), u), s);
        // reduce via rule j at position |li| - o
        NCPoly right(rws.alphabet(), rws.ctx());
        for (const auto& [u, s] : rules[j].rhs.terms())
          right.add_term(splice(overlap, li.size() - o, lj.size(), u), s);
        NCPoly diff = normal_form(rws, left) - normal_form(rws, right);
        if (!diff.is_zero()) pairs.push_back(CriticalPair{overlap, i, j, std::move(diff)});
      }
    }
  }
  std::sort(pairs.begin(), pairs.end(), [&](const CriticalPair& a, const CriticalPair& b) {
    int c = word_cmp(*rws.alphabet(), a.overlap, b.overlap);
    if (c != 0) return c < 0;
    return std::tie(a.rule_left, a.rule_right) < std::tie(b.rule_left, b.rule_right);
  });
  return pairs;
}

RewriteRule orient_relator(const RewriteSystem& rws_so_far, const NCPoly& relator) {
  if (relator.is_zero()) throw RewriteError("cannot orient the zero relator");
  const Word lhs = relator.leading_word();
  Scalar lc = relator.leading_coeff();
  NCPoly rest(relator.alphabet(), relator.ctx());
  for (const auto& [w, c] : relator.terms())
    if (!(w == lhs)) rest.add_term(w, -(c / lc));
  (void)rws_so_far;
  return RewriteRule{lhs, std::move(rest)};
}

RewriteSystem complete_up_to(const RewriteSystem& rws, int max_deg, int max_rules) {
  std::vector<RewriteRule> rules = rws.rules();
  std::deque<NCPoly> queue;

  auto current = [&]() { return RewriteSystem(rws.alphabet(), rws.ctx(), rules); };

  RewriteSystem cur = current();
  while (true) {
    // Drain pending relators.
    while (!queue.empty()) {
      NCPoly rel = normal_form(cur, queue.front());
      queue.pop_front();
      if (rel.is_zero()) continue;
      RewriteRule nr = orient_relator(cur, rel);
      // Retire any rule whose lhs the new rule reduces; requeue its content.
      std::vector<RewriteRule> kept;
      for (auto& old : rules) {
        if (contains_subword(old.lhs, nr.lhs)) {
          NCPoly relic = NCPoly::monomial(rws.alphabet(), old.lhs,
                                          Scalar::integer(rws.ctx(), 1)) -
                         old.rhs;
          queue.push_back(std::move(relic));
        } else {
          kept.push_back(std::move(old));
        }
      }
      kept.push_back(std::move(nr));
      rules = std::move(kept);
      if (static_cast<int>(rules.size()) > max_rules)
        throw RewriteError("bounded completion exceeded " + std::to_string(max_rules) +
                           " rules at degree " + std::to_string(max_deg));
      cur = current();
    }
    auto report = local_confluence_report(cur, max_deg);
    if (report.empty()) break;
    for (auto& cp : report) queue.push_back(std::move(cp.difference));
  }
  // Normalize right-hand sides against the final system.
  for (auto& r : rules) r.rhs = normal_form(cur, r.rhs);
  return RewriteSystem(rws.alphabet(), rws.ctx(), std::move(rules));
}

}  // namespace hopfcell
