#include "hopfcell/bigcell.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hopfcell {

namespace {

// Dynamic index of (B-word, B'-word) pairs.
struct PairIndex {
  PairIndex(const Alphabet* l, const Alphabet* r) : la(l), ra(r) {}
  const Alphabet *la, *ra;
  std::map<std::string, std::size_t> index;
  std::vector<std::pair<Word, Word>> pairs;

  std::size_t intern(const Word& u, const Word& v) {
    std::string key = word_str(*la, u) + "#" + word_str(*ra, v);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    pairs.emplace_back(u, v);
    index.emplace(std::move(key), pairs.size() - 1);
    return pairs.size() - 1;
  }
};

// (pi (x) id) o Delta, legs in B (x) H.
TensorPoly pi_tensor_id(const BigCellDatum& d, const NCPoly& p) {
  TensorPoly dw = delta(d.H, p);
  TensorPoly out(d.B, d.H);
  const Scalar one = Scalar::integer(d.H->ctx, 1);
  for (const auto& [key, c] : dw.terms())
    out.add(apply_map(d.pi, key.first), NCPoly::monomial(d.H->alphabet, key.second, one), c);
  return out;
}

// Exact span of polynomials with membership/coordinate queries.
class PolySpan {
 public:
  explicit PolySpan(const PresentedAlgebra& alg) : alg_(&alg) {}

  std::size_t dim() const { return basis_.size(); }
  const std::vector<NCPoly>& basis() const { return basis_; }

  bool add(const NCPoly& p) {
    if (p.is_zero()) return false;
    if (coords(p)) return false;
    basis_.push_back(p);
    return true;
  }

  std::optional<ScalarVec> coords(const NCPoly& p) const {
    // Solve sum_j r_j basis_j = p exactly.
    std::map<std::string, std::size_t> widx;
    std::vector<Word> words;
    auto intern = [&](const Word& w) {
      std::string key = word_str(*alg_->alphabet, w);
      auto it = widx.find(key);
      if (it != widx.end()) return it->second;
      words.push_back(w);
      widx.emplace(key, words.size() - 1);
      return words.size() - 1;
    };
    for (const auto& b : basis_)
      for (const auto& [w, c] : b.terms()) intern(w);
    for (const auto& [w, c] : p.terms()) intern(w);
    const Scalar zero = Scalar::integer(alg_->ctx, 0);
    ScalarMat m(words.size(), ScalarVec(basis_.size(), zero));
    ScalarVec rhs(words.size(), zero);
    for (std::size_t j = 0; j < basis_.size(); ++j)
      for (const auto& [w, c] : basis_[j].terms())
        m[widx[word_str(*alg_->alphabet, w)]][j] = c;
    for (const auto& [w, c] : p.terms()) rhs[widx[word_str(*alg_->alphabet, w)]] = c;
    return solve(m, rhs, alg_->ctx);
  }

 private:
  const PresentedAlgebra* alg_;
  std::vector<NCPoly> basis_;
};

}  // namespace

NCPoly nu(const BigCellDatum& d, const WeightWord& lambda) {
  Word w;
  for (const auto& [gen, sign] : lambda.letters()) {
    const Word& part = sign > 0 ? d.nu_pos.at(gen) : d.nu_neg.at(gen);
    w.letters.insert(w.letters.end(), part.letters.begin(), part.letters.end());
  }
  NCPoly p = normal_form(d.B->rws, w);
  if (p.term_count() != 1 || !p.leading_coeff().is_one())
    throw BigCellError("nu(" + lambda.str(d.lambda) + ") is not a group-like monomial: " +
                       p.str());
  return p;
}

NCPoly nu_prime(const BigCellDatum& d, const WeightWord& lambda) {
  Word w;
  for (const auto& [gen, sign] : lambda.letters()) {
    const Word& part = sign > 0 ? d.nup_pos.at(gen) : d.nup_neg.at(gen);
    w.letters.insert(w.letters.end(), part.letters.begin(), part.letters.end());
  }
  NCPoly p = normal_form(d.Bp->rws, w);
  if (p.term_count() != 1 || !p.leading_coeff().is_one())
    throw BigCellError("nu'(" + lambda.str(d.lambda) + ") is not a group-like monomial: " +
                       p.str());
  return p;
}

TensorPoly theta(const BigCellDatum& d, const NCPoly& p) {
  return apply_map2(d.pi, d.pip, delta(d.H, p));
}

long word_weight(const std::vector<long>& wt, const Word& w) {
  long s = 0;
  for (auto l : w.letters) s += wt.at(l);
  return s;
}

GradedInjectivityReport graded_injectivity(const BigCellDatum& d, int max_deg,
                                           int length_cutoff) {
  if (!d.has_gradings())
    throw BigCellError("graded_injectivity requires registered gradings on " + d.name);
  GradedInjectivityReport rep;
  rep.max_deg = max_deg;
  rep.length_cutoff = length_cutoff < 0 ? max_deg : length_cutoff;

  auto words = monomials_up_to(d.H->rws, rep.length_cutoff);
  std::map<long, std::vector<Word>> slices;
  for (const auto& w : words) {
    long s = word_weight(*d.wt_H, w);
    if (s <= max_deg) slices[s].push_back(w);
  }
  const Scalar zero = Scalar::integer(d.H->ctx, 0);
  for (long s = 0; s <= max_deg; ++s) {
    DegreeVerdict v;
    v.degree = s;
    auto it = slices.find(s);
    if (it == slices.end()) {
      rep.verdicts.push_back(std::move(v));
      continue;
    }
    const auto& slice = it->second;
    v.dimension = static_cast<long>(slice.size());
    PairIndex pi{d.B->alphabet.get(), d.Bp->alphabet.get()};
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols;
    for (const auto& w : slice) {
      TensorPoly tw = theta(d, NCPoly::monomial(d.H->alphabet, w, Scalar::integer(d.H->ctx, 1)));
      std::vector<std::pair<std::size_t, Scalar>> col;
      for (const auto& [key, c] : tw.terms()) {
        long t = word_weight(*d.wt_B, key.first) + word_weight(*d.wt_Bp, key.second);
        if (t > s) {
          v.filtration_ok = false;
          v.escapes.push_back(word_str(*d.H->alphabet, w));
          break;
        }
        if (t == s) col.emplace_back(pi.intern(key.first, key.second), c);
      }
      cols.push_back(std::move(col));
    }
    if (!v.filtration_ok) {
      v.injective = false;
      rep.verdicts.push_back(std::move(v));
      continue;
    }
    ScalarMat m(pi.pairs.size(), ScalarVec(slice.size(), zero));
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& [r, c] : cols[j]) m[r][j] += c;
    auto null_basis = nullspace(m, slice.size(), d.H->ctx);
    if (!null_basis.empty()) {
      v.injective = false;
      NCPoly witness(d.H->alphabet, d.H->ctx);
      for (std::size_t j = 0; j < slice.size(); ++j) witness.add_term(slice[j], null_basis[0][j]);
      v.kernel_witness = std::move(witness);
    }
    rep.verdicts.push_back(std::move(v));
  }
  return rep;
}

namespace {

InducedSubspace induce_at(const BigCellDatum& d, const WeightWord& lambda, int cutoff) {
  InducedSubspace out;
  out.weight = lambda;
  out.cutoff = cutoff;
  NCPoly nl = nu(d, lambda);
  const Word& u0 = nl.leading_word();
  const Scalar one = Scalar::integer(d.H->ctx, 1);
  auto words = monomials_up_to(d.H->rws, cutoff);
  PairIndex pidx{d.B->alphabet.get(), d.H->alphabet.get()};
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols;
  for (const auto& w : words) {
    TensorPoly t = pi_tensor_id(d, NCPoly::monomial(d.H->alphabet, w, one));
    std::vector<std::pair<std::size_t, Scalar>> col;
    for (const auto& [key, c] : t.terms()) col.emplace_back(pidx.intern(key.first, key.second), c);
    col.emplace_back(pidx.intern(u0, w), -one);
    cols.push_back(std::move(col));
  }
  const Scalar zero = Scalar::integer(d.H->ctx, 0);
  ScalarMat m(pidx.pairs.size(), ScalarVec(words.size(), zero));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [r, c] : cols[j]) m[r][j] += c;
  for (auto& vec : nullspace(m, words.size(), d.H->ctx)) {
    NCPoly p(d.H->alphabet, d.H->ctx);
    for (std::size_t j = 0; j < words.size(); ++j) p.add_term(words[j], vec[j]);
    out.basis.push_back(std::move(p));
  }
  return out;
}

// Rigorous completeness certificate for the degree-0 slice: every weight-0
// generator must map under theta to a single pair of single weight-0 letters,
// distinct letters to distinct pairs, and concatenations of image letters
// must stay irreducible (so weight-0 words of any length map to distinct
// pairs of the same length).
bool degree_zero_certificate(const BigCellDatum& d, std::vector<std::int32_t>& zero_letters,
                             std::vector<std::pair<std::int32_t, std::int32_t>>& images) {
  if (!d.has_gradings()) return false;
  for (long w : *d.wt_B)
    if (w < 0) return false;
  for (long w : *d.wt_Bp)
    if (w < 0) return false;
  std::set<std::pair<std::int32_t, std::int32_t>> seen;
  for (std::size_t g = 0; g < d.H->alphabet->size(); ++g) {
    if ((*d.wt_H)[g] != 0) continue;
    TensorPoly t = theta(d, d.H->gen(static_cast<std::int32_t>(g)));
    if (t.terms().size() != 1) return false;
    const auto& [key, c] = t.terms()[0];
    if (key.first.size() != 1 || key.second.size() != 1) return false;
    if (word_weight(*d.wt_B, key.first) != 0 || word_weight(*d.wt_Bp, key.second) != 0)
      return false;
    auto img = std::make_pair(key.first.letters[0], key.second.letters[0]);
    if (!seen.insert(img).second) return false;
    zero_letters.push_back(static_cast<std::int32_t>(g));
    images.push_back(img);
  }
  auto pairwise_irreducible = [](const RewriteSystem& rws,
                                 const std::vector<std::int32_t>& letters) {
    for (const auto& r : rws.rules())
      if (r.lhs.size() > 2) return false;
    for (auto x : letters)
      for (auto y : letters)
        if (!rws.is_irreducible(Word{{x, y}})) return false;
    return true;
  };
  std::vector<std::int32_t> bl, bpl;
  for (const auto& [x, y] : images) {
    bl.push_back(x);
    bpl.push_back(y);
  }
  return pairwise_irreducible(d.B->rws, bl) && pairwise_irreducible(d.Bp->rws, bpl);
}

bool definitive_not_dominant(const BigCellDatum& d, const NCPoly& nl, const NCPoly& nlp,
                             int cutoff, std::string& note) {
  if (!d.has_gradings()) return false;
  const Word& u0 = nl.leading_word();
  const Word& v0 = nlp.leading_word();
  if (word_weight(*d.wt_B, u0) + word_weight(*d.wt_Bp, v0) != 0) return false;
  std::vector<std::int32_t> zl;
  std::vector<std::pair<std::int32_t, std::int32_t>> imgs;
  if (!degree_zero_certificate(d, zl, imgs)) return false;
  if (static_cast<int>(u0.size()) > cutoff || static_cast<int>(v0.size()) > cutoff)
    return false;
  // Any x with theta(x) in W^0 lies in V^0 (filtration lemma); weight-0 words
  // of length n map to single distinct pairs of leg length n, so only
  // length-|u0| words can hit the target.
  if (u0.size() == v0.size()) {
    std::size_t n = u0.size();
    std::vector<Word> cands{Word::one()};
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Word> next;
      for (const auto& w : cands)
        for (auto g : zl) {
          Word e = w;
          e.letters.push_back(g);
          if (d.H->rws.is_irreducible(e)) next.push_back(std::move(e));
        }
      cands = std::move(next);
    }
    const Scalar one = Scalar::integer(d.H->ctx, 1);
    for (const auto& w : cands) {
      TensorPoly t = theta(d, NCPoly::monomial(d.H->alphabet, w, one));
      if (t.terms().size() == 1 && t.terms()[0].first.first == u0 &&
          t.terms()[0].first.second == v0)
        return false;  // a witness exists after all
    }
  }
  note = "definitive by the degree-0 argument: the target lies in filtration "
         "degree 0, any preimage is forced into the degree-0 subspace, and the "
         "complete degree-0 search (closed under the length-preserving letter "
         "images) finds no preimage";
  return true;
}

}  // namespace

InducedSubspace induce(const BigCellDatum& d, const WeightWord& lambda, int cutoff) {
  InducedSubspace out = induce_at(d, lambda, cutoff);
  if (cutoff >= 1) {
    InducedSubspace prev = induce_at(d, lambda, cutoff - 1);
    out.stabilized = prev.basis.size() == out.basis.size();
  }
  if (out.basis.empty()) {
    std::string note;
    out.definitive_empty = definitive_not_dominant(d, nu(d, lambda), nu_prime(d, lambda),
                                                   cutoff, note);
  }
  return out;
}

DominanceResult is_dominant(const BigCellDatum& d, const WeightWord& lambda, int cutoff) {
  DominanceResult res;
  res.cutoff = cutoff;
  NCPoly nl = nu(d, lambda);
  NCPoly nlp = nu_prime(d, lambda);
  const Word &u0 = nl.leading_word(), &v0 = nlp.leading_word();
  const Scalar one = Scalar::integer(d.H->ctx, 1);
  TensorPoly target(d.B, d.Bp);
  target.add_irreducible(u0, v0, one);

  // Monoid shortcut: a product of registered letter witnesses is a witness.
  {
    NCPoly x = d.H->one();
    bool all = !lambda.letters().empty() || lambda.is_identity();
    for (const auto& [gen, sign] : lambda.letters()) {
      const NCPoly* found = nullptr;
      for (const auto& [w, p] : d.witness_table) {
        auto ls = w.letters();
        if (ls.size() == 1 && ls[0].first == gen && ls[0].second == sign) {
          found = &p;
          break;
        }
      }
      if (!found) {
        all = false;
        break;
      }
      x = d.H->nf(x * *found);
    }
    if (all && theta(d, x) == target) {
      res.status = DominanceResult::Status::Dominant;
      res.witness = x;
      res.note = "witness assembled from the registered letter witnesses";
      return res;
    }
  }

  auto words = monomials_up_to(d.H->rws, cutoff);
  const Scalar zero = Scalar::integer(d.H->ctx, 0);

  std::optional<NCPoly> witness;
  bool graded_conclusive = false;
  if (d.has_gradings()) {
    long g0 = word_weight(*d.wt_B, u0) + word_weight(*d.wt_Bp, v0);
    std::map<long, std::vector<Word>> slices;
    bool filtration_ok = true;
    bool ambiguous = false;
    for (const auto& w : words) {
      long s = word_weight(*d.wt_H, w);
      if (s <= g0) slices[s].push_back(w);
    }
    NCPoly x = d.H->zero();
    TensorPoly residual = target;
    bool failed = false;
    for (long s = g0; s >= 0 && !failed; --s) {
      auto sit = slices.find(s);
      std::vector<Word> slice = sit == slices.end() ? std::vector<Word>{} : sit->second;
      // Project the residual to weight-s pairs.
      PairIndex pidx{d.B->alphabet.get(), d.Bp->alphabet.get()};
      std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols;
      for (const auto& w : slice) {
        TensorPoly tw = theta(d, NCPoly::monomial(d.H->alphabet, w, one));
        std::vector<std::pair<std::size_t, Scalar>> col;
        for (const auto& [key, c] : tw.terms()) {
          long t = word_weight(*d.wt_B, key.first) + word_weight(*d.wt_Bp, key.second);
          if (t > s) {
            filtration_ok = false;
            break;
          }
          if (t == s) col.emplace_back(pidx.intern(key.first, key.second), c);
        }
        if (!filtration_ok) break;
        cols.push_back(std::move(col));
      }
      if (!filtration_ok) break;
      std::vector<std::pair<std::size_t, Scalar>> rhs_entries;
      for (const auto& [key, c] : residual.terms()) {
        long t = word_weight(*d.wt_B, key.first) + word_weight(*d.wt_Bp, key.second);
        if (t > s) {
          failed = true;  // residual has weight above s: unreachable by lower slices
          break;
        }
        if (t == s) rhs_entries.emplace_back(pidx.intern(key.first, key.second), c);
      }
      if (failed) break;
      ScalarMat m(pidx.pairs.size(), ScalarVec(slice.size(), zero));
      for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [r, c] : cols[j]) m[r][j] += c;
      // The greedy descent is complete only when this slice map is injective.
      if (!nullspace(m, slice.size(), d.H->ctx).empty()) {
        ambiguous = true;
        break;
      }
      ScalarVec rhs(pidx.pairs.size(), zero);
      for (const auto& [r, c] : rhs_entries) rhs[r] = c;
      auto sol = solve(m, rhs, d.H->ctx);
      if (!sol) {
        failed = true;
        break;
      }
      NCPoly xs(d.H->alphabet, d.H->ctx);
      for (std::size_t j = 0; j < slice.size(); ++j) xs.add_term(slice[j], (*sol)[j]);
      if (!xs.is_zero()) {
        x = x + xs;
        residual = residual - theta(d, xs);
      }
    }
    if (filtration_ok && !ambiguous) {
      if (!failed && residual.is_zero()) {
        witness = x;
        graded_conclusive = true;
      } else {
        graded_conclusive = true;  // definite absence within the cutoff span
      }
    }
    if (graded_conclusive && !witness) {
      if (definitive_not_dominant(d, nl, nlp, cutoff, res.note)) {
        res.status = DominanceResult::Status::DefinitiveNotDominant;
        return res;
      }
      res.status = DominanceResult::Status::NotFoundUpTo;
      res.note = "no preimage of nu(lambda)#nu'(lambda) within word length " +
                 std::to_string(cutoff) + " (inconclusive)";
      return res;
    }
  }
  if (!witness) {
    // Monolithic affine solve over all words of length <= cutoff.
    PairIndex pidx{d.B->alphabet.get(), d.Bp->alphabet.get()};
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols;
    for (const auto& w : words) {
      TensorPoly tw = theta(d, NCPoly::monomial(d.H->alphabet, w, one));
      std::vector<std::pair<std::size_t, Scalar>> col;
      for (const auto& [key, c] : tw.terms()) col.emplace_back(pidx.intern(key.first, key.second), c);
      cols.push_back(std::move(col));
    }
    std::size_t target_row = pidx.intern(u0, v0);
    ScalarMat m(pidx.pairs.size(), ScalarVec(words.size(), zero));
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& [r, c] : cols[j]) m[r][j] += c;
    ScalarVec rhs(pidx.pairs.size(), zero);
    rhs[target_row] = one;
    auto sol = solve(m, rhs, d.H->ctx);
    if (sol) {
      NCPoly x(d.H->alphabet, d.H->ctx);
      for (std::size_t j = 0; j < words.size(); ++j) x.add_term(words[j], (*sol)[j]);
      witness = x;
    }
  }
  if (witness) {
    if (!(theta(d, *witness) == target))
      throw BigCellError("internal: dominance witness fails verification");
    res.status = DominanceResult::Status::Dominant;
    res.witness = *witness;
    Scalar eps = counit(d.H, *witness);
    if (eps.is_zero())
      throw BigCellError("internal: dominance witness has vanishing counit");
    return res;
  }
  if (definitive_not_dominant(d, nl, nlp, cutoff, res.note)) {
    res.status = DominanceResult::Status::DefinitiveNotDominant;
    return res;
  }
  res.status = DominanceResult::Status::NotFoundUpTo;
  res.note = "no preimage of nu(lambda)#nu'(lambda) within word length " +
             std::to_string(cutoff) + " (inconclusive)";
  return res;
}

Comodule simple_from_induced(const BigCellDatum& d, const WeightWord& lambda, int cutoff) {
  const Scalar one = Scalar::integer(d.H->ctx, 1);
  NCPoly line = d.H->zero();

  DominanceResult dom = is_dominant(d, lambda, cutoff);
  if (dom.status == DominanceResult::Status::Dominant) {
    line = *dom.witness;
  } else if (dom.status == DominanceResult::Status::DefinitiveNotDominant) {
    throw BigCellError("Ind(" + lambda.str(d.lambda) + ") is zero: weight is not dominant");
  } else {
    InducedSubspace ind = induce(d, lambda, cutoff);
    if (ind.basis.empty())
      throw BigCellError("Ind(" + lambda.str(d.lambda) + ") is zero up to cutoff " +
                         std::to_string(cutoff) + " (weight not dominant or cutoff too small)");
    if (!ind.stabilized)
      throw BigCellError("induced subspace did not stabilize at cutoff " +
                         std::to_string(cutoff));
    // B'-stable line inside the induced subspace.
    NCPoly nlp = nu_prime(d, lambda);
    std::vector<std::pair<NCPoly, int>> found;
    PairIndex pidx{d.H->alphabet.get(), d.Bp->alphabet.get()};
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols;
    for (const auto& b : ind.basis) {
      TensorPoly t(d.H, d.Bp);
      TensorPoly db = delta(d.H, b);
      for (const auto& [key, c] : db.terms())
        t.add(NCPoly::monomial(d.H->alphabet, key.first, one), apply_map(d.pip, key.second), c);
      std::vector<std::pair<std::size_t, Scalar>> col;
      for (const auto& [key, c] : t.terms()) col.emplace_back(pidx.intern(key.first, key.second), c);
      // subtract b (x) nu'(lambda)
      for (const auto& [w, c] : b.terms())
        col.emplace_back(pidx.intern(w, nlp.leading_word()), -c);
      cols.push_back(std::move(col));
    }
    const Scalar zero = Scalar::integer(d.H->ctx, 0);
    ScalarMat m(pidx.pairs.size(), ScalarVec(ind.basis.size(), zero));
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& [r, c] : cols[j]) m[r][j] += c;
    auto sols = nullspace(m, ind.basis.size(), d.H->ctx);
    if (sols.empty())
      throw BigCellError("no B'-stable line of weight " + lambda.str(d.lambda) +
                         " in the induced subspace (unstabilized truncation?)");
    if (sols.size() > 1)
      throw BigCellError("multiple B'-stable lines in the induced subspace");
    for (std::size_t j = 0; j < ind.basis.size(); ++j) line = line + sols[0][j] * ind.basis[j];
    line = d.H->nf(line);
  }

  // Close the line under the coaction: collect left tensor factors until the
  // span stabilizes.
  PolySpan span(*d.H);
  std::vector<NCPoly> queue{line};
  span.add(line);
  while (!queue.empty()) {
    NCPoly p = queue.back();
    queue.pop_back();
    TensorPoly dp = delta(d.H, p);
    std::map<std::string, NCPoly> by_right;
    for (const auto& [key, c] : dp.terms()) {
      std::string rk = word_str(*d.H->alphabet, key.second);
      auto it = by_right.find(rk);
      if (it == by_right.end())
        it = by_right.emplace(rk, NCPoly(d.H->alphabet, d.H->ctx)).first;
      it->second.add_term(key.first, c);
    }
    for (auto& [rk, vec] : by_right)
      if (span.add(vec)) queue.push_back(vec);
  }

  const auto& basis = span.basis();
  const std::size_t n = basis.size();
  std::vector<std::vector<NCPoly>> entries(n, std::vector<NCPoly>(n, d.H->zero()));
  for (std::size_t i = 0; i < n; ++i) {
    TensorPoly dp = delta(d.H, basis[i]);
    std::map<std::string, NCPoly> by_right;
    std::map<std::string, Word> right_words;
    for (const auto& [key, c] : dp.terms()) {
      std::string rk = word_str(*d.H->alphabet, key.second);
      right_words.emplace(rk, key.second);
      auto it = by_right.find(rk);
      if (it == by_right.end())
        it = by_right.emplace(rk, NCPoly(d.H->alphabet, d.H->ctx)).first;
      it->second.add_term(key.first, c);
    }
    for (const auto& [rk, vec] : by_right) {
      auto coords = span.coords(vec);
      if (!coords)
        throw BigCellError("coaction closure escaped its own span (internal)");
      for (std::size_t j = 0; j < n; ++j)
        if (!(*coords)[j].is_zero())
          entries[j][i].add_term(right_words.at(rk), (*coords)[j]);
    }
  }
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("w" + std::to_string(i));
  Comodule L = make_comodule(d.H, std::move(entries), std::move(labels));
  if (!is_simple(L))
    throw BigCellError("constructed subcomodule for " + lambda.str(d.lambda) +
                       " is not simple (truncation too small or non-generic parameter)");
  return L;
}

WeightWord highest_weight(const BigCellDatum& d, const Comodule& v, int candidate_len) {
  if (candidate_len < 0) {
    int m = 0;
    for (std::size_t i = 0; i < v.dim(); ++i)
      for (std::size_t j = 0; j < v.dim(); ++j)
        m = std::max(m, v.matrix.at(i, j).max_word_length());
    candidate_len = m + 1;
  }
  std::vector<NCPoly> candidates;
  std::vector<WeightWord> cand_weights;
  for (const auto& mu : weight_words_up_to(d.lambda, candidate_len)) {
    candidates.push_back(nu_prime(d, mu));
    cand_weights.push_back(mu);
  }
  auto lines = stable_lines(v, d.pip, candidates);
  if (lines.empty())
    throw BigCellError("no B'-stable line found among weight candidates of length <= " +
                       std::to_string(candidate_len) + " (candidate set too small)");
  if (lines.size() > 1)
    throw BigCellError("comodule has " + std::to_string(lines.size()) +
                       " B'-stable lines: not a highest-weight situation");
  NCPoly img = apply_map(d.psip, lines[0].grouplike);
  if (img.term_count() != 1)
    throw BigCellError("stable-line weight does not map to a group element");
  return word_to_weight(d.lambda, img.leading_word());
}

std::vector<NCPoly> theta_kernel(const BigCellDatum& d, int max_len) {
  auto words = monomials_up_to(d.H->rws, max_len);
  const Scalar zero = Scalar::integer(d.H->ctx, 0);
  const Scalar one = Scalar::integer(d.H->ctx, 1);
  PairIndex pidx{d.B->alphabet.get(), d.Bp->alphabet.get()};
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols;
  for (const auto& w : words) {
    TensorPoly tw = theta(d, NCPoly::monomial(d.H->alphabet, w, one));
    std::vector<std::pair<std::size_t, Scalar>> col;
    for (const auto& [key, c] : tw.terms()) col.emplace_back(pidx.intern(key.first, key.second), c);
    cols.push_back(std::move(col));
  }
  ScalarMat m(pidx.pairs.size(), ScalarVec(words.size(), zero));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [r, c] : cols[j]) m[r][j] += c;
  std::vector<NCPoly> out;
  for (auto& vec : nullspace(m, words.size(), d.H->ctx)) {
    NCPoly p(d.H->alphabet, d.H->ctx);
    for (std::size_t j = 0; j < words.size(); ++j) p.add_term(words[j], vec[j]);
    out.push_back(std::move(p));
  }
  return out;
}

BigCellReport check_bigcell(const BigCellDatum& d, int max_deg) {
  BigCellReport rep;
  rep.datum = d.name;
  rep.max_deg = max_deg;

  HopfMap psi_pi = compose(d.psi, d.pi);
  HopfMap psip_pip = compose(d.psip, d.pip);
  rep.psi_pi_consistent = true;
  for (std::size_t g = 0; g < d.H->alphabet->size(); ++g) {
    if (!(psi_pi.images[g] == psip_pip.images[g])) {
      rep.psi_pi_consistent = false;
      rep.failures.push_back("psi o pi != psi' o pi' on generator " +
                             d.H->alphabet->name(static_cast<std::int32_t>(g)));
    }
  }

  rep.sections_ok = true;
  auto check_sections = [&](const HopfPtr& b, const HopfMap& psi_map,
                            const std::vector<Word>& pos, const std::vector<Word>& neg,
                            const char* side) {
    for (const auto& g : b->grouplikes) {
      NCPoly img = apply_map(psi_map, g);
      if (img.term_count() != 1 || !img.leading_coeff().is_one()) {
        rep.sections_ok = false;
        rep.failures.push_back(std::string(side) + ": psi(" + g.str() +
                               ") is not a group element: " + img.str());
        continue;
      }
      WeightWord wt = word_to_weight(d.lambda, img.leading_word());
      Word back;
      for (const auto& [gen, sign] : wt.letters()) {
        const Word& part = sign > 0 ? pos.at(gen) : neg.at(gen);
        back.letters.insert(back.letters.end(), part.letters.begin(), part.letters.end());
      }
      NCPoly nb = normal_form(b->rws, back);
      if (!(nb == g)) {
        rep.sections_ok = false;
        rep.failures.push_back(std::string(side) + ": nu(psi(" + g.str() +
                               ")) != " + g.str() + " (section check)");
      }
    }
  };
  check_sections(d.B, d.psi, d.nu_pos, d.nu_neg, "B");
  check_sections(d.Bp, d.psip, d.nup_pos, d.nup_neg, "B'");

  if (d.has_gradings()) {
    rep.graded = graded_injectivity(d, max_deg);
    rep.theta_injective = rep.graded->injective_up_to_max();
    if (!rep.theta_injective) {
      for (const auto& v : rep.graded->verdicts) {
        if (!v.filtration_ok)
          rep.failures.push_back("filtration escape at degree " + std::to_string(v.degree));
        else if (!v.injective)
          rep.failures.push_back(
              "q_s o theta not injective at degree " + std::to_string(v.degree) +
              (v.kernel_witness ? ": kernel witness " + v.kernel_witness->str() : ""));
      }
    }
  } else {
    auto kern = theta_kernel(d, max_deg);
    rep.theta_injective = kern.empty();
    if (!rep.theta_injective)
      rep.failures.push_back("theta has kernel on words of length <= " +
                             std::to_string(max_deg) + ": " + kern.front().str());
  }
  rep.notes.push_back(
      "group-like completeness of B and B' is assumed from pointedness (declared lists)");
  return rep;
}

}  // namespace hopfcell
