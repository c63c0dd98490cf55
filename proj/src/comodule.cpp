#include "hopfcell/comodule.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hopfcell {

MultMatrix::MultMatrix(HopfPtr host, std::vector<std::vector<NCPoly>> entries)
    : host_(std::move(host)), entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  for (auto& row : entries_) {
    if (row.size() != n) throw ComoduleError("comodule matrix must be square");
    for (auto& e : row) e = host_->nf(e);
  }
  const Scalar one = Scalar::integer(host_->ctx, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      TensorPoly expected(host_, host_);
      for (std::size_t k = 0; k < n; ++k) expected.add(entries_[i][k], entries_[k][j], one);
      if (!(delta(host_, entries_[i][j]) == expected))
        throw ComoduleError("matrix is not multiplicative at entry (" + std::to_string(i) +
                            "," + std::to_string(j) + ")");
      Scalar eps = counit(host_, entries_[i][j]);
      if (!(i == j ? eps.is_one() : eps.is_zero()))
        throw ComoduleError("matrix fails the counit condition at entry (" +
                            std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

Comodule make_comodule(HopfPtr host, std::vector<std::vector<NCPoly>> entries,
                       std::vector<std::string> labels) {
  MultMatrix m(std::move(host), std::move(entries));
  if (labels.empty())
    for (std::size_t i = 1; i <= m.dim(); ++i) labels.push_back("e" + std::to_string(i));
  return Comodule{std::move(m), std::move(labels)};
}

Comodule parse_comodule(HopfPtr host, const std::vector<std::vector<std::string>>& entries) {
  std::vector<std::vector<NCPoly>> polys;
  for (const auto& row : entries) {
    std::vector<NCPoly> prow;
    for (const auto& s : row) prow.push_back(host->parse(s));
    polys.push_back(std::move(prow));
  }
  return make_comodule(std::move(host), std::move(polys));
}

Comodule trivial_comodule(const HopfPtr& host) {
  return make_comodule(host, std::vector<std::vector<NCPoly>>{{host->one()}});
}

namespace {

// Sparse coordinates of a family of polynomials over the irreducible-word
// basis they touch.
struct WordIndex {
  explicit WordIndex(const Alphabet* a) : alph(a) {}
  const Alphabet* alph;
  std::vector<Word> words;
  std::map<std::string, std::size_t> index;  // keyed by rendered word

  std::size_t intern(const Word& w) {
    std::string key = word_str(*alph, w);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    std::size_t id = words.size();
    words.push_back(w);
    index.emplace(std::move(key), id);
    return id;
  }
};

ScalarMat coefficient_matrix(const std::vector<NCPoly>& polys, const FieldCtx& ctx,
                             const Alphabet& alph) {
  WordIndex wi(&alph);
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> sparse;
  for (const auto& p : polys) {
    std::vector<std::pair<std::size_t, Scalar>> row;
    for (const auto& [w, c] : p.terms()) row.emplace_back(wi.intern(w), c);
    sparse.push_back(std::move(row));
  }
  const Scalar zero = Scalar::integer(ctx, 0);
  ScalarMat m(polys.size(), ScalarVec(wi.words.size(), zero));
  for (std::size_t r = 0; r < sparse.size(); ++r)
    for (const auto& [cidx, c] : sparse[r]) m[r][cidx] = c;
  return m;
}

}  // namespace

bool is_simple(const Comodule& v) {
  const std::size_t n = v.dim();
  std::vector<NCPoly> coeffs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) coeffs.push_back(v.matrix.at(i, j));
  ScalarMat m = coefficient_matrix(coeffs, v.host()->ctx, *v.host()->alphabet);
  return rank(std::move(m), v.host()->ctx) == static_cast<long>(n * n);
}

Comodule tensor(const Comodule& v, const Comodule& w) {
  if (v.host() != w.host()) throw ComoduleError("tensor requires a common host");
  const std::size_t n = v.dim(), m = w.dim();
  std::vector<std::vector<NCPoly>> e(n * m, std::vector<NCPoly>(n * m, v.host()->zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < m; ++l)
          e[i * m + k][j * m + l] = v.host()->nf(v.matrix.at(i, j) * w.matrix.at(k, l));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k)
      labels.push_back(v.basis_labels[i] + "(x)" + w.basis_labels[k]);
  return make_comodule(v.host(), std::move(e), std::move(labels));
}

Comodule dual(const Comodule& v) {
  const std::size_t n = v.dim();
  std::vector<std::vector<NCPoly>> e(n, std::vector<NCPoly>(n, v.host()->zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[i][j] = antipode(v.host(), v.matrix.at(j, i));
  return make_comodule(v.host(), std::move(e));
}

Comodule restrict_comodule(const Comodule& v, const HopfMap& f) {
  if (f.source != v.host()) throw ComoduleError("restriction map must start at the host");
  const std::size_t n = v.dim();
  std::vector<std::vector<NCPoly>> e(n, std::vector<NCPoly>(n, f.target->zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[i][j] = apply_map(f, v.matrix.at(i, j));
  return make_comodule(f.target, std::move(e), v.basis_labels);
}

std::vector<StableLine> stable_lines(const Comodule& v, const HopfMap& f,
                                     const std::vector<NCPoly>& candidates) {
  const std::size_t n = v.dim();
  const FieldCtx& ctx = f.target->ctx;
  const Scalar zero = Scalar::integer(ctx, 0);
  const Scalar one = Scalar::integer(ctx, 1);

  // f applied entrywise once.
  std::vector<std::vector<NCPoly>> fx(n, std::vector<NCPoly>(n, f.target->zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) fx[i][j] = apply_map(f, v.matrix.at(i, j));

  std::vector<StableLine> out;
  for (const auto& cand : candidates) {
    NCPoly g = f.target->nf(cand);
    if (g.term_count() != 1)
      throw ComoduleError("stable-line candidate is not a monomial group-like: " + cand.str());
    const Word& gw = g.leading_word();
    // Equations: for all j and all target words w:
    //   sum_i coeff_w(f(x_ji)) r_i - [w == gw] r_j = 0.
    std::map<std::string, std::size_t> widx;
    std::vector<Word> words;
    auto intern = [&](const Word& w) {
      std::string key = word_str(*f.target->alphabet, w);
      auto it = widx.find(key);
      if (it != widx.end()) return it->second;
      words.push_back(w);
      widx.emplace(key, words.size() - 1);
      return words.size() - 1;
    };
    intern(gw);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        for (const auto& [w, c] : fx[j][i].terms()) intern(w);
    ScalarMat m(n * words.size(), ScalarVec(n, zero));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i)
        for (const auto& [w, c] : fx[j][i].terms()) m[j * words.size() + widx[word_str(*f.target->alphabet, w)]][i] += c;
      m[j * words.size() + widx[word_str(*f.target->alphabet, gw)]][j] -= g.leading_coeff();
    }
    auto basis = nullspace(m, n, ctx);
    for (auto& vec : basis) {
      // normalize: first nonzero coordinate = 1
      for (auto& x : vec)
        if (!x.is_zero()) {
          Scalar inv = x.inverse();
          for (auto& y : vec) y = inv * y;
          break;
        }
      out.push_back(StableLine{std::move(vec), g, static_cast<long>(basis.size())});
    }
  }
  return out;
}

std::vector<NCPoly> grouplike_candidates(const HopfPtr& h, int max_len) {
  std::vector<NCPoly> out{h->one()};
  std::set<std::string> seen{h->one().str()};
  std::vector<NCPoly> level = out;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<NCPoly> next;
    for (const auto& p : level)
      for (const auto& g : h->grouplikes) {
        NCPoly x = h->nf(p * g);
        if (x.is_zero()) continue;
        if (seen.insert(x.str()).second) {
          next.push_back(x);
          out.push_back(x);
        }
      }
    level = std::move(next);
  }
  return out;
}

NCPoly highest_weight_grouplike(const Comodule& v, const HopfMap& f,
                                const std::vector<NCPoly>& candidates) {
  auto lines = stable_lines(v, f, candidates);
  if (lines.empty())
    throw ComoduleError(
        "no stable line found among the candidates (inconclusive: candidate set too small)");
  if (lines.size() > 1) {
    std::string ws;
    for (const auto& l : lines) ws += (ws.empty() ? "" : ", ") + l.grouplike.str();
    throw ComoduleError("not a highest-weight situation: " + std::to_string(lines.size()) +
                        " stable lines (weights " + ws + ")");
  }
  return lines.front().grouplike;
}

// --------------------------------------------------------------------- R(F)

std::string multideg_str(const MultiDeg& d) {
  if (d.empty()) return "1";
  std::string s;
  for (int x : d) s += (x == 0 ? "a" : "b");
  return s;
}

RFAlgebra::RFAlgebra(HopfPtr host, std::vector<std::vector<Scalar>> f_matrix)
    : host_(std::move(host)), n_(static_cast<int>(f_matrix.size())), f_(std::move(f_matrix)) {
  const FieldCtx ctx = host_->ctx;
  const Scalar one = Scalar::integer(ctx, 1);
  std::vector<std::string> names;
  for (int i = 1; i <= n_; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n_; ++i) names.push_back("y" + std::to_string(i));
  auto alph = std::make_shared<Alphabet>(names);
  auto xg = [&](int i) { return NCPoly::generator(alph, ctx, i - 1); };
  auto yg = [&](int i) { return NCPoly::generator(alph, ctx, n_ + i - 1); };

  NCPoly rel1 = NCPoly::zero(alph, ctx);
  for (int k = 1; k <= n_; ++k) rel1 = rel1 + xg(k) * yg(k);
  NCPoly rel2 = NCPoly::constant(alph, -f_[n_ - 1][0]);
  for (int k = 1; k <= n_; ++k)
    for (int l = 1; l <= n_; ++l)
      if (!f_[k - 1][l - 1].is_zero()) rel2 = rel2 + f_[k - 1][l - 1] * (yg(k) * xg(l));

  RewriteSystem rws(alph, ctx, {});
  std::vector<RewriteRule> rules;
  for (const NCPoly* rel : {&rel1, &rel2}) {
    NCPoly r = normal_form(rws, *rel);
    if (r.is_zero()) continue;
    rules.push_back(orient_relator(rws, r));
    rws = RewriteSystem(alph, ctx, rules);
  }
  rws = complete_up_to(rws, 6);
  auto base = std::make_shared<PresentedAlgebra>();
  base->ctx = ctx;
  base->alphabet = alph;
  base->rws = rws;
  base->label = "R(F)";
  alg_ = base;

  // coaction table: rho(x_i) = sum_k x_k (x) u_ki, rho(y_i) = sum_k y_k (x) v_ki
  auto hg = [&](const std::string& name) {
    int idx = host_->alphabet->index_of(name);
    if (idx < 0) throw ComoduleError("host lacks generator " + name + " required by R(F)");
    return Word::single(static_cast<std::int32_t>(idx));
  };
  for (int i = 1; i <= n_; ++i) {
    TensorPoly t(alg_, host_);
    for (int k = 1; k <= n_; ++k)
      t.add_irreducible(Word::single(k - 1),
                        hg("u" + std::to_string(k) + std::to_string(i)), one);
    rho_gen_.push_back(std::move(t));
  }
  for (int i = 1; i <= n_; ++i) {
    TensorPoly t(alg_, host_);
    for (int k = 1; k <= n_; ++k)
      t.add_irreducible(Word::single(n_ + k - 1),
                        hg("v" + std::to_string(k) + std::to_string(i)), one);
    rho_gen_.push_back(std::move(t));
  }

  // The coaction must kill both relations, and every rule must be
  // multidegree-homogeneous so the grading descends.
  for (const NCPoly* rel : {&rel1, &rel2})
    if (!coaction(*rel).is_zero())
      throw ComoduleError("R(F) coaction does not annihilate a defining relation");
  for (const auto& rule : rws.rules()) {
    MultiDeg d = multidegree(rule.lhs);
    for (const auto& [w, c] : rule.rhs.terms())
      if (!w.empty() && !(multidegree(w) == d))
        throw ComoduleError("R(F) rule is not multidegree-homogeneous; grading undefined");
  }

  // Psi: x_i -> u_1i, y_i -> v_ni; colinearity on generators:
  // (Psi (x) id) rho(g) == Delta(Psi(g)).
  for (int i = 1; i <= n_; ++i)
    psi_gen_.push_back(NCPoly::monomial(host_->alphabet,
                                        hg("u1" + std::to_string(i)), one));
  for (int i = 1; i <= n_; ++i)
    psi_gen_.push_back(NCPoly::monomial(
        host_->alphabet, hg("v" + std::to_string(n_) + std::to_string(i)), one));
  for (std::size_t g = 0; g < psi_gen_.size(); ++g) {
    TensorPoly lhs(host_, host_);
    for (const auto& [key, c] : rho_gen_[g].terms())
      lhs.add(psi(key.first), NCPoly::monomial(host_->alphabet, key.second, one), c);
    if (!(lhs == delta(host_, psi_gen_[g])))
      throw ComoduleError("Psi is not colinear on generator " + names[g]);
  }
}

MultiDeg RFAlgebra::multidegree(const Word& w) const {
  MultiDeg d;
  for (auto letter : w.letters) d.push_back(letter < n_ ? 0 : 1);
  return d;
}

std::vector<Word> RFAlgebra::component_basis(const MultiDeg& lambda) const {
  std::vector<Word> out{Word::one()};
  for (int step : lambda) {
    std::vector<Word> next;
    for (const auto& u : out)
      for (int i = 0; i < n_; ++i) {
        Word w = u;
        w.letters.push_back(static_cast<std::int32_t>(step == 0 ? i : n_ + i));
        if (alg_->rws.is_irreducible(w)) next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(),
            [&](const Word& a, const Word& b) { return word_less(*alg_->alphabet, a, b); });
  return out;
}

TensorPoly RFAlgebra::coaction(const Word& w) const {
  TensorPoly acc(alg_, host_);
  acc.add_irreducible(Word::one(), Word::one(), Scalar::integer(alg_->ctx, 1));
  for (auto letter : w.letters) acc = acc * rho_gen_[letter];
  return acc;
}

TensorPoly RFAlgebra::coaction(const NCPoly& p) const {
  TensorPoly acc(alg_, host_);
  for (const auto& [w, c] : p.terms()) acc = acc + c * coaction(w);
  return acc;
}

Comodule RFAlgebra::component(const MultiDeg& lambda) const {
  std::vector<Word> basis = component_basis(lambda);
  const std::size_t d = basis.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < d; ++i) index[word_str(*alg_->alphabet, basis[i])] = i;
  std::vector<std::vector<NCPoly>> entries(d, std::vector<NCPoly>(d, host_->zero()));
  for (std::size_t i = 0; i < d; ++i) {
    TensorPoly rho = coaction(basis[i]);
    for (const auto& [key, c] : rho.terms()) {
      auto it = index.find(word_str(*alg_->alphabet, key.first));
      if (it == index.end())
        throw ComoduleError("R(F) coaction left the graded component " +
                            multideg_str(lambda));
      entries[it->second][i].add_term(key.second, c);
    }
  }
  std::vector<std::string> labels;
  for (const auto& w : basis) labels.push_back(word_str(*alg_->alphabet, w));
  return make_comodule(host_, std::move(entries), std::move(labels));
}

NCPoly RFAlgebra::psi(const Word& w) const {
  NCPoly prod = host_->one();
  for (auto letter : w.letters) prod = host_->nf(prod * psi_gen_[letter]);
  return prod;
}

NCPoly RFAlgebra::psi(const NCPoly& p) const {
  NCPoly acc = host_->zero();
  for (const auto& [w, c] : p.terms()) acc = acc + c * psi(w);
  return acc;
}

}  // namespace hopfcell
