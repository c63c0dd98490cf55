#include "hopfcell/hopf.hpp"

#include "hopfcell/parse.hpp"

#include <algorithm>

namespace hopfcell {

namespace {

Word remap_word(const Word& w, const std::vector<std::int32_t>& m) {
  Word r = w;
  for (auto& l : r.letters) l = m[l];
  return r;
}

NCPoly remap_poly(const NCPoly& p, const AlphabetPtr& na, const std::vector<std::int32_t>& m) {
  NCPoly r(na, p.ctx());
  for (const auto& [w, c] : p.terms()) r.add_term(remap_word(w, m), c);
  return r;
}

AlgebraPtr as_algebra(const HopfPtr& h) { return h; }

}  // namespace

// --------------------------------------------------------------- extensions

TensorPoly delta(const HopfPtr& h, const NCPoly& p) {
  TensorPoly acc(as_algebra(h), as_algebra(h));
  for (const auto& [w, c] : p.terms()) {
    TensorPoly prod(as_algebra(h), as_algebra(h));
    prod.add_irreducible(Word::one(), Word::one(), Scalar::integer(h->ctx, 1));
    for (auto letter : w.letters) {
      TensorPoly step(as_algebra(h), as_algebra(h));
      for (const auto& [u, v, s] : h->delta_gen[letter]) step.add_irreducible(u, v, s);
      prod = prod * step;
    }
    acc = acc + c * prod;
  }
  return acc;
}

Scalar counit(const HopfPtr& h, const NCPoly& p) {
  Scalar acc = Scalar::integer(h->ctx, 0);
  for (const auto& [w, c] : p.terms()) {
    Scalar e = c;
    for (auto letter : w.letters) {
      if (e.is_zero()) break;
      e = e * h->epsilon_gen[letter];
    }
    acc += e;
  }
  return acc;
}

NCPoly antipode(const HopfPtr& h, const NCPoly& p) {
  NCPoly acc = h->zero();
  for (const auto& [w, c] : p.terms()) {
    NCPoly prod = h->one();
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
      prod = h->nf(prod * h->antipode_gen[*it]);
    acc = acc + c * prod;
  }
  return acc;
}

TriplePoly delta_left(const HopfPtr& h, const TensorPoly& t) {
  TriplePoly out(as_algebra(h));
  for (const auto& [key, c] : t.terms()) {
    TensorPoly du = delta(h, NCPoly::monomial(h->alphabet, key.first, Scalar::integer(h->ctx, 1)));
    NCPoly right = NCPoly::monomial(h->alphabet, key.second, Scalar::integer(h->ctx, 1));
    for (const auto& [k2, c2] : du.terms())
      out.add(NCPoly::monomial(h->alphabet, k2.first, Scalar::integer(h->ctx, 1)),
              NCPoly::monomial(h->alphabet, k2.second, Scalar::integer(h->ctx, 1)), right,
              c * c2);
  }
  return out;
}

TriplePoly delta_right(const HopfPtr& h, const TensorPoly& t) {
  TriplePoly out(as_algebra(h));
  for (const auto& [key, c] : t.terms()) {
    TensorPoly dv = delta(h, NCPoly::monomial(h->alphabet, key.second, Scalar::integer(h->ctx, 1)));
    NCPoly left = NCPoly::monomial(h->alphabet, key.first, Scalar::integer(h->ctx, 1));
    for (const auto& [k2, c2] : dv.terms())
      out.add(left, NCPoly::monomial(h->alphabet, k2.first, Scalar::integer(h->ctx, 1)),
              NCPoly::monomial(h->alphabet, k2.second, Scalar::integer(h->ctx, 1)), c * c2);
  }
  return out;
}

TriplePoly delta2(const HopfPtr& h, const NCPoly& p) { return delta_left(h, delta(h, p)); }

// --------------------------------------------------------------- make_hopf

HopfPtr make_hopf(PresentedAlgebra base, std::vector<PresentedHopf::DeltaRow> delta_rows,
                  std::vector<Scalar> epsilon, std::vector<NCPoly> antipode_polys,
                  std::vector<NCPoly> grouplikes, Verify verify) {
  const std::size_t n = base.alphabet->size();
  if (delta_rows.size() != n || epsilon.size() != n || antipode_polys.size() != n)
    throw HopfError("structure tables must cover every generator of " + base.label);
  auto h = std::make_shared<PresentedHopf>();
  static_cast<PresentedAlgebra&>(*h) = std::move(base);
  h->delta_gen = std::move(delta_rows);
  h->epsilon_gen = std::move(epsilon);
  for (auto& p : antipode_polys) p = h->nf(p);
  h->antipode_gen = std::move(antipode_polys);
  for (auto& g : grouplikes) g = h->nf(g);
  h->grouplikes = std::move(grouplikes);

  if (verify == Verify::Strict) {
    HopfPtr hc = h;
    for (const auto& rule : h->rws.rules()) {
      NCPoly lhs = NCPoly::monomial(h->alphabet, rule.lhs, Scalar::integer(h->ctx, 1));
      std::string rname = word_str(*h->alphabet, rule.lhs);
      if (!(delta(hc, lhs) == delta(hc, rule.rhs)))
        throw HopfError(h->label + ": comultiplication does not respect rule " + rname);
      if (!(counit(hc, lhs) == counit(hc, rule.rhs)))
        throw HopfError(h->label + ": counit does not respect rule " + rname);
      if (!(antipode(hc, lhs) == antipode(hc, rule.rhs)))
        throw HopfError(h->label + ": antipode does not respect rule " + rname);
    }
    for (const auto& g : h->grouplikes) {
      if (g.term_count() != 1)
        throw HopfError(h->label + ": declared group-like is not a monomial: " + g.str());
      TensorPoly gg(as_algebra(hc), as_algebra(hc));
      gg.add(g, g, Scalar::integer(h->ctx, 1));
      if (!(delta(hc, g) == gg))
        throw HopfError(h->label + ": declared group-like fails Delta(g)=g#g: " + g.str());
      if (!counit(hc, g).is_one())
        throw HopfError(h->label + ": declared group-like fails eps(g)=1: " + g.str());
    }
  }
  return h;
}

HopfPtr build_hopf(const HopfSpec& spec, Verify verify) {
  AlphabetPtr alph = spec.precedence.empty()
                         ? std::make_shared<Alphabet>(spec.generators)
                         : std::make_shared<Alphabet>(spec.generators, spec.precedence);
  if (!spec.inverse_pairs.empty()) {
    auto mod = std::make_shared<Alphabet>(*alph);
    for (const auto& [g, gi] : spec.inverse_pairs) {
      int a = mod->index_of(g), b = mod->index_of(gi);
      if (a < 0 || b < 0) throw HopfError("inverse pair names unknown generator");
      mod->set_inverse_pair(a, b);
    }
    alph = mod;
  }

  std::vector<RewriteRule> rules;
  for (const auto& s : spec.rules) {
    auto arrow = s.find("->");
    if (arrow == std::string::npos)
      throw HopfError("oriented rule must contain '->': " + s);
    NCPoly lhs = parse_poly(s.substr(0, arrow), alph, spec.ctx);
    NCPoly rhs = parse_poly(s.substr(arrow + 2), alph, spec.ctx);
    if (lhs.term_count() != 1 || !lhs.leading_coeff().is_one() || lhs.leading_word().empty())
      throw HopfError("rule lhs must be a single monic word: " + s);
    rules.push_back(RewriteRule{lhs.leading_word(), std::move(rhs)});
  }
  RewriteSystem rws(alph, spec.ctx, rules);
  for (const auto& s : spec.relators) {
    NCPoly rel = normal_form(rws, parse_poly(s, alph, spec.ctx));
    if (rel.is_zero()) continue;
    rules.push_back(orient_relator(rws, rel));
    rws = RewriteSystem(alph, spec.ctx, rules);
  }

  auto cps = local_confluence_report(rws, spec.confluence_degree);
  if (!cps.empty())
    throw HopfError(spec.label + ": rules are not confluent at degree " +
                    std::to_string(spec.confluence_degree) + "; first unresolved overlap " +
                    word_str(*alph, cps.front().overlap) + " with difference " +
                    cps.front().difference.str());

  PresentedAlgebra base{spec.ctx, alph, rws, spec.label};

  std::vector<PresentedHopf::DeltaRow> drows(alph->size());
  std::vector<Scalar> eps(alph->size(), Scalar::integer(spec.ctx, 0));
  std::vector<NCPoly> spode(alph->size());
  for (std::size_t g = 0; g < alph->size(); ++g) {
    const std::string& name = alph->name(static_cast<std::int32_t>(g));
    auto dit = spec.delta.find(name);
    auto eit = spec.epsilon.find(name);
    auto sit = spec.antipode.find(name);
    if (dit == spec.delta.end())
      throw HopfError(spec.label + ": missing comultiplication entry for generator " + name);
    if (eit == spec.epsilon.end())
      throw HopfError(spec.label + ": missing counit entry for generator " + name);
    if (sit == spec.antipode.end())
      throw HopfError(spec.label + ": missing antipode entry for generator " + name);
    TensorPoly row(std::make_shared<PresentedAlgebra>(base),
                   std::make_shared<PresentedAlgebra>(base));
    for (auto& [l, r] : parse_tensor_terms(dit->second, alph, alph, spec.ctx))
      row.add(l, r, Scalar::integer(spec.ctx, 1));
    for (const auto& [key, c] : row.terms()) drows[g].emplace_back(key.first, key.second, c);
    eps[g] = parse_scalar(eit->second, spec.ctx);
    spode[g] = parse_poly(sit->second, alph, spec.ctx);
  }
  std::vector<NCPoly> gls;
  for (const auto& s : spec.grouplikes) gls.push_back(parse_poly(s, alph, spec.ctx));

  return make_hopf(std::move(base), std::move(drows), std::move(eps), std::move(spode),
                   std::move(gls), verify);
}

// --------------------------------------------------------------- axiom check

HopfAxiomReport check_hopf_axioms(const HopfPtr& h, int max_deg) {
  HopfAxiomReport rep;
  rep.max_deg = max_deg;
  const Scalar one = Scalar::integer(h->ctx, 1);
  for (const auto& w : monomials_up_to(h->rws, max_deg)) {
    ++rep.words_checked;
    NCPoly pw = NCPoly::monomial(h->alphabet, w, one);
    TensorPoly dw = delta(h, pw);
    TriplePoly lhs3 = delta_left(h, dw), rhs3 = delta_right(h, dw);
    if (!(lhs3 == rhs3))
      rep.failures.push_back({w, "coassociativity", (lhs3 - rhs3).str()});

    NCPoly cl = h->zero(), cr = h->zero();
    NCPoly al = h->zero(), ar = h->zero();
    for (const auto& [key, c] : dw.terms()) {
      NCPoly pu = NCPoly::monomial(h->alphabet, key.first, one);
      NCPoly pv = NCPoly::monomial(h->alphabet, key.second, one);
      cl = cl + (c * counit(h, pu)) * pv;
      cr = cr + (c * counit(h, pv)) * pu;
      al = al + c * h->nf(antipode(h, pu) * pv);
      ar = ar + c * h->nf(pu * antipode(h, pv));
    }
    if (!(cl == pw)) rep.failures.push_back({w, "counit-left", (cl - pw).str()});
    if (!(cr == pw)) rep.failures.push_back({w, "counit-right", (cr - pw).str()});
    NCPoly target = counit(h, pw) * h->one();
    if (!(al == target)) rep.failures.push_back({w, "antipode-left", (al - target).str()});
    if (!(ar == target)) rep.failures.push_back({w, "antipode-right", (ar - target).str()});
  }
  for (const auto& g : h->grouplikes) {
    TensorPoly gg(as_algebra(h), as_algebra(h));
    gg.add(g, g, one);
    if (!(delta(h, g) == gg))
      rep.failures.push_back({g.is_zero() ? Word::one() : g.leading_word(), "group-like",
                              "Delta(g) != g#g for " + g.str()});
    if (!counit(h, g).is_one())
      rep.failures.push_back({g.is_zero() ? Word::one() : g.leading_word(), "group-like",
                              "eps(g) != 1 for " + g.str()});
  }
  return rep;
}

// --------------------------------------------------------------- Hopf maps

NCPoly apply_map(const HopfMap& f, const Word& w) {
  NCPoly prod = f.target->one();
  for (auto letter : w.letters) {
    if (prod.is_zero()) break;
    prod = f.target->nf(prod * f.images[letter]);
  }
  return prod;
}

NCPoly apply_map(const HopfMap& f, const NCPoly& p) {
  NCPoly acc = f.target->zero();
  for (const auto& [w, c] : p.terms()) acc = acc + c * apply_map(f, w);
  return acc;
}

TensorPoly apply_map2(const HopfMap& f, const HopfMap& g, const TensorPoly& t) {
  TensorPoly out(f.target, g.target);
  for (const auto& [key, c] : t.terms()) out.add(apply_map(f, key.first), apply_map(g, key.second), c);
  return out;
}

HopfMap make_hopf_map(HopfPtr source, HopfPtr target, std::vector<NCPoly> images,
                      Verify verify) {
  if (images.size() != source->alphabet->size())
    throw HopfError("hopf map must give an image for every generator of " + source->label);
  for (auto& p : images) p = target->nf(p);
  HopfMap f{std::move(source), std::move(target), std::move(images)};
  if (verify == Verify::Strict) {
    for (const auto& rule : f.source->rws.rules()) {
      NCPoly img = f.target->nf(apply_map(f, rule.lhs) - apply_map(f, rule.rhs));
      if (!img.is_zero())
        throw HopfError("relation " + word_str(*f.source->alphabet, rule.lhs) + " -> " +
                        rule.rhs.str() + " maps to nonzero " + img.str() + " in " +
                        f.target->label);
    }
    for (std::size_t g = 0; g < f.source->alphabet->size(); ++g) {
      NCPoly pg = f.source->gen(static_cast<std::int32_t>(g));
      TensorPoly lhs = delta(f.target, f.images[g]);
      TensorPoly rhs = apply_map2(f, f, delta(f.source, pg));
      if (!(lhs == rhs))
        throw HopfError("map is not comultiplicative on generator " +
                        f.source->alphabet->name(static_cast<std::int32_t>(g)));
      if (!(counit(f.target, f.images[g]) == f.source->epsilon_gen[g]))
        throw HopfError("map does not preserve the counit on generator " +
                        f.source->alphabet->name(static_cast<std::int32_t>(g)));
    }
  }
  return f;
}

HopfMap make_hopf_map(HopfPtr source, HopfPtr target,
                      const std::map<std::string, std::string>& images, Verify verify) {
  std::vector<NCPoly> imgs;
  for (std::size_t g = 0; g < source->alphabet->size(); ++g) {
    const std::string& name = source->alphabet->name(static_cast<std::int32_t>(g));
    auto it = images.find(name);
    if (it == images.end())
      throw HopfError("hopf map is missing an image for generator " + name);
    imgs.push_back(parse_poly(it->second, target->alphabet, target->ctx));
  }
  return make_hopf_map(std::move(source), std::move(target), std::move(imgs), verify);
}

HopfMap identity_map(const HopfPtr& h) {
  std::vector<NCPoly> imgs;
  for (std::size_t g = 0; g < h->alphabet->size(); ++g)
    imgs.push_back(h->gen(static_cast<std::int32_t>(g)));
  return HopfMap{h, h, std::move(imgs)};
}

HopfMap compose(const HopfMap& outer, const HopfMap& inner) {
  if (inner.target != outer.source && !(inner.target->label == outer.source->label &&
                                        *inner.target->alphabet == *outer.source->alphabet))
    throw HopfError("compose: inner target differs from outer source");
  std::vector<NCPoly> imgs;
  for (const auto& p : inner.images) imgs.push_back(apply_map(outer, p));
  return HopfMap{inner.source, outer.target, std::move(imgs)};
}

// --------------------------------------------------------------- constructions

namespace {

struct Combined {
  AlphabetPtr alph;
  std::vector<std::int32_t> map_h, map_l;
};

Combined combine_alphabets(const HopfPtr& h, const HopfPtr& l) {
  std::vector<std::string> names;
  std::vector<std::string> prec;
  for (const auto& n : h->alphabet->precedence_names()) prec.push_back(n);
  for (std::size_t i = 0; i < h->alphabet->size(); ++i)
    names.push_back(h->alphabet->name(static_cast<std::int32_t>(i)));
  std::vector<std::string> lnames;
  for (std::size_t i = 0; i < l->alphabet->size(); ++i) {
    std::string n = l->alphabet->name(static_cast<std::int32_t>(i));
    while (std::find(names.begin(), names.end(), n) != names.end() ||
           std::find(lnames.begin(), lnames.end(), n) != lnames.end())
      n += "_2";
    lnames.push_back(n);
  }
  for (const auto& n : l->alphabet->precedence_names()) {
    int idx = l->alphabet->index_of(n);
    prec.push_back(lnames[idx]);
  }
  names.insert(names.end(), lnames.begin(), lnames.end());
  auto alph = std::make_shared<Alphabet>(names, prec);
  Combined c;
  c.map_h.resize(h->alphabet->size());
  c.map_l.resize(l->alphabet->size());
  for (std::size_t i = 0; i < h->alphabet->size(); ++i)
    c.map_h[i] = static_cast<std::int32_t>(i);
  for (std::size_t i = 0; i < l->alphabet->size(); ++i)
    c.map_l[i] = static_cast<std::int32_t>(h->alphabet->size() + i);
  for (std::size_t i = 0; i < h->alphabet->size(); ++i) {
    auto inv = h->alphabet->inverse_of(static_cast<std::int32_t>(i));
    if (inv >= 0) alph->set_inverse_pair(c.map_h[i], c.map_h[inv]);
  }
  for (std::size_t i = 0; i < l->alphabet->size(); ++i) {
    auto inv = l->alphabet->inverse_of(static_cast<std::int32_t>(i));
    if (inv >= 0) alph->set_inverse_pair(c.map_l[i], c.map_l[inv]);
  }
  c.alph = alph;
  return c;
}

HopfPtr combined_hopf(const HopfPtr& h, const HopfPtr& l, bool cross_commute,
                      const std::string& glue) {
  if (!(h->ctx == l->ctx))
    throw HopfError("cannot combine Hopf algebras over different fields: " +
                    to_string(h->ctx) + " vs " + to_string(l->ctx));
  Combined c = combine_alphabets(h, l);
  std::vector<RewriteRule> rules;
  for (const auto& r : h->rws.rules())
    rules.push_back(RewriteRule{remap_word(r.lhs, c.map_h), remap_poly(r.rhs, c.alph, c.map_h)});
  for (const auto& r : l->rws.rules())
    rules.push_back(RewriteRule{remap_word(r.lhs, c.map_l), remap_poly(r.rhs, c.alph, c.map_l)});
  const Scalar one = Scalar::integer(h->ctx, 1);
  if (cross_commute) {
    for (std::size_t j = 0; j < l->alphabet->size(); ++j)
      for (std::size_t i = 0; i < h->alphabet->size(); ++i) {
        Word lhs{{c.map_l[j], c.map_h[i]}};
        Word rhs{{c.map_h[i], c.map_l[j]}};
        rules.push_back(
            RewriteRule{lhs, NCPoly::monomial(c.alph, rhs, one)});
      }
  }
  PresentedAlgebra base{h->ctx, c.alph, RewriteSystem(c.alph, h->ctx, rules),
                        h->label + glue + l->label};

  std::vector<PresentedHopf::DeltaRow> drows(c.alph->size());
  std::vector<Scalar> eps(c.alph->size(), Scalar::integer(h->ctx, 0));
  std::vector<NCPoly> spode(c.alph->size());
  auto fill = [&](const HopfPtr& src, const std::vector<std::int32_t>& m) {
    for (std::size_t g = 0; g < src->alphabet->size(); ++g) {
      auto ng = m[g];
      for (const auto& [u, v, s] : src->delta_gen[g])
        drows[ng].emplace_back(remap_word(u, m), remap_word(v, m), s);
      eps[ng] = src->epsilon_gen[g];
      spode[ng] = remap_poly(src->antipode_gen[g], c.alph, m);
    }
  };
  fill(h, c.map_h);
  fill(l, c.map_l);
  std::vector<NCPoly> gls;
  for (const auto& g : h->grouplikes) gls.push_back(remap_poly(g, c.alph, c.map_h));
  for (const auto& g : l->grouplikes) gls.push_back(remap_poly(g, c.alph, c.map_l));

  return make_hopf(std::move(base), std::move(drows), std::move(eps), std::move(spode),
                   std::move(gls), Verify::Strict);
}

}  // namespace

HopfPtr free_product(const HopfPtr& h, const HopfPtr& l) {
  return combined_hopf(h, l, false, "*");
}

HopfPtr tensor_product(const HopfPtr& h, const HopfPtr& l) {
  return combined_hopf(h, l, true, "(x)");
}

HopfPtr group_algebra(const GroupPresentation& g, const FieldCtx& ctx) {
  std::vector<std::string> names;
  for (const auto& n : g.gen_names) {
    names.push_back(n);
    names.push_back(n + "^-1");
  }
  auto alph = std::make_shared<Alphabet>(names);
  const int r = g.rank();
  for (int k = 0; k < r; ++k) alph->set_inverse_pair(2 * k, 2 * k + 1);

  const Scalar one = Scalar::integer(ctx, 1);
  std::vector<RewriteRule> rules;
  auto unit_rule = [&](std::int32_t x, std::int32_t y) {
    rules.push_back(RewriteRule{Word{{x, y}}, NCPoly::constant(alph, one)});
  };
  for (int k = 0; k < r; ++k) {
    unit_rule(2 * k, 2 * k + 1);
    unit_rule(2 * k + 1, 2 * k);
  }
  if (g.kind == GroupPresentation::Kind::FreeAbelian) {
    for (int j = 1; j < r; ++j)
      for (int i = 0; i < j; ++i)
        for (std::int32_t s : {2 * j, 2 * j + 1})
          for (std::int32_t t : {2 * i, 2 * i + 1})
            rules.push_back(RewriteRule{
                Word{{s, t}}, NCPoly::monomial(alph, Word{{t, s}}, one)});
  }
  RewriteSystem rws(alph, ctx, rules);
  auto cps = local_confluence_report(rws, 6);
  if (!cps.empty()) throw HopfError("group algebra rules unexpectedly non-confluent");
  PresentedAlgebra base{ctx, alph, std::move(rws),
                        std::string(g.kind == GroupPresentation::Kind::FreeAbelian ? "kZ^" : "kF_") +
                            std::to_string(r)};

  std::vector<PresentedHopf::DeltaRow> drows(names.size());
  std::vector<Scalar> eps(names.size(), one);
  std::vector<NCPoly> spode(names.size());
  std::vector<NCPoly> gls;
  for (std::size_t i = 0; i < names.size(); ++i) {
    auto gi = static_cast<std::int32_t>(i);
    drows[i].emplace_back(Word::single(gi), Word::single(gi), one);
    spode[i] = NCPoly::monomial(alph, Word::single(alph->inverse_of(gi)), one);
    gls.push_back(NCPoly::monomial(alph, Word::single(gi), one));
  }
  return make_hopf(std::move(base), std::move(drows), std::move(eps), std::move(spode),
                   std::move(gls), Verify::Strict);
}

}  // namespace hopfcell
