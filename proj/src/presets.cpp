#include "hopfcell/presets.hpp"

#include "hopfcell/parse.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace hopfcell {

namespace {

std::string ctx_key(const FieldCtx& ctx) { return to_string(ctx); }

HopfPtr cached(const std::string& key, const std::function<HopfPtr()>& build) {
  static std::map<std::string, HopfPtr> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  // Built outside the lock: composite presets call back into the cache.
  HopfPtr h = build();
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(h)).first->second;
}

void load_check(const HopfPtr& h) {
  auto rep = check_hopf_axioms(h, 3);
  if (!rep.ok())
    throw HopfError("preset " + h->label + " failed load-time Hopf axiom verification on " +
                    word_str(*h->alphabet, rep.failures.front().word) + " (" +
                    rep.failures.front().axiom + ")");
}

// ---------------------------------------------------------------- H(F) family

struct HFNaming {
  int n = 2;
  // present(name) returns the generator index or -1 when the generator is
  // killed by the Borel quotient.
  std::function<int(const std::string&)> index;
};

std::string uname(int i, int j) { return "u" + std::to_string(i) + std::to_string(j); }
std::string vname(int i, int j) { return "v" + std::to_string(i) + std::to_string(j); }

/// The defining relators of H(F) (or of a quotient killing some generators):
/// u v^t = v^t u = I_n and v F u^t F^-1 = F u^t F^-1 v = I_n.
std::vector<NCPoly> hf_relators(const AlphabetPtr& alph, const FieldCtx& ctx,
                                const HFNaming& nm,
                                const std::vector<std::vector<Scalar>>& f,
                                const std::vector<std::vector<Scalar>>& finv) {
  const int n = nm.n;
  const Scalar one = Scalar::integer(ctx, 1);
  auto gen = [&](const std::string& name) -> std::optional<Word> {
    int idx = nm.index(name);
    if (idx < 0) return std::nullopt;
    return Word::single(static_cast<std::int32_t>(idx));
  };
  auto pair_term = [&](const std::string& a, const std::string& b, const Scalar& c,
                       NCPoly& acc) {
    auto wa = gen(a), wb = gen(b);
    if (!wa || !wb || c.is_zero()) return;
    acc.add_term(*wa * *wb, c);
  };
  std::vector<NCPoly> rels;
  auto fresh = [&] { return NCPoly::zero(alph, ctx); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      NCPoly r1 = fresh();  // (u v^t)_ij = sum_k u_ik v_jk
      NCPoly r2 = fresh();  // (v^t u)_ij = sum_k v_ki u_kj
      for (int k = 1; k <= n; ++k) {
        pair_term(uname(i, k), vname(j, k), one, r1);
        pair_term(vname(k, i), uname(k, j), one, r2);
      }
      NCPoly r3 = fresh();  // (v F u^t F^-1)_ij = sum_{k,l,m} v_ik F_kl u_ml Finv_mj
      NCPoly r4 = fresh();  // (F u^t F^-1 v)_ij = sum_{k,l,m} F_ik u_lk Finv_lm v_mj
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          for (int m = 1; m <= n; ++m) {
            pair_term(vname(i, k), uname(m, l), f[k - 1][l - 1] * finv[m - 1][j - 1], r3);
            pair_term(uname(l, k), vname(m, j), f[i - 1][k - 1] * finv[l - 1][m - 1], r4);
          }
      for (NCPoly* r : {&r1, &r2, &r3, &r4}) {
        if (i == j) *r = *r - NCPoly::constant(alph, one);
        if (!r->is_zero()) rels.push_back(*r);
      }
    }
  return rels;
}

HopfPtr build_hf_quotient(const FieldCtx& ctx, const std::string& label,
                          const std::vector<std::string>& kept,
                          const std::vector<std::string>& precedence,
                          const std::vector<std::string>& grouplike_names,
                          const std::vector<std::pair<std::string, std::string>>& inv_pairs) {
  const int n = 2;
  const Scalar one = Scalar::integer(ctx, 1);
  const Scalar q = Scalar::q(ctx);
  std::vector<std::vector<Scalar>> f = {{q.pow(-1), Scalar::integer(ctx, 0)},
                                        {Scalar::integer(ctx, 0), q}};
  std::vector<std::vector<Scalar>> finv = {{q, Scalar::integer(ctx, 0)},
                                           {Scalar::integer(ctx, 0), q.pow(-1)}};
  auto alph = std::make_shared<Alphabet>(kept, precedence);
  for (const auto& [a, b] : inv_pairs)
    alph->set_inverse_pair(alph->index_of(a), alph->index_of(b));
  HFNaming nm{n, [&](const std::string& s) { return alph->index_of(s); }};

  RewriteSystem rws(alph, ctx, {});
  std::vector<RewriteRule> rules;
  for (const auto& rel : hf_relators(alph, ctx, nm, f, finv)) {
    NCPoly r = normal_form(rws, rel);
    if (r.is_zero()) continue;
    rules.push_back(orient_relator(rws, r));
    rws = RewriteSystem(alph, ctx, rules);
  }
  // The full H(q) orientation is already confluent; the Borel quotients need
  // a few completion rules (e.g. u11*v12*u22 in B(q)).
  rws = complete_up_to(rws, 6);
  auto cps = local_confluence_report(rws, 6);
  if (!cps.empty())
    throw HopfError(label + ": relations are not confluent at degree 6 (overlap " +
                    word_str(*alph, cps.front().overlap) + ")");

  PresentedAlgebra base{ctx, alph, rws, label};
  std::vector<PresentedHopf::DeltaRow> drows(alph->size());
  std::vector<Scalar> eps(alph->size(), Scalar::integer(ctx, 0));
  std::vector<NCPoly> spode(alph->size(), NCPoly::zero(alph, ctx));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int gu = nm.index(uname(i, j));
      if (gu >= 0) {
        for (int k = 1; k <= n; ++k) {
          int a = nm.index(uname(i, k)), b = nm.index(uname(k, j));
          if (a >= 0 && b >= 0)
            drows[gu].emplace_back(Word::single(a), Word::single(b), one);
        }
        eps[gu] = Scalar::integer(ctx, i == j ? 1 : 0);
        int s = nm.index(vname(j, i));  // S(u) = v^t
        if (s < 0) throw HopfError(label + ": antipode image of " + uname(i, j) + " was killed");
        spode[gu] = NCPoly::monomial(alph, Word::single(s), one);
      }
      int gv = nm.index(vname(i, j));
      if (gv >= 0) {
        for (int k = 1; k <= n; ++k) {
          int a = nm.index(vname(i, k)), b = nm.index(vname(k, j));
          if (a >= 0 && b >= 0)
            drows[gv].emplace_back(Word::single(a), Word::single(b), one);
        }
        eps[gv] = Scalar::integer(ctx, i == j ? 1 : 0);
        // S(v) = F u^t F^-1: S(v_ij) = sum_{k,l} F_ik u_lk Finv_lj
        NCPoly s = NCPoly::zero(alph, ctx);
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            int a = nm.index(uname(l, k));
            Scalar c = f[i - 1][k - 1] * finv[l - 1][j - 1];
            if (a >= 0 && !c.is_zero()) s.add_term(Word::single(a), c);
          }
        spode[gv] = std::move(s);
      }
    }
  std::vector<NCPoly> gls;
  for (const auto& name : grouplike_names)
    gls.push_back(NCPoly::monomial(alph, Word::single(alph->index_of(name)), one));
  HopfPtr h = make_hopf(std::move(base), std::move(drows), std::move(eps), std::move(spode),
                        std::move(gls), Verify::Strict);
  load_check(h);
  return h;
}

std::vector<std::string> hq_all_names() {
  return {"u11", "u12", "u21", "u22", "v11", "v12", "v21", "v22"};
}

}  // namespace

// ------------------------------------------------------------------- presets

HopfPtr preset_slq2(const FieldCtx& ctx) {
  return cached("slq2|" + ctx_key(ctx), [&] {
    HopfSpec s;
    s.ctx = ctx;
    s.label = "slq2";
    s.generators = {"a", "b", "c", "d"};
    s.rules = {"b*a -> q*a*b",      "c*a -> q*a*c",      "d*b -> q*b*d",
               "d*c -> q*c*d",      "b*c -> q*a*d - q",  "c*b -> q*a*d - q",
               "d*a -> q^2*a*d + 1 - q^2"};
    s.delta = {{"a", "a#a + b#c"}, {"b", "a#b + b#d"}, {"c", "c#a + d#c"}, {"d", "c#b + d#d"}};
    s.epsilon = {{"a", "1"}, {"b", "0"}, {"c", "0"}, {"d", "1"}};
    s.antipode = {{"a", "d"}, {"b", "-q*b"}, {"c", "-q^-1*c"}, {"d", "a"}};
    s.grouplikes = {"1"};
    HopfPtr h = build_hopf(s);
    load_check(h);
    return h;
  });
}

HopfPtr preset_bq(const FieldCtx& ctx) {
  return cached("bq|" + ctx_key(ctx), [&] {
    HopfSpec s;
    s.ctx = ctx;
    s.label = "bq";
    s.generators = {"a", "c", "d"};
    s.precedence = {"a", "d", "c"};
    s.rules = {"c*a -> q*a*c", "c*d -> q^-1*d*c", "a*d -> 1", "d*a -> 1"};
    s.delta = {{"a", "a#a"}, {"c", "c#a + d#c"}, {"d", "d#d"}};
    s.epsilon = {{"a", "1"}, {"c", "0"}, {"d", "1"}};
    s.antipode = {{"a", "d"}, {"c", "-q^-1*c"}, {"d", "a"}};
    s.grouplikes = {"a", "d"};
    s.inverse_pairs = {{"a", "d"}};
    HopfPtr h = build_hopf(s);
    load_check(h);
    return h;
  });
}

HopfPtr preset_bq_prime(const FieldCtx& ctx) {
  return cached("bq-prime|" + ctx_key(ctx), [&] {
    HopfSpec s;
    s.ctx = ctx;
    s.label = "bq-prime";
    s.generators = {"a", "b", "d"};
    s.precedence = {"a", "d", "b"};
    s.rules = {"b*a -> q*a*b", "b*d -> q^-1*d*b", "a*d -> 1", "d*a -> 1"};
    s.delta = {{"a", "a#a"}, {"b", "a#b + b#d"}, {"d", "d#d"}};
    s.epsilon = {{"a", "1"}, {"b", "0"}, {"d", "1"}};
    s.antipode = {{"a", "d"}, {"b", "-q*b"}, {"d", "a"}};
    s.grouplikes = {"a", "d"};
    s.inverse_pairs = {{"a", "d"}};
    HopfPtr h = build_hopf(s);
    load_check(h);
    return h;
  });
}

HopfPtr preset_hq(const FieldCtx& ctx) {
  return cached("hq|" + ctx_key(ctx), [&] {
    return build_hf_quotient(ctx, "hq", hq_all_names(),
                             {"u11", "v22", "u12", "u21", "v12", "v21", "u22", "v11"},
                             {}, {});
  });
}

HopfPtr preset_b_of_q(const FieldCtx& ctx) {
  return cached("b-of-q|" + ctx_key(ctx), [&] {
    return build_hf_quotient(ctx, "b-of-q", {"u11", "u21", "u22", "v11", "v12", "v22"},
                             {"u11", "v22", "u21", "v12", "u22", "v11"},
                             {"u11", "u22", "v11", "v22"},
                             {{"u11", "v11"}, {"u22", "v22"}});
  });
}

HopfPtr preset_bprime_of_q(const FieldCtx& ctx) {
  return cached("bprime-of-q|" + ctx_key(ctx), [&] {
    return build_hf_quotient(ctx, "bprime-of-q", {"u11", "u12", "u22", "v11", "v21", "v22"},
                             {"u11", "v22", "u12", "v21", "u22", "v11"},
                             {"u11", "u22", "v11", "v22"},
                             {{"u11", "v11"}, {"u22", "v22"}});
  });
}

HopfPtr preset_sl2j(const FieldCtx& ctx) {
  return cached("sl2j|" + ctx_key(ctx), [&] {
    HopfSpec s;
    s.ctx = ctx;
    s.label = "sl2j";
    s.generators = {"a", "b", "c", "d"};
    s.precedence = {"c", "a", "d", "b"};
    s.rules = {"a*c -> c*a - c^2",
               "d*c -> c*d - c^2",
               "b*a -> a*b + 1 - a^2",
               "b*d -> d*b + 1 - d^2",
               "a*d -> 1 + c*b - c*d",
               "d*a -> 1 + c*b - c*a",
               "b*c -> c*b - c*a + c^2 - c*d"};
    s.delta = {{"a", "a#a + b#c"}, {"b", "a#b + b#d"}, {"c", "c#a + d#c"}, {"d", "c#b + d#d"}};
    s.epsilon = {{"a", "1"}, {"b", "0"}, {"c", "0"}, {"d", "1"}};
    s.antipode = {{"a", "d - c"}, {"b", "a - b + c - d"}, {"c", "-c"}, {"d", "a + c"}};
    s.grouplikes = {"1"};
    HopfPtr h = build_hopf(s);
    load_check(h);
    return h;
  });
}

HopfPtr preset_laurent(const std::string& gen, const FieldCtx& ctx) {
  return cached("laurent-" + gen + "|" + ctx_key(ctx), [&] {
    return group_algebra(GroupPresentation::free_abelian({gen}), ctx);
  });
}

HopfPtr preset_group(const GroupPresentation& g, const FieldCtx& ctx) {
  std::string key = g.kind == GroupPresentation::Kind::Free ? "free" : "abelian";
  for (const auto& n : g.gen_names) key += ":" + n;
  return cached("group-" + key + "|" + ctx_key(ctx), [&] { return group_algebra(g, ctx); });
}

HopfPtr preset_slq2_free_laurent_z(const FieldCtx& ctx) {
  return cached("slq2-free-kz|" + ctx_key(ctx), [&] {
    return free_product(preset_slq2(ctx), preset_laurent("z", ctx));
  });
}

HopfPtr preset_slq2_tensor_square(const FieldCtx& ctx) {
  return cached("slq2-tensor-square|" + ctx_key(ctx), [&] {
    HopfPtr h = tensor_product(preset_slq2(ctx), preset_slq2(ctx));
    auto cps = local_confluence_report(h->rws, 6);
    if (!cps.empty())
      throw HopfError("slq2-tensor-square: cross-commutation rules not confluent");
    return h;
  });
}

HopfPtr preset_by_name(const std::string& name, const FieldCtx& ctx) {
  if (name == "slq2") return preset_slq2(ctx);
  if (name == "bq") return preset_bq(ctx);
  if (name == "bq-prime") return preset_bq_prime(ctx);
  if (name == "hq") return preset_hq(ctx);
  if (name == "b-of-q") return preset_b_of_q(ctx);
  if (name == "bprime-of-q") return preset_bprime_of_q(ctx);
  if (name == "sl2j") return preset_sl2j(ctx);
  if (name == "laurent-z") return preset_laurent("z", ctx);
  if (name == "laurent-t") return preset_laurent("t", ctx);
  if (name == "kf2") return preset_group(GroupPresentation::free_group({"u1", "u2"}), ctx);
  if (name == "kz2") return preset_group(GroupPresentation::free_abelian({"t1", "t2"}), ctx);
  if (name == "slq2-free-kz") return preset_slq2_free_laurent_z(ctx);
  if (name == "slq2-tensor-square") return preset_slq2_tensor_square(ctx);
  throw HopfError("unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() {
  return {"slq2",       "bq",        "bq-prime", "hq",        "b-of-q",
          "bprime-of-q", "sl2j",      "laurent-z", "laurent-t", "kf2",
          "kz2",         "slq2-free-kz", "slq2-tensor-square"};
}

HopfMap iota_embedding(const FieldCtx& ctx) {
  HopfPtr hq = preset_hq(ctx);
  HopfPtr target = preset_slq2_free_laurent_z(ctx);
  std::map<std::string, std::string> images = {
      {"u11", "z*a"},          {"u12", "z*b"},          {"u21", "z*c"},
      {"u22", "z*d"},          {"v11", "d*z^-1"},       {"v12", "-q^-1*c*z^-1"},
      {"v21", "-q*b*z^-1"},    {"v22", "a*z^-1"}};
  return make_hopf_map(hq, target, images);
}

// ---------------------------------------------------------------------- data

namespace {

Word word_of(const HopfPtr& h, const std::string& name) {
  int idx = h->alphabet->index_of(name);
  if (idx < 0) throw HopfError(h->label + " has no generator " + name);
  return Word::single(static_cast<std::int32_t>(idx));
}

std::vector<long> weights_by_name(const HopfPtr& h,
                                  const std::map<std::string, long>& w) {
  std::vector<long> out(h->alphabet->size(), 0);
  for (const auto& [name, v] : w) {
    int idx = h->alphabet->index_of(name);
    if (idx < 0) throw HopfError(h->label + " has no generator " + name);
    out[idx] = v;
  }
  return out;
}

}  // namespace

BigCellDatum slq2_datum(const FieldCtx& ctx) {
  BigCellDatum d;
  d.name = "slq2";
  d.H = preset_slq2(ctx);
  d.B = preset_bq(ctx);
  d.Bp = preset_bq_prime(ctx);
  d.lambda = GroupPresentation::free_abelian({"t"});
  d.kLambda = preset_laurent("t", ctx);
  d.pi = make_hopf_map(d.H, d.B, {{"a", "a"}, {"b", "0"}, {"c", "c"}, {"d", "d"}});
  d.pip = make_hopf_map(d.H, d.Bp, {{"a", "a"}, {"b", "b"}, {"c", "0"}, {"d", "d"}});
  d.psi = make_hopf_map(d.B, d.kLambda, {{"a", "t"}, {"c", "0"}, {"d", "t^-1"}});
  d.psip = make_hopf_map(d.Bp, d.kLambda, {{"a", "t"}, {"b", "0"}, {"d", "t^-1"}});
  d.nu_pos = {word_of(d.B, "a")};
  d.nu_neg = {word_of(d.B, "d")};
  d.nup_pos = {word_of(d.Bp, "a")};
  d.nup_neg = {word_of(d.Bp, "d")};
  d.wt_H = weights_by_name(d.H, {{"a", 0}, {"b", 1}, {"c", 1}, {"d", 2}});
  d.wt_B = weights_by_name(d.B, {{"a", 0}, {"c", 1}, {"d", 0}});
  d.wt_Bp = weights_by_name(d.Bp, {{"a", 0}, {"b", 1}, {"d", 0}});
  d.witness_table = {{WeightWord::generator(d.lambda, 0, 1), d.H->parse("a")}};
  return d;
}

BigCellDatum hq_datum(const FieldCtx& ctx) {
  BigCellDatum d;
  d.name = "hq";
  d.H = preset_hq(ctx);
  d.B = preset_b_of_q(ctx);
  d.Bp = preset_bprime_of_q(ctx);
  d.lambda = GroupPresentation::free_group({"u1", "u2"});
  d.kLambda = preset_group(d.lambda, ctx);
  d.pi = make_hopf_map(d.H, d.B,
                       {{"u11", "u11"},
                        {"u12", "0"},
                        {"u21", "u21"},
                        {"u22", "u22"},
                        {"v11", "v11"},
                        {"v12", "v12"},
                        {"v21", "0"},
                        {"v22", "v22"}});
  d.pip = make_hopf_map(d.H, d.Bp,
                        {{"u11", "u11"},
                         {"u12", "u12"},
                         {"u21", "0"},
                         {"u22", "u22"},
                         {"v11", "v11"},
                         {"v12", "0"},
                         {"v21", "v21"},
                         {"v22", "v22"}});
  d.psi = make_hopf_map(d.B, d.kLambda,
                        {{"u11", "u1"},
                         {"u21", "0"},
                         {"u22", "u2"},
                         {"v11", "u1^-1"},
                         {"v12", "0"},
                         {"v22", "u2^-1"}});
  d.psip = make_hopf_map(d.Bp, d.kLambda,
                         {{"u11", "u1"},
                          {"u12", "0"},
                          {"u22", "u2"},
                          {"v11", "u1^-1"},
                          {"v21", "0"},
                          {"v22", "u2^-1"}});
  d.nu_pos = {word_of(d.B, "u11"), word_of(d.B, "u22")};
  d.nu_neg = {word_of(d.B, "v11"), word_of(d.B, "v22")};
  d.nup_pos = {word_of(d.Bp, "u11"), word_of(d.Bp, "u22")};
  d.nup_neg = {word_of(d.Bp, "v11"), word_of(d.Bp, "v22")};
  d.wt_H = weights_by_name(d.H, {{"u11", 0},
                                 {"u12", 1},
                                 {"u21", 1},
                                 {"u22", 2},
                                 {"v11", 2},
                                 {"v12", 1},
                                 {"v21", 1},
                                 {"v22", 0}});
  // In the Borel quotients the diagonal entries collapse to Laurent parts
  // (u22 -> za^-1, v11 -> a^-1 z^-1 under eta), so they carry degree 0 there.
  d.wt_B = weights_by_name(
      d.B, {{"u11", 0}, {"u21", 1}, {"u22", 0}, {"v11", 0}, {"v12", 1}, {"v22", 0}});
  d.wt_Bp = weights_by_name(
      d.Bp, {{"u11", 0}, {"u12", 1}, {"u22", 0}, {"v11", 0}, {"v21", 1}, {"v22", 0}});
  d.witness_table = {{WeightWord::generator(d.lambda, 0, 1), d.H->parse("u11")},
                     {WeightWord::generator(d.lambda, 1, -1), d.H->parse("v22")}};
  return d;
}

BigCellDatum slq2_tensor_square_datum(const FieldCtx& ctx) {
  BigCellDatum d;
  d.name = "slq2-tensor-square";
  d.H = preset_slq2_tensor_square(ctx);
  d.B = cached("bq-tensor-square|" + ctx_key(ctx),
               [&] { return tensor_product(preset_bq(ctx), preset_bq(ctx)); });
  d.Bp = cached("bqp-tensor-square|" + ctx_key(ctx),
                [&] { return tensor_product(preset_bq_prime(ctx), preset_bq_prime(ctx)); });
  d.lambda = GroupPresentation::free_abelian({"t1", "t2"});
  d.kLambda = preset_group(d.lambda, ctx);
  d.pi = make_hopf_map(d.H, d.B,
                       {{"a", "a"},
                        {"b", "0"},
                        {"c", "c"},
                        {"d", "d"},
                        {"a_2", "a_2"},
                        {"b_2", "0"},
                        {"c_2", "c_2"},
                        {"d_2", "d_2"}});
  d.pip = make_hopf_map(d.H, d.Bp,
                        {{"a", "a"},
                         {"b", "b"},
                         {"c", "0"},
                         {"d", "d"},
                         {"a_2", "a_2"},
                         {"b_2", "b_2"},
                         {"c_2", "0"},
                         {"d_2", "d_2"}});
  d.psi = make_hopf_map(d.B, d.kLambda,
                        {{"a", "t1"},
                         {"c", "0"},
                         {"d", "t1^-1"},
                         {"a_2", "t2"},
                         {"c_2", "0"},
                         {"d_2", "t2^-1"}});
  d.psip = make_hopf_map(d.Bp, d.kLambda,
                         {{"a", "t1"},
                          {"b", "0"},
                          {"d", "t1^-1"},
                          {"a_2", "t2"},
                          {"b_2", "0"},
                          {"d_2", "t2^-1"}});
  d.nu_pos = {word_of(d.B, "a"), word_of(d.B, "a_2")};
  d.nu_neg = {word_of(d.B, "d"), word_of(d.B, "d_2")};
  d.nup_pos = {word_of(d.Bp, "a"), word_of(d.Bp, "a_2")};
  d.nup_neg = {word_of(d.Bp, "d"), word_of(d.Bp, "d_2")};
  d.wt_H = weights_by_name(d.H, {{"a", 0},
                                 {"b", 1},
                                 {"c", 1},
                                 {"d", 2},
                                 {"a_2", 0},
                                 {"b_2", 1},
                                 {"c_2", 1},
                                 {"d_2", 2}});
  d.wt_B = weights_by_name(
      d.B, {{"a", 0}, {"c", 1}, {"d", 0}, {"a_2", 0}, {"c_2", 1}, {"d_2", 0}});
  d.wt_Bp = weights_by_name(
      d.Bp, {{"a", 0}, {"b", 1}, {"d", 0}, {"a_2", 0}, {"b_2", 1}, {"d_2", 0}});
  d.witness_table = {{WeightWord::generator(d.lambda, 0, 1), d.H->parse("a")},
                     {WeightWord::generator(d.lambda, 1, 1), d.H->parse("a_2")}};
  return d;
}

BigCellDatum group_datum(const GroupPresentation& g, const FieldCtx& ctx) {
  BigCellDatum d;
  d.name = "group";
  d.H = d.B = d.Bp = d.kLambda = preset_group(g, ctx);
  d.lambda = g;
  d.pi = identity_map(d.H);
  d.pip = identity_map(d.H);
  d.psi = identity_map(d.H);
  d.psip = identity_map(d.H);
  for (int k = 0; k < g.rank(); ++k) {
    d.nu_pos.push_back(Word::single(2 * k));
    d.nu_neg.push_back(Word::single(2 * k + 1));
    d.nup_pos.push_back(Word::single(2 * k));
    d.nup_neg.push_back(Word::single(2 * k + 1));
    d.witness_table.push_back(
        {WeightWord::generator(g, k, 1), d.H->gen(2 * k)});
    d.witness_table.push_back(
        {WeightWord::generator(g, k, -1), d.H->gen(2 * k + 1)});
  }
  d.wt_H = std::vector<long>(d.H->alphabet->size(), 0);
  d.wt_B = d.wt_H;
  d.wt_Bp = d.wt_H;
  return d;
}

BigCellDatum datum_by_name(const std::string& name, const FieldCtx& ctx) {
  if (name == "slq2") return slq2_datum(ctx);
  if (name == "hq") return hq_datum(ctx);
  if (name == "slq2-tensor-square") return slq2_tensor_square_datum(ctx);
  if (name == "kz2") return group_datum(GroupPresentation::free_abelian({"t1", "t2"}), ctx);
  if (name == "kf2") return group_datum(GroupPresentation::free_group({"u1", "u2"}), ctx);
  if (name == "laurent-t") return group_datum(GroupPresentation::free_abelian({"t"}), ctx);
  throw HopfError("no big-cell datum registered under '" + name + "'");
}

std::vector<std::string> datum_names() {
  return {"slq2", "hq", "slq2-tensor-square", "kz2", "kf2", "laurent-t"};
}

const RFAlgebra& rf_preset(const FieldCtx& ctx) {
  static std::map<std::string, std::unique_ptr<RFAlgebra>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::string key = ctx_key(ctx);
  auto it = cache.find(key);
  if (it == cache.end()) {
    HopfPtr host = preset_hq(ctx);
    const Scalar q = Scalar::q(ctx);
    const Scalar zero = Scalar::integer(ctx, 0);
    std::vector<std::vector<Scalar>> f = {{q.pow(-1), zero}, {zero, q}};
    it = cache.emplace(key, std::make_unique<RFAlgebra>(host, f)).first;
  }
  return *it->second;
}

}  // namespace hopfcell
