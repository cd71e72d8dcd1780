#include "ncgalois/action.hpp"

#include <random>
#include <set>

namespace ncg {

namespace {

std::string relation_text(const NCPoly& lhs, const NCPoly& rhs) { return lhs.to_string() + " = " + rhs.to_string(); }

struct NamedRelation {
  std::string text;
  NCPoly difference;
};

/// Declared relations plus completed rules with leading word <= max_len.
std::vector<NamedRelation> relations_of(const AlgebraPtr& A, size_t max_len) {
  std::vector<NamedRelation> out;
  for (const auto& r : A->presentation().relations) out.push_back({relation_text(r.lhs, r.rhs), r.difference()});
  auto sys = A->system(max_len);
  for (const auto& rule : sys->rules()) {
    if (rule.provenance != Provenance::Derived || rule.lhs.size() > max_len) continue;
    out.push_back({rule.lhs.to_string(*A->alphabet()) + " = " + rule.rhs.to_string(), rule.relation(A->alphabet())});
  }
  return out;
}

std::string word_text(const Word& w, const Alphabet& alpha) { return w.empty() ? "1" : w.to_string(alpha); }

Report collect(std::string name, std::vector<std::optional<Failure>>& results) {
  Report rep;
  rep.name = std::move(name);
  for (auto& r : results) {
    ++rep.checked;
    if (r) rep.failures.push_back(std::move(*r));
  }
  return rep;
}

}  // namespace

// ---------------------------------------------------------------------------
// LeftAction

LeftAction::LeftAction(std::string name, HopfPtr hopf, AlgebraPtr module, const Table& table)
    : state_(std::make_shared<State>()) {
  state_->name = std::move(name);
  state_->hopf = std::move(hopf);
  state_->module = std::move(module);
  const auto& ha = *state_->hopf->algebra()->alphabet();
  const auto& ba = *state_->module->alphabet();
  for (const auto& [key, value] : table) {
    if (!ha.find(key.first)) throw AlgebraError("action table names unknown generator '" + key.first + "' of H");
    if (!ba.find(key.second)) throw AlgebraError("action table names unknown generator '" + key.second + "' of B");
    if (!value.alphabet()->same_as(ba))
      throw AlgebraError("action table entry " + key.first + " |> " + key.second + " is not an element of B");
  }
  state_->table.assign(ha.size(), std::vector<NCPoly>(ba.size()));
  for (Letter g = 0; g < ha.size(); ++g) {
    for (Letter u = 0; u < ba.size(); ++u) {
      auto it = table.find({ha.name(g), ba.name(u)});
      if (it == table.end()) throw AlgebraError("missing action table entry " + ha.name(g) + " |> " + ba.name(u));
      state_->table[g][u] = state_->module->nf(relabel(it->second, state_->module->alphabet()));
    }
  }
}

LeftAction LeftAction::frame(const Registry& reg, bool swap) {
  HopfPtr H = HopfStructure::gl2(reg, swap);
  AlgebraPtr B = reg.get("quantum_plane");
  static const std::vector<std::tuple<const char*, const char*, const char*>> entries = {
      {"a", "x", "(p*q)^-1*x"},   {"b", "x", "0"}, {"c", "x", "((p*q)^-1 - 1)*y"},
      {"d", "x", "p^-1*x"},       {"Dinv", "x", "p^2*q*x"},
      {"a", "y", "q^-1*y"},       {"b", "y", "0"}, {"c", "y", "0"},
      {"d", "y", "(p*q)^-1*y"},   {"Dinv", "y", "p*q^2*y"},
  };
  Table t;
  for (const auto& [h, b, expr] : entries) t[{h, b}] = B->parse(expr);
  return LeftAction(swap ? "frame action over swapped H" : "frame action", H, B, t);
}

LeftAction LeftAction::trivial(HopfPtr hopf, AlgebraPtr module) {
  Table t;
  const auto& ha = *hopf->algebra()->alphabet();
  for (Letter g = 0; g < ha.size(); ++g) {
    Scalar e = hopf->counit(Word{g});
    for (const auto& u : module->alphabet()->names()) t[{ha.name(g), u}] = module->gen(u) * e;
  }
  return LeftAction("trivial action", std::move(hopf), std::move(module), t);
}

LeftAction LeftAction::from_decl(const Registry& reg, const ActionDecl& decl) {
  if (decl.hopf != "gl2") throw ParseError("no Hopf structure is known on '" + decl.hopf + "'", decl.line, decl.col);
  HopfPtr H = HopfStructure::gl2(reg);
  AlgebraPtr B;
  try {
    B = reg.get(decl.module);
  } catch (const AlgebraError& e) {
    throw ParseError(e.what(), decl.line, decl.col);
  }
  Table t;
  for (const auto& e : decl.entries) {
    if (!H->algebra()->alphabet()->find(e.h)) throw ParseError("unknown generator '" + e.h + "' of gl2", e.line, e.col);
    if (!B->alphabet()->find(e.b))
      throw ParseError("unknown generator '" + e.b + "' of " + decl.module, e.line, e.col);
    t[{e.h, e.b}] = parse_expression_at(e.expr, B->alphabet(), reg.params(), e.line, e.col);
  }
  try {
    return LeftAction(decl.name, H, B, t);
  } catch (const AlgebraError& e) {
    throw ParseError(e.what(), decl.line, decl.col);
  }
}

LeftAction::Table LeftAction::table() const {
  Table t;
  const auto& ha = *hopf()->algebra()->alphabet();
  const auto& ba = *module()->alphabet();
  for (Letter g = 0; g < ha.size(); ++g)
    for (Letter u = 0; u < ba.size(); ++u) t[{ha.name(g), ba.name(u)}] = entry(g, u);
  return t;
}

const std::vector<LeftAction::Expansion>& LeftAction::iterated_coproduct(Letter g, size_t m) const {
  State& s = *state_;
  {
    std::lock_guard lock(s.mutex);
    if (auto it = s.coproducts.find({g, m}); it != s.coproducts.end()) return it->second;
  }
  std::vector<Expansion> cur = {{Scalar(1), {Word{g}}}};
  for (size_t k = 1; k < m; ++k) {
    std::vector<Expansion> next;
    for (const auto& e : cur) {
      for (const auto& t : hopf()->sweedler(e.factors.back())) {
        Expansion n{e.coeff * t.coeff, e.factors};
        n.factors.back() = t.left;
        n.factors.push_back(t.right);
        next.push_back(std::move(n));
      }
    }
    cur = std::move(next);
  }
  std::lock_guard lock(s.mutex);
  return s.coproducts.try_emplace({g, m}, std::move(cur)).first->second;
}

NCPoly LeftAction::generator_on_word(Letter g, const Word& b) const {
  const auto& B = module();
  if (b.empty()) return B->scalar(hopf()->counit(Word{g}));
  if (b.size() == 1) return entry(g, b[0]);
  State& s = *state_;
  std::string key = std::string(1, static_cast<char>(g)) + b.raw();
  {
    std::lock_guard lock(s.mutex);
    if (auto it = s.cache.find(key); it != s.cache.end()) return it->second;
  }
  NCPoly r = B->zero();
  for (const auto& e : iterated_coproduct(g, b.size())) {
    NCPoly prod = B->scalar(e.coeff);
    for (size_t i = 0; i < b.size() && !prod.is_zero(); ++i) prod = B->mul(prod, apply_word(e.factors[i], b.sub(i, 1)));
    r += prod;
  }
  std::lock_guard lock(s.mutex);
  return s.cache.try_emplace(key, std::move(r)).first->second;
}

NCPoly LeftAction::apply_word(const Word& h, const Word& b) const {
  const auto& B = module();
  if (h.empty()) return B->nf(b);
  NCPoly cur = generator_on_word(h[h.size() - 1], b);
  for (size_t i = h.size() - 1; i-- > 0;) {
    NCPoly next = B->zero();
    for (const auto& [w, c] : cur.terms()) next += generator_on_word(h[i], w) * c;
    cur = std::move(next);
  }
  return cur;
}

NCPoly LeftAction::apply_free(const NCPoly& h, const NCPoly& b) const {
  NCPoly r = module()->zero();
  for (const auto& [hw, hc] : h.terms())
    for (const auto& [bw, bc] : b.terms()) r += apply_word(hw, bw) * (hc * bc);
  return r;
}

NCPoly LeftAction::apply(const NCPoly& h, const NCPoly& b) const { return apply_free(hopf()->algebra()->nf(h), b); }

// ---------------------------------------------------------------------------
// Axioms

Report check_action_axioms(const LeftAction& act, size_t max_degree, unsigned jobs) {
  const auto& H = act.hopf()->algebra();
  const auto& B = act.module();
  const auto& ha = *H->alphabet();
  const auto& ba = *B->alphabet();
  Report rep;
  rep.name = "action axioms for " + act.name() + " to degree " + std::to_string(max_degree);

  for (Letter g = 0; g < ha.size(); ++g) {
    NCPoly v = act.apply_word(Word{g}, Word());
    NCPoly e = B->scalar(act.hopf()->counit(Word{g}));
    rep.record(v == e, ha.name(g) + " |> 1 = eps(" + ha.name(g) + ") 1", v.to_string());
  }
  for (Letter u = 0; u < ba.size(); ++u) {
    NCPoly v = act.apply_word(Word(), Word{u});
    rep.record(v == B->word(Word{u}), "1 |> " + ba.name(u) + " = " + ba.name(u), v.to_string());
  }

  auto hwords = H->normal_words(max_degree);
  auto bwords = B->normal_words(max_degree);

  // relations of H act as zero
  {
    auto rels = relations_of(H, max_degree);
    std::vector<std::optional<Failure>> out(rels.size() * bwords.size());
    parallel_for(out.size(), jobs, [&](size_t idx) {
      const auto& r = rels[idx / bwords.size()];
      const Word& b = bwords[idx % bwords.size()];
      NCPoly v = act.apply_free(r.difference, B->word(b));
      if (!v.is_zero())
        out[idx] = Failure{"relation '" + r.text + "' of H acting on b = " + word_text(b, ba), v.to_string()};
    });
    rep.merge(collect("H relations", out));
  }

  // every h maps relations of B to zero
  {
    auto rels = relations_of(B, max_degree);
    std::vector<std::optional<Failure>> out(rels.size() * hwords.size());
    parallel_for(out.size(), jobs, [&](size_t idx) {
      const auto& r = rels[idx / hwords.size()];
      const Word& h = hwords[idx % hwords.size()];
      NCPoly v = act.apply_free(H->word(h), r.difference);
      if (!v.is_zero())
        out[idx] = Failure{"h = " + word_text(h, ha) + " on relation '" + r.text + "' of B", v.to_string()};
    });
    rep.merge(collect("B relations", out));
  }
  // product rule over every split of every B word
  {
    std::vector<std::optional<Failure>> out(hwords.size() * bwords.size());
    parallel_for(out.size(), jobs, [&](size_t idx) {
      const Word& h = hwords[idx / bwords.size()];
      const Word& b = bwords[idx % bwords.size()];
      if (b.size() < 2) return;
      NCPoly whole = act.apply_word(h, b);
      auto terms = act.hopf()->sweedler(h);
      for (size_t k = 1; k < b.size(); ++k) {
        NCPoly split = B->zero();
        for (const auto& t : terms)
          split += B->mul(act.apply_word(t.left, b.sub(0, k)), act.apply_word(t.right, b.sub(k))) * t.coeff;
        if (split != whole) {
          out[idx] = Failure{"product rule " + word_text(h, ha) + " |> (" + b.sub(0, k).to_string(ba) + ")(" +
                                 b.sub(k).to_string(ba) + ")",
                             whole.to_string() + " vs " + split.to_string()};
          return;
        }
      }
    });
    rep.merge(collect("product rule", out));
  }

  // (h h') |> b = h |> (h' |> b)
  {
    size_t n = hwords.size();
    std::vector<std::optional<Failure>> out(n * n * bwords.size());
    parallel_for(out.size(), jobs, [&](size_t idx) {
      const Word& h = hwords[idx / (n * bwords.size())];
      const Word& h2 = hwords[(idx / bwords.size()) % n];
      const Word& b = bwords[idx % bwords.size()];
      NCPoly iterated = act.apply_word(h + h2, b);
      NCPoly direct = act.apply_free(H->nf(h + h2), B->word(b));
      if (iterated != direct)
        out[idx] = Failure{"(h h') |> b = h |> (h' |> b) at h = " + word_text(h, ha) + ", h' = " +
                               word_text(h2, ha) + ", b = " + word_text(b, ba),
                           direct.to_string() + " vs " + iterated.to_string()};
    });
    rep.merge(collect("module condition", out));
  }

  return rep;
}

// ---------------------------------------------------------------------------
// Cocycles

Cocycle Cocycle::trivial_for(const LeftAction& act) {
  HopfPtr hopf = act.hopf();
  AlgebraPtr B = act.module();
  Values v = [hopf, B](const Word& h, const Word& h2) { return B->scalar(hopf->counit(h) * hopf->counit(h2)); };
  return Cocycle{"trivial cocycle", true, v, v};
}

NCPoly Cocycle::operator()(const NCPoly& h, const NCPoly& h2, const LeftAction& act) const {
  const auto& H = act.hopf()->algebra();
  NCPoly r = act.module()->zero();
  NCPoly a = H->nf(h), b = H->nf(h2);
  for (const auto& [w1, c1] : a.terms())
    for (const auto& [w2, c2] : b.terms()) r += sigma(w1, w2) * (c1 * c2);
  return r;
}

namespace {

/// sigma applied to (h, poly) summed over the poly's normal words.
NCPoly sigma_right(const Cocycle::Values& s, const Word& h, const NCPoly& h2, const AlgebraPtr& B) {
  NCPoly r = B->zero();
  for (const auto& [w, c] : h2.terms()) r += s(h, w) * c;
  return r;
}

}  // namespace

Report check_cocycle_axioms(const LeftAction& act, const Cocycle& sigma, size_t max_degree, unsigned jobs,
                            bool general) {
  const auto& hs = *act.hopf();
  const auto& H = hs.algebra();
  const auto& B = act.module();
  const auto& ha = *H->alphabet();
  const auto& ba = *B->alphabet();
  Report rep;
  rep.name = "cocycle conditions for " + sigma.name + " with " + act.name() + " to degree " + std::to_string(max_degree);
  auto hwords = H->normal_words(max_degree);
  auto bwords = B->normal_words(max_degree);

  // normalization
  for (const auto& h : hwords) {
    NCPoly e = B->scalar(hs.counit(h));
    NCPoly l = sigma.sigma(h, Word()), r = sigma.sigma(Word(), h);
    rep.record(l == e && r == e, "sigma(h, 1) = sigma(1, h) = eps(h) 1 at h = " + word_text(h, ha),
               l.to_string() + ", " + r.to_string());
  }

  if (sigma.trivial && !general) {
    rep.note("trivial cocycle: sigma(h, h') = eps(h) eps(h') 1");
    rep.note("cocycle condition and convolution invertibility hold identically for the trivial cocycle");
    rep.note("twisted module condition reduces to (h h') |> b = h |> (h' |> b); delegated to the action axioms");
    rep.merge(check_action_axioms(act, max_degree, jobs));
    return rep;
  }

  size_t n = hwords.size();

  // cocycle condition: sum h_1 |> sigma(h'_1, h''_1) sigma(h_2, h'_2 h''_2) = sum sigma(h_1, h'_1) sigma(h_2 h'_2, h'')
  {
    std::vector<std::optional<Failure>> out(n * n * n);
    parallel_for(out.size(), jobs, [&](size_t idx) {
      const Word& h = hwords[idx / (n * n)];
      const Word& h1 = hwords[(idx / n) % n];
      const Word& h2 = hwords[idx % n];
      auto dh = hs.sweedler(h), dh1 = hs.sweedler(h1), dh2 = hs.sweedler(h2);
      NCPoly lhs = B->zero(), rhs = B->zero();
      for (const auto& t : dh)
        for (const auto& u : dh1)
          for (const auto& v : dh2) {
            Scalar c = t.coeff * u.coeff * v.coeff;
            NCPoly inner = act.apply_free(H->word(t.left), sigma.sigma(u.left, v.left));
            lhs += B->mul(inner, sigma_right(sigma.sigma, t.right, H->nf(u.right + v.right), B)) * c;
          }
      for (const auto& t : dh)
        for (const auto& u : dh1) {
          NCPoly prod = H->nf(t.right + u.right);
          NCPoly second = B->zero();
          for (const auto& [w, c] : prod.terms()) second += sigma.sigma(w, h2) * c;
          rhs += B->mul(sigma.sigma(t.left, u.left), second) * (t.coeff * u.coeff);
        }
      if (lhs != rhs)
        out[idx] = Failure{"cocycle condition at (" + word_text(h, ha) + ", " + word_text(h1, ha) + ", " +
                               word_text(h2, ha) + ")",
                           lhs.to_string() + " vs " + rhs.to_string()};
    });
    rep.merge(collect("cocycle condition", out));
  }

  // twisted module: sum (h_1 |> (h'_1 |> b)) sigma(h_2, h'_2) = sum sigma(h_1, h'_1) ((h_2 h'_2) |> b)
  {
    std::vector<std::optional<Failure>> out(n * n * bwords.size());
    parallel_for(out.size(), jobs, [&](size_t idx) {
      const Word& h = hwords[idx / (n * bwords.size())];
      const Word& h1 = hwords[(idx / bwords.size()) % n];
      const Word& b = bwords[idx % bwords.size()];
      auto dh = hs.sweedler(h), dh1 = hs.sweedler(h1);
      NCPoly lhs = B->zero(), rhs = B->zero();
      for (const auto& t : dh)
        for (const auto& u : dh1) {
          Scalar c = t.coeff * u.coeff;
          lhs += B->mul(act.apply_word(t.left + u.left, b), sigma.sigma(t.right, u.right)) * c;
          rhs += B->mul(sigma.sigma(t.left, u.left), act.apply(H->word(t.right + u.right), B->word(b))) * c;
        }
      if (lhs != rhs)
        out[idx] = Failure{"twisted module condition at h = " + word_text(h, ha) + ", h' = " + word_text(h1, ha) +
                               ", b = " + word_text(b, ba),
                           lhs.to_string() + " vs " + rhs.to_string()};
    });
    rep.merge(collect("twisted module condition", out));
  }

  // convolution invertibility on H (x) H
  {
    std::vector<std::optional<Failure>> out(n * n);
    parallel_for(out.size(), jobs, [&](size_t idx) {
      const Word& h = hwords[idx / n];
      const Word& h1 = hwords[idx % n];
      auto dh = hs.sweedler(h), dh1 = hs.sweedler(h1);
      NCPoly fwd = B->zero(), bwd = B->zero();
      for (const auto& t : dh)
        for (const auto& u : dh1) {
          Scalar c = t.coeff * u.coeff;
          fwd += B->mul(sigma.sigma(t.left, u.left), sigma.inverse(t.right, u.right)) * c;
          bwd += B->mul(sigma.inverse(t.left, u.left), sigma.sigma(t.right, u.right)) * c;
        }
      NCPoly e = B->scalar(hs.counit(h) * hs.counit(h1));
      if (fwd != e || bwd != e)
        out[idx] = Failure{"convolution inverse at (" + word_text(h, ha) + ", " + word_text(h1, ha) + ")",
                           fwd.to_string() + ", " + bwd.to_string()};
    });
    rep.merge(collect("convolution invertibility", out));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Crossed products

std::vector<CrossedTerm> crossed_multiply(const CrossedTerm& u, const CrossedTerm& v, const LeftAction& act,
                                          const Cocycle& sigma) {
  const auto& hs = *act.hopf();
  const auto& H = hs.algebra();
  const auto& B = act.module();
  NCPoly b = B->nf(u.b), b2 = B->nf(v.b), h = H->nf(u.h), h2 = H->nf(v.h);
  std::map<Word, NCPoly, DegLexGreater> acc;
  auto add = [&](const NCPoly& bpart, const NCPoly& hpart) {
    if (bpart.is_zero()) return;
    for (const auto& [w, c] : hpart.terms()) {
      auto it = acc.try_emplace(w, B->zero()).first;
      it->second += bpart * c;
    }
  };
  for (const auto& [hw, hc] : h.terms()) {
    for (const auto& [hw2, hc2] : h2.terms()) {
      Scalar c0 = hc * hc2;
      if (sigma.trivial) {
        for (const auto& t : hs.sweedler(hw))
          add(B->mul(b, act.apply(H->word(t.left), b2)) * (c0 * t.coeff), H->nf(t.right + hw2));
        continue;
      }
      auto d2 = hs.sweedler(hw2);
      for (const auto& t : hs.sweedler(hw)) {
        NCPoly acted = B->mul(b, act.apply(H->word(t.left), b2));
        if (acted.is_zero()) continue;
        for (const auto& s : hs.sweedler(t.right))
          for (const auto& r : d2)
            add(B->mul(acted, sigma.sigma(s.left, r.left)) * (c0 * t.coeff * s.coeff * r.coeff),
                H->nf(s.right + r.right));
      }
    }
  }
  std::vector<CrossedTerm> out;
  for (auto& [w, bpart] : acc)
    if (!bpart.is_zero()) out.push_back({std::move(bpart), H->word(w)});
  return out;
}

NCPoly crossed_to_tensor(const std::vector<CrossedTerm>& terms, const AlgebraPtr& BH) {
  NCPoly r = BH->zero();
  for (const auto& t : terms) r += BH->tensor_of({t.b, t.h});
  return r;
}

NCPoly crossed_to_algebra(const std::vector<CrossedTerm>& terms, const AlgebraPtr& P) {
  NCPoly r = P->zero();
  for (const auto& t : terms) r += P->mul(relabel(t.b, P->alphabet()), relabel(t.h, P->alphabet()));
  return r;
}

Presentation build_smash_presentation(const LeftAction& act, const std::string& name) {
  const auto& hs = *act.hopf();
  const auto& H = hs.algebra();
  const auto& B = act.module();
  Presentation pres;
  pres.name = name;
  pres.params = B->params();
  pres.generators = B->presentation().generators;
  for (const auto& g : H->presentation().generators) pres.generators.push_back(g);
  pres.precedence = H->presentation().precedence;
  for (const auto& g : B->presentation().precedence) pres.precedence.push_back(g);
  std::set<std::string> seen(pres.generators.begin(), pres.generators.end());
  if (seen.size() != pres.generators.size()) throw AlgebraError("H and B share a generator name");
  pres.grades = B->presentation().grades;
  for (const auto& [g, k] : H->presentation().grades) pres.grades[g] = k;
  pres.alphabet = std::make_shared<Alphabet>(pres.precedence);
  const auto& P = pres.alphabet;

  for (const auto* A : {&B, &H})
    for (const auto& r : (*A)->presentation().relations) pres.relations.push_back({relabel(r.lhs, P), relabel(r.rhs, P)});

  const auto& ha = *H->alphabet();
  const auto& ba = *B->alphabet();
  for (Letter g = 0; g < ha.size(); ++g) {
    for (Letter u = 0; u < ba.size(); ++u) {
      NCPoly lhs = NCPoly::gen(P, ha.name(g)) * NCPoly::gen(P, ba.name(u));
      NCPoly rhs(P);
      for (const auto& t : hs.sweedler(Word{g}))
        rhs += relabel(act.apply_word(t.left, Word{u}), P) * relabel(H->word(t.right), P) * t.coeff;
      pres.relations.push_back({lhs, rhs});
    }
  }
  return pres;
}

Report check_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b, size_t samples, size_t max_len, uint64_t seed) {
  Report rep;
  rep.name = "same algebra " + a->name() + ", " + b->name();
  for (const auto& [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
    for (const auto& r : x->presentation().relations) {
      NCPoly v = y->nf(relabel(r.difference(), y->alphabet()));
      rep.record(v.is_zero(), "relation " + relation_text(r.lhs, r.rhs) + " of " + x->name() + " in " + y->name(),
                 v.to_string());
    }
  }
  std::mt19937_64 rng(seed);
  const auto& alpha = a->alphabet();
  std::uniform_int_distribution<size_t> len(0, max_len), letter(0, alpha->size() - 1), nterms(1, 4);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (size_t i = 0; i < samples; ++i) {
    NCPoly f(alpha);
    for (size_t k = nterms(rng); k > 0; --k) {
      Word w;
      for (size_t l = len(rng); l > 0; --l) w.push_back(static_cast<Letter>(letter(rng)));
      int c = coeff(rng);
      f.add_term(w, Scalar(c == 0 ? 1 : c));
    }
    NCPoly via_a = b->nf(relabel(a->nf(f), b->alphabet()));
    NCPoly via_b = b->nf(relabel(f, b->alphabet()));
    rep.record(via_a == via_b, "normal forms agree on " + f.to_string(), via_a.to_string() + " vs " + via_b.to_string());
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Recovery from a cleaving map

Recovery recover_action(const ConvolutionMap& j, const ConvolutionMap& j_inverse, const AlgebraPtr& module,
                        size_t max_degree, const LeftAction* reference, unsigned jobs) {
  const auto& hs = *j.hopf();
  const auto& H = hs.algebra();
  const auto& P = j.target();
  const auto& ha = *H->alphabet();
  const auto& ba = *module->alphabet();
  std::set<std::string> bnames(ba.names().begin(), ba.names().end());

  auto formula = [&](const Word& h, const NCPoly& bP) {
    NCPoly r = P->zero();
    for (const auto& t : hs.sweedler(h)) r += P->mul(P->mul(j.on_word(t.left), bP), j_inverse.on_word(t.right)) * t.coeff;
    return r;
  };
  auto to_module = [&](const NCPoly& f, const std::string& where) {
    for (const auto& [w, c] : f.terms())
      for (size_t i = 0; i < w.size(); ++i)
        if (!bnames.count(P->alphabet()->name(w[i])))
          throw AlgebraError(where + " = " + f.to_string() + " is not H-free: not a cleaving map for " +
                             module->name());
    return module->nf(relabel(f, module->alphabet()));
  };

  LeftAction::Table table;
  for (Letter g = 0; g < ha.size(); ++g)
    for (Letter u = 0; u < ba.size(); ++u)
      table[{ha.name(g), ba.name(u)}] =
          to_module(formula(Word{g}, P->gen(ba.name(u))), ha.name(g) + " |> " + ba.name(u));
  LeftAction act("recovered from " + j.name(), j.hopf(), module, table);

  Report rep;
  rep.name = "action recovered from " + j.name();
  if (reference) {
    for (Letter g = 0; g < ha.size(); ++g)
      for (Letter u = 0; u < ba.size(); ++u) {
        const NCPoly& mine = act.entry(g, u);
        NCPoly theirs = module->nf(relabel(reference->entry(g, u), module->alphabet()));
        rep.record(mine == theirs, ha.name(g) + " |> " + ba.name(u) + " matches " + reference->name(),
                   mine.to_string() + " vs " + theirs.to_string());
      }
  }

  auto hwords = H->normal_words(max_degree);
  auto bwords = module->normal_words(max_degree);
  {
    std::vector<std::optional<Failure>> out(hwords.size() * bwords.size());
    parallel_for(out.size(), jobs, [&](size_t idx) {
      const Word& h = hwords[idx / bwords.size()];
      const Word& b = bwords[idx % bwords.size()];
      NCPoly direct = formula(h, P->nf(relabel(module->word(b), P->alphabet())));
      NCPoly extended = P->nf(relabel(act.apply_word(h, b), P->alphabet()));
      if (direct != extended)
        out[idx] = Failure{"sum j(h_1) b j^-1(h_2) = h |> b at h = " + word_text(h, ha) + ", b = " + word_text(b, ba),
                           direct.to_string() + " vs " + extended.to_string()};
    });
    rep.merge(collect("formula on words", out));
  }

  // sigma(h, h') = sum j(h_1) j(h'_1) j^-1(h_2 h'_2) must be eps(h) eps(h') 1
  {
    auto small = H->normal_words(std::min<size_t>(max_degree, 2));
    size_t n = small.size();
    std::vector<std::optional<Failure>> out(n * n);
    parallel_for(out.size(), jobs, [&](size_t idx) {
      const Word& h = small[idx / n];
      const Word& h2 = small[idx % n];
      NCPoly s = P->zero();
      for (const auto& t : hs.sweedler(h))
        for (const auto& u : hs.sweedler(h2))
          s += P->mul(P->mul(j.on_word(t.left), j.on_word(u.left)), j_inverse(H->word(t.right + u.right))) *
               (t.coeff * u.coeff);
      NCPoly e = P->scalar(hs.counit(h) * hs.counit(h2));
      if (s != e)
        out[idx] = Failure{"cocycle of " + j.name() + " at (" + word_text(h, ha) + ", " + word_text(h2, ha) + ")",
                           s.to_string()};
    });
    rep.merge(collect("cocycle of the cleaving map", out));
  }
  return Recovery{std::move(act), std::move(rep)};
}

}  // namespace ncg
