#include "ncgalois/hopf.hpp"

namespace ncg {

HopfStructure::HopfStructure(GenMap coproduct, GenMap counit, GenMap antipode, AlgebraPtr tensor_cube)
    : coproduct_(std::move(coproduct)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)),
      cube_(std::move(tensor_cube)) {
  if (!tensor_square()->is_tensor() || tensor_square()->factors().size() != 2)
    throw AlgebraError("coproduct must map into a tensor square");
  if (counit_.target()->alphabet()->size() != 0) throw AlgebraError("counit must map into the ground field");
  if (antipode_.kind() != GenMap::Kind::AntiHomomorphism) throw AlgebraError("antipode must be an anti-homomorphism");
}

std::shared_ptr<const HopfStructure> HopfStructure::gl2(const Registry& reg, bool swap) {
  AlgebraPtr H = reg.get("gl2", swap);
  AlgebraPtr HH = reg.get("gl2_tensor_square", swap);
  AlgebraPtr G = reg.get("ground");
  Params hp = swap ? reg.params().swapped() : reg.params();
  auto in = [&](const AlgebraPtr& A, const char* text) { return parse_expression(text, A->alphabet(), hp); };

  GenMap delta("Delta", H, HH,
               {{"a", in(HH, "a_1*a_2 + b_1*c_2")},
                {"b", in(HH, "a_1*b_2 + b_1*d_2")},
                {"c", in(HH, "c_1*a_2 + d_1*c_2")},
                {"d", in(HH, "c_1*b_2 + d_1*d_2")},
                {"Dinv", in(HH, "Dinv_1*Dinv_2")}});
  GenMap eps("eps", H, G,
             {{"a", G->one()}, {"b", G->zero()}, {"c", G->zero()}, {"d", G->one()}, {"Dinv", G->one()}});
  GenMap S("S", H, H,
           {{"a", in(H, "d*Dinv")},
            {"b", in(H, "-q^-1*b*Dinv")},
            {"c", in(H, "-q*c*Dinv")},
            {"d", in(H, "a*Dinv")},
            {"Dinv", in(H, "D")}},
           GenMap::Kind::AntiHomomorphism);
  return std::make_shared<const HopfStructure>(delta, eps, S, reg.get("gl2_tensor_cube", swap));
}

Scalar HopfStructure::counit(const NCPoly& h) const { return *counit_(h).as_scalar(); }

Scalar HopfStructure::counit(const Word& w) const { return *counit_.apply_word(w).as_scalar(); }

std::vector<SweedlerTerm> HopfStructure::sweedler(const Word& w) const {
  std::vector<SweedlerTerm> out;
  for (auto& st : tensor_square()->split(coproduct_.apply_word(w)))
    out.push_back({st.coeff, std::move(st.factors[0]), std::move(st.factors[1])});
  return out;
}

std::vector<SweedlerTerm> HopfStructure::sweedler(const NCPoly& h) const {
  std::vector<SweedlerTerm> out;
  for (auto& st : tensor_square()->split(coproduct_(h)))
    out.push_back({st.coeff, std::move(st.factors[0]), std::move(st.factors[1])});
  return out;
}

namespace {

Report check_one(const HopfStructure& hs, const NCPoly& raw) {
  Report rep;
  const auto& H = hs.algebra();
  const auto& cube = hs.tensor_cube();
  NCPoly h = H->nf(raw);
  std::string at = " at " + h.to_string();
  auto terms = hs.sweedler(h);

  NCPoly left = cube->zero(), right = cube->zero();
  for (const auto& t : terms) {
    for (const auto& u : hs.sweedler(t.left))
      left += cube->tensor_of({H->word(u.left), H->word(u.right), H->word(t.right)}) * (t.coeff * u.coeff);
    for (const auto& v : hs.sweedler(t.right))
      right += cube->tensor_of({H->word(t.left), H->word(v.left), H->word(v.right)}) * (t.coeff * v.coeff);
  }
  rep.record(left == right, "coassociativity" + at, left.to_string() + " vs " + right.to_string());

  NCPoly eps_left = H->zero(), eps_right = H->zero();
  NCPoly s_left = H->zero(), s_right = H->zero();
  for (const auto& t : terms) {
    eps_left += H->word(t.right) * (t.coeff * hs.counit(t.left));
    eps_right += H->word(t.left) * (t.coeff * hs.counit(t.right));
    s_left += H->mul(hs.antipode(H->word(t.left)), H->word(t.right)) * t.coeff;
    s_right += H->mul(H->word(t.left), hs.antipode(H->word(t.right))) * t.coeff;
  }
  rep.record(eps_left == h, "(eps (x) id) Delta = id" + at, eps_left.to_string());
  rep.record(eps_right == h, "(id (x) eps) Delta = id" + at, eps_right.to_string());
  NCPoly unit = H->scalar(hs.counit(h));
  rep.record(s_left == unit, "S(h_1) h_2 = eps(h) 1" + at, s_left.to_string() + " vs " + unit.to_string());
  rep.record(s_right == unit, "h_1 S(h_2) = eps(h) 1" + at, s_right.to_string() + " vs " + unit.to_string());
  return rep;
}

}  // namespace

Report check_hopf_axioms_on(const HopfStructure& h, const std::vector<NCPoly>& elements, unsigned jobs) {
  std::vector<Report> parts(elements.size());
  parallel_for(elements.size(), jobs, [&](size_t i) { parts[i] = check_one(h, elements[i]); });
  Report rep;
  rep.name = "hopf axioms";
  for (const auto& p : parts) rep.merge(p);
  return rep;
}

Report check_hopf_axioms(const HopfStructure& h, size_t max_degree, unsigned jobs) {
  std::vector<NCPoly> elems;
  for (const auto& w : h.algebra()->normal_words(max_degree)) elems.push_back(h.algebra()->word(w));
  Report rep = check_hopf_axioms_on(h, elems, jobs);
  rep.name = "hopf axioms to degree " + std::to_string(max_degree);
  return rep;
}

Report check_structure_maps(const HopfStructure& h, size_t max_degree) {
  Report rep;
  rep.name = "hopf structure maps";
  for (const GenMap* m : {&h.coproduct_map(), &h.counit_map(), &h.antipode_map()}) rep.merge(respects_relations(*m, max_degree));
  return rep;
}

Report check_antipode_coalgebra(const HopfStructure& h) {
  Report rep;
  rep.name = "antipode versus coalgebra";
  const auto& H = h.algebra();
  const auto& HH = h.tensor_square();
  for (Letter l = 0; l < H->alphabet()->size(); ++l) {
    NCPoly g = NCPoly::letter(H->alphabet(), l);
    const std::string& name = H->alphabet()->name(l);
    NCPoly Sg = h.antipode(g);
    Scalar e1 = h.counit(Sg), e2 = h.counit(g);
    rep.record(e1 == e2, "eps(S(" + name + ")) = eps(" + name + ")", e1.to_string() + " vs " + e2.to_string());
    NCPoly lhs = h.coproduct(Sg);
    NCPoly rhs = HH->zero();
    for (const auto& t : h.sweedler(g))
      rhs += HH->tensor_of({h.antipode(H->word(t.right)), h.antipode(H->word(t.left))}) * t.coeff;
    rep.record(lhs == rhs, "Delta(S(" + name + ")) = (S (x) S) flip Delta(" + name + ")",
               lhs.to_string() + " vs " + rhs.to_string());
  }
  return rep;
}

// ---------------------------------------------------------------------------

ConvolutionMap::ConvolutionMap(std::string name, HopfPtr hopf, AlgebraPtr target, Rule rule)
    : state_(std::make_shared<State>()) {
  state_->name = std::move(name);
  state_->hopf = std::move(hopf);
  state_->target = std::move(target);
  state_->rule = std::move(rule);
}

ConvolutionMap ConvolutionMap::unit(HopfPtr hopf, AlgebraPtr target) {
  HopfStructure const* h = hopf.get();
  AlgebraPtr t = target;
  return ConvolutionMap("unit", std::move(hopf), std::move(target),
                        [h, t](const Word& w) { return t->scalar(h->counit(w)); });
}

ConvolutionMap ConvolutionMap::from_genmap(HopfPtr hopf, const GenMap& m) {
  if (!m.source()->alphabet()->same_as(*hopf->algebra()->alphabet()))
    throw AlgebraError("map " + m.name() + " is not defined on " + hopf->algebra()->name());
  return ConvolutionMap(m.name(), std::move(hopf), m.target(), [m](const Word& w) { return m.apply_word(w); });
}

NCPoly ConvolutionMap::on_word(const Word& w) const {
  State& s = *state_;
  {
    std::lock_guard lock(s.mutex);
    auto it = s.cache.find(w.raw());
    if (it != s.cache.end()) return it->second;
  }
  NCPoly v = s.rule(w);
  std::lock_guard lock(s.mutex);
  return s.cache.try_emplace(w.raw(), std::move(v)).first->second;
}

NCPoly ConvolutionMap::operator()(const NCPoly& h) const {
  NCPoly r = target()->zero();
  NCPoly n = hopf()->algebra()->nf(h);
  for (const auto& [w, c] : n.terms()) r += on_word(w) * c;
  return r;
}

ConvolutionMap ConvolutionMap::convolve(const ConvolutionMap& g) const {
  if (g.target() != target() && !g.target()->alphabet()->same_as(*target()->alphabet()))
    throw AlgebraError("convolution of maps with different targets");
  ConvolutionMap f = *this;
  return ConvolutionMap(name() + "*" + g.name(), hopf(), target(), [f, g](const Word& w) {
    const auto& T = f.target();
    NCPoly r = T->zero();
    for (const auto& t : f.hopf()->sweedler(w)) r += T->mul(f.on_word(t.left), g.on_word(t.right)) * t.coeff;
    return r;
  });
}

Report check_maps_agree(const ConvolutionMap& f, const ConvolutionMap& g, size_t max_degree, unsigned jobs) {
  auto words = f.hopf()->algebra()->normal_words(max_degree);
  std::vector<std::optional<Failure>> out(words.size());
  parallel_for(words.size(), jobs, [&](size_t i) {
    NCPoly a = f.on_word(words[i]), b = g.on_word(words[i]);
    if (a != b)
      out[i] = Failure{f.name() + " = " + g.name() + " at " + words[i].to_string(*f.hopf()->algebra()->alphabet()),
                       a.to_string() + " vs " + b.to_string()};
  });
  Report rep;
  rep.name = f.name() + " = " + g.name();
  for (auto& o : out) {
    ++rep.checked;
    if (o) rep.failures.push_back(*o);
  }
  return rep;
}

Report check_convolution_inverse(const ConvolutionMap& f, const ConvolutionMap& g, size_t max_degree, unsigned jobs) {
  ConvolutionMap u = ConvolutionMap::unit(f.hopf(), f.target());
  Report rep;
  rep.name = "convolution inverse " + f.name() + ", " + g.name();
  rep.merge(check_maps_agree(f.convolve(g), u, max_degree, jobs));
  rep.merge(check_maps_agree(g.convolve(f), u, max_degree, jobs));
  return rep;
}

}  // namespace ncg
