#include "ncgalois/galois.hpp"

#include <set>

namespace ncg {

namespace {

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

GenMap parsed_map(const std::string& name, const AlgebraPtr& src, const AlgebraPtr& tgt, const Params& params,
                  const std::vector<std::pair<std::string, std::string>>& images) {
  std::map<std::string, NCPoly> im;
  for (const auto& [g, text] : images) im[g] = parse_expression(text, tgt->alphabet(), params);
  return GenMap(name, src, tgt, im);
}

}  // namespace

// ---------------------------------------------------------------------------
// Coactions

Coaction::Coaction(GenMap map, HopfPtr hopf, Side side, AlgebraPtr triple)
    : map_(std::move(map)), hopf_(std::move(hopf)), side_(side), triple_(std::move(triple)) {
  const auto& T = map_.target();
  if (!T->is_tensor() || T->factors().size() != 2) throw AlgebraError("a coaction maps into a two-factor tensor product");
  size_t mk = side_ == Side::Right ? 0 : 1;
  if (!T->factor(mk)->alphabet()->same_as(*comodule()->alphabet()) ||
      !T->factor(1 - mk)->alphabet()->same_as(*hopf_->algebra()->alphabet()))
    throw AlgebraError("coaction target does not match its comodule and Hopf algebra");
  if (!triple_->is_tensor() || triple_->factors().size() != 3) throw AlgebraError("triple tensor product expected");
}

Report check_coaction(const Coaction& c, size_t max_degree, unsigned jobs) {
  Report rep;
  rep.name = "coaction " + c.map().name() + " to degree " + std::to_string(max_degree);
  rep.merge(respects_relations(c.map(), max_degree));

  const auto& M = c.comodule();
  const auto& T = c.target();
  const auto& X = c.triple();
  const auto& hs = *c.hopf();
  const auto& H = hs.algebra();
  bool right = c.side() == Coaction::Side::Right;
  auto words = M->normal_words(max_degree);
  std::vector<std::optional<Failure>> out(words.size());
  parallel_for(words.size(), jobs, [&](size_t i) {
    const Word& w = words[i];
    NCPoly lhs = X->zero(), rhs = X->zero(), counit = M->zero();
    for (const auto& st : T->split(c.map().apply_word(w))) {
      const Word& m = right ? st.factors[0] : st.factors[1];
      const Word& h = right ? st.factors[1] : st.factors[0];
      counit += M->word(m) * (st.coeff * hs.counit(h));
      for (const auto& t : hs.sweedler(h)) {
        auto parts = right ? std::vector<NCPoly>{M->word(m), H->word(t.left), H->word(t.right)}
                           : std::vector<NCPoly>{H->word(t.left), H->word(t.right), M->word(m)};
        (right ? rhs : lhs) += X->tensor_of(parts) * (st.coeff * t.coeff);
      }
      for (const auto& inner : T->split(c.map().apply_word(m))) {
        auto parts = right ? std::vector<NCPoly>{M->word(inner.factors[0]), H->word(inner.factors[1]), H->word(h)}
                           : std::vector<NCPoly>{H->word(h), H->word(inner.factors[0]), M->word(inner.factors[1])};
        (right ? lhs : rhs) += X->tensor_of(parts) * (st.coeff * inner.coeff);
      }
    }
    std::string at = " at " + word_text(w, *M->alphabet());
    if (lhs != rhs)
      out[i] = Failure{"coassociativity" + at, lhs.to_string() + " vs " + rhs.to_string()};
    else if (counit != M->nf(w))
      out[i] = Failure{"counit law" + at, counit.to_string()};
  });
  rep.merge(collect("coassociativity and counit", out));
  return rep;
}

Coaction plane_left_coaction(const Registry& reg) {
  HopfPtr H = HopfStructure::gl2(reg);
  GenMap m = parsed_map("delta_L", reg.get("quantum_plane"), reg.get("gl2_tensor_plane"), reg.params(),
                        {{"x", "a_1*x_2 + b_1*y_2"}, {"y", "c_1*x_2 + d_1*y_2"}});
  return Coaction(m, H, Coaction::Side::Left, reg.get("gl2_tensor_gl2_plane"));
}

Coaction plane_right_coaction(const Registry& reg) {
  HopfPtr H = HopfStructure::gl2(reg, true);
  GenMap m = parsed_map("delta_R", reg.get("quantum_plane"), reg.get("plane_tensor_gl2pq"), reg.params(),
                        {{"x", "x_1*a_2 + y_1*c_2"}, {"y", "x_1*b_2 + y_1*d_2"}});
  return Coaction(m, H, Coaction::Side::Right, reg.get("plane_tensor_gl2pq_square"));
}

Coaction cotangent_left_coaction(const Registry& reg) {
  HopfPtr H = HopfStructure::gl2(reg);
  GenMap m = parsed_map("Delta_L on the cotangent calculus", reg.get("cotangent_calculus"),
                        reg.get("gl2_tensor_cotangent"), reg.params(),
                        {{"x", "a_1*x_2 + b_1*y_2"},
                         {"y", "c_1*x_2 + d_1*y_2"},
                         {"xi", "a_1*xi_2 + b_1*eta_2"},
                         {"eta", "c_1*xi_2 + d_1*eta_2"}});
  return Coaction(m, H, Coaction::Side::Left, reg.get("gl2_tensor_gl2_cotangent"));
}

// ---------------------------------------------------------------------------
// Corepresentations

namespace {

std::array<std::array<NCPoly, 2>, 2> matrix_T(const AlgebraPtr& H) {
  return {{{H->gen("a"), H->gen("b")}, {H->gen("c"), H->gen("d")}}};
}

}  // namespace

Corepresentation2 Corepresentation2::standard(HopfPtr hopf) {
  auto T = matrix_T(hopf->algebra());
  return Corepresentation2{"T", std::move(hopf), T};
}

Corepresentation2 Corepresentation2::antipode_transpose(HopfPtr hopf) {
  auto T = matrix_T(hopf->algebra());
  Corepresentation2 c{"S(T)^t", hopf, T};
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) c.m[i][j] = hopf->antipode(T[j][i]);
  return c;
}

Corepresentation2 Corepresentation2::antipode_entrywise(HopfPtr hopf) {
  auto T = matrix_T(hopf->algebra());
  Corepresentation2 c{"S(T) without transposition", hopf, T};
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) c.m[i][j] = hopf->antipode(T[i][j]);
  return c;
}

Report check_comatrix(const Corepresentation2& c) {
  Report rep;
  rep.name = "comatrix identities for " + c.name;
  const auto& hs = *c.hopf;
  const auto& HH = hs.tensor_square();
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) {
      std::string ij = "m" + std::to_string(i + 1) + std::to_string(j + 1);
      NCPoly lhs = hs.coproduct(c.m[i][j]);
      NCPoly rhs = HH->zero();
      for (size_t k = 0; k < 2; ++k) rhs += HH->tensor_of({c.m[i][k], c.m[k][j]});
      rep.record(lhs == rhs, "Delta(" + ij + ") = sum_k m_ik (x) m_kj", lhs.to_string() + " vs " + rhs.to_string());
      Scalar e = hs.counit(c.m[i][j]);
      rep.record(e == Scalar(i == j ? 1 : 0), "eps(" + ij + ") = delta_ij", e.to_string());
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Frame bundle

FrameBundle FrameBundle::build(const Registry& reg, bool swap) {
  FrameBundle fb;
  fb.hopf_ = HopfStructure::gl2(reg, swap);
  fb.B_ = reg.get("quantum_plane");
  fb.P_ = reg.get("frame_bundle", swap);
  fb.PH_ = reg.get("frame_tensor_H", swap);
  const auto& H = fb.hopf_->algebra();
  const auto& P = fb.P_;

  std::map<std::string, NCPoly> bimg, himg;
  for (const auto& g : fb.B_->alphabet()->names()) bimg[g] = P->gen(g);
  for (const auto& g : H->alphabet()->names()) himg[g] = P->gen(g);
  fb.embed_B_ = GenMap("id (x) 1", fb.B_, P, bimg);
  fb.embed_H_ = GenMap("j", H, P, himg);

  const auto& PH = fb.PH_;
  std::map<std::string, NCPoly> images;
  for (const auto& g : fb.B_->alphabet()->names()) images[g] = PH->tensor_of({P->nf(P->gen(g)), H->one()});
  for (Letter l = 0; l < H->alphabet()->size(); ++l) {
    NCPoly v = PH->zero();
    for (const auto& t : fb.hopf_->sweedler(Word{l}))
      v += PH->tensor_of({fb.embed_H_.apply_word(t.left), H->word(t.right)}) * t.coeff;
    images[H->alphabet()->name(l)] = v;
  }
  fb.delta_R_ = std::make_shared<Coaction>(GenMap("Delta_R", P, PH, images), fb.hopf_, Coaction::Side::Right,
                                           reg.get("frame_tensor_HH", swap));
  fb.j_ = std::make_shared<ConvolutionMap>(ConvolutionMap::from_genmap(fb.hopf_, fb.embed_H_));
  GenMap jinv = fb.hopf_->antipode_map().then(fb.embed_H_);
  fb.j_inverse_ = std::make_shared<ConvolutionMap>("j^-1", fb.hopf_, P,
                                                   [jinv](const Word& w) { return jinv.apply_word(w); });
  return fb;
}

NCPoly FrameBundle::lift(const NCPoly& b) const {
  if (b.alphabet()->same_as(*P_->alphabet())) return P_->nf(b);
  return embed_B_(b);
}

bool FrameBundle::is_coinvariant(const NCPoly& e) const {
  NCPoly f = P_->nf(e);
  return coaction()(f) == PH_->tensor_of({f, hopf_->algebra()->one()});
}

Report FrameBundle::check_coinvariants(size_t max_degree, unsigned jobs) const {
  Report rep;
  rep.name = "coinvariants to degree " + std::to_string(max_degree);
  const auto& pa = *P_->alphabet();
  std::set<std::string> bnames(B_->alphabet()->names().begin(), B_->alphabet()->names().end());
  auto is_base_word = [&](const Word& w) {
    for (size_t i = 0; i < w.size(); ++i)
      if (!bnames.count(pa.name(w[i]))) return false;
    return true;
  };

  std::vector<SparseVector> base_images;
  for (const auto& w : B_->normal_words(max_degree)) base_images.push_back(flatten({embed_B_.apply_word(w)}));
  size_t r = rank(base_images);
  rep.record(r == base_images.size(), "the base embeds injectively up to degree " + std::to_string(max_degree),
             "rank " + std::to_string(r) + " of " + std::to_string(base_images.size()));

  auto words = P_->normal_words(max_degree);
  std::vector<Word> rest;
  for (const auto& w : words) {
    if (is_base_word(w))
      rep.record(is_coinvariant(P_->word(w)), word_text(w, pa) + " is coinvariant");
    else
      rest.push_back(w);
  }
  std::vector<SparseVector> images(rest.size());
  parallel_for(rest.size(), jobs, [&](size_t i) {
    NCPoly w = P_->word(rest[i]);
    images[i] = flatten({coaction()(w) - PH_->tensor_of({w, hopf_->algebra()->one()})});
  });
  r = rank(images);
  rep.record(r == images.size(),
             "no combination of normal words outside the base is coinvariant (degree <= " +
                 std::to_string(max_degree) + ")",
             "rank " + std::to_string(r) + " of " + std::to_string(images.size()));
  return rep;
}

NCPoly FrameBundle::canonical_map(const NCPoly& f, const NCPoly& f2) const {
  const auto& H = hopf_->algebra();
  NCPoly left = P_->nf(f);
  NCPoly r = PH_->zero();
  for (const auto& st : PH_->split(coaction()(f2)))
    r += PH_->tensor_of({P_->mul(left, P_->word(st.factors[0])), H->word(st.factors[1])}) * st.coeff;
  return r;
}

Report FrameBundle::check_galois_onesided(size_t max_degree, unsigned jobs) const {
  return check_galois_onesided(j(), j_inverse(), max_degree, jobs);
}

Report FrameBundle::check_galois_onesided(const ConvolutionMap& jm, const ConvolutionMap& jinv, size_t max_degree,
                                          unsigned jobs) const {
  const auto& H = hopf_->algebra();
  auto fwords = B_->normal_words(max_degree);
  auto hwords = H->normal_words(max_degree);
  std::vector<std::optional<Failure>> out(fwords.size() * hwords.size());
  parallel_for(out.size(), jobs, [&](size_t idx) {
    const Word& fw = fwords[idx / hwords.size()];
    const Word& hw = hwords[idx % hwords.size()];
    NCPoly f = embed_B_.apply_word(fw);
    NCPoly got = PH_->zero();
    for (const auto& t : hopf_->sweedler(hw)) got += canonical_map(P_->mul(f, jinv.on_word(t.left)), jm.on_word(t.right)) * t.coeff;
    NCPoly want = PH_->tensor_of({f, H->word(hw)});
    if (got != want)
      out[idx] = Failure{"beta(sum f j^-1(h_1) (x) j(h_2)) = f (x) h at f = " + word_text(fw, *B_->alphabet()) +
                             ", h = " + word_text(hw, *H->alphabet()),
                         got.to_string()};
  });
  Report rep = collect("one-sided Galois composite for " + jm.name() + " to degree " + std::to_string(max_degree), out);
  return rep;
}

Report FrameBundle::check_cleaving(const ConvolutionMap& jm, const ConvolutionMap& jinv, size_t max_degree,
                                   unsigned jobs) const {
  const auto& H = hopf_->algebra();
  auto hwords = H->normal_words(max_degree);
  std::vector<std::optional<Failure>> out(hwords.size());
  parallel_for(hwords.size(), jobs, [&](size_t i) {
    const Word& h = hwords[i];
    NCPoly lhs = coaction()(jm.on_word(h));
    NCPoly rhs = PH_->zero();
    for (const auto& t : hopf_->sweedler(h)) rhs += PH_->tensor_of({jm.on_word(t.left), H->word(t.right)}) * t.coeff;
    if (lhs != rhs)
      out[i] = Failure{"Delta_R(j(h)) = (j (x) id) Delta(h) at h = " + word_text(h, *H->alphabet()),
                       lhs.to_string() + " vs " + rhs.to_string()};
  });
  Report rep;
  rep.name = "cleaving map " + jm.name() + " to degree " + std::to_string(max_degree);
  rep.merge(collect("colinearity", out));
  rep.merge(check_convolution_inverse(jm, jinv, max_degree, jobs));
  return rep;
}

bool FrameBundle::is_colinear(const ColinearMap& l, const Corepresentation2& c) const {
  return colinearity_report(l, c, "").pass();
}

Report FrameBundle::colinearity_report(const ColinearMap& l, const Corepresentation2& c, const std::string& label) const {
  Report rep;
  rep.name = "colinearity of " + label + " under " + c.name;
  NCPoly v[2] = {P_->nf(l.e), P_->nf(l.f)};
  for (size_t i = 0; i < 2; ++i) {
    NCPoly lhs = coaction()(v[i]);
    NCPoly rhs = PH_->zero();
    for (size_t j = 0; j < 2; ++j) rhs += PH_->tensor_of({v[j], c.m[j][i]});
    rep.record(lhs == rhs, std::string("Delta_R(l(") + (i == 0 ? "e" : "f") + ")) = sum_j l(basis_j) (x) m_j" +
                               std::to_string(i + 1),
               lhs.to_string() + " vs " + rhs.to_string());
  }
  return rep;
}

ColinearMap FrameBundle::psi(const std::pair<NCPoly, NCPoly>& u, const Corepresentation2& c) const {
  NCPoly uu[2] = {lift(u.first), lift(u.second)};
  NCPoly val[2] = {P_->zero(), P_->zero()};
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) val[i] += P_->mul(uu[j], j_->operator()(c.m[j][i]));
  return ColinearMap{val[0], val[1]};
}

std::pair<NCPoly, NCPoly> FrameBundle::psi_inverse(const ColinearMap& l, const Corepresentation2& c) const {
  std::set<std::string> bnames(B_->alphabet()->names().begin(), B_->alphabet()->names().end());
  NCPoly out[2] = {B_->zero(), B_->zero()};
  for (size_t i = 0; i < 2; ++i) {
    NCPoly v = P_->zero();
    for (size_t j = 0; j < 2; ++j) v += P_->mul(l[j], (*j_inverse_)(c.m[j][i]));
    for (const auto& [w, coeff] : v.terms())
      for (size_t k = 0; k < w.size(); ++k)
        if (!bnames.count(P_->alphabet()->name(w[k])))
          throw AlgebraError("Psi^-1 value " + v.to_string() + " is not in the base: the map is not colinear");
    out[i] = B_->nf(relabel(v, B_->alphabet()));
  }
  return {out[0], out[1]};
}

std::pair<ColinearMap, ColinearMap> FrameBundle::psi_basis(const Corepresentation2& c) const {
  return {psi({B_->one(), B_->zero()}, c), psi({B_->zero(), B_->one()}, c)};
}

ColinearMap FrameBundle::left_multiply(const NCPoly& b, const ColinearMap& l) const {
  NCPoly bb = lift(b);
  return ColinearMap{P_->mul(bb, l.e), P_->mul(bb, l.f)};
}

ColinearMap FrameBundle::right_multiply(const ColinearMap& l, const NCPoly& b) const {
  NCPoly bb = lift(b);
  return ColinearMap{P_->mul(l.e, bb), P_->mul(l.f, bb)};
}

std::pair<ColinearMap, ColinearMap> tangent_basis(const FrameBundle& fb, const Corepresentation2& tilde) {
  return fb.psi_basis(tilde);
}

}  // namespace ncg
