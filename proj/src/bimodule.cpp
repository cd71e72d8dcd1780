#include "ncgalois/bimodule.hpp"

namespace ncg {

namespace {

std::string side_text(Side s) { return s == Side::Left ? "left" : "right"; }

// Index of the unique grade-1 letter of w; throws otherwise.
size_t basis_position(const Word& w, const Alphabet& alpha, const std::array<std::string, 2>& basis, size_t* which) {
  std::optional<size_t> pos;
  for (size_t i = 0; i < w.size(); ++i) {
    const auto& n = alpha.name(w[i]);
    if (n != basis[0] && n != basis[1]) continue;
    if (pos) throw AlgebraError("term " + w.to_string(alpha) + " has grade above 1");
    pos = i;
    if (which) *which = n == basis[0] ? 0 : 1;
  }
  if (!pos) throw AlgebraError("term " + (w.empty() ? std::string("1") : w.to_string(alpha)) + " has grade 0");
  return *pos;
}

Slots add(Slots a, const Slots& b) {
  a[0] += b[0];
  a[1] += b[1];
  return a;
}

Slots scale(Slots a, const Scalar& c) {
  a[0] *= c;
  a[1] *= c;
  return a;
}

Slots to_slots(const ColinearMap& l) { return {l.e, l.f}; }
ColinearMap to_map(const Slots& s) { return ColinearMap{s[0], s[1]}; }

std::string relation_text(const Relation& r) { return r.lhs.to_string() + " = " + r.rhs.to_string(); }

void check_relation(Report& rep, const Realization& r, const Calculus& calc, const Relation& rel) {
  Slots lhs = realize(r, calc, rel.lhs);
  Slots rhs = realize(r, calc, rel.rhs);
  for (size_t i = 0; i < 2; ++i)
    rep.record(lhs[i] == rhs[i],
               "relation '" + relation_text(rel) + "' for " + r.name + ", slot " +
                   r.slot_names[i],
               lhs[i].to_string() + " vs " + rhs[i].to_string());
}

}  // namespace

// ---------------------------------------------------------------------------
// Calculus

Calculus Calculus::cotangent(const Registry& reg) { return make(reg, "cotangent_calculus", {"xi", "eta"}, true); }

Calculus Calculus::tangent(const Registry& reg) { return make(reg, "tangent_calculus", {"Dx", "Dy"}, false); }

Calculus Calculus::make(const Registry& reg, const std::string& name, std::array<std::string, 2> basis,
                        bool differential) {
  Calculus c;
  c.name_ = name;
  c.B_ = reg.get("quantum_plane");
  c.left_ = reg.get(name + "_left");
  c.right_ = reg.get(name);
  c.basis_ = std::move(basis);
  c.differential_ = differential;
  return c;
}

NCPoly Calculus::basis(size_t i, Side s) const { return algebra(s)->gen(basis_.at(i)); }

NCPoly Calculus::lift(const NCPoly& b, Side s) const { return relabel(b, algebra(s)->alphabet()); }

NCPoly Calculus::nf(const NCPoly& m, Side s) const {
  const auto& A = algebra(s);
  NCPoly f = relabel(m, A->alphabet());
  for (const auto& [w, c] : f.terms())
    if (A->grade(w) != 1)
      throw AlgebraError("expected an element of grade 1 in " + name_ + ", got a term " +
                         (w.empty() ? std::string("1") : w.to_string(*A->alphabet())) + " of grade " +
                         std::to_string(A->grade(w)));
  return A->nf(f);
}

Slots Calculus::coefficients(const NCPoly& m, Side s) const {
  NCPoly n = nf(m, s);
  const auto& alpha = *n.alphabet();
  Slots c = {B_->zero(), B_->zero()};
  for (const auto& [w, k] : n.terms()) {
    size_t which = 0;
    size_t pos = basis_position(w, alpha, basis_, &which);
    if (pos != (s == Side::Left ? w.size() - 1 : 0))
      throw AlgebraError("the " + side_text(s) + " normal form of " + name_ + " has the term " +
                         w.to_string(alpha) + " with the basis letter inside");
    Word rest = s == Side::Left ? w.sub(0, w.size() - 1) : w.sub(1);
    c[which] += relabel(NCPoly(n.alphabet(), rest, k), B_->alphabet());
  }
  return c;
}

NCPoly Calculus::combine(const Slots& c, Side s) const {
  const auto& A = algebra(s);
  NCPoly r = A->zero();
  for (size_t i = 0; i < 2; ++i)
    r += s == Side::Left ? lift(c[i], s) * basis(i, s) : basis(i, s) * lift(c[i], s);
  return A->nf(r);
}

NCPoly Calculus::differential(const NCPoly& b) const {
  if (!differential_) throw AlgebraError(name_ + " has no differential");
  const auto& A = right_;
  const auto& ba = *b.alphabet();
  NCPoly r = A->zero();
  for (const auto& [w, c] : b.terms())
    for (size_t k = 0; k < w.size(); ++k) {
      auto i = B_->alphabet()->find(ba.name(w[k]));
      if (!i) throw AlgebraError("d is defined on " + B_->name() + ", not on '" + ba.name(w[k]) + "'");
      NCPoly prefix = relabel(NCPoly(b.alphabet(), w.sub(0, k)), A->alphabet());
      NCPoly suffix = relabel(NCPoly(b.alphabet(), w.sub(k + 1)), A->alphabet());
      r += prefix * basis(*i) * suffix * c;
    }
  return A->nf(r);
}

std::vector<Relation> Calculus::relations() const {
  std::vector<Relation> out;
  for (const auto& rel : right_->presentation().relations)
    if (!rel.lhs.is_zero() && right_->grade(rel.lhs.leading_word()) == 1) out.push_back(rel);
  return out;
}

// ---------------------------------------------------------------------------
// Realizations

Slots realize(const Realization& r, const Calculus& calc, const NCPoly& m) {
  const auto& B = calc.base();
  const auto& alpha = *m.alphabet();
  Slots out = {NCPoly(r.basis[0][0].alphabet()), NCPoly(r.basis[0][1].alphabet())};
  for (const auto& [w, c] : m.terms()) {
    size_t which = 0;
    size_t pos = basis_position(w, alpha, calc.basis_names(), &which);
    Slots v = r.basis[which];
    for (size_t i = pos + 1; i < w.size(); ++i) v = r.right(v, B->gen(alpha.name(w[i])));
    for (size_t i = pos; i-- > 0;) v = r.left(B->gen(alpha.name(w[i])), v);
    out = add(out, scale(v, c));
  }
  return out;
}

Realization colinear_realization(const FrameBundle& fb, const std::pair<ColinearMap, ColinearMap>& basis,
                                 std::string name) {
  Realization r;
  r.name = std::move(name);
  r.slot_names = {"e", "f"};
  r.basis = {to_slots(basis.first), to_slots(basis.second)};
  r.left = [&fb](const NCPoly& b, const Slots& v) { return to_slots(fb.left_multiply(b, to_map(v))); };
  r.right = [&fb](const Slots& v, const NCPoly& b) { return to_slots(fb.right_multiply(to_map(v), b)); };
  return r;
}

// ---------------------------------------------------------------------------
// Duals

DualElement dual_basis(const Calculus& calc, Side side, size_t i) {
  const auto& B = calc.base();
  DualElement X{side, {B->zero(), B->zero()}};
  X.values.at(i) = B->one();
  return X;
}

NCPoly evaluate(const Calculus& calc, const DualElement& X, const NCPoly& m) {
  const auto& B = calc.base();
  Slots c = calc.coefficients(m, X.side);
  NCPoly r = B->zero();
  for (size_t i = 0; i < 2; ++i) r += X.side == Side::Left ? B->mul(c[i], X.values[i]) : B->mul(X.values[i], c[i]);
  return r;
}

DualElement dual_action(const Calculus& calc, const NCPoly& b, const DualElement& X, Side acting) {
  const auto& B = calc.base();
  NCPoly bb = B->nf(relabel(b, B->alphabet()));
  DualElement out{X.side, X.values};
  for (size_t i = 0; i < 2; ++i) {
    if (X.side == Side::Left) {
      // (bX)(m) = X(m b), (Xb)(m) = X(m) b
      out.values[i] = acting == Side::Left ? evaluate(calc, X, calc.basis(i) * calc.lift(bb))
                                           : B->mul(X.values[i], bb);
    } else {
      // (bX)(m) = b X(m), (Xb)(m) = X(b m)
      out.values[i] = acting == Side::Left ? B->mul(bb, X.values[i])
                                           : evaluate(calc, X, calc.lift(bb) * calc.basis(i));
    }
  }
  return out;
}

Realization dual_realization(const Calculus& calc, Side side, const std::array<DualElement, 2>& basis,
                             std::string name) {
  Realization r;
  r.name = std::move(name);
  r.slot_names = calc.basis_names();
  r.basis = {basis[0].values, basis[1].values};
  r.left = [&calc, side](const NCPoly& b, const Slots& v) {
    return dual_action(calc, b, DualElement{side, v}, Side::Left).values;
  };
  r.right = [&calc, side](const Slots& v, const NCPoly& b) {
    return dual_action(calc, b, DualElement{side, v}, Side::Right).values;
  };
  return r;
}

// ---------------------------------------------------------------------------
// Checks

Report check_freeness(const Realization& r, const AlgebraPtr& base, Side side, size_t max_degree,
                      const std::string& label) {
  Report rep;
  rep.name = label;
  std::vector<SparseVector> vectors;
  for (const auto& u : base->normal_words(max_degree))
    for (size_t i = 0; i < 2; ++i) {
      Slots v = side == Side::Left ? r.left(base->word(u), r.basis[i]) : r.right(r.basis[i], base->word(u));
      vectors.push_back(flatten({v[0], v[1]}));
    }
  size_t rk = rank(vectors);
  rep.record(rk == vectors.size(),
             "the " + side_text(side) + " combinations of the basis of " + r.name + " with coefficient words of length <= " +
                 std::to_string(max_degree) + " are independent",
             "rank " + std::to_string(rk) + " of " + std::to_string(vectors.size()));
  return rep;
}

Report check_left_covariance(const Registry& reg, size_t max_degree, unsigned jobs) {
  Report rep = check_coaction(cotangent_left_coaction(reg), max_degree, jobs);
  rep.name = "left covariance of the cotangent calculus";
  return rep;
}

Report check_cotangent_iso(const FrameBundle& fb, const Calculus& cotangent, size_t max_degree) {
  Report rep;
  rep.name = "cotangent calculus as colinear maps";
  const auto& P = fb.total();
  auto T = Corepresentation2::standard(fb.hopf());
  auto basis = fb.psi_basis(T);

  ColinearMap sx{P->gen("a"), P->gen("b")}, sy{P->gen("c"), P->gen("d")};
  rep.record(basis.first == sx, "Psi(sigma_x) = (a, b)", basis.first.e.to_string() + " , " + basis.first.f.to_string());
  rep.record(basis.second == sy, "Psi(sigma_y) = (c, d)",
             basis.second.e.to_string() + " , " + basis.second.f.to_string());
  rep.merge(fb.colinearity_report(basis.first, T, "Psi(sigma_x)"));
  rep.merge(fb.colinearity_report(basis.second, T, "Psi(sigma_y)"));

  Realization r = colinear_realization(fb, basis, "(Psi(sigma_x), Psi(sigma_y))");
  for (const auto& rel : cotangent.relations()) check_relation(rep, r, cotangent, rel);
  rep.merge(check_freeness(r, fb.base(), Side::Left, max_degree, "left freeness"));
  return rep;
}

Report check_tangent_relations(const FrameBundle& fb, const Calculus& tangent,
                               const std::pair<ColinearMap, ColinearMap>& basis, const Corepresentation2& tilde,
                               size_t max_degree) {
  Report rep;
  rep.name = "tangent relations for colinear maps";
  rep.merge(fb.colinearity_report(basis.first, tilde, "d_x"));
  rep.merge(fb.colinearity_report(basis.second, tilde, "d_y"));
  Realization r = colinear_realization(fb, basis, "(d_x, d_y)");
  for (const auto& rel : tangent.relations()) check_relation(rep, r, tangent, rel);
  rep.merge(check_freeness(r, fb.base(), Side::Right, max_degree, "right freeness"));
  return rep;
}

Report check_duality(const Calculus& cotangent, const Calculus& tangent, size_t max_degree) {
  Report rep;
  rep.name = "bimodule duals of the cotangent calculus";
  const auto& B = cotangent.base();
  std::array<DualElement, 2> left_basis = {dual_basis(cotangent, Side::Left, 0), dual_basis(cotangent, Side::Left, 1)};
  std::array<DualElement, 2> right_basis = {dual_basis(cotangent, Side::Right, 0),
                                            dual_basis(cotangent, Side::Right, 1)};
  Realization left = dual_realization(cotangent, Side::Left, left_basis, "(xi*, eta*)");
  Realization right = dual_realization(cotangent, Side::Right, right_basis, "(xi^R, eta^R)");

  // Left dual against the tangent relations.
  for (const auto& rel : tangent.relations()) check_relation(rep, left, tangent, rel);

  // Right dual: the tangent relations without x*Dx, which is replaced.
  const auto& T = tangent.algebra(Side::Right);
  NCPoly xdx = T->parse_free("x*Dx");
  for (const auto& rel : tangent.relations())
    if (rel.lhs != xdx) check_relation(rep, right, tangent, rel);
  Relation modified{xdx, T->parse_free("(p*q)^-1*((p*q)^-1 - 1)*Dy*y + (p*q)^-1*Dx*x")};
  check_relation(rep, right, tangent, modified);

  // phi(X) = phi(xi*) X(xi) + phi(eta*) X(eta) with phi(xi*) = xi^R,
  // phi(eta*) = (pq)^-1 eta^R.
  Scalar pq_inv = Scalar(1) / (B->params().p * B->params().q);
  std::array<DualElement, 2> image = {right_basis[0], right_basis[1]};
  image[1].values[1] *= pq_inv;
  auto phi = [&](const DualElement& X) {
    DualElement r{Side::Right, {B->zero(), B->zero()}};
    for (size_t i = 0; i < 2; ++i) {
      DualElement t = dual_action(cotangent, X.values[i], image[i], Side::Right);
      r.values[0] += t.values[0];
      r.values[1] += t.values[1];
    }
    return r;
  };
  for (size_t i = 0; i < 2; ++i)
    rep.record(phi(left_basis[i]) == image[i], "phi maps " + cotangent.basis_names()[i] + "* to its image");
  for (const std::string g : {"x", "y"})
    for (size_t i = 0; i < 2; ++i)
      for (Side s : {Side::Left, Side::Right}) {
        NCPoly b = B->gen(g);
        DualElement one = phi(dual_action(cotangent, b, left_basis[i], s));
        DualElement two = dual_action(cotangent, b, phi(left_basis[i]), s);
        std::string what = s == Side::Left ? "phi(" + g + " " + cotangent.basis_names()[i] + "*) = " + g + " phi(" +
                                                 cotangent.basis_names()[i] + "*)"
                                           : "phi(" + cotangent.basis_names()[i] + "* " + g + ") = phi(" +
                                                 cotangent.basis_names()[i] + "*) " + g;
        rep.record(one == two, what,
                   one.values[0].to_string() + ", " + one.values[1].to_string() + " vs " +
                       two.values[0].to_string() + ", " + two.values[1].to_string());
      }

  for (Side s : {Side::Left, Side::Right}) {
    rep.merge(check_freeness(left, B, s, max_degree, "left dual freeness"));
    rep.merge(check_freeness(right, B, s, max_degree, "right dual freeness"));
  }
  return rep;
}

}  // namespace ncg
