#include "catch_amalgamated.hpp"

#include "ncgalois/action.hpp"
#include "ncgalois/galois.hpp"
#include "support.hpp"

using namespace ncg;

namespace {

using Terms = std::vector<CrossedTerm>;

Terms times(const Terms& u, const Terms& v, const LeftAction& act, const Cocycle& sigma) {
  Terms out;
  for (const auto& s : u)
    for (const auto& t : v)
      for (auto& r : crossed_multiply(s, t, act, sigma)) out.push_back(std::move(r));
  return out;
}

CrossedTerm random_term(const Algebra& B, const Algebra& H, std::mt19937_64& rng) {
  return {test::random_element(B, 2, rng, 2), test::random_element(H, 2, rng, 2)};
}

// The group algebra of Z2 x Z2 with its usual Hopf structure.
struct KleinFour {
  Registry reg;
  AlgebraPtr K = Algebra::from_presentation(
      parse_presentation("algebra k4 { generators: g, h; relations: g*g = 1, h*h = 1, g*h = h*g; }"));
  AlgebraPtr K2 = Algebra::tensor("k4_2", {K, K});
  AlgebraPtr K3 = Algebra::tensor("k4_3", {K, K, K});
  AlgebraPtr G = Algebra::ground(Params::symbolic());
  HopfPtr hopf;

  KleinFour() {
    NCPoly g = K->gen("g"), h = K->gen("h");
    GenMap delta("Delta", K, K2, {{"g", K2->tensor_of({g, g})}, {"h", K2->tensor_of({h, h})}});
    GenMap eps("eps", K, G, {{"g", G->one()}, {"h", G->one()}});
    GenMap S("S", K, K, {{"g", g}, {"h", h}}, GenMap::Kind::AntiHomomorphism);
    hopf = std::make_shared<const HopfStructure>(delta, eps, S, K3);
  }

  int parity(const Word& w, const char* name) const {
    Letter l = *K->alphabet()->find(name);
    int n = 0;
    for (size_t i = 0; i < w.size(); ++i) n += w[i] == l;
    return n % 2;
  }

  /// sigma(g^i h^j, g^k h^l) = (-1)^(i l), a bicharacter and hence a 2-cocycle.
  Cocycle bicharacter(const AlgebraPtr& B) const {
    auto values = [this, B](const Word& u, const Word& v) {
      return B->scalar(parity(u, "g") && parity(v, "h") ? -1 : 1);
    };
    return Cocycle{"bicharacter", false, values, values};
  }
};

}  // namespace

TEST_CASE("the frame action table", "[action]") {
  Registry reg;
  auto act = LeftAction::frame(reg);
  auto H = act.hopf()->algebra();
  auto B = act.module();
  auto on = [&](const char* h, const char* b) { return act.apply(H->parse(h), B->parse(b)); };
  CHECK(on("a", "x") == B->parse("(p*q)^-1*x"));
  CHECK(on("b", "x").is_zero());
  CHECK(on("c", "x") == B->parse("((p*q)^-1 - 1)*y"));
  CHECK(on("d", "x") == B->parse("p^-1*x"));
  CHECK(on("Dinv", "x") == B->parse("p^2*q*x"));
  CHECK(on("a", "y") == B->parse("q^-1*y"));
  CHECK(on("c", "y").is_zero());
  CHECK(on("d", "y") == B->parse("(p*q)^-1*y"));
  CHECK(on("Dinv", "y") == B->parse("p*q^2*y"));
}

TEST_CASE("the frame action on products and units", "[action]") {
  Registry reg;
  auto act = LeftAction::frame(reg);
  auto H = act.hopf()->algebra();
  auto B = act.module();
  // Delta(a) = a (x) a + b (x) c and b |> x = 0.
  CHECK(act.apply(H->gen("a"), B->parse("x*y")) == B->parse("p^-1*q^-2*x*y"));
  CHECK(act.apply(H->one(), B->parse("x*y")) == B->parse("x*y"));
  CHECK(act.apply(H->gen("a"), B->one()) == B->one());
  CHECK(act.apply(H->gen("b"), B->one()).is_zero());
  // D acts as the inverse of Dinv.
  CHECK(act.apply(H->parse("D"), B->gen("x")) == B->parse("p^-2*q^-1*x"));
}

TEST_CASE("the frame action satisfies the module algebra axioms", "[action]") {
  Registry reg;
  auto act = LeftAction::frame(reg);
  auto rep = check_action_axioms(act, 2, 2);
  INFO(rep.summary());
  CHECK(rep.pass());
  auto coc = check_cocycle_axioms(act, Cocycle::trivial_for(act), 2, 2);
  CHECK(coc.pass());
  CHECK_FALSE(coc.notes.empty());
}

TEST_CASE("an action breaking (h h') |> b = h |> (h' |> b) fails the twisted module condition", "[action]") {
  Registry reg;
  auto frame = LeftAction::frame(reg);
  auto table = frame.table();
  auto B = frame.module();
  table[{"Dinv", "x"}] = B->gen("x");
  LeftAction bad("bad", frame.hopf(), B, table);
  auto rep = check_cocycle_axioms(bad, Cocycle::trivial_for(bad), 2);
  CHECK_FALSE(rep.pass());
}

TEST_CASE("the trivial action passes", "[action]") {
  Registry reg;
  auto hopf = HopfStructure::gl2(reg);
  auto act = LeftAction::trivial(hopf, reg.get("quantum_plane"));
  CHECK(check_action_axioms(act, 2).pass());
  CHECK(act.apply(hopf->algebra()->gen("b"), act.module()->gen("x")).is_zero());
  CHECK(act.apply(hopf->algebra()->gen("a"), act.module()->gen("x")) == act.module()->gen("x"));
}

TEST_CASE("missing table entries are rejected", "[action]") {
  Registry reg;
  auto frame = LeftAction::frame(reg);
  auto table = frame.table();
  table.erase({"c", "y"});
  CHECK_THROWS_AS(LeftAction("partial", frame.hopf(), frame.module(), table), AlgebraError);
}

TEST_CASE("the trivial cocycle is normalized", "[action]") {
  Registry reg;
  auto act = LeftAction::frame(reg);
  auto sigma = Cocycle::trivial_for(act);
  auto H = act.hopf()->algebra();
  auto B = act.module();
  CHECK(sigma(H->gen("a"), H->one(), act) == B->one());
  CHECK(sigma(H->one(), H->gen("b"), act).is_zero());
  CHECK(sigma(H->gen("a"), H->gen("d"), act) == B->one());
}

TEST_CASE("crossed product of the frame action is associative and unital", "[action][property]") {
  Registry reg;
  auto act = LeftAction::frame(reg);
  auto sigma = Cocycle::trivial_for(act);
  auto B = act.module();
  auto H = act.hopf()->algebra();
  auto BH = reg.get("plane_tensor_gl2");
  std::mt19937_64 rng(53);
  Terms one{{B->one(), H->one()}};
  for (int i = 0; i < 10; ++i) {
    Terms u{random_term(*B, *H, rng)}, v{random_term(*B, *H, rng)}, w{random_term(*B, *H, rng)};
    CHECK(crossed_to_tensor(times(times(u, v, act, sigma), w, act, sigma), BH) ==
          crossed_to_tensor(times(u, times(v, w, act, sigma), act, sigma), BH));
    CHECK(crossed_to_tensor(times(one, u, act, sigma), BH) == crossed_to_tensor(u, BH));
    CHECK(crossed_to_tensor(times(u, one, act, sigma), BH) == crossed_to_tensor(u, BH));
  }
}

TEST_CASE("crossed products of generators", "[action]") {
  Registry reg;
  auto act = LeftAction::frame(reg);
  auto sigma = Cocycle::trivial_for(act);
  auto B = act.module();
  auto H = act.hopf()->algebra();
  auto BH = reg.get("plane_tensor_gl2");
  auto prod = crossed_multiply({B->one(), H->gen("a")}, {B->gen("x"), H->one()}, act, sigma);
  CHECK(crossed_to_tensor(prod, BH) == BH->tensor_of({B->parse("(p*q)^-1*x"), H->gen("a")}));
  auto bb = crossed_multiply({B->gen("x"), H->one()}, {B->gen("y"), H->one()}, act, sigma);
  CHECK(crossed_to_tensor(bb, BH) == BH->tensor_of({B->parse("x*y"), H->one()}));
  auto hh = crossed_multiply({B->one(), H->gen("a")}, {B->one(), H->gen("b")}, act, sigma);
  CHECK(crossed_to_tensor(hh, BH) == BH->tensor_of({B->one(), H->parse("a*b")}));
}

TEST_CASE("the smash presentation carries the cross relations", "[action]") {
  Registry reg;
  auto act = LeftAction::frame(reg);
  auto P = Algebra::from_presentation(build_smash_presentation(act));
  CHECK(P->parse("x*a - p*q*a*x").is_zero());
  CHECK(P->parse("x*c - (p*q - 1)*a*y - p*c*x").is_zero());
  CHECK(P->parse("y*d - p*q*d*y").is_zero());
  CHECK(P->parse("x*Dinv - p^-2*q^-1*Dinv*x").is_zero());
  CHECK(P->parse("y*Dinv - p^-1*q^-2*Dinv*y").is_zero());
  CHECK(check_same_algebra(P, reg.get("frame_bundle"), 50, 4, 7).pass());
}

TEST_CASE("the action is recovered from the cleaving map", "[action]") {
  Registry reg;
  auto fb = FrameBundle::build(reg);
  auto frame = LeftAction::frame(reg);
  auto rec = recover_action(fb.j(), fb.j_inverse(), fb.base(), 2, &frame);
  INFO(rec.report.summary());
  CHECK(rec.report.pass());
  auto H = frame.hopf()->algebra();
  auto B = fb.base();
  CHECK(rec.action.apply(H->gen("a"), B->gen("x")) == B->parse("(p*q)^-1*x"));
  CHECK(rec.action.apply(H->one(), B->gen("y")) == B->gen("y"));
  CHECK(rec.action.apply(H->gen("c"), B->one()).is_zero());
}

TEST_CASE("a bicharacter cocycle on Z2 x Z2", "[action][cocycle]") {
  KleinFour k;
  Registry reg;
  auto B = reg.get("quantum_plane");
  auto act = LeftAction::trivial(k.hopf, B);
  Cocycle sigma = k.bicharacter(B);
  auto rep = check_cocycle_axioms(act, sigma, 2, 1, true);
  INFO(rep.summary());
  CHECK(rep.pass());

  auto BK = Algebra::tensor("plane_k4", {B, k.K});
  NCPoly g = k.K->gen("g"), h = k.K->gen("h");
  auto gh = crossed_multiply({B->one(), g}, {B->one(), h}, act, sigma);
  auto hg = crossed_multiply({B->one(), h}, {B->one(), g}, act, sigma);
  // sigma(g, h) = -1 and sigma(h, g) = 1, so g and h anticommute.
  CHECK(crossed_to_tensor(gh, BK) == BK->tensor_of({B->scalar(-1), k.K->parse("g*h")}));
  CHECK(crossed_to_tensor(hg, BK) == BK->tensor_of({B->one(), k.K->parse("g*h")}));
  auto gg = crossed_multiply({B->one(), g}, {B->one(), g}, act, sigma);
  CHECK(crossed_to_tensor(gg, BK) == BK->tensor_of({B->one(), k.K->one()}));

  std::mt19937_64 rng(59);
  for (int i = 0; i < 10; ++i) {
    Terms u{random_term(*B, *k.K, rng)}, v{random_term(*B, *k.K, rng)}, w{random_term(*B, *k.K, rng)};
    CHECK(crossed_to_tensor(times(times(u, v, act, sigma), w, act, sigma), BK) ==
          crossed_to_tensor(times(u, times(v, w, act, sigma), act, sigma), BK));
  }
}

TEST_CASE("a normalized non-cocycle is rejected", "[action][cocycle]") {
  KleinFour k;
  Registry reg;
  auto B = reg.get("quantum_plane");
  auto act = LeftAction::trivial(k.hopf, B);
  Word g{*k.K->alphabet()->find("g")};
  auto values = [&](const Word& u, const Word& v) { return B->scalar(u == g && v == g ? 2 : 1); };
  auto inverse = [&](const Word& u, const Word& v) { return B->scalar(u == g && v == g ? Rational(1, 2) : 1); };
  Cocycle bad{"bad", false, values, inverse};
  CHECK_FALSE(check_cocycle_axioms(act, bad, 2, 1, true).pass());
}
