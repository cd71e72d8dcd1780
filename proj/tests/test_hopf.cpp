#include "catch_amalgamated.hpp"

#include "ncgalois/hopf.hpp"
#include "support.hpp"

using namespace ncg;

namespace {

struct Gl2 {
  Registry reg;
  HopfPtr hopf = HopfStructure::gl2(reg);
  AlgebraPtr H = hopf->algebra();
  AlgebraPtr HH = hopf->tensor_square();

  NCPoly t(const char* a, const char* b) const { return HH->tensor_of({H->parse(a), H->parse(b)}); }
};

}  // namespace

TEST_CASE("structure maps on generators", "[hopf]") {
  Gl2 g;
  CHECK(g.hopf->coproduct(g.H->gen("a")) == g.t("a", "a") + g.t("b", "c"));
  CHECK(g.hopf->coproduct(g.H->gen("d")) == g.t("c", "b") + g.t("d", "d"));
  CHECK(g.hopf->coproduct(g.H->gen("Dinv")) == g.t("Dinv", "Dinv"));
  CHECK(g.hopf->counit(g.H->gen("a")) == Scalar(1));
  CHECK(g.hopf->counit(g.H->gen("c")) == Scalar(0));
  CHECK(g.hopf->antipode(g.H->gen("b")) == g.H->parse("-q^-1*b*Dinv"));
  CHECK(g.hopf->antipode(g.H->gen("Dinv")) == g.H->parse("D"));
}

TEST_CASE("the quantum determinant is group-like", "[hopf]") {
  Gl2 g;
  NCPoly D = g.H->parse("D");
  CHECK(g.hopf->coproduct(D) == g.t("D", "D"));
  CHECK(g.hopf->counit(D) == Scalar(1));
  // S(D) is the inverse of a group-like element.
  CHECK(g.H->mul(g.hopf->antipode(D), D) == g.H->one());
}

TEST_CASE("S(T) is a two-sided inverse of T", "[hopf]") {
  Gl2 g;
  const char* T[2][2] = {{"a", "b"}, {"c", "d"}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      NCPoly left = g.H->zero(), right = g.H->zero();
      for (int k = 0; k < 2; ++k) {
        left += g.H->mul(g.hopf->antipode(g.H->gen(T[i][k])), g.H->gen(T[k][j]));
        right += g.H->mul(g.H->gen(T[i][k]), g.hopf->antipode(g.H->gen(T[k][j])));
      }
      NCPoly id = i == j ? g.H->one() : g.H->zero();
      CHECK(left == id);
      CHECK(right == id);
    }
}

TEST_CASE("Hopf axioms hold on short words", "[hopf]") {
  Gl2 g;
  auto rep = check_hopf_axioms(*g.hopf, 2, 2);
  INFO(rep.summary());
  CHECK(rep.pass());
  CHECK(rep.checked > 0);
  CHECK(check_structure_maps(*g.hopf, 4).pass());
  CHECK(check_antipode_coalgebra(*g.hopf).pass());
}

TEST_CASE("coproduct and counit are algebra maps, the antipode reverses products", "[hopf][property]") {
  Gl2 g;
  std::mt19937_64 rng(41);
  for (int i = 0; i < 15; ++i) {
    NCPoly u = test::random_element(*g.H, 2, rng, 2), v = test::random_element(*g.H, 2, rng, 2);
    NCPoly uv = g.H->mul(u, v);
    CHECK(g.hopf->coproduct(uv) == g.HH->mul(g.hopf->coproduct(u), g.hopf->coproduct(v)));
    CHECK(g.hopf->counit(uv) == g.hopf->counit(u) * g.hopf->counit(v));
    CHECK(g.hopf->antipode(uv) == g.H->mul(g.hopf->antipode(v), g.hopf->antipode(u)));
  }
}

TEST_CASE("a wrong antipode is caught", "[hopf]") {
  Gl2 g;
  GenMap badS("S'", g.H, g.H,
              {{"a", g.H->parse("d*Dinv")},
               {"b", g.H->parse("-q*b*Dinv")},
               {"c", g.H->parse("-q*c*Dinv")},
               {"d", g.H->parse("a*Dinv")},
               {"Dinv", g.H->parse("D")}},
              GenMap::Kind::AntiHomomorphism);
  HopfStructure bad(g.hopf->coproduct_map(), g.hopf->counit_map(), badS, g.hopf->tensor_cube());
  auto rep = check_hopf_axioms_on(bad, {g.H->gen("b")});
  CHECK_FALSE(rep.pass());
}

TEST_CASE("sweedler terms of a generator", "[hopf]") {
  Gl2 g;
  auto terms = g.hopf->sweedler(Word{0});
  REQUIRE(terms.size() == 2);
  for (const auto& t : terms) CHECK(t.coeff == Scalar(1));
}

TEST_CASE("convolution of id and S is the unit", "[hopf]") {
  Gl2 g;
  auto id = ConvolutionMap::from_genmap(g.hopf, GenMap::identity(g.H));
  auto S = ConvolutionMap::from_genmap(g.hopf, g.hopf->antipode_map());
  CHECK(check_convolution_inverse(id, S, 2).pass());
  auto unit = ConvolutionMap::unit(g.hopf, g.H);
  CHECK(check_maps_agree(id.convolve(S), unit, 2).pass());
  CHECK_FALSE(check_maps_agree(id, unit, 1).pass());
}
