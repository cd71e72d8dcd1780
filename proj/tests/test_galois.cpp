#include "catch_amalgamated.hpp"

#include "ncgalois/galois.hpp"
#include "support.hpp"

using namespace ncg;

namespace {

struct Frame {
  Registry reg;
  FrameBundle fb = FrameBundle::build(reg);
  AlgebraPtr P = fb.total();
  AlgebraPtr H = fb.hopf()->algebra();
  AlgebraPtr PH = fb.total_tensor_hopf();

  NCPoly t(const char* p, const char* h) const { return PH->tensor_of({P->parse(p), H->parse(h)}); }
  ColinearMap pair(const char* e, const char* f) const { return {P->parse(e), P->parse(f)}; }
};

}  // namespace

TEST_CASE("the right coaction on generators", "[galois]") {
  Frame F;
  CHECK(F.fb.coaction()(F.P->gen("x")) == F.t("x", "1"));
  CHECK(F.fb.coaction()(F.P->gen("a")) == F.t("a", "a") + F.t("b", "c"));
  CHECK(F.fb.coaction()(F.P->gen("Dinv")) == F.t("Dinv", "Dinv"));
}

TEST_CASE("coinvariants", "[galois]") {
  Frame F;
  CHECK(F.fb.is_coinvariant(F.P->parse("x*y + 2*y*y")));
  CHECK(F.fb.is_coinvariant(F.P->one()));
  CHECK_FALSE(F.fb.is_coinvariant(F.P->gen("a")));
  CHECK_FALSE(F.fb.is_coinvariant(F.P->parse("x*D")));
  auto rep = F.fb.check_coinvariants(3);
  INFO(rep.summary());
  CHECK(rep.pass());
}

TEST_CASE("comodule algebra structures on the plane", "[galois]") {
  Registry reg;
  CHECK(check_coaction(plane_left_coaction(reg), 3).pass());
  CHECK(check_coaction(plane_right_coaction(reg), 3).pass());
  Frame F;
  CHECK(check_coaction(F.fb.coaction(), 2).pass());
}

TEST_CASE("the canonical map", "[galois]") {
  Frame F;
  CHECK(F.fb.canonical_map(F.P->one(), F.P->gen("a")) == F.t("a", "a") + F.t("b", "c"));
  CHECK(F.fb.canonical_map(F.P->gen("x"), F.P->gen("y")) == F.t("x*y", "1"));
  CHECK(F.fb.canonical_map(F.P->gen("y"), F.P->gen("Dinv")) == F.t("y*Dinv", "Dinv"));
}

TEST_CASE("j = 1 (x) id is a cleaving map with a one-sided Galois inverse", "[galois]") {
  Frame F;
  CHECK(F.fb.check_cleaving(F.fb.j(), F.fb.j_inverse(), 2).pass());
  CHECK(F.fb.check_galois_onesided(2).pass());
}

TEST_CASE("a non-inverse fails the cleaving check", "[galois]") {
  Frame F;
  ConvolutionMap fake("j", F.fb.hopf(), F.P, [&](const Word& w) { return F.P->word(Word()) * F.fb.hopf()->counit(w); });
  CHECK_FALSE(F.fb.check_cleaving(F.fb.j(), fake, 1).pass());
}

TEST_CASE("corepresentation matrices", "[galois]") {
  Frame F;
  CHECK(check_comatrix(Corepresentation2::standard(F.fb.hopf())).pass());
  CHECK(check_comatrix(Corepresentation2::antipode_transpose(F.fb.hopf())).pass());
  CHECK_FALSE(check_comatrix(Corepresentation2::antipode_entrywise(F.fb.hopf())).pass());
}

TEST_CASE("Psi sends sigma_x, sigma_y to the rows of T", "[galois]") {
  Frame F;
  auto rho = Corepresentation2::standard(F.fb.hopf());
  auto [sx, sy] = F.fb.psi_basis(rho);
  CHECK(sx == F.pair("a", "b"));
  CHECK(sy == F.pair("c", "d"));
  CHECK(F.fb.is_colinear(sx, rho));
  CHECK(F.fb.is_colinear(sy, rho));
  CHECK_FALSE(F.fb.is_colinear(F.pair("a", "c"), rho));
}

TEST_CASE("Psi and its inverse", "[galois][property]") {
  Frame F;
  auto rho = Corepresentation2::standard(F.fb.hopf());
  auto B = F.fb.base();
  std::mt19937_64 rng(61);
  for (int i = 0; i < 20; ++i) {
    std::pair<NCPoly, NCPoly> u{test::random_element(*B, 2, rng), test::random_element(*B, 2, rng)};
    ColinearMap l = F.fb.psi(u, rho);
    CHECK(F.fb.is_colinear(l, rho));
    auto back = F.fb.psi_inverse(l, rho);
    CHECK(back.first == u.first);
    CHECK(back.second == u.second);
  }
  CHECK_THROWS_AS(F.fb.psi_inverse(F.pair("a", "a"), rho), AlgebraError);
}

TEST_CASE("tangent basis from the antipode corepresentation", "[galois]") {
  Frame F;
  auto tilde = Corepresentation2::antipode_transpose(F.fb.hopf());
  auto [dx, dy] = tangent_basis(F.fb, tilde);
  // rho(e) = e (x) S(a) + f (x) S(b), rho(f) = e (x) S(c) + f (x) S(d), so
  // d_x = (S(a), S(c)) and d_y = (S(b), S(d)).
  const auto& S = F.fb.hopf()->antipode_map();
  auto lifted = [&](const char* g) { return F.fb.embed_hopf()(S(F.H->gen(g))); };
  CHECK(dx == ColinearMap{lifted("a"), lifted("c")});
  CHECK(dy == ColinearMap{lifted("b"), lifted("d")});
  CHECK(dx == F.pair("d*Dinv", "-q*c*Dinv"));
  CHECK(dy == F.pair("-q^-1*b*Dinv", "a*Dinv"));
  CHECK(F.fb.is_colinear(dx, tilde));
  CHECK(F.fb.is_colinear(dy, tilde));
}

TEST_CASE("the entrywise antipode reading is not colinear", "[galois]") {
  Frame F;
  auto tilde = Corepresentation2::antipode_transpose(F.fb.hopf());
  CHECK_FALSE(F.fb.is_colinear(F.pair("d*Dinv", "-q^-1*b*Dinv"), tilde));
  CHECK_FALSE(F.fb.is_colinear(F.pair("-q*c*Dinv", "a*Dinv"), tilde));
}

TEST_CASE("colinear maps form a B-bimodule", "[galois][property]") {
  Frame F;
  auto rho = Corepresentation2::standard(F.fb.hopf());
  auto [sx, sy] = F.fb.psi_basis(rho);
  auto B = F.fb.base();
  std::mt19937_64 rng(67);
  for (int i = 0; i < 10; ++i) {
    NCPoly b = test::random_element(*B, 2, rng), c = test::random_element(*B, 2, rng);
    CHECK(F.fb.is_colinear(F.fb.left_multiply(b, sx), rho));
    CHECK(F.fb.is_colinear(F.fb.right_multiply(sy, c), rho));
    CHECK(F.fb.left_multiply(b, F.fb.right_multiply(sx, c)) == F.fb.right_multiply(F.fb.left_multiply(b, sx), c));
  }
}
