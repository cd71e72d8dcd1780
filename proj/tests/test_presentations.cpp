#include "catch_amalgamated.hpp"

#include "ncgalois/presentations.hpp"

using namespace ncg;

namespace {

const char* const kDocument = R"(algebra plane {
  generators: x, y;
  relations: x*y = p*y*x;
}

algebra flip(q) {
  generators: u, v;
  grade: v = 1;
  order: deglex v > u;
  relations: u*v = q*v*u;
}

morphism swap : plane -> plane anti {
  x |-> x;
  y |-> y;
}

morphism scale : plane -> plane {
  x |-> 2*x;
  y |-> y;
}
)";

ParseError parse_error_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for:\n" << text);
  return ParseError("", 0, 0);
}

}  // namespace

TEST_CASE("documents parse into presentations and morphisms", "[presentations][dsl]") {
  Document doc = parse_document(kDocument);
  REQUIRE(doc.algebras.size() == 2);
  REQUIRE(doc.morphisms.size() == 2);
  const auto& flip = doc.algebras[1];
  CHECK(flip.generators == std::vector<std::string>{"u", "v"});
  CHECK(flip.precedence == std::vector<std::string>{"v", "u"});
  CHECK(flip.grade("v") == 1);
  CHECK(flip.grade("u") == 0);
  CHECK(doc.morphisms[0].anti);
  CHECK(doc.morphisms[1].images[0].second == "2*x");
}

TEST_CASE("canonical text round-trips", "[presentations][dsl][property]") {
  Registry reg;
  for (const auto& name : Registry::builtin_names()) {
    if (reg.get(name)->is_tensor()) continue;
    Presentation pres = reg.builtin(name);
    Presentation back = parse_presentation(pres.to_text());
    INFO(pres.to_text());
    CHECK(structurally_equal(pres, back));
    CHECK(back.to_text() == pres.to_text());
  }
  for (const auto& pres : parse_document(kDocument).algebras)
    CHECK(structurally_equal(pres, parse_presentation(pres.to_text())));
}

TEST_CASE("structural equality sees relation changes", "[presentations][dsl]") {
  Registry reg;
  Presentation a = reg.builtin("quantum_plane");
  Presentation b = parse_presentation("algebra quantum_plane { generators: x, y; relations: x*y = q*y*x; }");
  CHECK_FALSE(structurally_equal(a, b));
}

TEST_CASE("malformed input is reported with its location", "[presentations][dsl]") {
  struct Case {
    std::string text;
    int line, col;
    std::string fragment;
  };
  std::vector<Case> cases = {
      {"algebra A {\n  generators: x, y;\n  relations: x*z = y;\n}\n", 3, 16, "unknown"},
      {"algebra A {\n  generators: x, x;\n  relations: ;\n}\n", 2, 18, "duplicate"},
      {"algebra A {\n  generators: x;\n  relations: x*(x = x;\n}\n", 3, 19, "expected"},
      {"algebra A {\n  generators: x;\n  relations: x = x;\n}\n", 3, 14, "trivially"},
      {"algebra A {\n  generators: x, y;\n  order: deglex x;\n  relations: ;\n}\n", 3, 18, "order"},
      {"algebra A {\n  generators: x;\n  relations: x = 1/0;\n}\n", 3, 0, "zero"},
      {"widget A { }\n", 1, 1, "expected 'algebra'"},
  };
  for (const auto& c : cases) {
    INFO(c.text);
    ParseError e = parse_error_of(c.text);
    CHECK(e.line() == c.line);
    if (c.col > 0) CHECK(e.column() == c.col);
    CHECK(e.column() >= 1);
    CHECK_THAT(e.message(), Catch::Matchers::ContainsSubstring(c.fragment));
  }
}

TEST_CASE("expressions expand the determinant macro", "[presentations][dsl]") {
  Registry reg;
  auto H = reg.get("gl2");
  CHECK(H->parse("D") == H->parse("a*d - q*b*c"));
  CHECK(H->parse("D*Dinv") == H->one());
  CHECK(H->parse("Dinv*D") == H->one());
  CHECK(H->parse("(p*q)^-1*a") == H->gen("a") * Scalar::laurent(1, -1, -1));
  CHECK(H->parse("a^2") == H->mul(H->gen("a"), H->gen("a")));
}

TEST_CASE("normal form examples", "[presentations]") {
  Registry reg;
  auto plane = reg.get("quantum_plane");
  CHECK(plane->parse("x*y - p*y*x").is_zero());
  CHECK(plane->parse("x*y").to_string() == "p*y*x");
  auto gl2 = reg.get("gl2");
  CHECK(gl2->parse("1").to_string() == "1");
  CHECK(gl2->parse("a*b") == gl2->parse("q*b*a"));
  auto fb = reg.get("frame_bundle");
  // a > b > c > d > Dinv > x > y, so x a is already normal and a x is rewritten.
  CHECK(fb->parse("x*a").to_string() == "x*a");
  CHECK(fb->parse("a*x") == fb->parse("(p*q)^-1*x*a"));
}

TEST_CASE("relabel maps letters by name", "[presentations]") {
  Registry reg;
  auto plane = reg.get("quantum_plane");
  auto fb = reg.get("frame_bundle");
  NCPoly f = plane->parse("x*y + 3*y");
  CHECK(relabel(f, fb->alphabet()) == fb->parse_free("p*y*x + 3*y"));
  NCPoly g = reg.get("gl2")->gen("a");
  CHECK_THROWS_AS(relabel(g, plane->alphabet()), AlgebraError);
}

TEST_CASE("morphisms are checked against the source relations", "[presentations]") {
  Registry reg;
  reg.load(kDocument);
  CHECK(respects_relations(reg.morphism("swap"), 4).pass() == false);
  CHECK(respects_relations(reg.morphism("scale"), 4).pass());
  auto plane = reg.get("plane");
  const GenMap& scale = reg.morphism("scale");
  CHECK(scale(plane->parse("x*y")) == plane->parse("2*p*y*x"));
  GenMap twice = scale.then(scale);
  CHECK(twice(plane->gen("x")) == plane->parse("4*x"));
}

TEST_CASE("an anti-homomorphism of the plane onto its opposite", "[presentations]") {
  // x y = p y x is sent to y x = p x y, which holds in the plane with p^-1.
  Registry reg;
  reg.load(R"(algebra opp {
  generators: x, y;
  relations: y*x = p*x*y;
}
morphism rev : quantum_plane -> opp anti {
  x |-> x;
  y |-> y;
}
)");
  CHECK(respects_relations(reg.morphism("rev"), 4).pass());
}

TEST_CASE("degenerate parameter points are refused", "[presentations]") {
  CHECK_THROWS_AS(Params::at(2, Rational(1, 2)), AlgebraError);
  CHECK_THROWS_AS(Params::at(1, 3), AlgebraError);
  CHECK_THROWS_AS(Params::at(3, 3), AlgebraError);
  CHECK_NOTHROW(Params::at(2, 3));
  for (unsigned i = 0; i < 5; ++i) {
    Params r = Params::random(42, i);
    CHECK(r.numeric);
    CHECK_FALSE(Params::is_degenerate(r.p0, r.q0));
    CHECK(r.p0 * r.q0 != 1);
    CHECK(Params::random(42, i).describe() == r.describe());
  }
  CHECK(Params::random(1, 0).describe() != Params::random(2, 0).describe());
}

TEST_CASE("numeric parameters give the specialized algebra", "[presentations]") {
  Registry reg(Params::at(2, 3));
  auto plane = reg.get("quantum_plane");
  CHECK(plane->parse("x*y") == plane->parse("2*y*x"));
  CHECK(reg.get("gl2")->parse("b*c") == reg.get("gl2")->parse("2/3*c*b"));
}

TEST_CASE("unknown algebras are errors", "[presentations]") {
  Registry reg;
  CHECK_FALSE(reg.has("nope"));
  CHECK_THROWS_AS(reg.get("nope"), AlgebraError);
}
