#include "catch_amalgamated.hpp"

#include "ncgalois/presentations.hpp"
#include "support.hpp"

using namespace ncg;

namespace {

AlphabetPtr alphabet(std::vector<std::string> names) { return std::make_shared<Alphabet>(std::move(names)); }

}  // namespace

TEST_CASE("quantum plane normal forms match x^m y^n = p^(mn) y^n x^m", "[rewrite]") {
  Registry reg;
  auto A = reg.get("quantum_plane");
  NCPoly x = A->gen("x"), y = A->gen("y");
  for (unsigned m = 0; m <= 4; ++m)
    for (unsigned n = 0; n <= 4; ++n) {
      NCPoly lhs = A->mul(A->pow(x, m), A->pow(y, n));
      NCPoly rhs = A->mul(A->pow(y, n), A->pow(x, m)) * Scalar::p().pow(static_cast<int>(m * n));
      INFO("m = " << m << ", n = " << n);
      CHECK(lhs == rhs);
      CHECK(lhs.size() == 1);
    }
}

TEST_CASE("quantum plane has no ambiguities and the expected normal words", "[rewrite]") {
  Registry reg;
  auto sys = reg.get("quantum_plane")->system();
  CHECK(enumerate_ambiguities(*sys, 8).empty());
  for (size_t n = 0; n <= 5; ++n) CHECK(sys->normal_words(n).size() == (n + 1) * (n + 2) / 2);
}

TEST_CASE("rules must decrease", "[rewrite]") {
  auto A = alphabet({"x", "y"});
  NCPoly big = NCPoly::gen(A, "x") * NCPoly::gen(A, "x");
  CHECK_THROWS_AS(RewriteSystem(A, {RewriteRule{Word{1}, big}}), AlgebraError);
}

TEST_CASE("a non-confluent system is detected and completed", "[rewrite]") {
  auto A = alphabet({"x", "y", "z"});
  NCPoly x = NCPoly::gen(A, "x"), y = NCPoly::gen(A, "y"), z = NCPoly::gen(A, "z");
  auto sys = RewriteSystem::from_relations(A, {x * y - y, y * z - x});
  auto before = check_local_confluence(sys, 4);
  REQUIRE_FALSE(before.pass());
  CHECK(before.failures.front().ambiguity.word == Word{0, 1, 2});

  CompletionOptions opts;
  opts.max_degree = 4;
  auto done = complete(sys, opts);
  CHECK(done.converged);
  CHECK(check_local_confluence(done.system, 6).pass());
  // x y z reduces both to x and to x x, so x x = x must be added.
  CHECK(done.system.normal_form(x * x) == x);
  CHECK(done.system.normal_form(x * y * z) == x);
}

TEST_CASE("completion reports relations that fall into a subalgebra", "[rewrite]") {
  auto A = alphabet({"a", "x"});
  NCPoly a = NCPoly::gen(A, "a"), x = NCPoly::gen(A, "x");
  // a a x reduces to x and to 4 x, so x = 0 although no relation mentions x alone.
  auto sys = RewriteSystem::from_relations(A, {a * x - Scalar(2) * x * a, a * a - NCPoly(A, Scalar(1))});
  auto sub = RewriteSystem::from_relations(A, {});
  CompletionOptions opts;
  opts.max_degree = 4;
  opts.subalphabet = {1};
  opts.subsystem = &sub;
  auto done = complete(sys, opts);
  REQUIRE_FALSE(done.contamination.empty());
  CHECK(done.system.normal_form(x).is_zero());
}

TEST_CASE("random redex order reaches the same normal form", "[rewrite][property]") {
  Registry reg;
  std::mt19937 rng(23);
  std::mt19937_64 rng64(23);
  for (const char* name : {"gl2", "frame_bundle", "cotangent_calculus", "tangent_calculus"}) {
    auto A = reg.get(name);
    auto sys = A->system(6);
    auto letters = A->alphabet()->size();
    std::uniform_int_distribution<size_t> len(1, 5), letter(0, letters - 1);
    for (int i = 0; i < 30; ++i) {
      Word w;
      for (size_t k = len(rng64); k > 0; --k) w.push_back(static_cast<Letter>(letter(rng64)));
      NCPoly f(A->alphabet(), w, test::random_scalar(rng64));
      INFO(name << ": " << f.to_string());
      CHECK(sys->reduce_randomly(f, rng) == sys->normal_form(f));
    }
  }
}

TEST_CASE("multiplication of normal forms is associative", "[rewrite][property]") {
  Registry reg;
  std::mt19937_64 rng(29);
  for (const char* name : {"gl2", "frame_bundle"}) {
    auto A = reg.get(name);
    for (int i = 0; i < 20; ++i) {
      NCPoly f = test::random_element(*A, 2, rng), g = test::random_element(*A, 2, rng),
             h = test::random_element(*A, 2, rng);
      CHECK(A->mul(A->mul(f, g), h) == A->mul(f, A->mul(g, h)));
    }
  }
}

TEST_CASE("normal forms respect characters of GL(2)", "[rewrite][property]") {
  // a -> alpha, d -> delta, b, c -> 0 kills every relation, so it must
  // factor through the normal form.
  Registry reg;
  auto H = reg.get("gl2");
  const Rational alpha(3, 2), delta(-2, 5);
  std::map<std::string, Rational> chi{{"a", alpha}, {"b", 0}, {"c", 0}, {"d", delta}, {"Dinv", 1 / (alpha * delta)}};
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<size_t> len(1, 5), letter(0, 4);
  for (int i = 0; i < 40; ++i) {
    Word w;
    for (size_t k = len(rng); k > 0; --k) w.push_back(static_cast<Letter>(letter(rng)));
    NCPoly f(H->alphabet(), w);
    CHECK(test::evaluate_character(H->nf(f), chi, 2, 7) == test::evaluate_character(f, chi, 2, 7));
  }
}

TEST_CASE("parallel confluence check agrees with the serial one", "[rewrite]") {
  Registry reg;
  auto sys = reg.get("gl2")->system(6);
  auto serial = check_local_confluence(*sys, 6, 1);
  auto parallel = check_local_confluence(*sys, 6, 3);
  CHECK(serial.ambiguities == parallel.ambiguities);
  CHECK(serial.pass());
  CHECK(parallel.pass());
}
