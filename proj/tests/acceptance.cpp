// Acceptance criteria: one PASS/FAIL line per criterion.

#include "ncgalois/bimodule.hpp"
#include "ncgalois/suites.hpp"

#include "CLI11.hpp"

#include <functional>
#include <iostream>
#include <sstream>

using namespace ncg;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> lines;  // sub-check details

  void expect(bool ok, const std::string& what) {
    pass = pass && ok;
    lines.push_back(std::string(ok ? "ok    " : "FAIL  ") + what);
  }
};

SuiteOptions options() {
  SuiteOptions o;
  o.timing = false;
  return o;
}

void expect_suite(Outcome& out, const SuiteReport& rep, const std::string& prefix = "") {
  for (const auto& c : rep.checks) {
    if (!prefix.empty() && c.id.rfind(prefix, 0) != 0) continue;
    std::string what = c.id + " [" + c.anchor + "] " + c.status;
    if (!c.ok() && !c.witness.empty()) what += ": " + c.witness.substr(0, 300);
    out.expect(c.ok(), what);
  }
}

void expect_status(Outcome& out, const SuiteReport& rep, const std::string& id, const std::string& status) {
  const CheckRecord* c = rep.find(id);
  out.expect(c && c->status == status, id + " is " + (c ? c->status : std::string("missing")));
}

Outcome relations() {
  Outcome out;
  expect_suite(out, run_suite("relations", options()));
  return out;
}

Outcome confluence() {
  Outcome out;
  SuiteOptions o = options();
  o.degree = 3;  // checks at 2 * degree = 6
  auto rep = run_suite("confluence", o);
  expect_suite(out, rep);
  expect_status(out, rep, "confluence/quantum_plane-no-ambiguities", "pass");
  Registry reg;
  out.expect(enumerate_ambiguities(*reg.get("quantum_plane")->system(), 6).empty(),
             "quantum_plane has zero ambiguities to degree 6");
  return out;
}

Outcome hopf() {
  Outcome out;
  auto rep = run_suite("hopf", options());
  expect_suite(out, rep);
  expect_status(out, rep, "hopf/axioms", "pass");
  expect_status(out, rep, "hopf/cot-rederived", "pass");
  return out;
}

Outcome action() {
  Outcome out;
  auto o = options();
  expect_suite(out, run_suite("action", o));
  auto smash = run_suite("smash", o);
  expect_suite(out, smash);
  for (const char* id : {"smash/cross-relations-x1", "smash/cross-relations-x2", "smash/cross-relations-yt",
                         "smash/crossed-generators", "smash/crossed-random"})
    expect_status(out, smash, id, "pass");
  return out;
}

Outcome galois() {
  Outcome out;
  auto o = options();
  o.degree = 3;
  auto rep = run_suite("galois", o);
  expect_suite(out, rep);
  for (const char* id : {"galois/cleaving-map", "galois/canonical-map", "galois/coinvariants"})
    expect_status(out, rep, id, "pass");
  return out;
}

Outcome cotangent() {
  Outcome out;
  auto rep = run_suite("cotangent", options());
  expect_suite(out, rep, "cotangent/colinear-iso");
  expect_suite(out, rep, "cotangent/covariance");
  Registry reg;
  auto fb = FrameBundle::build(reg);
  auto [sx, sy] = fb.psi_basis(Corepresentation2::standard(fb.hopf()));
  auto P = fb.total();
  out.expect(sx == ColinearMap{P->gen("a"), P->gen("b")}, "Psi(sigma_x) = (a, b)");
  out.expect(sy == ColinearMap{P->gen("c"), P->gen("d")}, "Psi(sigma_y) = (c, d)");
  return out;
}

Outcome tangent() {
  Outcome out;
  auto rep = run_suite("tangent", options());
  expect_suite(out, rep);

  // The listed values, compared literally with the Psi~ formula.
  Registry reg;
  auto fb = FrameBundle::build(reg);
  auto P = fb.total();
  auto tilde = Corepresentation2::antipode_transpose(fb.hopf());
  auto [dx, dy] = tangent_basis(fb, tilde);
  ColinearMap listed_x{P->parse("d*Dinv"), P->parse("-q^-1*b*Dinv")};
  ColinearMap listed_y{P->parse("-q*c*Dinv"), P->parse("a*Dinv")};
  out.expect(dx == listed_x, "Psi~(sigma_x) = (d Dinv, -q^-1 b Dinv): computed (" + dx.e.to_string() + ", " +
                                 dx.f.to_string() + ")");
  out.expect(dy == listed_y, "Psi~(sigma_y) = (-q c Dinv, a Dinv): computed (" + dy.e.to_string() + ", " +
                                 dy.f.to_string() + ")");
  out.expect(fb.is_colinear(listed_x, tilde) && fb.is_colinear(listed_y, tilde),
             "listed values are colinear for S(T)^t");
  Calculus tan = Calculus::tangent(reg);
  auto listed_rel = check_tangent_relations(fb, tan, {listed_x, listed_y}, tilde, 3);
  out.expect(listed_rel.pass(), "listed values satisfy the tangent relations: " + listed_rel.summary(2));
  return out;
}

Outcome duality() {
  Outcome out;
  expect_suite(out, run_suite("duality", options()));
  return out;
}

Outcome erratum() {
  Outcome out;
  auto rep = run_suite("erratum", options());
  expect_suite(out, rep);
  bool observed = false;
  for (const char* id : {"erratum/swapped-action-axioms", "erratum/swapped-coinvariants"}) {
    const CheckRecord* c = rep.find(id);
    observed = observed || (c && c->status == "expected-failure-observed");
  }
  out.expect(observed, "swapped variant fails action axioms or coinvariant characterization");
  expect_status(out, rep, "erratum/swapped-completion", "expected-failure-observed");
  expect_status(out, rep, "erratum/control-completion", "pass");
  return out;
}

Outcome leibniz() {
  Outcome out;
  auto rep = run_suite("cotangent", options());
  expect_suite(out, rep, "cotangent/differential");
  expect_suite(out, rep, "cotangent/leibniz");
  Registry reg;
  Calculus cot = Calculus::cotangent(reg);
  out.expect(cot.differential(cot.base()->parse_free("x*y - p*y*x")).is_zero(), "d(xy - p yx) = 0");
  return out;
}

Outcome backends() {
  Outcome out;
  for (unsigned i = 0; i < 3; ++i) {
    SuiteOptions o = options();
    o.numeric = true;
    o.params = Params::random(2024, i);
    auto rep = run_suite("all", o);
    size_t failed = 0;
    std::string first;
    for (const auto& c : rep.checks)
      if (!c.ok()) {
        if (failed++ == 0) first = c.id;
      }
    out.expect(failed == 0, o.params->describe() + ": " + std::to_string(rep.checks.size()) + " checks, " +
                                std::to_string(failed) + " failed" + (first.empty() ? "" : " (first " + first + ")"));
  }
  return out;
}

Outcome dsl() {
  Outcome out;
  Registry reg;
  size_t ok = 0;
  for (const auto& name : Registry::builtin_names()) {
    const Presentation& pres = reg.get(name)->presentation();
    bool same = false;
    try {
      same = structurally_equal(pres, parse_presentation(pres.to_text()));
    } catch (const std::exception& e) {
      out.expect(false, name + ": " + e.what());
    }
    if (same) ++ok;
    else out.expect(false, name + " does not round-trip");
  }
  out.expect(ok == Registry::builtin_names().size(),
             std::to_string(ok) + " of " + std::to_string(Registry::builtin_names().size()) + " builtins round-trip");

  const std::vector<std::pair<std::string, std::pair<int, int>>> malformed = {
      {"algebra A {\n  generators: x;\n  relations: x*y = x;\n}\n", {3, 16}},
      {"algebra A {\n  generators: x\n  relations: ;\n}\n", {3, 3}},
      {"algebra A {\n  generators: x;\n  relations: x = x;\n}\n", {3, 14}},
  };
  for (const auto& [text, where] : malformed) {
    std::ostringstream what;
    try {
      parse_document(text);
      what << "no diagnostic";
      out.expect(false, what.str());
    } catch (const ParseError& e) {
      what << "diagnostic at " << e.line() << ":" << e.column() << ": " << e.message();
      out.expect(e.line() == where.first && e.column() == where.second, what.str());
    }
  }
  return out;
}

struct Criterion {
  const char* title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"relation suite", relations},
      {"confluence of builtins at degree 6", confluence},
      {"Hopf axioms and re-derivation of the Dinv commutation rules", hopf},
      {"action axioms, smash relations, crossed products", action},
      {"cleaving map, canonical map, coinvariants", galois},
      {"cotangent isomorphism", cotangent},
      {"tangent basis, relations, right freeness", tangent},
      {"left and right duals", duality},
      {"swapped-parameter regression", erratum},
      {"Leibniz rule", leibniz},
      {"numeric backend agreement", backends},
      {"DSL round trip and diagnostics", dsl},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  bool verbose = false;
  app.add_option("--criterion", only, "run one criterion (1-12)")->check(CLI::Range(1, 12));
  app.add_flag("-v,--verbose", verbose, "print every sub-check");
  CLI11_PARSE(app, argc, argv);

  bool all_ok = true;
  for (size_t i = 0; i < criteria().size(); ++i) {
    if (only != 0 && static_cast<size_t>(only) != i + 1) continue;
    Outcome o;
    try {
      o = criteria()[i].run();
    } catch (const std::exception& e) {
      o.expect(false, std::string("error: ") + e.what());
    }
    std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria()[i].title << "\n";
    for (const auto& l : o.lines)
      if (verbose || l.rfind("FAIL", 0) == 0) std::cout << "    " << l << "\n";
    all_ok = all_ok && o.pass;
  }
  return all_ok ? 0 : 1;
}
