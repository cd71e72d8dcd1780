// ncgalois: run verification suites, compute normal forms, load presentations.

#include "ncgalois/suites.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

constexpr int kUsageError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

unsigned default_jobs() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

// NCGALOIS_JOBS overrides --jobs.
unsigned jobs_from_env(unsigned flag) {
  const char* env = std::getenv("NCGALOIS_JOBS");
  if (!env || !*env) return flag;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) throw std::runtime_error("NCGALOIS_JOBS must be a positive integer");
  return static_cast<unsigned>(v);
}

void report_parse_error(const ncg::ParseError& e, const std::string& source) {
  std::cerr << source << ":" << e.line() << ":" << e.column() << ": error: " << e.message() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suites for the quantum frame bundle of the quantum plane"};
  app.require_subcommand(1);
  app.fallthrough();

  std::vector<std::string> preload;
  app.add_option("--load", preload, "DSL files to load before running the command")->check(CLI::ExistingFile);
  std::string backend = "symbolic";
  uint64_t seed = 0;
  app.add_option("--backend", backend, "symbolic or numeric")->check(CLI::IsMember({"symbolic", "numeric"}));
  app.add_option("--seed", seed, "seed for random data and numeric points");

  auto* check = app.add_subcommand("check", "run verification suites");
  std::string suite = "all";
  size_t degree = 3;
  std::string format = "text";
  unsigned jobs = default_jobs();
  bool no_timing = false;
  std::vector<std::string> suites = ncg::suite_names();
  suites.push_back("all");
  check->add_option("--suite", suite, "suite to run")->check(CLI::IsMember(suites));
  check->add_option("--degree", degree, "word length bound for axiom checks")->check(CLI::Range(1, 8));
  check->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  check->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  check->add_flag("--no-timing", no_timing, "report 0 ms for every check");

  auto* nf = app.add_subcommand("nf", "print the normal form of an expression");
  std::string algebra;
  std::string expr;
  nf->add_option("--algebra", algebra, "algebra name")->required();
  nf->add_option("expression", expr, "expression to normalize")->required();

  auto* load = app.add_subcommand("load", "parse a DSL file and check what it defines");
  std::string load_path;
  load->add_option("file", load_path, "DSL file")->required()->check(CLI::ExistingFile);
  size_t load_degree = 3;
  load->add_option("--degree", load_degree, "confluence is checked to twice this degree")->check(CLI::Range(1, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsageError;
  }

  ncg::SuiteOptions opts;
  opts.seed = seed;
  opts.numeric = backend == "numeric";
  ncg::Params params;
  try {
    params = opts.resolved_params();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  ncg::Registry reg(params);
  std::string current = "<none>";
  try {
    for (const auto& path : preload) {
      current = path;
      reg.load(read_file(path));
    }

    if (*check) {
      if (!preload.empty()) std::cerr << "note: --load has no effect on builtin suites\n";
      opts.degree = degree;
      opts.jobs = jobs_from_env(jobs);
      opts.timing = !no_timing;
      ncg::SuiteReport rep = ncg::run_suite(suite, opts);
      std::cout << (format == "json" ? ncg::render_json(rep) : ncg::render_text(rep));
      return rep.ok() ? 0 : 1;
    }

    if (*nf) {
      current = "<expression>";
      if (!reg.has(algebra)) {
        std::cerr << "error: unknown algebra '" << algebra << "'\n";
        return kUsageError;
      }
      std::cout << reg.get(algebra)->parse(expr).to_string() << "\n";
      return 0;
    }

    if (*load) {
      current = load_path;
      std::string text = read_file(load_path);
      ncg::Document doc = ncg::parse_document(text, params);
      reg.load(text);
      bool ok = true;
      for (const auto& p : doc.algebras) {
        auto A = reg.get(p.name);
        size_t deg = 2 * load_degree;
        auto rep = ncg::check_local_confluence(*A->system(deg), deg);
        std::cout << "algebra " << p.name << ": " << p.generators.size() << " generators, "
                  << p.relations.size() << " relations, " << A->derived_relations().size()
                  << " derived; confluence to degree " << deg << ": " << (rep.pass() ? "pass" : "FAIL") << " ("
                  << rep.ambiguities << " ambiguities)\n";
        ok = ok && rep.pass();
      }
      for (const auto& m : doc.morphisms) {
        auto rep = ncg::respects_relations(reg.morphism(m.name), load_degree);
        std::cout << "morphism " << m.name << ": " << rep.summary() << "\n";
        ok = ok && rep.pass();
      }
      for (const auto& a : doc.actions) std::cout << "action " << a.name << ": " << a.entries.size() << " entries\n";
      return ok ? 0 : 1;
    }
  } catch (const ncg::ParseError& e) {
    report_parse_error(e, current);
    return kUsageError;
  } catch (const ncg::AlgebraError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return 0;
}
