#pragma once

// Reduction modulo oriented relations in a free algebra, together with the
// diamond-lemma machinery: ambiguity enumeration, local confluence, and a
// degree-bounded Knuth-Bendix style completion.

#include "ncgalois/ncpoly.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace ncg {

enum class Provenance { Declared, Derived };

struct RewriteRule {
  Word lhs;    // leading word, coefficient normalized to 1
  NCPoly rhs;  // every word strictly smaller than lhs
  Provenance provenance = Provenance::Declared;

  /// lhs - rhs as a polynomial.
  NCPoly relation(const AlphabetPtr& alpha) const;
};

enum class AmbiguityKind { Overlap, Inclusion };

struct Ambiguity {
  AmbiguityKind kind;
  size_t left_rule;
  size_t right_rule;
  Word word;
  size_t offset;  // overlap: start of right lhs in word; inclusion: position of right lhs in left lhs
};

struct ConfluenceFailure {
  Ambiguity ambiguity;
  NCPoly first;
  NCPoly second;
};

struct ConfluenceReport {
  size_t ambiguities = 0;
  std::vector<ConfluenceFailure> failures;
  bool pass() const { return failures.empty(); }
};

/// Runs `work(i)` for i in [0, n) on up to `jobs` threads.
void parallel_for(size_t n, unsigned jobs, const std::function<void(size_t)>& work);

class RewriteSystem {
 public:
  /// Orients every nonzero relation (an element that should vanish) by its
  /// leading word and interreduces the result.
  static RewriteSystem from_relations(AlphabetPtr alpha, const std::vector<NCPoly>& relations,
                                      Provenance provenance = Provenance::Declared);

  /// Validates admission (rhs strictly below lhs) but does not interreduce.
  RewriteSystem(AlphabetPtr alpha, std::vector<RewriteRule> rules);

  RewriteSystem(const RewriteSystem& o);
  RewriteSystem& operator=(const RewriteSystem& o);

  const AlphabetPtr& alphabet() const { return alpha_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  /// True when no lhs is a factor of another lhs.
  bool is_interreduced() const;

  NCPoly normal_form(const NCPoly& f) const;
  NCPoly normal_form(const Word& w) const;
  /// nf(a * b) for arbitrary a, b.
  NCPoly multiply(const NCPoly& a, const NCPoly& b) const;
  bool is_normal(const Word& w) const { return !find_redex(w); }

  /// Leftmost position holding a rule lhs; at that position the longest lhs.
  std::optional<std::pair<size_t, size_t>> find_redex(const Word& w) const;
  /// Applies rule `rule` at position `pos` of w (w must contain the lhs there).
  NCPoly rewrite_at(const Word& w, size_t pos, size_t rule) const;
  /// Reduces by applying randomly chosen redexes until normal; no caching.
  NCPoly reduce_randomly(const NCPoly& f, std::mt19937& rng) const;

  /// All normal words of length <= max_len, in ascending degree-lex order.
  std::vector<Word> normal_words(size_t max_len) const;

  size_t cache_size() const;

 private:
  NCPoly reduce_uncached(const NCPoly& f) const;

  AlphabetPtr alpha_;
  std::vector<RewriteRule> rules_;
  std::vector<std::vector<size_t>> by_first_letter_;
  bool collapsed_ = false;  // some rule has lhs = 1

  mutable std::shared_mutex cache_mutex_;
  mutable std::unordered_map<std::string, NCPoly> cache_;
};

std::vector<Ambiguity> enumerate_ambiguities(const RewriteSystem& sys, size_t max_degree);

ConfluenceReport check_local_confluence(const RewriteSystem& sys, size_t max_degree, unsigned jobs = 1);

struct CompletionOptions {
  size_t max_degree = 4;
  unsigned jobs = 1;
  /// Letters of the coinvariant subalgebra and its own system, for the
  /// contamination detector; both optional.
  std::vector<Letter> subalphabet;
  const RewriteSystem* subsystem = nullptr;  // over `sys`'s alphabet
  size_t max_rounds = 64;
};

struct CompletionResult {
  RewriteSystem system;
  std::vector<NCPoly> derived;        // new relations in the order they were adopted
  std::vector<NCPoly> contamination;  // derived relations living in the subalgebra
  bool converged = true;              // no failing ambiguity remains at <= max_degree
  size_t rounds = 0;
};

CompletionResult complete(const RewriteSystem& sys, const CompletionOptions& opts);

}  // namespace ncg
