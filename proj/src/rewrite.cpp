#include "ncgalois/rewrite.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace ncg {

NCPoly RewriteRule::relation(const AlphabetPtr& alpha) const {
  NCPoly r(alpha, lhs);
  r -= rhs;
  return r;
}

void parallel_for(size_t n, unsigned jobs, const std::function<void(size_t)>& work) {
  if (jobs <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) work(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (size_t i = next++; i < n; i = next++) {
      try {
        work(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  unsigned count = std::min<unsigned>(jobs, static_cast<unsigned>(n));
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

RewriteSystem::RewriteSystem(AlphabetPtr alpha, std::vector<RewriteRule> rules)
    : alpha_(std::move(alpha)), rules_(std::move(rules)), by_first_letter_(alpha_->size()) {
  for (size_t i = 0; i < rules_.size(); ++i) {
    const auto& r = rules_[i];
    for (const auto& [w, c] : r.rhs.terms()) {
      if (deglex_compare(w, r.lhs) != Cmp::LT)
        throw AlgebraError("rule " + r.lhs.to_string(*alpha_) + " -> " + r.rhs.to_string() +
                           " rejected: right-hand side is not strictly smaller");
    }
    if (r.lhs.empty())
      collapsed_ = true;
    else
      by_first_letter_.at(r.lhs[0]).push_back(i);
  }
}

RewriteSystem::RewriteSystem(const RewriteSystem& o)
    : alpha_(o.alpha_), rules_(o.rules_), by_first_letter_(o.by_first_letter_), collapsed_(o.collapsed_) {}

RewriteSystem& RewriteSystem::operator=(const RewriteSystem& o) {
  if (this == &o) return *this;
  alpha_ = o.alpha_;
  rules_ = o.rules_;
  by_first_letter_ = o.by_first_letter_;
  collapsed_ = o.collapsed_;
  std::unique_lock lock(cache_mutex_);
  cache_.clear();
  return *this;
}

bool RewriteSystem::is_interreduced() const {
  for (size_t i = 0; i < rules_.size(); ++i)
    for (size_t j = 0; j < rules_.size(); ++j)
      if (i != j && rules_[i].lhs.find(rules_[j].lhs)) return false;
  return true;
}

std::optional<std::pair<size_t, size_t>> RewriteSystem::find_redex(const Word& w) const {
  if (collapsed_) {
    for (size_t i = 0; i < rules_.size(); ++i)
      if (rules_[i].lhs.empty()) return std::make_pair(size_t{0}, i);
  }
  for (size_t pos = 0; pos < w.size(); ++pos) {
    std::optional<size_t> best;
    for (size_t idx : by_first_letter_[w[pos]]) {
      const Word& lhs = rules_[idx].lhs;
      if (pos + lhs.size() <= w.size() && w.contains_at(lhs, pos) &&
          (!best || lhs.size() > rules_[*best].lhs.size()))
        best = idx;
    }
    if (best) return std::make_pair(pos, *best);
  }
  return std::nullopt;
}

NCPoly RewriteSystem::rewrite_at(const Word& w, size_t pos, size_t rule) const {
  const auto& r = rules_[rule];
  Word prefix = w.sub(0, pos);
  Word suffix = w.sub(pos + r.lhs.size());
  NCPoly out(alpha_);
  for (const auto& [v, c] : r.rhs.terms()) out.add_term(prefix + v + suffix, c);
  return out;
}

NCPoly RewriteSystem::normal_form(const Word& w) const {
  {
    std::shared_lock lock(cache_mutex_);
    auto it = cache_.find(w.raw());
    if (it != cache_.end()) return it->second;
  }
  NCPoly result(alpha_);
  auto redex = find_redex(w);
  if (!redex) {
    result.add_term(w, Scalar(1));
  } else {
    NCPoly step = rewrite_at(w, redex->first, redex->second);
    for (const auto& [v, c] : step.terms()) {
      NCPoly sub = normal_form(v);
      sub *= c;
      result += sub;
    }
  }
  std::unique_lock lock(cache_mutex_);
  cache_.try_emplace(w.raw(), result);
  return result;
}

NCPoly RewriteSystem::normal_form(const NCPoly& f) const {
  NCPoly result(alpha_);
  for (const auto& [w, c] : f.terms()) {
    NCPoly sub = normal_form(w);
    sub *= c;
    result += sub;
  }
  return result;
}

NCPoly RewriteSystem::multiply(const NCPoly& a, const NCPoly& b) const {
  NCPoly result(alpha_);
  for (const auto& [u, c] : a.terms())
    for (const auto& [v, d] : b.terms()) {
      NCPoly sub = normal_form(u + v);
      sub *= c * d;
      result += sub;
    }
  return result;
}

NCPoly RewriteSystem::reduce_uncached(const NCPoly& f) const {
  NCPoly work = f;
  NCPoly result(alpha_);
  while (!work.is_zero()) {
    Word w = work.leading_word();
    Scalar c = work.leading_coeff();
    work.add_term(w, -c);
    auto redex = find_redex(w);
    if (!redex) {
      result.add_term(w, c);
      continue;
    }
    NCPoly step = rewrite_at(w, redex->first, redex->second);
    step *= c;
    work += step;
  }
  return result;
}

NCPoly RewriteSystem::reduce_randomly(const NCPoly& f, std::mt19937& rng) const {
  NCPoly work = f;
  while (true) {
    std::vector<std::pair<Word, std::vector<std::pair<size_t, size_t>>>> reducible;
    for (const auto& [w, c] : work.terms()) {
      std::vector<std::pair<size_t, size_t>> redexes;
      for (size_t i = 0; i < rules_.size(); ++i) {
        const Word& lhs = rules_[i].lhs;
        if (lhs.size() > w.size()) continue;
        for (size_t pos = 0; pos + lhs.size() <= w.size(); ++pos)
          if (w.contains_at(lhs, pos)) redexes.emplace_back(pos, i);
      }
      if (!redexes.empty()) reducible.emplace_back(w, std::move(redexes));
    }
    if (reducible.empty()) return work;
    auto& [w, redexes] = reducible[std::uniform_int_distribution<size_t>(0, reducible.size() - 1)(rng)];
    auto [pos, rule] = redexes[std::uniform_int_distribution<size_t>(0, redexes.size() - 1)(rng)];
    Scalar c = work.coeff(w);
    NCPoly step = rewrite_at(w, pos, rule);
    step *= c;
    work.add_term(w, -c);
    work += step;
  }
}

std::vector<Word> RewriteSystem::normal_words(size_t max_len) const {
  std::vector<Word> out;
  if (collapsed_) return out;
  std::vector<Word> layer{Word()};
  out.push_back(Word());
  for (size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (size_t l = 0; l < alpha_->size(); ++l) {
        Word v = w;
        v.push_back(static_cast<Letter>(l));
        bool ok = true;
        for (const auto& r : rules_) {
          if (r.lhs.size() <= v.size() && v.contains_at(r.lhs, v.size() - r.lhs.size())) {
            ok = false;
            break;
          }
        }
        if (ok) next.push_back(std::move(v));
      }
    layer = std::move(next);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) { return DegLexGreater()(b, a); });
  return out;
}

size_t RewriteSystem::cache_size() const {
  std::shared_lock lock(cache_mutex_);
  return cache_.size();
}

namespace {

struct Pending {
  NCPoly poly;
  Provenance provenance;
};

}  // namespace

RewriteSystem RewriteSystem::from_relations(AlphabetPtr alpha, const std::vector<NCPoly>& relations,
                                            Provenance provenance) {
  std::vector<Pending> pending;
  for (const auto& r : relations)
    if (!r.is_zero()) pending.push_back({r, provenance});

  std::vector<RewriteRule> rules;
  while (!pending.empty()) {
    // Smallest leading word first: fewer later removals.
    auto it = std::min_element(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) {
      return DegLexGreater()(b.poly.leading_word(), a.poly.leading_word());
    });
    Pending item = std::move(*it);
    pending.erase(it);

    RewriteSystem current(alpha, rules);
    NCPoly r = current.reduce_uncached(item.poly);
    if (r.is_zero()) continue;
    r *= r.leading_coeff().inverse();
    RewriteRule rule{r.leading_word(), NCPoly(alpha), item.provenance};
    for (const auto& [w, c] : r.terms())
      if (w != rule.lhs) rule.rhs.add_term(w, -c);

    std::vector<RewriteRule> kept;
    for (auto& old : rules) {
      if (old.lhs.find(rule.lhs))
        pending.push_back({old.relation(alpha), old.provenance});
      else
        kept.push_back(std::move(old));
    }
    kept.push_back(std::move(rule));
    rules = std::move(kept);
  }

  // Fully reduce right-hand sides against the final rule set.
  RewriteSystem lhs_only(alpha, rules);
  for (auto& rule : rules) rule.rhs = lhs_only.reduce_uncached(rule.rhs);
  std::sort(rules.begin(), rules.end(),
            [](const RewriteRule& a, const RewriteRule& b) { return DegLexGreater()(b.lhs, a.lhs); });
  return RewriteSystem(std::move(alpha), std::move(rules));
}

std::vector<Ambiguity> enumerate_ambiguities(const RewriteSystem& sys, size_t max_degree) {
  std::vector<Ambiguity> out;
  const auto& rules = sys.rules();
  for (size_t i = 0; i < rules.size(); ++i) {
    const Word& li = rules[i].lhs;
    for (size_t j = 0; j < rules.size(); ++j) {
      const Word& lj = rules[j].lhs;
      if (li.empty() || lj.empty()) continue;
      // Overlap: a proper suffix of li equals a proper prefix of lj.
      for (size_t k = 1; k < li.size() && k < lj.size(); ++k) {
        size_t start = li.size() - k;
        if (li.raw().compare(start, k, lj.raw(), 0, k) != 0) continue;
        Word w = li + lj.sub(k);
        if (w.size() <= max_degree) out.push_back({AmbiguityKind::Overlap, i, j, w, start});
      }
      // Inclusion: lj is a factor of li.
      if (i != j && lj.size() <= li.size() && li.size() <= max_degree) {
        for (size_t pos = 0; pos + lj.size() <= li.size(); ++pos)
          if (li.contains_at(lj, pos)) out.push_back({AmbiguityKind::Inclusion, i, j, li, pos});
      }
    }
  }
  return out;
}

namespace {

std::pair<NCPoly, NCPoly> resolve(const RewriteSystem& sys, const Ambiguity& a) {
  NCPoly first = sys.normal_form(sys.rewrite_at(a.word, 0, a.left_rule));
  NCPoly second = sys.normal_form(sys.rewrite_at(a.word, a.offset, a.right_rule));
  return {std::move(first), std::move(second)};
}

}  // namespace

ConfluenceReport check_local_confluence(const RewriteSystem& sys, size_t max_degree, unsigned jobs) {
  auto ambs = enumerate_ambiguities(sys, max_degree);
  ConfluenceReport report;
  report.ambiguities = ambs.size();
  std::vector<std::optional<ConfluenceFailure>> results(ambs.size());
  parallel_for(ambs.size(), jobs, [&](size_t i) {
    auto [a, b] = resolve(sys, ambs[i]);
    if (a != b) results[i] = ConfluenceFailure{ambs[i], std::move(a), std::move(b)};
  });
  for (auto& r : results)
    if (r) report.failures.push_back(std::move(*r));
  return report;
}

CompletionResult complete(const RewriteSystem& sys, const CompletionOptions& opts) {
  const auto& alpha = sys.alphabet();
  CompletionResult result{sys, {}, {}, false, 0};
  auto in_subalgebra = [&](const Word& w) {
    if (opts.subalphabet.empty()) return false;
    for (size_t i = 0; i < w.size(); ++i)
      if (std::find(opts.subalphabet.begin(), opts.subalphabet.end(), w[i]) == opts.subalphabet.end())
        return false;
    return !opts.subsystem || opts.subsystem->is_normal(w);
  };

  for (size_t round = 0; round < opts.max_rounds; ++round) {
    const RewriteSystem& current = result.system;
    auto ambs = enumerate_ambiguities(current, opts.max_degree);
    std::vector<NCPoly> diffs(ambs.size());
    parallel_for(ambs.size(), opts.jobs, [&](size_t i) {
      auto [a, b] = resolve(current, ambs[i]);
      diffs[i] = a - b;
    });
    std::vector<NCPoly> fresh;
    for (auto& d : diffs) {
      if (d.is_zero()) continue;
      d *= d.leading_coeff().inverse();
      if (in_subalgebra(d.leading_word())) result.contamination.push_back(d);
      fresh.push_back(std::move(d));
    }
    result.rounds = round + 1;
    if (fresh.empty()) {
      result.converged = true;
      break;
    }
    std::vector<NCPoly> declared, derived;
    for (const auto& r : current.rules())
      (r.provenance == Provenance::Declared ? declared : derived).push_back(r.relation(alpha));
    derived.insert(derived.end(), fresh.begin(), fresh.end());
    // Interreduce declared rules first so that they keep their provenance.
    RewriteSystem base = RewriteSystem::from_relations(alpha, declared, Provenance::Declared);
    std::vector<RewriteRule> rules = base.rules();
    std::vector<NCPoly> all;
    for (const auto& r : rules) all.push_back(r.relation(alpha));
    size_t declared_count = all.size();
    all.insert(all.end(), derived.begin(), derived.end());
    RewriteSystem merged = RewriteSystem::from_relations(alpha, all, Provenance::Derived);
    // A rule keeps declared provenance while its leading word survives.
    std::vector<RewriteRule> tagged = merged.rules();
    for (auto& r : tagged)
      for (size_t k = 0; k < declared_count; ++k)
        if (rules[k].lhs == r.lhs) r.provenance = Provenance::Declared;
    result.system = RewriteSystem(alpha, std::move(tagged));
  }
  for (const auto& r : result.system.rules())
    if (r.provenance == Provenance::Derived) result.derived.push_back(r.relation(alpha));
  return result;
}

}  // namespace ncg
