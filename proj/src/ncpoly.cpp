#include "ncgalois/ncpoly.hpp"

#include <set>

namespace ncg {

Alphabet::Alphabet(std::vector<std::string> names_by_precedence) : names_(std::move(names_by_precedence)) {
  if (names_.size() > 250) throw AlgebraError("alphabet too large");
  std::set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw AlgebraError("duplicate generator '" + n + "'");
}

std::shared_ptr<const Alphabet> Alphabet::tensor(const std::vector<std::shared_ptr<const Alphabet>>& factors) {
  std::vector<std::string> names;
  std::vector<std::pair<int, Letter>> origin;
  std::vector<std::vector<Letter>> embed(factors.size());
  for (size_t k = factors.size(); k-- > 0;) {
    embed[k].resize(factors[k]->size());
    for (size_t l = 0; l < factors[k]->size(); ++l) {
      embed[k][l] = static_cast<Letter>(names.size());
      names.push_back(factors[k]->name(static_cast<Letter>(l)) + "_" + std::to_string(k + 1));
      origin.emplace_back(static_cast<int>(k), static_cast<Letter>(l));
    }
  }
  auto a = std::make_shared<Alphabet>(std::move(names));
  a->factors_ = factors;
  a->origin_ = std::move(origin);
  a->embed_ = std::move(embed);
  return a;
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Letter>(i);
  return std::nullopt;
}

Word::Word(std::initializer_list<Letter> ls) {
  for (Letter l : ls) letters_.push_back(static_cast<char>(l));
}

std::optional<size_t> Word::find(const Word& factor) const {
  auto pos = letters_.find(factor.letters_);
  if (pos == std::string::npos) return std::nullopt;
  return pos;
}

std::string Word::to_string(const Alphabet& alpha) const {
  if (letters_.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += '*';
    s += alpha.name((*this)[i]);
  }
  return s;
}

Cmp deglex_compare(const Word& u, const Word& v) {
  DegLexGreater gt;
  if (gt(u, v)) return Cmp::GT;
  if (gt(v, u)) return Cmp::LT;
  return Cmp::EQ;
}

Cmp MonomialOrder::compare(const Word& u, const Word& v) const {
  for (const Word* w : {&u, &v})
    for (size_t i = 0; i < w->size(); ++i)
      if ((*w)[i] >= alphabet->size()) throw AlgebraError("word is not over the order's alphabet");
  return deglex_compare(u, v);
}

NCPoly::NCPoly(AlphabetPtr alpha, const Scalar& c) : alpha_(std::move(alpha)) {
  if (!c.is_zero()) terms_.emplace(Word(), c);
}

NCPoly::NCPoly(AlphabetPtr alpha, const Word& w, const Scalar& c) : alpha_(std::move(alpha)) {
  if (!c.is_zero()) terms_.emplace(w, c);
}

NCPoly NCPoly::gen(const AlphabetPtr& alpha, std::string_view name) {
  auto l = alpha->find(name);
  if (!l) throw AlgebraError("unknown generator '" + std::string(name) + "'");
  return letter(alpha, *l);
}

Scalar NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

std::optional<Scalar> NCPoly::as_scalar() const {
  if (terms_.empty()) return Scalar();
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  return std::nullopt;
}

void NCPoly::check_same(const NCPoly& o) const {
  if (alpha_ && o.alpha_ && alpha_ != o.alpha_ && !alpha_->same_as(*o.alpha_))
    throw AlgebraError("alphabet mismatch");
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  check_same(o);
  if (!alpha_) alpha_ = o.alpha_;
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  check_same(o);
  if (!alpha_) alpha_ = o.alpha_;
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [w, v] : r.terms_) v = -v;
  return r;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  a.check_same(b);
  NCPoly r(a.alpha_ ? a.alpha_ : b.alpha_);
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, d] : b.terms_) r.add_term(u + v, c * d);
  return r;
}

bool operator==(const NCPoly& a, const NCPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  for (; i != a.terms_.end(); ++i, ++j)
    if (i->first != j->first || i->second != j->second) return false;
  return true;
}

std::string format_term(const Scalar& c, const std::string& word_text, bool first) {
  const auto& nt = c.numerator().terms();
  bool neg = nt.size() == 1 && nt[0].c < 0;
  Scalar cc = neg ? -c : c;
  std::string body;
  if (word_text.empty()) {
    body = cc.to_string();
  } else if (cc.is_one()) {
    body = word_text;
  } else if (cc.needs_parens() && cc.denominator().is_monomial()) {
    body = "(" + cc.to_string() + ")*" + word_text;
  } else {
    body = cc.to_string() + "*" + word_text;
  }
  std::string prefix = first ? (neg ? "-" : "") : (neg ? " - " : " + ");
  return prefix + body;
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    s += format_term(c, w.empty() ? std::string() : w.to_string(*alpha_), first);
    first = false;
  }
  return s;
}

NCPoly tensor_embed(const NCPoly& f, size_t factor, const AlphabetPtr& target) {
  if (!target->is_tensor() || factor >= target->factor_count())
    throw AlgebraError("target alphabet has no tensor factor " + std::to_string(factor + 1));
  if (f.alphabet() && !f.alphabet()->same_as(*target->factor(factor)))
    throw AlgebraError("tensor factor alphabet mismatch");
  NCPoly r(target);
  for (const auto& [w, c] : f.terms()) {
    Word t;
    for (size_t i = 0; i < w.size(); ++i) t.push_back(target->tensor_letter(factor, w[i]));
    r.add_term(t, c);
  }
  return r;
}

std::vector<SimpleTensor> split_tensor(const NCPoly& f) {
  const auto& alpha = *f.alphabet();
  if (!alpha.is_tensor()) throw AlgebraError("not a tensor alphabet");
  std::vector<SimpleTensor> out;
  out.reserve(f.size());
  for (const auto& [w, c] : f.terms()) {
    SimpleTensor st{c, std::vector<Word>(alpha.factor_count())};
    int last = 0;
    for (size_t i = 0; i < w.size(); ++i) {
      int k = alpha.factor_of(w[i]);
      if (k < last) throw AlgebraError("tensor word is not block-ordered");
      last = k;
      st.factors[k].push_back(alpha.local_letter(w[i]));
    }
    out.push_back(std::move(st));
  }
  return out;
}

}  // namespace ncg
