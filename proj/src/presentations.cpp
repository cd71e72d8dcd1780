#include "ncgalois/presentations.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <sstream>

namespace ncg {

// ---------------------------------------------------------------------------
// Params

Params Params::at(const Rational& p0, const Rational& q0) {
  if (is_degenerate(p0, q0))
    throw AlgebraError("degenerate parameter point p=" + rational_to_string(p0) + ", q=" + rational_to_string(q0));
  Params r;
  r.p = Scalar(p0);
  r.q = Scalar(q0);
  r.numeric = true;
  r.p0 = p0;
  r.q0 = q0;
  return r;
}

Params Params::random(uint64_t seed, unsigned index) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + index + 1);
  std::uniform_int_distribution<int> mag(1, 97);
  std::uniform_int_distribution<int> sign(0, 1);
  auto draw = [&] {
    Rational r(mag(rng), mag(rng));
    r.canonicalize();
    return sign(rng) ? Rational(-r) : r;
  };
  while (true) {
    Rational p0 = draw(), q0 = draw();
    if (!is_degenerate(p0, q0)) return at(p0, q0);
  }
}

bool Params::is_degenerate(const Rational& p0, const Rational& q0) {
  if (p0 == 0 || q0 == 0) return true;
  auto power = [](const Rational& x, int e) {
    Rational r(1);
    Rational b = e < 0 ? Rational(1 / x) : x;
    for (int i = 0; i < std::abs(e); ++i) r *= b;
    return r;
  };
  for (int i = -4; i <= 4; ++i)
    for (int j = -4; j <= 4; ++j)
      if ((i || j) && power(p0, i) * power(q0, j) == 1) return true;
  return false;
}

Params Params::swapped() const {
  Params r = *this;
  std::swap(r.p, r.q);
  std::swap(r.p0, r.q0);
  return r;
}

std::string Params::describe() const {
  if (!numeric) return "symbolic";
  return "p=" + rational_to_string(p0) + ", q=" + rational_to_string(q0);
}

// ---------------------------------------------------------------------------
// Lexer

ParseError::ParseError(const std::string& msg, int line, int col)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg),
      msg_(msg),
      line_(line),
      col_(col) {}

namespace {

struct Token {
  enum Kind { Ident, Int, Punct, End } kind;
  std::string text;
  int line = 1, col = 1;
  size_t offset = 0;
};

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c >= 0x80; }

std::vector<Token> tokenize(std::string_view src, int line0 = 1, int col0 = 1) {
  std::vector<Token> out;
  int line = line0, col = col0;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
        ++col;  // count code points, not bytes
      }
    }
  };
  while (i < src.size()) {
    unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t{Token::Punct, "", line, col, i};
    size_t len = 0;
    if (ident_start(c)) {
      t.kind = Token::Ident;
      while (i + len < src.size() && ident_char(static_cast<unsigned char>(src[i + len]))) ++len;
    } else if (std::isdigit(c)) {
      t.kind = Token::Int;
      while (i + len < src.size() && std::isdigit(static_cast<unsigned char>(src[i + len]))) ++len;
    } else if (src.substr(i, 3) == "|->") {
      len = 3;
    } else if (src.substr(i, 2) == "|>" || src.substr(i, 2) == "->") {
      len = 2;
    } else if (std::string_view("{}():;,=+-*/^>").find(static_cast<char>(c)) != std::string_view::npos) {
      len = 1;
    } else {
      throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", line, col);
    }
    t.text = std::string(src.substr(i, len));
    out.push_back(t);
    advance(len);
  }
  out.push_back({Token::End, "", line, col, src.size()});
  return out;
}

struct ExprEnv {
  AlphabetPtr alpha;
  const Params* params;
  std::vector<std::string> scalar_symbols{"p", "q"};
};

bool has_d_macro(const Alphabet& a) {
  for (const char* g : {"a", "b", "c", "d", "Dinv"})
    if (!a.find(g)) return false;
  return !a.find("D");
}

class Parser {
 public:
  Parser(std::string_view src, std::vector<Token> toks, const Params& params)
      : src_(src), toks_(std::move(toks)), params_(params) {}

  Document document() {
    Document doc;
    while (peek().kind != Token::End) {
      const Token& t = peek();
      if (t.kind == Token::Ident && t.text == "algebra")
        doc.algebras.push_back(algebra());
      else if (t.kind == Token::Ident && t.text == "morphism")
        doc.morphisms.push_back(morphism());
      else if (t.kind == Token::Ident && t.text == "action")
        doc.actions.push_back(action());
      else
        error(t, "expected 'algebra', 'morphism' or 'action'");
    }
    return doc;
  }

  NCPoly whole_expression(const ExprEnv& env) {
    NCPoly e = expr(env);
    if (peek().kind != Token::End) error(peek(), "unexpected '" + peek().text + "' after expression");
    return e;
  }

  std::vector<Relation> relation_list(const ExprEnv& env) {
    std::vector<Relation> out;
    if (peek().kind == Token::End) return out;
    do {
      out.push_back(relation(env));
    } while (accept(","));
    if (peek().kind != Token::End) error(peek(), "expected ',' between relations");
    return out;
  }

 private:
  [[noreturn]] void error(const Token& t, const std::string& msg) { throw ParseError(msg, t.line, t.col); }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
  bool is(const char* text) const { return peek().kind == Token::Punct && peek().text == text; }
  bool accept(const char* text) {
    if (!is(text)) return false;
    ++pos_;
    return true;
  }
  const Token& expect(const char* text) {
    if (!is(text)) error(peek(), std::string("expected '") + text + "'" + found());
    return next();
  }
  std::string found() const {
    return peek().kind == Token::End ? " but reached end of input" : " but found '" + peek().text + "'";
  }
  const Token& expect_ident(const std::string& what) {
    if (peek().kind != Token::Ident) error(peek(), "expected " + what + found());
    return next();
  }
  void expect_keyword(const char* kw) {
    if (peek().kind != Token::Ident || peek().text != kw) error(peek(), std::string("expected '") + kw + "'" + found());
    next();
  }
  bool at_keyword(const char* kw) const { return peek().kind == Token::Ident && peek().text == kw; }

  Presentation algebra() {
    expect_keyword("algebra");
    Presentation pres;
    pres.params = params_;
    pres.name = expect_ident("algebra name").text;
    ExprEnv env{nullptr, &params_};
    if (accept("(")) {
      env.scalar_symbols.clear();
      if (!is(")")) {
        do {
          const Token& t = expect_ident("parameter name");
          if (t.text != "p" && t.text != "q") error(t, "unknown parameter '" + t.text + "' (expected p or q)");
          env.scalar_symbols.push_back(t.text);
        } while (accept(","));
      }
      expect(")");
    }
    expect("{");

    expect_keyword("generators");
    expect(":");
    std::map<std::string, const Token*> declared;
    do {
      const Token& t = expect_ident("generator name");
      if (declared.count(t.text)) error(t, "duplicate generator '" + t.text + "'");
      declared[t.text] = &t;
      pres.generators.push_back(t.text);
    } while (accept(","));
    expect(";");

    if (at_keyword("grade")) {
      next();
      expect(":");
      do {
        const Token& g = expect_ident("generator name");
        if (!declared.count(g.text)) error(g, "unknown generator '" + g.text + "'");
        expect("=");
        bool neg = accept("-");
        if (peek().kind != Token::Int) error(peek(), "expected integer grade" + found());
        int v = std::stoi(next().text);
        pres.grades[g.text] = neg ? -v : v;
      } while (accept(","));
      expect(";");
    }

    if (at_keyword("order")) {
      next();
      expect(":");
      expect_keyword("deglex");
      std::set<std::string> seen;
      do {
        const Token& g = expect_ident("generator name");
        if (!declared.count(g.text)) error(g, "unknown generator '" + g.text + "'");
        if (!seen.insert(g.text).second) error(g, "generator '" + g.text + "' listed twice in order");
        pres.precedence.push_back(g.text);
      } while (accept(">") || accept(","));
      if (pres.precedence.size() != pres.generators.size()) {
        for (const auto& g : pres.generators)
          if (!seen.count(g)) error(peek(), "order does not mention generator '" + g + "'");
      }
      expect(";");
    } else {
      pres.precedence = pres.generators;
    }
    pres.alphabet = std::make_shared<Alphabet>(pres.precedence);
    env.alpha = pres.alphabet;

    expect_keyword("relations");
    expect(":");
    if (!is(";")) {
      do {
        pres.relations.push_back(relation(env));
      } while (accept(","));
    }
    expect(";");
    expect("}");
    return pres;
  }

  Relation relation(const ExprEnv& env) {
    const Token& start = peek();
    NCPoly lhs = expr(env);
    expect("=");
    NCPoly rhs = expr(env);
    NCPoly diff = lhs - rhs;
    if (diff.is_zero()) error(start, "relation is trivially satisfied");
    if (diff.as_scalar()) error(start, "relation identifies a nonzero scalar with zero");
    return {std::move(lhs), std::move(rhs)};
  }

  // Captures the source text of an expression up to the next top-level ';'.
  std::string raw_expression() {
    const Token& first = peek();
    int depth = 0;
    while (peek().kind != Token::End && !(depth == 0 && is(";"))) {
      if (is("(")) ++depth;
      if (is(")")) --depth;
      next();
    }
    if (&first == &peek()) error(first, "expected expression" + found());
    return std::string(src_.substr(first.offset, peek().offset - first.offset));
  }

  MorphismDecl morphism() {
    expect_keyword("morphism");
    MorphismDecl m;
    const Token& nt = expect_ident("morphism name");
    m.name = nt.text;
    m.line = nt.line;
    m.col = nt.col;
    expect(":");
    m.source = expect_ident("source algebra").text;
    expect("->");
    m.target = expect_ident("target algebra").text;
    if (at_keyword("anti")) {
      next();
      m.anti = true;
    }
    expect("{");
    while (!is("}")) {
      const Token& g = expect_ident("generator name");
      expect("|->");
      const Token& e = peek();
      m.images.emplace_back(g.text, raw_expression());
      m.image_locations.emplace_back(e.line, e.col);
      expect(";");
    }
    expect("}");
    return m;
  }

  ActionDecl action() {
    expect_keyword("action");
    ActionDecl a;
    const Token& nt = expect_ident("action name");
    a.name = nt.text;
    a.line = nt.line;
    a.col = nt.col;
    expect(":");
    a.hopf = expect_ident("acting algebra").text;
    expect_keyword("on");
    a.module = expect_ident("module algebra").text;
    expect("{");
    while (!is("}")) {
      ActionDecl::Entry e;
      e.h = expect_ident("generator name").text;
      expect("|>");
      e.b = expect_ident("generator name").text;
      expect("=");
      e.line = peek().line;
      e.col = peek().col;
      e.expr = raw_expression();
      expect(";");
      a.entries.push_back(std::move(e));
    }
    expect("}");
    return a;
  }

  NCPoly expr(const ExprEnv& env) {
    NCPoly result(env.alpha);
    bool neg = accept("-");
    if (!neg) accept("+");
    NCPoly t = term(env);
    result += neg ? -t : t;
    while (is("+") || is("-")) {
      bool minus = next().text == "-";
      NCPoly u = term(env);
      result += minus ? -u : u;
    }
    return result;
  }

  NCPoly term(const ExprEnv& env) {
    NCPoly acc = power(env);
    while (is("*") || is("/")) {
      const Token& op = next();
      const Token& at = peek();
      NCPoly rhs = power(env);
      if (op.text == "*") {
        acc = acc * rhs;
      } else {
        auto s = rhs.as_scalar();
        if (!s) error(at, "division by a non-scalar");
        if (s->is_zero()) error(at, "division by zero");
        acc *= s->inverse();
      }
    }
    return acc;
  }

  NCPoly power(const ExprEnv& env) {
    const Token& base_tok = peek();
    NCPoly base = primary(env);
    while (accept("^")) {
      bool neg = accept("-");
      if (peek().kind != Token::Int) error(peek(), "expected integer exponent" + found());
      const Token& et = next();
      if (et.text.size() > 6) error(et, "exponent too large");
      int e = std::stoi(et.text);
      if (neg) {
        auto s = base.as_scalar();
        if (!s) error(base_tok, "negative power of a non-scalar");
        if (s->is_zero()) error(base_tok, "negative power of zero");
        base = NCPoly(env.alpha, s->pow(-e));
      } else {
        NCPoly r(env.alpha, Scalar(1));
        for (int i = 0; i < e; ++i) r = r * base;
        base = std::move(r);
      }
    }
    return base;
  }

  NCPoly primary(const ExprEnv& env) {
    const Token& t = peek();
    if (accept("(")) {
      NCPoly e = expr(env);
      expect(")");
      return e;
    }
    if (t.kind == Token::Int) {
      next();
      return NCPoly(env.alpha, Scalar(Rational(mpz_class(t.text))));
    }
    if (t.kind == Token::Ident) {
      next();
      if (auto l = env.alpha->find(t.text)) return NCPoly::letter(env.alpha, *l);
      if (std::find(env.scalar_symbols.begin(), env.scalar_symbols.end(), t.text) != env.scalar_symbols.end())
        return NCPoly(env.alpha, t.text == "p" ? env.params->p : env.params->q);
      if (t.text == "D" && has_d_macro(*env.alpha)) {
        auto g = [&](const char* n) { return NCPoly::gen(env.alpha, n); };
        return g("a") * g("d") - env.params->q * (g("b") * g("c"));
      }
      error(t, "unknown generator '" + t.text + "'");
    }
    error(t, "expected expression" + found());
  }

  std::string_view src_;
  std::vector<Token> toks_;
  size_t pos_ = 0;
  Params params_;
};

}  // namespace

Document parse_document(std::string_view text, const Params& params) {
  Parser parser(text, tokenize(text), params);
  return parser.document();
}

Presentation parse_presentation(std::string_view text, const Params& params) {
  Document doc = parse_document(text, params);
  if (doc.algebras.size() != 1 || !doc.morphisms.empty() || !doc.actions.empty())
    throw ParseError("expected exactly one algebra block", 1, 1);
  return std::move(doc.algebras.front());
}

NCPoly parse_expression_at(std::string_view text, const AlphabetPtr& alpha, const Params& params, int line,
                           int col) {
  Parser parser(text, tokenize(text, line, col), params);
  return parser.whole_expression(ExprEnv{alpha, &params});
}

NCPoly parse_expression(std::string_view text, const AlphabetPtr& alpha, const Params& params) {
  return parse_expression_at(text, alpha, params, 1, 1);
}

std::vector<Relation> parse_relation_list(std::string_view text, const AlphabetPtr& alpha, const Params& params) {
  Parser parser(text, tokenize(text), params);
  return parser.relation_list(ExprEnv{alpha, &params});
}

// ---------------------------------------------------------------------------
// Presentation

int Presentation::grade(const std::string& gen) const {
  auto it = grades.find(gen);
  return it == grades.end() ? 0 : it->second;
}

std::string Presentation::to_text() const {
  std::ostringstream os;
  auto join = [&](const std::vector<std::string>& xs, const char* sep) {
    for (size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  };
  os << "algebra " << name << " {\n  generators: ";
  join(generators, ", ");
  os << ";\n";
  std::vector<std::string> graded;
  for (const auto& g : generators)
    if (grade(g) != 0) graded.push_back(g + " = " + std::to_string(grade(g)));
  if (!graded.empty()) {
    os << "  grade: ";
    join(graded, ", ");
    os << ";\n";
  }
  if (precedence != generators) {
    os << "  order: deglex ";
    join(precedence, " > ");
    os << ";\n";
  }
  os << "  relations:";
  if (relations.empty()) os << " ;\n";
  for (size_t i = 0; i < relations.size(); ++i)
    os << "\n    " << relations[i].lhs.to_string() << " = " << relations[i].rhs.to_string()
       << (i + 1 < relations.size() ? "," : ";\n");
  os << "}\n";
  return os.str();
}

bool structurally_equal(const Presentation& a, const Presentation& b) {
  if (a.name != b.name || a.generators != b.generators || a.precedence != b.precedence) return false;
  for (const auto& g : a.generators)
    if (a.grade(g) != b.grade(g)) return false;
  if (a.relations.size() != b.relations.size()) return false;
  for (size_t i = 0; i < a.relations.size(); ++i)
    if (a.relations[i].lhs != b.relations[i].lhs || a.relations[i].rhs != b.relations[i].rhs) return false;
  return true;
}

NCPoly relabel(const NCPoly& f, const AlphabetPtr& target, const std::function<std::string(const std::string&)>& rename) {
  const auto& src = *f.alphabet();
  std::vector<std::optional<Letter>> map(src.size());
  auto lookup = [&](Letter l) {
    if (!map[l]) {
      std::string n = rename ? rename(src.name(l)) : src.name(l);
      auto t = target->find(n);
      if (!t) throw AlgebraError("no generator '" + n + "' to relabel '" + src.name(l) + "' into");
      map[l] = *t;
    }
    return *map[l];
  };
  NCPoly r(target);
  for (const auto& [w, c] : f.terms()) {
    Word v;
    for (size_t i = 0; i < w.size(); ++i) v.push_back(lookup(w[i]));
    r.add_term(v, c);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Algebra

AlgebraPtr Algebra::from_presentation(Presentation pres) {
  if (!pres.alphabet) pres.alphabet = std::make_shared<Alphabet>(pres.precedence);
  std::shared_ptr<Algebra> a(new Algebra());
  a->pres_ = std::move(pres);
  a->system(kSetupDegree);
  return a;
}

AlgebraPtr Algebra::tensor(const std::string& name, std::vector<AlgebraPtr> factors) {
  if (factors.size() < 2) throw AlgebraError("a tensor product needs at least two factors");
  std::vector<AlphabetPtr> alphas;
  for (const auto& f : factors) alphas.push_back(f->alphabet());
  std::shared_ptr<Algebra> a(new Algebra());
  a->factors_ = std::move(factors);
  Presentation& pres = a->pres_;
  pres.name = name;
  pres.params = a->factors_.front()->params();
  pres.alphabet = Alphabet::tensor(alphas);
  const auto& alpha = pres.alphabet;
  for (size_t k = 0; k < a->factors_.size(); ++k)
    for (const auto& g : a->factors_[k]->presentation().generators) {
      std::string tagged = g + "_" + std::to_string(k + 1);
      pres.generators.push_back(tagged);
      if (int gr = a->factors_[k]->presentation().grade(g)) pres.grades[tagged] = gr;
    }
  pres.precedence = alpha->names();
  for (size_t k = 0; k < a->factors_.size(); ++k)
    for (const auto& r : a->factors_[k]->presentation().relations)
      pres.relations.push_back({tensor_embed(r.lhs, k, alpha), tensor_embed(r.rhs, k, alpha)});
  // (later-factor letter)(earlier-factor letter) = (earlier)(later)
  for (size_t hi = 1; hi < a->factors_.size(); ++hi)
    for (size_t lo = 0; lo < hi; ++lo)
      for (Letter u = 0; u < alphas[hi]->size(); ++u)
        for (Letter v = 0; v < alphas[lo]->size(); ++v) {
          NCPoly U = NCPoly::letter(alpha, alpha->tensor_letter(hi, u));
          NCPoly V = NCPoly::letter(alpha, alpha->tensor_letter(lo, v));
          pres.relations.push_back({U * V, V * U});
        }
  a->system(kSetupDegree);
  return a;
}

AlgebraPtr Algebra::ground(const Params& params) {
  Presentation pres;
  pres.name = "ground";
  pres.params = params;
  pres.alphabet = std::make_shared<Alphabet>(std::vector<std::string>{});
  return from_presentation(std::move(pres));
}

RewriteSystem Algebra::build(size_t degree, std::vector<NCPoly>* derived) const {
  const auto& alpha = alphabet();
  if (!is_tensor()) {
    RewriteSystem base = system_ ? *system_ : [&] {
      std::vector<NCPoly> rels;
      for (const auto& r : pres_.relations) rels.push_back(r.difference());
      return RewriteSystem::from_relations(alpha, rels);
    }();
    CompletionOptions opts;
    opts.max_degree = degree;
    CompletionResult res = complete(base, opts);
    if (!res.converged) throw AlgebraError("completion of " + name() + " did not settle at degree " + std::to_string(degree));
    *derived = res.derived;
    return res.system;
  }
  std::vector<RewriteRule> rules;
  for (size_t k = 0; k < factors_.size(); ++k) {
    auto fs = factors_[k]->system(degree);
    for (const auto& r : fs->rules()) {
      Word lhs;
      for (size_t i = 0; i < r.lhs.size(); ++i) lhs.push_back(alpha->tensor_letter(k, r.lhs[i]));
      rules.push_back({lhs, tensor_embed(r.rhs, k, alpha), r.provenance});
      if (r.provenance == Provenance::Derived) derived->push_back(rules.back().relation(alpha));
    }
  }
  for (size_t hi = 1; hi < factors_.size(); ++hi)
    for (size_t lo = 0; lo < hi; ++lo)
      for (Letter u = 0; u < factors_[hi]->alphabet()->size(); ++u)
        for (Letter v = 0; v < factors_[lo]->alphabet()->size(); ++v) {
          Letter U = alpha->tensor_letter(hi, u), V = alpha->tensor_letter(lo, v);
          rules.push_back({Word{U, V}, NCPoly(alpha, Word{V, U}), Provenance::Declared});
        }
  return RewriteSystem(alpha, std::move(rules));
}

std::shared_ptr<const RewriteSystem> Algebra::system(size_t degree) const {
  std::lock_guard lock(mutex_);
  if (system_ && degree <= certified_) return system_;
  size_t target = std::max({degree, kSetupDegree, certified_ + certified_ / 2});
  std::vector<NCPoly> derived;
  system_ = std::make_shared<const RewriteSystem>(build(target, &derived));
  derived_ = std::move(derived);
  certified_ = target;
  return system_;
}

size_t Algebra::certified_degree() const {
  std::lock_guard lock(mutex_);
  return certified_;
}

std::vector<NCPoly> Algebra::derived_relations() const {
  std::lock_guard lock(mutex_);
  return derived_;
}

NCPoly Algebra::nf(const NCPoly& f) const { return system(f.degree())->normal_form(f); }

NCPoly Algebra::nf(const Word& w) const { return system(w.size())->normal_form(w); }

NCPoly Algebra::mul(const NCPoly& a, const NCPoly& b) const {
  return system(a.degree() + b.degree())->multiply(a, b);
}

NCPoly Algebra::pow(const NCPoly& a, unsigned e) const {
  NCPoly r = one();
  for (unsigned i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

NCPoly Algebra::parse(std::string_view text) const { return nf(parse_free(text)); }

NCPoly Algebra::parse_free(std::string_view text) const { return parse_expression(text, alphabet(), params()); }

int Algebra::grade(const Word& w) const {
  int g = 0;
  for (size_t i = 0; i < w.size(); ++i) g += pres_.grade(alphabet()->name(w[i]));
  return g;
}

std::vector<Word> Algebra::normal_words(size_t max_len) const { return system(max_len)->normal_words(max_len); }

NCPoly Algebra::embed(size_t factor, const NCPoly& f) const {
  if (!is_tensor()) throw AlgebraError(name() + " is not a tensor product");
  return tensor_embed(f, factor, alphabet());
}

NCPoly Algebra::tensor_of(const std::vector<NCPoly>& parts) const {
  if (parts.size() != factors_.size()) throw AlgebraError("wrong number of tensor factors for " + name());
  NCPoly r = one();
  for (size_t k = 0; k < parts.size(); ++k) r = r * embed(k, parts[k]);
  return r;
}

std::vector<SimpleTensor> Algebra::split(const NCPoly& f) const {
  if (!is_tensor()) throw AlgebraError(name() + " is not a tensor product");
  return split_tensor(f);
}

// ---------------------------------------------------------------------------
// GenMap

GenMap::GenMap(std::string name, AlgebraPtr source, AlgebraPtr target, const std::map<std::string, NCPoly>& images,
               Kind kind)
    : state_(std::make_shared<State>()) {
  state_->name = std::move(name);
  state_->source = std::move(source);
  state_->target = std::move(target);
  state_->kind = kind;
  const auto& sa = *state_->source->alphabet();
  for (const auto& [g, img] : images)
    if (!sa.find(g)) throw AlgebraError("map " + state_->name + ": '" + g + "' is not a generator of " + state_->source->name());
  for (Letter l = 0; l < sa.size(); ++l) {
    auto it = images.find(sa.name(l));
    if (it == images.end())
      throw AlgebraError("map " + state_->name + " leaves generator '" + sa.name(l) + "' unassigned");
    NCPoly img = it->second;
    if (img.alphabet() && !img.alphabet()->same_as(*state_->target->alphabet()))
      throw AlgebraError("map " + state_->name + ": image of '" + sa.name(l) + "' is not in " + state_->target->name());
    if (!img.alphabet()) img = NCPoly(state_->target->alphabet()) + img;
    state_->images.push_back(state_->target->nf(img));
  }
}

GenMap GenMap::identity(const AlgebraPtr& a) {
  std::map<std::string, NCPoly> images;
  for (const auto& g : a->presentation().generators) images.emplace(g, a->gen(g));
  return GenMap("id", a, a, images);
}

NCPoly GenMap::apply_word(const Word& w) const {
  State& s = *state_;
  {
    std::lock_guard lock(s.mutex);
    auto it = s.cache.find(w.raw());
    if (it != s.cache.end()) return it->second;
  }
  NCPoly r;
  if (w.empty()) {
    r = s.target->one();
  } else {
    NCPoly rest = apply_word(w.sub(0, w.size() - 1));
    const NCPoly& last = s.images.at(w[w.size() - 1]);
    r = s.kind == Kind::Homomorphism ? s.target->mul(rest, last) : s.target->mul(last, rest);
  }
  std::lock_guard lock(s.mutex);
  return s.cache.try_emplace(w.raw(), r).first->second;
}

NCPoly GenMap::operator()(const NCPoly& f) const {
  NCPoly r = state_->target->zero();
  for (const auto& [w, c] : f.terms()) r += apply_word(w) * c;
  return r;
}

GenMap GenMap::then(const GenMap& after) const {
  if (after.source()->alphabet() != target()->alphabet() && !after.source()->alphabet()->same_as(*target()->alphabet()))
    throw AlgebraError("cannot compose " + name() + " with " + after.name());
  std::map<std::string, NCPoly> images;
  const auto& sa = *source()->alphabet();
  for (Letter l = 0; l < sa.size(); ++l) images.emplace(sa.name(l), after(image(l)));
  Kind k = kind() == after.kind() ? Kind::Homomorphism : Kind::AntiHomomorphism;
  return GenMap(after.name() + "*" + name(), source(), after.target(), images, k);
}

Report respects_relations(const GenMap& m, size_t max_degree) {
  Report rep;
  rep.name = "respects_relations(" + m.name() + ")";
  for (const auto& r : m.source()->presentation().relations) {
    NCPoly img = m(r.difference());
    rep.record(img.is_zero(), "relation " + r.lhs.to_string() + " = " + r.rhs.to_string(),
               "image normalizes to " + img.to_string());
  }
  const auto& alpha = m.source()->alphabet();
  auto sys = m.source()->system(max_degree);
  for (const auto& rule : sys->rules()) {
    if (rule.provenance != Provenance::Derived || rule.lhs.size() > max_degree) continue;
    NCPoly img = m(rule.relation(alpha));
    rep.record(img.is_zero(), "derived rule " + rule.lhs.to_string(*alpha) + " -> " + rule.rhs.to_string(),
               "image normalizes to " + img.to_string());
  }
  return rep;
}

}  // namespace ncg
