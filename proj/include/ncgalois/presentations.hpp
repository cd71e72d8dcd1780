#pragma once

// Finitely presented algebras: the text DSL, validated presentations, the
// algebra handle that owns the reduction machinery, the builtin registry and
// generator-defined (anti-)homomorphisms.

#include "ncgalois/report.hpp"
#include "ncgalois/rewrite.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

namespace ncg {

/// Values of the deformation parameters: either the field generators p, q or
/// a rational point substituted for them.
struct Params {
  Scalar p = Scalar::p();
  Scalar q = Scalar::q();
  bool numeric = false;
  Rational p0, q0;  // the point, when numeric

  static Params symbolic() { return Params(); }
  /// Throws AlgebraError for a degenerate point (see is_degenerate).
  static Params at(const Rational& p0, const Rational& q0);
  /// The index-th admissible random point drawn from `seed`.
  static Params random(uint64_t seed, unsigned index);
  /// True if p0^i q0^j = 1 for some small (i, j) != (0, 0); covers pq = 1,
  /// p = q, p = -q and p, q = +-1.
  static bool is_degenerate(const Rational& p0, const Rational& q0);

  Params swapped() const;
  std::string describe() const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int col);
  int line() const { return line_; }
  int column() const { return col_; }
  const std::string& message() const { return msg_; }

 private:
  std::string msg_;
  int line_;
  int col_;
};

struct Relation {
  NCPoly lhs;
  NCPoly rhs;
  NCPoly difference() const { return lhs - rhs; }
};

struct Presentation {
  std::string name;
  std::vector<std::string> generators;  // declaration order
  std::map<std::string, int> grades;    // generators not listed have grade 0
  std::vector<std::string> precedence;  // highest first
  std::vector<Relation> relations;      // free-algebra polynomials, as written
  Params params;

  AlphabetPtr alphabet;  // letters in precedence order

  int grade(const std::string& gen) const;
  /// Canonical DSL text; parsing it back yields a structurally equal value.
  std::string to_text() const;
};

/// Same name, generators, grades, order and relations (as polynomials).
bool structurally_equal(const Presentation& a, const Presentation& b);

struct MorphismDecl {
  std::string name, source, target;
  bool anti = false;
  std::vector<std::pair<std::string, std::string>> images;  // generator, expression text
  std::vector<std::pair<int, int>> image_locations;
  int line = 0, col = 0;
};

struct ActionDecl {
  std::string name, hopf, module;
  int line = 0, col = 0;
  struct Entry {
    std::string h, b, expr;
    int line = 0, col = 0;
  };
  std::vector<Entry> entries;
};

struct Document {
  std::vector<Presentation> algebras;
  std::vector<MorphismDecl> morphisms;
  std::vector<ActionDecl> actions;
};

/// Parses a whole DSL file with scalars bound to `params`.
Document parse_document(std::string_view text, const Params& params = Params::symbolic());
/// Parses text holding exactly one algebra block.
Presentation parse_presentation(std::string_view text, const Params& params = Params::symbolic());
/// Parses one expression over `alpha`; p and q denote params.p, params.q
/// unless they are generators. `D` abbreviates a*d - q*b*c when the alphabet
/// has a, b, c, d and Dinv but no generator D.
NCPoly parse_expression(std::string_view text, const AlphabetPtr& alpha, const Params& params);
/// As parse_expression, reporting locations relative to (line, col).
NCPoly parse_expression_at(std::string_view text, const AlphabetPtr& alpha, const Params& params, int line,
                           int col);
/// Parses "lhs = rhs, lhs = rhs, ..." over `alpha`.
std::vector<Relation> parse_relation_list(std::string_view text, const AlphabetPtr& alpha, const Params& params);

/// Maps every letter of f to the letter of `target` named rename(name).
NCPoly relabel(const NCPoly& f, const AlphabetPtr& target,
               const std::function<std::string(const std::string&)>& rename = nullptr);

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A presented algebra together with its reduction machinery. Normal forms
/// are certified up to a word length; asking for longer words extends the
/// bounded completion first, so results never depend on a setup bound.
class Algebra {
 public:
  static constexpr size_t kSetupDegree = 6;

  /// Plain quotient of the free algebra by the presentation.
  static AlgebraPtr from_presentation(Presentation pres);
  /// Tensor product: factor rules retagged plus cross commutation rules.
  static AlgebraPtr tensor(const std::string& name, std::vector<AlgebraPtr> factors);
  /// The ground field as an algebra with no generators.
  static AlgebraPtr ground(const Params& params);

  const std::string& name() const { return pres_.name; }
  const Presentation& presentation() const { return pres_; }
  const AlphabetPtr& alphabet() const { return pres_.alphabet; }
  const Params& params() const { return pres_.params; }

  bool is_tensor() const { return !factors_.empty(); }
  const std::vector<AlgebraPtr>& factors() const { return factors_; }
  const AlgebraPtr& factor(size_t k) const { return factors_.at(k); }

  /// The system, confluent on all words of length <= `degree`.
  std::shared_ptr<const RewriteSystem> system(size_t degree = 0) const;
  size_t certified_degree() const;
  /// Everything the completion added beyond the declared relations.
  std::vector<NCPoly> derived_relations() const;

  NCPoly zero() const { return NCPoly(alphabet()); }
  NCPoly one() const { return NCPoly(alphabet(), Scalar(1)); }
  NCPoly scalar(const Scalar& c) const { return NCPoly(alphabet(), c); }
  NCPoly gen(std::string_view name) const { return NCPoly::gen(alphabet(), name); }
  NCPoly word(const Word& w) const { return NCPoly(alphabet(), w); }

  NCPoly nf(const NCPoly& f) const;
  NCPoly nf(const Word& w) const;
  NCPoly mul(const NCPoly& a, const NCPoly& b) const;
  NCPoly pow(const NCPoly& a, unsigned e) const;
  /// Parses and normalizes an expression.
  NCPoly parse(std::string_view text) const;
  /// Parses without normalizing.
  NCPoly parse_free(std::string_view text) const;

  int grade(const Word& w) const;
  std::vector<Word> normal_words(size_t max_len) const;

  /// Tensor algebras only: the image of a factor element.
  NCPoly embed(size_t factor, const NCPoly& f) const;
  /// Tensor algebras only: f_1 (x) ... (x) f_k for factor normal forms.
  NCPoly tensor_of(const std::vector<NCPoly>& parts) const;
  /// Tensor algebras only: normal form split into simple tensors.
  std::vector<SimpleTensor> split(const NCPoly& f) const;

 private:
  Algebra() = default;
  RewriteSystem build(size_t degree, std::vector<NCPoly>* derived) const;

  Presentation pres_;
  std::vector<AlgebraPtr> factors_;

  mutable std::mutex mutex_;
  mutable std::shared_ptr<const RewriteSystem> system_;
  mutable size_t certified_ = 0;
  mutable std::vector<NCPoly> derived_;
};

/// A map determined by generator images, extended multiplicatively
/// (homomorphism) or anti-multiplicatively. Well-definedness is not assumed.
class GenMap {
 public:
  enum class Kind { Homomorphism, AntiHomomorphism };

  GenMap() = default;
  /// `images` must assign every source generator; they are normalized.
  GenMap(std::string name, AlgebraPtr source, AlgebraPtr target,
         const std::map<std::string, NCPoly>& images, Kind kind = Kind::Homomorphism);
  static GenMap identity(const AlgebraPtr& a);

  const std::string& name() const { return state_->name; }
  const AlgebraPtr& source() const { return state_->source; }
  const AlgebraPtr& target() const { return state_->target; }
  Kind kind() const { return state_->kind; }
  const NCPoly& image(Letter l) const { return state_->images.at(l); }

  /// Image of an arbitrary source polynomial, in target normal form.
  NCPoly operator()(const NCPoly& f) const;
  NCPoly apply_word(const Word& w) const;

  /// (after o this); kinds compose (anti o anti = homomorphism).
  GenMap then(const GenMap& after) const;

 private:
  struct State {
    std::string name;
    AlgebraPtr source, target;
    std::vector<NCPoly> images;
    Kind kind = Kind::Homomorphism;
    std::mutex mutex;
    std::map<std::string, NCPoly> cache;
  };
  std::shared_ptr<State> state_;
};

/// Checks that every declared relation of the source maps to zero, and also
/// every completed rule whose leading word has length <= max_degree.
Report respects_relations(const GenMap& m, size_t max_degree);

/// Builtin presentations and user definitions, keyed by name. Each distinct
/// (name, swap) pair is built once on first use.
class Registry {
 public:
  explicit Registry(Params params = Params::symbolic());

  const Params& params() const { return params_; }
  static const std::vector<std::string>& builtin_names();
  bool has(const std::string& name) const;

  /// Swapping exchanges p and q in the GL factor relations and structure
  /// maps only.
  AlgebraPtr get(const std::string& name, bool swap = false) const;
  Presentation builtin(const std::string& name, bool swap = false) const;

  /// Registers the algebras and morphisms of a DSL document.
  void load(std::string_view text);
  void add(Presentation pres);
  const GenMap& morphism(const std::string& name) const;
  std::vector<std::string> morphism_names() const;
  const std::vector<ActionDecl>& actions() const { return actions_; }

 private:
  AlgebraPtr make(const std::string& name, bool swap) const;

  Params params_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::string, bool>, AlgebraPtr> cache_;
  std::map<std::string, AlgebraPtr> user_;
  std::map<std::string, GenMap> morphisms_;
  std::vector<ActionDecl> actions_;
};

}  // namespace ncg
