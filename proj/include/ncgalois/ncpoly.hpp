#pragma once

#include "ncgalois/scalar.hpp"

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ncg {

/// Index of a generator within its alphabet. Index 0 has the highest
/// precedence in the degree-lexicographic order.
using Letter = unsigned char;

/// Ordered generator set. Tensor alphabets are disjoint unions of tagged
/// copies of factor alphabets: the letters of factor k are named
/// "<name>_<k>" and later factors take higher precedence, so normal words of
/// a tensor product read factor 1 first.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names_by_precedence);

  static std::shared_ptr<const Alphabet> tensor(
      const std::vector<std::shared_ptr<const Alphabet>>& factors);

  size_t size() const { return names_.size(); }
  const std::string& name(Letter l) const { return names_.at(l); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Letter> find(std::string_view name) const;

  bool is_tensor() const { return !factors_.empty(); }
  size_t factor_count() const { return factors_.size(); }
  const std::shared_ptr<const Alphabet>& factor(size_t k) const { return factors_.at(k); }
  /// Factor index (0-based) of a tensor letter.
  int factor_of(Letter l) const { return origin_.at(l).first; }
  Letter local_letter(Letter l) const { return origin_.at(l).second; }
  /// Tensor letter for local letter `l` of factor k.
  Letter tensor_letter(size_t k, Letter l) const { return embed_.at(k).at(l); }

  bool same_as(const Alphabet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::shared_ptr<const Alphabet>> factors_;
  std::vector<std::pair<int, Letter>> origin_;
  std::vector<std::vector<Letter>> embed_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// A monomial of the free algebra: a sequence of letters, empty = 1.
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> ls);

  size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](size_t i) const { return static_cast<Letter>(letters_[i]); }
  const std::string& raw() const { return letters_; }

  Word sub(size_t pos, size_t len = std::string::npos) const { return Word(letters_.substr(pos, len)); }
  void push_back(Letter l) { letters_.push_back(static_cast<char>(l)); }
  friend Word operator+(const Word& a, const Word& b) { return Word(a.letters_ + b.letters_); }
  bool contains_at(const Word& factor, size_t pos) const {
    return letters_.compare(pos, factor.size(), factor.letters_) == 0;
  }
  std::optional<size_t> find(const Word& factor) const;

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  friend bool operator!=(const Word& a, const Word& b) { return a.letters_ != b.letters_; }

  std::string to_string(const Alphabet& alpha) const;

 private:
  std::string letters_;
};

enum class Cmp { LT, EQ, GT };

/// Degree-lexicographic comparison: shorter words are smaller, equal
/// lengths compare letter-wise by precedence.
Cmp deglex_compare(const Word& u, const Word& v);

/// Map ordering that puts the larger word first.
struct DegLexGreater {
  bool operator()(const Word& u, const Word& v) const {
    if (u.size() != v.size()) return u.size() > v.size();
    return u.raw() < v.raw();  // smaller letter index = higher precedence
  }
};

/// Comparison against an explicit precedence (used when validating a
/// user order; the internal order is always index-based).
struct MonomialOrder {
  AlphabetPtr alphabet;
  Cmp compare(const Word& u, const Word& v) const;
};

class NCPoly {
 public:
  using TermMap = std::map<Word, Scalar, DegLexGreater>;

  NCPoly() = default;
  explicit NCPoly(AlphabetPtr alpha) : alpha_(std::move(alpha)) {}
  NCPoly(AlphabetPtr alpha, const Scalar& c);
  NCPoly(AlphabetPtr alpha, const Word& w, const Scalar& c = Scalar(1));

  static NCPoly letter(AlphabetPtr alpha, Letter l) { return NCPoly(std::move(alpha), Word{l}); }
  /// The generator called `name`; throws AlgebraError if it does not exist.
  static NCPoly gen(const AlphabetPtr& alpha, std::string_view name);

  const AlphabetPtr& alphabet() const { return alpha_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const Word& leading_word() const { return terms_.begin()->first; }
  const Scalar& leading_coeff() const { return terms_.begin()->second; }
  Scalar coeff(const Word& w) const;
  size_t degree() const { return terms_.empty() ? 0 : terms_.begin()->first.size(); }
  /// The constant term when the polynomial is a scalar multiple of 1.
  std::optional<Scalar> as_scalar() const;

  void add_term(const Word& w, const Scalar& c);
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Scalar& c);
  NCPoly operator-() const;
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(NCPoly a, const Scalar& c) { return a *= c; }
  friend NCPoly operator*(const Scalar& c, NCPoly a) { return a *= c; }

  friend bool operator==(const NCPoly& a, const NCPoly& b);
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

  /// Canonical text: terms in descending order, coefficient first, letters
  /// joined by '*'.
  std::string to_string() const;

 private:
  void check_same(const NCPoly& o) const;
  AlphabetPtr alpha_;
  TermMap terms_;
};

/// Re-tags the letters of `f` into factor `factor` (0-based) of the tensor
/// alphabet `target`.
NCPoly tensor_embed(const NCPoly& f, size_t factor, const AlphabetPtr& target);

/// One summand c * w_1 (x) ... (x) w_k of a tensor element in normal form.
struct SimpleTensor {
  Scalar coeff;
  std::vector<Word> factors;
};

/// Splits a tensor-alphabet polynomial whose words are block-ordered
/// (factor 1 letters, then factor 2, ...) into simple tensors over the
/// factor alphabets. Throws AlgebraError for words that are not block-ordered.
std::vector<SimpleTensor> split_tensor(const NCPoly& f);

std::string format_term(const Scalar& c, const std::string& word_text, bool first);

}  // namespace ncg
