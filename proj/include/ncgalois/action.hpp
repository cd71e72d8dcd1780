#pragma once

// Left (cocycle) actions of a Hopf algebra on an algebra, crossed products
// and the passage from a cleaving map back to an action.

#include "ncgalois/hopf.hpp"

#include <functional>
#include <memory>
#include <utility>

namespace ncg {

/// A left action given on generators and extended by
///   g |> (u_1 ... u_m) = sum (g_(1) |> u_1) ... (g_(m) |> u_m)
///   (g_1 ... g_k) |> b = g_1 |> (g_2 |> ( ... |> b)).
class LeftAction {
 public:
  /// (H generator, B generator) -> element of B.
  using Table = std::map<std::pair<std::string, std::string>, NCPoly>;

  /// Throws AlgebraError if an entry is missing or names an unknown generator.
  LeftAction(std::string name, HopfPtr hopf, AlgebraPtr module, const Table& table);

  /// GL_{q,p}(2) on the quantum plane; with `swap` the same table over the
  /// Hopf algebra with p and q exchanged.
  static LeftAction frame(const Registry& reg, bool swap = false);
  /// h |> b = eps(h) b.
  static LeftAction trivial(HopfPtr hopf, AlgebraPtr module);
  /// An `action` block of a loaded document; the Hopf algebra must be gl2.
  static LeftAction from_decl(const Registry& reg, const ActionDecl& decl);

  const std::string& name() const { return state_->name; }
  const HopfPtr& hopf() const { return state_->hopf; }
  const AlgebraPtr& module() const { return state_->module; }
  const NCPoly& entry(Letter h, Letter b) const { return state_->table.at(h).at(b); }
  Table table() const;

  /// h |> b for arbitrary words (neither needs to be normal).
  NCPoly apply_word(const Word& h, const Word& b) const;
  /// Bilinear extension; h is normalized in H first.
  NCPoly apply(const NCPoly& h, const NCPoly& b) const;
  /// As apply, but h is used as written (no normalization in H).
  NCPoly apply_free(const NCPoly& h, const NCPoly& b) const;

 private:
  struct Expansion {
    Scalar coeff;
    std::vector<Word> factors;
  };
  const std::vector<Expansion>& iterated_coproduct(Letter g, size_t m) const;
  NCPoly generator_on_word(Letter g, const Word& b) const;

  struct State {
    std::string name;
    HopfPtr hopf;
    AlgebraPtr module;
    std::vector<std::vector<NCPoly>> table;
    std::mutex mutex;
    std::map<std::pair<Letter, size_t>, std::vector<Expansion>> coproducts;
    std::map<std::string, NCPoly> cache;
  };
  std::shared_ptr<State> state_;
};

/// Unit laws, the product rule, (hh') |> b = h |> (h' |> b) on words up to
/// max_degree, and compatibility with the relations of both algebras.
Report check_action_axioms(const LeftAction& act, size_t max_degree, unsigned jobs = 1);

/// A B-valued 2-cocycle on H, evaluated on normal words of H.
struct Cocycle {
  using Values = std::function<NCPoly(const Word&, const Word&)>;

  std::string name;
  bool trivial = false;
  Values sigma;
  Values inverse;  // candidate convolution inverse

  /// sigma(h, h') = eps(h) eps(h') 1; its own inverse.
  static Cocycle trivial_for(const LeftAction& act);

  NCPoly operator()(const NCPoly& h, const NCPoly& h2, const LeftAction& act) const;
};

/// The remaining cocycle-action conditions. For a trivial cocycle the
/// normalization, cocycle and invertibility conditions are identities and the
/// twisted module condition is the plain one, which is delegated to
/// check_action_axioms; `general` forces the full formulas anyway.
Report check_cocycle_axioms(const LeftAction& act, const Cocycle& sigma, size_t max_degree, unsigned jobs = 1,
                            bool general = false);

/// b (x) h with b in B and h in H.
struct CrossedTerm {
  NCPoly b;
  NCPoly h;
};

/// (b (x) h)(b' (x) h') = sum b (h_1 |> b') sigma(h_2, h'_1) (x) h_3 h'_2, as
/// summands with distinct normal H words, in descending order of H word.
std::vector<CrossedTerm> crossed_multiply(const CrossedTerm& u, const CrossedTerm& v, const LeftAction& act,
                                          const Cocycle& sigma);

/// Sum of b (x) h in a two-factor tensor algebra B (x) H.
NCPoly crossed_to_tensor(const std::vector<CrossedTerm>& terms, const AlgebraPtr& BH);

/// Sum of b h in an algebra containing the generators of both B and H under
/// their own names, normalized there.
NCPoly crossed_to_algebra(const std::vector<CrossedTerm>& terms, const AlgebraPtr& P);

/// Presentation on the generators of B and H (H first in the order) with the
/// relations of both and g u = sum (g_1 |> u) g_2 for generators g of H and u
/// of B.
Presentation build_smash_presentation(const LeftAction& act, const std::string& name = "smash");

/// Every relation of each algebra vanishes in the other (generators matched
/// by name) and normal forms agree on `samples` random polynomials whose
/// words have length <= max_len.
Report check_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b, size_t samples, size_t max_len, uint64_t seed);

struct Recovery {
  LeftAction action;
  Report report;
};

/// Reads h |> b = sum j(h_1) b j^-1(h_2) off a cleaving map j: H -> P whose
/// target contains the generators of B by name. Throws AlgebraError when a
/// value is not H-free. The report checks the recovered table against
/// `reference` (when given), the formula against the extended action on words
/// up to max_degree, and that the associated cocycle of j is trivial on
/// generators.
Recovery recover_action(const ConvolutionMap& j, const ConvolutionMap& j_inverse, const AlgebraPtr& module,
                        size_t max_degree, const LeftAction* reference = nullptr, unsigned jobs = 1);

}  // namespace ncg
