#pragma once

#include "ncgalois/presentations.hpp"

#include <functional>
#include <memory>

namespace ncg {

/// One summand c * left (x) right of a coproduct, both factors normal words.
struct SweedlerTerm {
  Scalar coeff;
  Word left;
  Word right;
};

class HopfStructure {
 public:
  /// `coproduct` maps into `tensor_square` (a two-factor tensor algebra of
  /// the source), `counit` into the ground algebra and `antipode` is an
  /// anti-homomorphism of the algebra.
  HopfStructure(GenMap coproduct, GenMap counit, GenMap antipode, AlgebraPtr tensor_cube);

  /// A(GL_{q,p}(2)); with `swap` the same construction for GL_{p,q}(2).
  static std::shared_ptr<const HopfStructure> gl2(const Registry& reg, bool swap = false);

  const AlgebraPtr& algebra() const { return coproduct_.source(); }
  const AlgebraPtr& tensor_square() const { return coproduct_.target(); }
  const AlgebraPtr& tensor_cube() const { return cube_; }
  const GenMap& coproduct_map() const { return coproduct_; }
  const GenMap& counit_map() const { return counit_; }
  const GenMap& antipode_map() const { return antipode_; }

  NCPoly coproduct(const NCPoly& h) const { return coproduct_(h); }
  Scalar counit(const NCPoly& h) const;
  Scalar counit(const Word& w) const;
  NCPoly antipode(const NCPoly& h) const { return antipode_(h); }

  std::vector<SweedlerTerm> sweedler(const Word& w) const;
  std::vector<SweedlerTerm> sweedler(const NCPoly& h) const;

 private:
  GenMap coproduct_, counit_, antipode_;
  AlgebraPtr cube_;
};

using HopfPtr = std::shared_ptr<const HopfStructure>;

/// Coassociativity, both counit laws and both antipode laws on `elements`.
Report check_hopf_axioms_on(const HopfStructure& h, const std::vector<NCPoly>& elements, unsigned jobs = 1);
/// As above on every normal word of length <= max_degree.
Report check_hopf_axioms(const HopfStructure& h, size_t max_degree, unsigned jobs = 1);
/// Well-definedness of the coproduct, counit and antipode.
Report check_structure_maps(const HopfStructure& h, size_t max_degree);
/// eps o S = eps and Delta o S = (S (x) S) o flip o Delta on generators.
Report check_antipode_coalgebra(const HopfStructure& h);

/// A linear map H -> target evaluated lazily on normal words of H and cached.
class ConvolutionMap {
 public:
  using Rule = std::function<NCPoly(const Word&)>;

  ConvolutionMap(std::string name, HopfPtr hopf, AlgebraPtr target, Rule rule);

  /// h |-> eps(h) 1, the unit of the convolution algebra.
  static ConvolutionMap unit(HopfPtr hopf, AlgebraPtr target);
  /// The algebra map (or anti-map) given by `m`, whose source must be H.
  static ConvolutionMap from_genmap(HopfPtr hopf, const GenMap& m);

  const std::string& name() const { return state_->name; }
  const HopfPtr& hopf() const { return state_->hopf; }
  const AlgebraPtr& target() const { return state_->target; }

  /// Value on a normal word of H.
  NCPoly on_word(const Word& w) const;
  /// Value on any element of H (normalized first).
  NCPoly operator()(const NCPoly& h) const;

  /// (f * g)(h) = sum f(h_1) g(h_2).
  ConvolutionMap convolve(const ConvolutionMap& g) const;

 private:
  struct State {
    std::string name;
    HopfPtr hopf;
    AlgebraPtr target;
    Rule rule;
    std::mutex mutex;
    std::map<std::string, NCPoly> cache;
  };
  std::shared_ptr<State> state_;
};

/// f * g = g * f = unit on all normal words of length <= max_degree.
Report check_convolution_inverse(const ConvolutionMap& f, const ConvolutionMap& g, size_t max_degree,
                                 unsigned jobs = 1);

/// Two maps agree on all normal words of length <= max_degree.
Report check_maps_agree(const ConvolutionMap& f, const ConvolutionMap& g, size_t max_degree, unsigned jobs = 1);

}  // namespace ncg
