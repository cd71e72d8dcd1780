#pragma once

// The cotangent and tangent calculus bimodules over the quantum plane, their
// realizations as colinear maps, and their left and right duals.

#include "ncgalois/galois.hpp"

#include <array>
#include <functional>

namespace ncg {

enum class Side { Left, Right };

/// A pair of values, one per basis element.
using Slots = std::array<NCPoly, 2>;

/// A free rank-2 bimodule over B, presented as the grade-1 part of a graded
/// algebra. The right-normal system writes elements as sum basis * coefficient,
/// the left-normal one as sum coefficient * basis.
class Calculus {
 public:
  /// Generators x, y, xi, eta with d(x) = xi, d(y) = eta.
  static Calculus cotangent(const Registry& reg);
  /// Generators x, y, Dx, Dy; no differential.
  static Calculus tangent(const Registry& reg);

  const std::string& name() const { return name_; }
  const AlgebraPtr& base() const { return B_; }
  const AlgebraPtr& algebra(Side s) const { return s == Side::Left ? left_ : right_; }
  const std::array<std::string, 2>& basis_names() const { return basis_; }
  bool has_differential() const { return differential_; }

  NCPoly basis(size_t i, Side s = Side::Right) const;
  /// A B element (or a grade-0 calculus element) inside the calculus.
  NCPoly lift(const NCPoly& b, Side s = Side::Right) const;

  /// Normal form of a grade-1 element, given over either calculus alphabet.
  /// Throws AlgebraError for terms of grade other than 1.
  NCPoly nf(const NCPoly& m, Side s) const;
  /// Coefficients in B: m = sum c_i basis_i (Left) or sum basis_i c_i (Right).
  Slots coefficients(const NCPoly& m, Side s) const;
  /// Inverse of coefficients.
  NCPoly combine(const Slots& c, Side s) const;

  /// d on B extended by the Leibniz rule from the words of `b` as written,
  /// in right normal form. Throws AlgebraError without a differential.
  NCPoly differential(const NCPoly& b) const;

  /// Relations of grade 1, as written, over the right-normal alphabet.
  std::vector<Relation> relations() const;

 private:
  static Calculus make(const Registry& reg, const std::string& name, std::array<std::string, 2> basis,
                       bool differential);

  std::string name_;
  AlgebraPtr B_, left_, right_;
  std::array<std::string, 2> basis_;
  bool differential_ = false;
};

/// A way to evaluate grade-1 calculus elements: images of the two basis
/// elements and the two B-actions on pairs of values.
struct Realization {
  std::string name;
  std::array<std::string, 2> slot_names;
  std::array<Slots, 2> basis;
  std::function<Slots(const NCPoly& b, const Slots& v)> left;
  std::function<Slots(const Slots& v, const NCPoly& b)> right;
};

/// Image of a grade-1 element, term by term: the basis letter is replaced by
/// its image and the B letters around it act from their side. `m` may be
/// any free polynomial over a calculus alphabet.
Slots realize(const Realization& r, const Calculus& calc, const NCPoly& m);

/// Colinear maps into the frame bundle with slot-wise products.
Realization colinear_realization(const FrameBundle& fb, const std::pair<ColinearMap, ColinearMap>& basis,
                                 std::string name);

/// A left (^*M) or right (M^*) B-linear functional on the calculus, stored by
/// its values on the two basis elements. A left dual X equals
/// basis*_0 X(basis_0) + basis*_1 X(basis_1); a right dual X equals
/// X(basis_0) basis^R_0 + X(basis_1) basis^R_1.
struct DualElement {
  Side side = Side::Left;
  Slots values;

  friend bool operator==(const DualElement& a, const DualElement& b) {
    return a.side == b.side && a.values == b.values;
  }
};

DualElement dual_basis(const Calculus& calc, Side side, size_t i);
/// X(m) for a grade-1 element m.
NCPoly evaluate(const Calculus& calc, const DualElement& X, const NCPoly& m);
/// b X (acting = Left) or X b (acting = Right).
DualElement dual_action(const Calculus& calc, const NCPoly& b, const DualElement& X, Side acting);
/// Dual elements of one side with the bimodule structure above.
Realization dual_realization(const Calculus& calc, Side side, const std::array<DualElement, 2>& basis,
                             std::string name);

/// The calculus relations hold under the cotangent left coaction.
Report check_left_covariance(const Registry& reg, size_t max_degree, unsigned jobs = 1);

/// Psi(sigma_x) = (a, b), Psi(sigma_y) = (c, d); every cotangent relation
/// holds slot-wise for these colinear maps; left freeness up to max_degree.
Report check_cotangent_iso(const FrameBundle& fb, const Calculus& cotangent, size_t max_degree);

/// The tangent relations hold slot-wise for the given colinear basis, which
/// must be colinear for `tilde`; right freeness up to max_degree.
Report check_tangent_relations(const FrameBundle& fb, const Calculus& tangent,
                               const std::pair<ColinearMap, ColinearMap>& basis, const Corepresentation2& tilde,
                               size_t max_degree);

/// Left dual basis of the cotangent calculus against the tangent relations,
/// the right dual basis against its own relations, and the map
/// xi* -> xi^R, eta* -> (pq)^-1 eta^R intertwining both actions.
Report check_duality(const Calculus& cotangent, const Calculus& tangent, size_t max_degree);

/// Rank certificate: u basis_i (Left) or basis_i u (Right) for B-words u of
/// length <= max_degree are linearly independent.
Report check_freeness(const Realization& r, const AlgebraPtr& base, Side side, size_t max_degree,
                      const std::string& label);

}  // namespace ncg
