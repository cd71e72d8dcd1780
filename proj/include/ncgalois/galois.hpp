#pragma once

// Comodule algebras, the frame bundle as a cleft Hopf-Galois extension,
// corepresentations and bimodules of colinear maps.

#include "ncgalois/action.hpp"
#include "ncgalois/linalg.hpp"

#include <array>

namespace ncg {

/// A coaction given on generators: right (into M (x) H) or left (into H (x) M).
class Coaction {
 public:
  enum class Side { Left, Right };

  /// `triple` is M (x) H (x) H for a right coaction, H (x) H (x) M for a left one.
  Coaction(GenMap map, HopfPtr hopf, Side side, AlgebraPtr triple);

  const GenMap& map() const { return map_; }
  const HopfPtr& hopf() const { return hopf_; }
  Side side() const { return side_; }
  const AlgebraPtr& comodule() const { return map_.source(); }
  const AlgebraPtr& target() const { return map_.target(); }
  const AlgebraPtr& triple() const { return triple_; }

  NCPoly operator()(const NCPoly& m) const { return map_(m); }

 private:
  GenMap map_;
  HopfPtr hopf_;
  Side side_;
  AlgebraPtr triple_;
};

/// Well-definedness, coassociativity and the counit law on normal words of
/// the comodule up to max_degree.
Report check_coaction(const Coaction& c, size_t max_degree, unsigned jobs = 1);

/// delta_L(X) = T (x) X on the quantum plane, into gl2 (x) plane.
Coaction plane_left_coaction(const Registry& reg);
/// delta_R(X^t) = X^t (x) T on the quantum plane, into plane (x) GL_{p,q}(2).
Coaction plane_right_coaction(const Registry& reg);
/// The left coaction of gl2 on the cotangent calculus: delta_L on x, y and
/// (xi, eta) |-> T (x) (xi, eta).
Coaction cotangent_left_coaction(const Registry& reg);

/// 2 x 2 matrix coefficients of a right corepresentation on the basis
/// {e, f}: rho(basis_i) = sum_j basis_j (x) m[j][i].
struct Corepresentation2 {
  std::string name;
  HopfPtr hopf;
  std::array<std::array<NCPoly, 2>, 2> m;

  /// m = T.
  static Corepresentation2 standard(HopfPtr hopf);
  /// m_ij = S(m_ji): rho(e) = e (x) S(a) + f (x) S(b).
  static Corepresentation2 antipode_transpose(HopfPtr hopf);
  /// m_ij = S(T_ij), the reading without transposition (not a comatrix).
  static Corepresentation2 antipode_entrywise(HopfPtr hopf);
};

/// Delta(m_ij) = sum_k m_ik (x) m_kj and eps(m_ij) = delta_ij.
Report check_comatrix(const Corepresentation2& c);

/// A linear map F -> P by its values on e and f.
struct ColinearMap {
  NCPoly e, f;
  const NCPoly& operator[](size_t i) const { return i == 0 ? e : f; }
  friend bool operator==(const ColinearMap& a, const ColinearMap& b) { return a.e == b.e && a.f == b.f; }
  friend bool operator!=(const ColinearMap& a, const ColinearMap& b) { return !(a == b); }
};

/// The smash product P = B # H with its right coaction id (x) Delta and the
/// cleaving map j = 1 (x) id, j^-1 = 1 (x) S.
class FrameBundle {
 public:
  /// With `swap` every Hopf-dependent ingredient uses GL_{p,q}(2).
  static FrameBundle build(const Registry& reg, bool swap = false);

  const HopfPtr& hopf() const { return hopf_; }
  const AlgebraPtr& base() const { return B_; }
  const AlgebraPtr& total() const { return P_; }
  const AlgebraPtr& total_tensor_hopf() const { return PH_; }
  const Coaction& coaction() const { return *delta_R_; }
  const ConvolutionMap& j() const { return *j_; }
  const ConvolutionMap& j_inverse() const { return *j_inverse_; }
  /// B -> P and H -> P by generator names.
  const GenMap& embed_base() const { return embed_B_; }
  const GenMap& embed_hopf() const { return embed_H_; }

  /// Delta_R(e) = e (x) 1.
  bool is_coinvariant(const NCPoly& e) const;
  /// Every x,y-word is coinvariant and the coinvariants among normal words
  /// of length <= max_degree span exactly the x,y-words.
  Report check_coinvariants(size_t max_degree, unsigned jobs = 1) const;

  /// beta(f (x) f') = sum f f'_(0) (x) f'_(1) in P (x) H.
  NCPoly canonical_map(const NCPoly& f, const NCPoly& f2) const;
  /// beta(sum f j^-1(h_1) (x) j(h_2)) = f (x) h for B-words f and H-words h.
  Report check_galois_onesided(size_t max_degree, unsigned jobs = 1) const;
  /// Same composite for an arbitrary candidate cleaving map.
  Report check_galois_onesided(const ConvolutionMap& j, const ConvolutionMap& j_inverse, size_t max_degree,
                               unsigned jobs = 1) const;

  /// Delta_R o j = (j (x) id) o Delta on normal words, and j^-1 is a
  /// convolution inverse.
  Report check_cleaving(const ConvolutionMap& j, const ConvolutionMap& j_inverse, size_t max_degree,
                        unsigned jobs = 1) const;

  /// Delta_R(l(basis_i)) = sum_j l(basis_j) (x) m_ji.
  bool is_colinear(const ColinearMap& l, const Corepresentation2& c) const;
  Report colinearity_report(const ColinearMap& l, const Corepresentation2& c, const std::string& label) const;

  /// Psi(u)(basis_i) = sum_j u(basis_j) j(m_ji) for u = (u(e), u(f)) in B^2.
  ColinearMap psi(const std::pair<NCPoly, NCPoly>& u, const Corepresentation2& c) const;
  /// Psi^-1(l)(basis_i) = sum_j l(basis_j) j^-1(m_ji), read back in B.
  /// Throws AlgebraError if a value is not H-free.
  std::pair<NCPoly, NCPoly> psi_inverse(const ColinearMap& l, const Corepresentation2& c) const;
  /// (Psi(sigma_x), Psi(sigma_y)) for the given corepresentation.
  std::pair<ColinearMap, ColinearMap> psi_basis(const Corepresentation2& c) const;

  /// Slot-wise products in P; b may be given over B or P.
  ColinearMap left_multiply(const NCPoly& b, const ColinearMap& l) const;
  ColinearMap right_multiply(const ColinearMap& l, const NCPoly& b) const;

  /// A B element viewed in P.
  NCPoly lift(const NCPoly& b) const;

 private:
  HopfPtr hopf_;
  AlgebraPtr B_, P_, PH_;
  GenMap embed_B_, embed_H_;
  std::shared_ptr<Coaction> delta_R_;
  std::shared_ptr<ConvolutionMap> j_, j_inverse_;
};

/// Psi(sigma_x), Psi(sigma_y) under the tilde corepresentation.
std::pair<ColinearMap, ColinearMap> tangent_basis(const FrameBundle& fb, const Corepresentation2& tilde);

}  // namespace ncg
