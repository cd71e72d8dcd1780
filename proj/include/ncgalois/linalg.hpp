#pragma once

// Rank of finite families of polynomial tuples, used for freeness and
// injectivity certificates.

#include "ncgalois/ncpoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace ncg {

/// Coordinates of a tuple of polynomials: key (slot, word) -> coefficient.
using SparseVector = std::map<std::pair<size_t, std::string>, Scalar>;

SparseVector flatten(const std::vector<NCPoly>& slots);

/// Rank over the coefficient field. Coefficients depending on p, q are
/// evaluated at a few fixed rational points and the largest rank is
/// returned; this is a lower bound for the generic rank, and equal to it
/// whenever it equals the number of vectors.
size_t rank(const std::vector<SparseVector>& vectors);

inline bool linearly_independent(const std::vector<SparseVector>& vectors) {
  return rank(vectors) == vectors.size();
}

}  // namespace ncg
