#pragma once

// Helpers shared by the unit tests: random elements and evaluation of
// polynomials under characters (algebra maps to the ground field).

#include "ncgalois/presentations.hpp"

#include <map>
#include <random>
#include <string>

namespace ncg::test {

inline Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-4, 4), ex(-2, 2);
  Scalar s;
  for (int k = 0; k < 2; ++k) s += Scalar::laurent(coef(rng), ex(rng), ex(rng));
  return s;
}

/// A random combination of up to `terms` normal words of length <= max_len.
inline NCPoly random_element(const Algebra& A, size_t max_len, std::mt19937_64& rng, size_t terms = 3) {
  auto words = A.normal_words(max_len);
  std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
  NCPoly f = A.zero();
  for (size_t i = 0; i < terms; ++i) f += A.word(words[pick(rng)]) * random_scalar(rng);
  return f;
}

/// chi(f) for the letter values `chi`, with coefficients evaluated at (p0, q0).
inline Rational evaluate_character(const NCPoly& f, const std::map<std::string, Rational>& chi,
                                   const Rational& p0, const Rational& q0) {
  Rational total = 0;
  for (const auto& [w, c] : f.terms()) {
    Rational v = *specialize(c, p0, q0);
    for (size_t i = 0; i < w.size(); ++i) v *= chi.at(f.alphabet()->name(w[i]));
    total += v;
  }
  return total;
}

}  // namespace ncg::test
