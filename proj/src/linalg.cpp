#include "ncgalois/linalg.hpp"

#include <algorithm>

namespace ncg {

SparseVector flatten(const std::vector<NCPoly>& slots) {
  SparseVector v;
  for (size_t i = 0; i < slots.size(); ++i)
    for (const auto& [w, c] : slots[i].terms()) v[{i, w.raw()}] = c;
  return v;
}

namespace {

using Row = std::vector<Rational>;

size_t rank_of(std::vector<Row> rows) {
  size_t r = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace

size_t rank(const std::vector<SparseVector>& vectors) {
  std::map<std::pair<size_t, std::string>, size_t> index;
  bool symbolic = false;
  for (const auto& v : vectors)
    for (const auto& [k, c] : v) {
      index.try_emplace(k, index.size());
      if (!c.is_constant()) symbolic = true;
    }
  if (index.empty()) return 0;

  static const std::vector<std::pair<Rational, Rational>> points = {
      {Rational(3, 2), Rational(7, 5)}, {Rational(-5, 3), Rational(11, 7)}, {Rational(13, 4), Rational(-2, 9)}};
  size_t best = 0;
  for (const auto& [p0, q0] : points) {
    std::vector<Row> rows;
    bool ok = true;
    for (const auto& v : vectors) {
      Row row(index.size());
      for (const auto& [k, c] : v) {
        auto val = specialize(c, p0, q0);
        if (!val) {
          ok = false;
          break;
        }
        row[index.at(k)] = *val;
      }
      if (!ok) break;
      rows.push_back(std::move(row));
    }
    if (!ok) continue;
    best = std::max(best, rank_of(std::move(rows)));
    if (!symbolic || best == vectors.size()) break;
  }
  return best;
}

}  // namespace ncg
