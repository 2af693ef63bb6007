#include "bdc/gf2.hpp"

#include <algorithm>

#include "bdc/errors.hpp"

namespace bdc {

std::vector<Gf2Vector> Gf2AffineSpace::points() const {
  std::vector<Gf2Vector> out;
  const std::size_t k = kernel.size();
  BDC_ASSERT(k < 63, "GF(2) solution space too large to enumerate");
  const std::uint64_t total = std::uint64_t{1} << k;
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Gf2Vector x = particular;
    for (std::size_t t = 0; t < k; ++t)
      if ((mask >> t) & 1U)
        for (std::size_t i = 0; i < x.size(); ++i) x[i] ^= kernel[t][i];
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<Gf2AffineSpace> gf2_affine_solutions(Gf2Matrix a, Gf2Vector b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw Error(ErrorCode::DimensionMismatch, "GF(2) right-hand side");
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (const auto& r : a)
    if (r.size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged GF(2) matrix");

  for (auto& r : a)
    for (auto& x : r) x &= 1U;
  for (auto& x : b) x &= 1U;

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && !a[p][c]) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    std::swap(b[p], b[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || !a[r][c]) continue;
      for (std::size_t j = c; j < cols; ++j) a[r][j] ^= a[rank][j];
      b[r] ^= b[rank];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (b[r]) return std::nullopt;

  Gf2AffineSpace space;
  space.particular.assign(cols, 0);
  for (std::size_t r = 0; r < rank; ++r) space.particular[pivot_col[r]] = b[r];

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Gf2Vector k(cols, 0);
    k[f] = 1;
    for (std::size_t r = 0; r < rank; ++r) k[pivot_col[r]] = a[r][f];
    space.kernel.push_back(std::move(k));
  }
  return space;
}

Gf2Matrix reduce_mod2(const IntMatrix& m) {
  Gf2Matrix out(m.rows(), Gf2Vector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = (m(i, j) % 2) != 0 ? 1 : 0;
  return out;
}

Gf2Vector reduce_mod2(const IntVector& v) {
  Gf2Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = (v[i] % 2) != 0 ? 1 : 0;
  return out;
}

std::vector<Gf2Vector> characteristic_indicators(const IntMatrix& q) {
  if (!q.is_symmetric()) throw Error(ErrorCode::NonSymmetric, "characteristic_indicators");
  auto space = gf2_affine_solutions(reduce_mod2(q), reduce_mod2(q.diagonal()));
  BDC_ASSERT(space.has_value(), "characteristic system inconsistent for a symmetric form");
  auto pts = space->points();
  std::sort(pts.begin(), pts.end(), [](const Gf2Vector& x, const Gf2Vector& y) {
    const auto cx = std::count(x.begin(), x.end(), 1);
    const auto cy = std::count(y.begin(), y.end(), 1);
    if (cx != cy) return cx < cy;
    return std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end());
  });
  return pts;
}

}  // namespace bdc
