#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bdc/exact.hpp"

namespace bdc {

using Gf2Vector = std::vector<std::uint8_t>;
using Gf2Matrix = std::vector<Gf2Vector>;  // row-major

/// Solution set of A x = b over GF(2): particular + span(kernel).
struct Gf2AffineSpace {
  Gf2Vector particular;
  std::vector<Gf2Vector> kernel;

  std::size_t dimension() const noexcept { return kernel.size(); }

  /// All 2^dimension() points, ordered by the binary counter over the
  /// kernel basis.
  std::vector<Gf2Vector> points() const;
};

/// Gaussian elimination over GF(2). std::nullopt when inconsistent.
std::optional<Gf2AffineSpace> gf2_affine_solutions(Gf2Matrix a, Gf2Vector b);

Gf2Matrix reduce_mod2(const IntMatrix& m);
Gf2Vector reduce_mod2(const IntVector& v);

/// All 0/1 vectors w with Q w == diag(Q) (mod 2): characteristic
/// indicator vectors of a symmetric integer form. Always consistent for
/// symmetric Q (the diagonal lies in the column space mod 2).
std::vector<Gf2Vector> characteristic_indicators(const IntMatrix& q);

}  // namespace bdc
