#pragma once

// Maximum of q(v) = v^T G^{-1} v over an orbit v0 + 2 G Z^m, G negative
// definite. Writing v = v0 + 2 G y turns this into a closest-vector problem
// for the positive definite form A = -G:
//   q(v) = -4 (y - c)^T A (y - c),   c = A^{-1} v0 / 2.

#include "bdc/exact.hpp"

namespace bdc {

struct OrbitMax {
  Rational q;          // maximum of q over the orbit
  IntVector argmax;    // lexicographically smallest maximizer
  std::size_t visited = 0;  // lattice points examined
};

/// Exact Fincke-Pohst enumeration (rational LDL^T, Babai start radius).
/// Throws NonSquare/NonSymmetric/DimensionMismatch, Singular, and
/// CertificationFailure when g is not negative definite.
OrbitMax orbit_maximum(const IntMatrix& g, const IntVector& v0);

/// Oracle: scans the whole box |y_i - c_i| <= sqrt(R (A^{-1})_ii), where R
/// is the value at the rounded centre. Exponential; for tests only.
OrbitMax orbit_maximum_bruteforce(const IntMatrix& g, const IntVector& v0);

/// Rational floor / nearest integer (ties go down).
BigInt floor_rational(const Rational& x);
BigInt round_rational(const Rational& x);

}  // namespace bdc
