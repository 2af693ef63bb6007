#include "bdc/lattice.hpp"

#include <algorithm>
#include <functional>

#include "bdc/errors.hpp"

namespace bdc {

BigInt floor_rational(const Rational& x) {
  return floor_div(boost::multiprecision::numerator(x), boost::multiprecision::denominator(x));
}

BigInt round_rational(const Rational& x) {
  // nearest integer, halves rounded down
  const Rational shifted = x - Rational(1, 2);
  BigInt k = floor_rational(shifted);
  if (Rational(k) < shifted) k += 1;
  return k;
}

namespace {

struct Problem {
  std::size_t m = 0;
  IntMatrix g;
  IntVector v0;
  RationalVector c;                         // centre
  std::vector<Rational> d;                  // LDL^T pivots of A = -G
  std::vector<std::vector<Rational>> r;     // unit upper factor
};

Problem setup(const IntMatrix& g, const IntVector& v0) {
  if (!g.is_square()) throw Error(ErrorCode::NonSquare, "orbit maximum needs a square form");
  if (!g.is_symmetric()) throw Error(ErrorCode::NonSymmetric, "orbit maximum needs a symmetric form");
  if (v0.size() != g.rows()) throw Error(ErrorCode::DimensionMismatch, "covector length");
  Problem p;
  p.m = g.rows();
  p.g = g;
  p.v0 = v0;
  if (p.m == 0) return p;

  const RationalVector x = solve_rational(g, v0);  // G^{-1} v0
  p.c.resize(p.m);
  for (std::size_t i = 0; i < p.m; ++i) p.c[i] = -x[i] / 2;

  // A = R^T D R, R unit upper triangular.
  p.d.assign(p.m, Rational(0));
  p.r.assign(p.m, std::vector<Rational>(p.m, Rational(0)));
  for (std::size_t i = 0; i < p.m; ++i) {
    Rational di = -Rational(g(i, i));
    for (std::size_t k = 0; k < i; ++k) di -= p.d[k] * p.r[k][i] * p.r[k][i];
    if (di <= 0) throw Error(ErrorCode::CertificationFailure, "form is not negative definite");
    p.d[i] = di;
    p.r[i][i] = 1;
    for (std::size_t j = i + 1; j < p.m; ++j) {
      Rational a = -Rational(g(i, j));
      for (std::size_t k = 0; k < i; ++k) a -= p.d[k] * p.r[k][i] * p.r[k][j];
      p.r[i][j] = a / di;
    }
  }
  return p;
}

// (y - c)^T A (y - c)
Rational distance(const Problem& p, const std::vector<BigInt>& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < p.m; ++i) {
    Rational acc = 0;
    for (std::size_t j = i; j < p.m; ++j) acc += p.r[i][j] * (Rational(y[j]) - p.c[j]);
    s += p.d[i] * acc * acc;
  }
  return s;
}

IntVector covector(const Problem& p, const std::vector<BigInt>& y) {
  IntVector gy = p.g * IntVector(y.begin(), y.end());
  IntVector v(p.m);
  for (std::size_t i = 0; i < p.m; ++i) v[i] = p.v0[i] + 2 * gy[i];
  return v;
}

struct Best {
  bool have = false;
  Rational dist;
  IntVector v;

  void offer(const Rational& dd, IntVector cand) {
    if (!have || dd < dist || (dd == dist && cand < v)) {
      have = true;
      dist = dd;
      v = std::move(cand);
    }
  }
};

}  // namespace

OrbitMax orbit_maximum(const IntMatrix& g, const IntVector& v0) {
  Problem p = setup(g, v0);
  OrbitMax out;
  if (p.m == 0) return out;
  const std::size_t m = p.m;

  // Babai: round coordinates from the last one down.
  std::vector<BigInt> y(m);
  for (std::size_t k = m; k-- > 0;) {
    Rational t = p.c[k];
    for (std::size_t j = k + 1; j < m; ++j) t -= p.r[k][j] * (Rational(y[j]) - p.c[j]);
    y[k] = round_rational(t);
  }
  Best best;
  best.offer(distance(p, y), covector(p, y));
  const Rational babai = best.dist;

  std::function<void(std::size_t, const Rational&)> level = [&](std::size_t k, const Rational& partial) {
    Rational t = p.c[k];
    for (std::size_t j = k + 1; j < m; ++j) t -= p.r[k][j] * (Rational(y[j]) - p.c[j]);
    const BigInt k0 = round_rational(t);
    auto visit = [&](const BigInt& val) {
      const Rational diff = Rational(val) - t;
      const Rational total = partial + p.d[k] * diff * diff;
      if (total > best.dist) return false;
      y[k] = val;
      ++out.visited;
      if (k == 0)
        best.offer(total, covector(p, y));
      else
        level(k - 1, total);
      return true;
    };
    for (BigInt val = k0;; ++val)
      if (!visit(val)) break;
    for (BigInt val = k0 - 1;; --val)
      if (!visit(val)) break;
  };
  level(m - 1, Rational(0));

  BDC_ASSERT(best.dist <= babai, "enumeration lost the Babai point");
  out.q = -4 * best.dist;
  out.argmax = best.v;
  const Rational check = quadform_inverse(g, out.argmax);
  if (check != out.q) throw Error(ErrorCode::CertificationFailure, "orbit maximum disagrees with direct q(v)");
  return out;
}

OrbitMax orbit_maximum_bruteforce(const IntMatrix& g, const IntVector& v0) {
  Problem p = setup(g, v0);
  OrbitMax out;
  if (p.m == 0) return out;
  const std::size_t m = p.m;

  std::vector<BigInt> y(m);
  for (std::size_t i = 0; i < m; ++i) y[i] = round_rational(p.c[i]);
  const Rational radius = distance(p, y);

  // (A^{-1})_ii = -(G^{-1})_ii.
  std::vector<BigInt> lo(m), hi(m);
  for (std::size_t i = 0; i < m; ++i) {
    IntVector e(m, 0);
    e[i] = 1;
    const Rational aii = -solve_rational(g, e)[i];
    const Rational bound = radius * aii;
    auto inside = [&](const BigInt& k) {
      const Rational diff = Rational(k) - p.c[i];
      return diff * diff <= bound;
    };
    // Cauchy-Schwarz puts the rounded centre inside every axis range.
    BDC_ASSERT(inside(y[i]), "rounded centre outside its own box");
    lo[i] = hi[i] = y[i];
    while (inside(lo[i] - 1)) --lo[i];
    while (inside(hi[i] + 1)) ++hi[i];
  }

  Best best;
  std::vector<BigInt> cur(lo);
  while (true) {
    ++out.visited;
    best.offer(distance(p, cur), covector(p, cur));
    std::size_t i = 0;
    while (i < m && cur[i] == hi[i]) {
      cur[i] = lo[i];
      ++i;
    }
    if (i == m) break;
    ++cur[i];
  }
  out.q = -4 * best.dist;
  out.argmax = best.v;
  return out;
}

}  // namespace bdc
