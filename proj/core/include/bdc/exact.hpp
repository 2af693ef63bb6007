#pragma once

// Exact integer and rational linear algebra. Nothing in here touches
// floating point; every verdict downstream depends on that.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace bdc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<BigInt>;
using RationalVector = std::vector<Rational>;

IntVector make_int_vector(std::initializer_list<long long> values);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntVector diagonal() const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVector operator*(const IntVector& v) const;
  IntMatrix operator-() const;

  bool operator==(const IntMatrix& rhs) const = default;

  /// Row-major nested list of decimal strings, e.g. "[[-4,1],[1,-4]]".
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  long long signature() const {
    return static_cast<long long>(positive) - static_cast<long long>(negative);
  }
  bool operator==(const Inertia&) const = default;
};

/// Fraction-free (Bareiss) determinant.
BigInt determinant(const IntMatrix& m);

/// Inertia of a symmetric matrix by exact congruence reduction.
Inertia inertia(const IntMatrix& m);

/// Exact solution of m x = b. Throws Singular when m is not invertible.
RationalVector solve_rational(const IntMatrix& m, const IntVector& b);

/// Returns the vector as integers when every entry is integral.
std::optional<IntVector> as_integral(const RationalVector& v);

/// v^T m^{-1} v.
Rational quadform_inverse(const IntMatrix& m, const IntVector& v);

/// w^T m w.
BigInt quadform(const IntMatrix& m, const IntVector& w);

/// Lower-triangular column Hermite normal form H = m U (U unimodular):
/// H(i,j) = 0 for j > i, H(i,i) > 0, 0 <= H(i,j) < H(i,i) for j < i.
/// Requires m nonsingular.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Reduces v modulo the column lattice of a Hermite normal form so that
/// 0 <= v_i < H(i,i) for all i. Two vectors are congruent modulo the
/// lattice iff their reductions agree.
IntVector reduce_mod_hnf(const IntMatrix& hnf, IntVector v);

/// Floor division for arbitrary-precision integers.
BigInt floor_div(const BigInt& a, const BigInt& b);

/// Mathematical mod, result in [0, |b|).
BigInt floor_mod(const BigInt& a, const BigInt& b);

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);
std::string to_string(const IntVector& v);

}  // namespace bdc
