#include "bdc/exact.hpp"

#include <sstream>
#include <utility>

#include "bdc/errors.hpp"

namespace bdc {

IntVector make_int_vector(std::initializer_list<long long> values) {
  IntVector out;
  out.reserve(values.size());
  for (long long v : values) out.emplace_back(v);
  return out;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntVector IntMatrix::diagonal() const {
  IntVector out(std::min(rows_, cols_));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*this)(i, i);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (cols_ != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix out = *this;
  for (auto& x : out.data_) x = -x;
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

BigInt determinant(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact by Sylvester's identity.
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Inertia inertia(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "inertia of non-square matrix");
  if (!m.is_symmetric()) throw Error(ErrorCode::NonSymmetric, "inertia of non-symmetric matrix");
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));

  std::vector<std::size_t> live(n);
  for (std::size_t i = 0; i < n; ++i) live[i] = i;

  Inertia result;
  while (!live.empty()) {
    std::size_t pivot_pos = live.size();
    for (std::size_t t = 0; t < live.size(); ++t)
      if (a[live[t]][live[t]] != 0) {
        pivot_pos = t;
        break;
      }

    if (pivot_pos == live.size()) {
      // Zero diagonal: find an off-diagonal entry and make a pivot by the
      // congruence e_i -> e_i + e_j, which puts 2 a_ij on the diagonal.
      bool found = false;
      for (std::size_t s = 0; s < live.size() && !found; ++s)
        for (std::size_t t = s + 1; t < live.size() && !found; ++t) {
          std::size_t i = live[s], j = live[t];
          if (a[i][j] == 0) continue;
          for (std::size_t k : live) a[i][k] += a[j][k];
          for (std::size_t k : live) a[k][i] += a[k][j];
          pivot_pos = s;
          found = true;
        }
      if (!found) {
        result.zero += live.size();
        break;
      }
    }

    const std::size_t p = live[pivot_pos];
    const Rational piv = a[p][p];
    if (piv > 0)
      ++result.positive;
    else
      ++result.negative;
    live.erase(live.begin() + static_cast<std::ptrdiff_t>(pivot_pos));
    for (std::size_t i : live) {
      if (a[i][p] == 0) continue;
      const Rational factor = a[i][p] / piv;
      for (std::size_t j : live) a[i][j] -= factor * a[p][j];
    }
  }
  return result;
}

RationalVector solve_rational(const IntMatrix& m, const IntVector& b) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "solve with non-square matrix");
  const std::size_t n = m.rows();
  if (b.size() != n) throw Error(ErrorCode::DimensionMismatch, "right-hand side length");

  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
    a[i][n] = Rational(b[i]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw Error(ErrorCode::Singular, "matrix is singular");
    if (p != k) std::swap(a[p], a[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  RationalVector x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational s = a[ii][n];
    for (std::size_t j = ii + 1; j < n; ++j) s -= a[ii][j] * x[j];
    x[ii] = s / a[ii][ii];
  }
  return x;
}

std::optional<IntVector> as_integral(const RationalVector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (boost::multiprecision::denominator(x) != 1) return std::nullopt;
    out.push_back(boost::multiprecision::numerator(x));
  }
  return out;
}

Rational quadform_inverse(const IntMatrix& m, const IntVector& v) {
  if (m.rows() != v.size()) throw Error(ErrorCode::DimensionMismatch, "quadratic form argument");
  const RationalVector y = solve_rational(m, v);
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += Rational(v[i]) * y[i];
  return s;
}

BigInt quadform(const IntMatrix& m, const IntVector& w) {
  if (m.rows() != w.size() || !m.is_square())
    throw Error(ErrorCode::DimensionMismatch, "quadratic form argument");
  BigInt s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    for (std::size_t j = 0; j < w.size(); ++j) s += w[i] * m(i, j) * w[j];
  }
  return s;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt floor_mod(const BigInt& a, const BigInt& b) {
  BigInt r = a % b;
  if (r < 0) r += abs(b);
  return r;
}

namespace {

// Extended gcd with g >= 0 and x a + y b = g.
void ext_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& x, BigInt& y) {
  BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  g = old_r;
  x = old_s;
  y = old_t;
}

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "HNF of non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix h = m;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (h(i, j) == 0) continue;
      const BigInt a = h(i, i), b = h(i, j);
      BigInt g, x, y;
      ext_gcd(a, b, g, x, y);
      const BigInt p = a / g, q = b / g;
      for (std::size_t r = i; r < n; ++r) {
        const BigInt ci = h(r, i), cj = h(r, j);
        h(r, i) = x * ci + y * cj;
        h(r, j) = -q * ci + p * cj;
      }
    }
    if (h(i, i) == 0) throw Error(ErrorCode::Singular, "HNF of singular matrix");
    if (h(i, i) < 0)
      for (std::size_t r = i; r < n; ++r) h(r, i) = -h(r, i);
    for (std::size_t j = 0; j < i; ++j) {
      const BigInt q = floor_div(h(i, j), h(i, i));
      if (q == 0) continue;
      for (std::size_t r = i; r < n; ++r) h(r, j) -= q * h(r, i);
    }
  }
  return h;
}

IntVector reduce_mod_hnf(const IntMatrix& hnf, IntVector v) {
  const std::size_t n = hnf.rows();
  if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "reduce_mod_hnf");
  for (std::size_t i = 0; i < n; ++i) {
    const BigInt q = floor_div(v[i], hnf(i, i));
    if (q == 0) continue;
    for (std::size_t r = i; r < n; ++r) v[r] -= q * hnf(r, i);
  }
  return v;
}

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const Rational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const IntVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].str();
  }
  return s + "]";
}

}  // namespace bdc
