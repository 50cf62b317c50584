#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "conclab/numeric.hpp"
#include "conclab/upoly.hpp"

namespace conclab {

/// Row-major dense matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix block_diagonal(const RationalMatrix& a, const RationalMatrix& b);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_integral() const;

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalMatrix transpose() const;

  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix& operator-=(const RationalMatrix& o);
  RationalMatrix& operator*=(const Rational& s);
  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  RationalMatrix operator-() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Rational determinant(RationalMatrix m);

/// det(x I - m) via Hessenberg reduction over Q.
UPoly characteristic_polynomial(const RationalMatrix& m);

/// det(t a - b) as a polynomial in t, by evaluation and interpolation.
UPoly pencil_determinant(const RationalMatrix& a, const RationalMatrix& b);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  int signature() const noexcept { return positive - negative; }
};

/// Exact inertia of a symmetric matrix by congruence (symmetric elimination
/// with 1x1 and 2x2 pivots).
Inertia inertia(const RationalMatrix& symmetric);

}  // namespace conclab
