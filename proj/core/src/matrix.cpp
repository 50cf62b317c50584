#include "conclab/matrix.hpp"

#include <algorithm>
#include <utility>

#include "conclab/error.hpp"

namespace conclab {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
    for (const auto& v : row) {
      data_.push_back(v);
      data_.back().canonicalize();
    }
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::block_diagonal(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) m(a.rows_ + i, a.cols_ + j) = b(i, j);
  return m;
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool RationalMatrix::is_integral() const {
  for (const auto& v : data_)
    if (v.get_den() != 1) return false;
  return true;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::InvalidArgument, "shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::InvalidArgument, "shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s) {
  for (auto& v : data_) v *= s;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "shape mismatch");
  RationalMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

RationalMatrix RationalMatrix::operator-() const {
  RationalMatrix r = *this;
  return r *= Rational(-1);
}

Rational determinant(RationalMatrix m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    const Rational p = m(col, col);
    det *= p;
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      Rational f = m(i, col) / p;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

UPoly characteristic_polynomial(const RationalMatrix& input) {
  if (!input.is_square()) throw Error(ErrorCode::InvalidArgument, "charpoly of a non-square matrix");
  const std::size_t n = input.rows();
  RationalMatrix h = input;

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, m));
    }
    const Rational pivot = h(m, m - 1);
    for (std::size_t r = m + 1; r < n; ++r) {
      if (h(r, m - 1) == 0) continue;
      Rational u = h(r, m - 1) / pivot;
      for (std::size_t j = 0; j < n; ++j) h(r, j) -= u * h(m, j);
      for (std::size_t rr = 0; rr < n; ++rr) h(rr, m) += u * h(rr, r);
    }
  }

  // p[k] is the characteristic polynomial of the leading k x k block.
  std::vector<UPoly> p(n + 1);
  p[0] = UPoly::constant(1);
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = UPoly(std::vector<Rational>{-h(k - 1, k - 1), Rational(1)}) * p[k - 1];
    Rational t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t *= h(k - i, k - i - 1);
      if (t == 0) break;
      p[k] -= p[k - i - 1] * (t * h(k - i - 1, k - 1));
    }
  }
  return p[n];
}

UPoly pencil_determinant(const RationalMatrix& a, const RationalMatrix& b) {
  if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::InvalidArgument, "pencil needs two square matrices of equal size");
  }
  const std::size_t n = a.rows();
  std::vector<Rational> xs, ys;
  xs.reserve(n + 1);
  ys.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Rational t(static_cast<long>(k));
    xs.push_back(t);
    ys.push_back(determinant(a * t - b));
  }
  return interpolate(xs, ys);
}

Inertia inertia(const RationalMatrix& symmetric) {
  if (!symmetric.is_symmetric()) throw Error(ErrorCode::InvalidArgument, "inertia needs a symmetric matrix");
  // Symmetric elimination keeps the form congruent to the original, so the
  // pivot signs are the inertia. A zero diagonal with a nonzero entry m_ij
  // gives the hyperbolic 2x2 pivot [[0, a], [a, 0]] of signature (1, 1).
  RationalMatrix m = symmetric;
  std::vector<std::size_t> live(m.rows());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
  Inertia in;
  auto drop = [&](std::size_t index) { live.erase(std::find(live.begin(), live.end(), index)); };
  while (!live.empty()) {
    auto diag = std::find_if(live.begin(), live.end(), [&](std::size_t k) { return sgn(m(k, k)) != 0; });
    if (diag != live.end()) {
      const std::size_t k = *diag;
      const Rational p = m(k, k);
      (sgn(p) > 0 ? in.positive : in.negative) += 1;
      drop(k);
      for (std::size_t r : live) {
        if (sgn(m(r, k)) == 0) continue;
        const Rational f = m(r, k) / p;
        for (std::size_t c : live) m(r, c) -= f * m(k, c);
      }
      continue;
    }
    std::size_t bi = 0, bj = 0;
    bool found = false;
    for (std::size_t x = 0; x < live.size() && !found; ++x) {
      for (std::size_t y = x + 1; y < live.size() && !found; ++y) {
        if (sgn(m(live[x], live[y])) != 0) {
          bi = live[x];
          bj = live[y];
          found = true;
        }
      }
    }
    if (!found) {
      in.zero += static_cast<int>(live.size());
      break;
    }
    const Rational a = m(bi, bj);
    in.positive += 1;
    in.negative += 1;
    drop(bi);
    drop(bj);
    std::vector<Rational> ri(m.rows()), rj(m.rows());
    for (std::size_t r : live) {
      ri[r] = m(r, bi);
      rj[r] = m(r, bj);
    }
    for (std::size_t r : live)
      for (std::size_t c : live) m(r, c) -= (ri[r] * rj[c] + rj[r] * ri[c]) / a;
  }
  return in;
}

}  // namespace conclab
