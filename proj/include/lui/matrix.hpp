#ifndef LUI_MATRIX_HPP
#define LUI_MATRIX_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "lui/errors.hpp"
#include "lui/rational.hpp"

namespace lui {

using Complex = std::complex<double>;

inline Complex conjugate(const Complex& z) { return std::conj(z); }
inline GaussianRational conjugate(const GaussianRational& z) { return z.conj(); }

template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex from_int(long v) { return {static_cast<double>(v), 0.0}; }
  static Complex div_int(const Complex& v, long n) { return v / static_cast<double>(n); }
  static double abs(const Complex& v) { return std::abs(v); }
  static Complex to_complex(const Complex& v) { return v; }
};

template <>
struct ScalarTraits<GaussianRational> {
  static constexpr bool exact = true;
  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return GaussianRational(1); }
  static GaussianRational from_int(long v) { return GaussianRational(v); }
  static GaussianRational div_int(const GaussianRational& v, long n) {
    return v / GaussianRational(n);
  }
  static double abs(const GaussianRational& v) { return std::abs(v.to_complex()); }
  static Complex to_complex(const GaussianRational& v) { return v.to_complex(); }
};

/// Dense row-major matrix over Complex or GaussianRational.
template <typename S>
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, ScalarTraits<S>::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ScalarTraits<S>::one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<S>& data() const { return data_; }
  std::vector<S>& data() { return data_; }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw dimension_mismatch("matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t l = 0; l < cols_; ++l) {
        const S& a = (*this)(i, l);
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(l, j);
      }
    return r;
  }

  Matrix& operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_mismatch("matrix sum shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix operator+(const Matrix& o) const {
    Matrix r = *this;
    r += o;
    return r;
  }
  Matrix& operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_mismatch("matrix sum shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix r = *this;
    r -= o;
    return r;
  }

  Matrix scaled(const S& factor) const {
    Matrix r = *this;
    for (auto& v : r.data_) v = v * factor;
    return r;
  }

  Matrix adjoint() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = conjugate((*this)(i, j));
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  S trace() const {
    S t = ScalarTraits<S>::zero();
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  static Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t ia = 0; ia < a.rows_; ++ia)
      for (std::size_t ja = 0; ja < a.cols_; ++ja) {
        const S& f = a(ia, ja);
        for (std::size_t ib = 0; ib < b.rows_; ++ib)
          for (std::size_t jb = 0; jb < b.cols_; ++jb)
            r(ia * b.rows_ + ib, ja * b.cols_ + jb) = f * b(ib, jb);
      }
    return r;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t rows_, cols_;
  std::vector<S> data_;
};

using MatrixC = Matrix<Complex>;
using MatrixQ = Matrix<GaussianRational>;

/// Exact conversion; the inexact direction is deliberately absent.
inline MatrixC to_float(const MatrixQ& m) {
  MatrixC r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).to_complex();
  return r;
}

} // namespace lui

#endif
