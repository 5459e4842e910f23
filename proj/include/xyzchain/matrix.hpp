#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace xyzchain {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Sized for spin-chain work: dimensions up
/// to 2^12 are supported, and everything is kept by value.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMatrix identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(Complex s);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
  friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

  CMatrix adjoint() const;
  CMatrix conjugate() const;
  CMatrix transpose() const;
  Complex trace() const;

  /// Largest |entry|.
  double max_abs() const;
  double frobenius_norm() const;
  /// Largest entrywise |a - b|; matrices must have equal shape.
  double max_abs_diff(const CMatrix& o) const;

  bool all_finite() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Complex> data_;
};

/// Kronecker product: entry ((i*cols_b+k),(j*cols_b+l)) = a(i,j)*b(k,l).
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// max |a(i,j) - conj(a(j,i))| over all pairs (0 for a Hermitian matrix).
double hermiticity_defect(const CMatrix& a);

/// Throws std::invalid_argument naming the worst-offending entry pair if the
/// defect exceeds rel_tol * max|entry|.
void require_hermitian(const CMatrix& a, double rel_tol = 1e-12);

}  // namespace xyzchain
