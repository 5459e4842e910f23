// Test-only oracles, kept independent of the implementation paths they check:
// Kronecker-built Hamiltonians, Pauli matrices, and a reproducible RNG.
#pragma once

#include <cstdint>
#include <random>

#include "xyzchain/linalg.hpp"
#include "xyzchain/matrix.hpp"
#include "xyzchain/model.hpp"

namespace oracles {

using xyzchain::CMatrix;
using xyzchain::ChainParams;
using xyzchain::Complex;

inline CMatrix pauli_x() {
  CMatrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

inline CMatrix pauli_y() {
  CMatrix m(2, 2);
  m(0, 1) = Complex(0.0, -1.0);
  m(1, 0) = Complex(0.0, 1.0);
  return m;
}

inline CMatrix pauli_z() {
  CMatrix m(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

/// p acting on `site` of an n-qubit register (qubit 0 = most significant bit).
inline CMatrix op_on_site(int n, int site, const CMatrix& p) {
  CMatrix m = CMatrix::identity(1);
  for (int q = 0; q < n; ++q)
    m = xyzchain::kron(m, q == site ? p : CMatrix::identity(2));
  return m;
}

/// Hamiltonian assembled term by term from explicit Kronecker products;
/// the brute-force oracle for build_hamiltonian.
inline CMatrix kron_hamiltonian(const ChainParams& p) {
  const int n = p.n_sites;
  const int n_bonds = p.boundary == xyzchain::Boundary::periodic ? n : n - 1;
  const std::size_t dim = std::size_t{1} << n;
  CMatrix h(dim, dim);
  const CMatrix sx = pauli_x(), sy = pauli_y(), sz = pauli_z();
  for (int bond = 0; bond < n_bonds; ++bond) {
    const int a = bond, b = (bond + 1) % n;
    h += 0.5 * p.jx * (op_on_site(n, a, sx) * op_on_site(n, b, sx));
    h += 0.5 * p.jy * (op_on_site(n, a, sy) * op_on_site(n, b, sy));
    h += 0.5 * p.jz * (op_on_site(n, a, sz) * op_on_site(n, b, sz));
    h += 0.5 * p.b_field * (op_on_site(n, a, sz) + op_on_site(n, b, sz));
  }
  return h;
}

/// mt19937_64 with a fixed conversion to doubles, identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double unit() { return double(gen_() >> 11) * 0x1.0p-53; }  // [0, 1)
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  double uniform_right(double lo, double hi) { return hi - (hi - lo) * unit(); }
  double open_unit() {  // (0, 1)
    double u = unit();
    while (u == 0.0) u = unit();
    return u;
  }

 private:
  std::mt19937_64 gen_;
};

/// Random density matrix: normalized A A^dag over a random complex matrix.
inline CMatrix random_density_matrix(Rng& rng, std::size_t dim) {
  CMatrix a(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      a(i, j) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  CMatrix rho = a * a.adjoint();
  const double tr = rho.trace().real();
  rho *= Complex(1.0 / tr, 0.0);
  return rho;
}

inline CMatrix random_hermitian(Rng& rng, std::size_t dim, bool complex_entries) {
  CMatrix a(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    a(i, i) = rng.uniform(-2.0, 2.0);
    for (std::size_t j = i + 1; j < dim; ++j) {
      const Complex x(rng.uniform(-1.0, 1.0),
                      complex_entries ? rng.uniform(-1.0, 1.0) : 0.0);
      a(i, j) = x;
      a(j, i) = std::conj(x);
    }
  }
  return a;
}

}  // namespace oracles
