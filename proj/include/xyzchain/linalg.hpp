#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "xyzchain/matrix.hpp"

namespace xyzchain {

/// Eigendecomposition of a Hermitian matrix: ascending real eigenvalues and
/// orthonormal eigenvector columns (column k belongs to eigenvalues[k]).
struct Spectrum {
  std::vector<double> eigenvalues;
  CMatrix eigenvectors;
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
///
/// Sweeps the strict upper triangle in a fixed (row-major) order, so the
/// result is bit-reproducible for identical input. Converges when the
/// off-diagonal Frobenius norm drops below 1e-12 * ||A||_F, capped at 100
/// sweeps. Eigenvalues are sorted ascending (stable), and each eigenvector
/// column is rephased so its largest component is real and nonnegative.
///
/// Throws std::invalid_argument for non-Hermitian or non-finite input and
/// std::runtime_error (carrying the residual) if the cap is reached.
Spectrum hermitian_eig(const CMatrix& a);

/// Partial trace of an n_qubits-qubit density matrix onto the qubits listed
/// in `keep`, in that order. Qubit 0 is the most significant bit of a basis
/// label. rho must have unit trace within 1e-12.
CMatrix partial_trace(const CMatrix& rho, int n_qubits, std::span<const int> keep);

/// Two-qubit reduction; returns a 4x4 matrix ordered as (keep.first, keep.second).
CMatrix partial_trace_pair(const CMatrix& rho, int n_qubits, std::pair<int, int> keep);

}  // namespace xyzchain
