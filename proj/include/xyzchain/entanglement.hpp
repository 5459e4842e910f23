#pragma once

#include <array>
#include <utility>

#include "xyzchain/matrix.hpp"
#include "xyzchain/model.hpp"

namespace xyzchain {

/// The five independent entries of an X-form two-qubit density matrix
///   [ u1 0  0  v  ]
///   [ 0  w  z  0  ]
///   [ 0  z  w  0  ]
///   [ v  0  0  u2 ]
/// in the standard basis {|00>,|01>,|10>,|11>}. Coherences are real in this
/// model (the Hamiltonian is real-symmetric, so Gibbs states and their
/// reductions are real).
struct XStateElements {
  double u1 = 0, u2 = 0, w = 0;  // populations
  double v = 0, z = 0;           // coherences
  /// Largest |entry| found outside the X pattern (set by extract_x_elements).
  double off_x_residual = 0;

  /// Checks unit trace (u1 + u2 + 2w = 1 within tol) and block positivity
  /// (|v| <= sqrt(u1 u2) + tol, |z| <= w + tol). Throws on violation.
  void validate(double tol = 1e-10) const;
};

struct ConcurrenceValue {
  double c = 0;
  /// Sorted descending, all >= 0.
  std::array<double, 4> lambdas{};
};

/// Applies the concurrence formula c = max(0, 2 max(lambda) - sum(lambda)).
/// Values in (-1e-10, 0) are clamped to zero; anything more negative is an
/// error, not roundoff, and is rejected.
ConcurrenceValue concurrence_from_lambdas(std::array<double, 4> lambdas);

/// Reads the X elements off a 4x4 density matrix. Rejects matrices with an
/// off-X residual above 1e-9, imaginary parts above 1e-12 on X positions, or
/// unequal central populations (all of which signal a pipeline bug here:
/// every reduced state of this model is X-form).
XStateElements extract_x_elements(const CMatrix& rho4);

/// Concurrence of an arbitrary two-qubit density matrix: the lambdas are the
/// square roots of the eigenvalues of R = rho S rho* S with S = sy (x) sy,
/// computed via the Hermitian similarity sqrt(rho) (S rho* S) sqrt(rho).
ConcurrenceValue concurrence_wootters(const CMatrix& rho4);

/// Concurrence of an X state from the closed-form singular values
/// lambda_{1,2} = |w +- z|, lambda_{3,4} = |sqrt(u1 u2) +- v|.
ConcurrenceValue concurrence_x_state(const XStateElements& x);

/// Closed-form thermal lambdas of the two-site chain (beta = 1/T, J = j_mean,
/// K = j_gamma, eta = sqrt(B^2 + K^2)):
///   lambda_{1,2} = Z^-1 e^{beta jz/2} e^{+-beta J},
///   lambda_{3,4} = Z^-1 e^{-beta jz/2} | sqrt(1 + s^2) -+ s |,
///     s = (K/eta) sinh(beta eta)  (s -> beta K when eta = 0).
/// Returned in that order; evaluation is shifted so it cannot overflow.
std::array<double, 4> two_qubit_thermal_lambdas(const ChainParams& p, double t);

/// Ground-state concurrence of the two-site chain. For J > 0, 0 < gamma < 1,
/// jz <= J it is the piecewise closed form
///   C = 1                 for eta < J + jz,
///   C = (1 - K/eta)/2     for eta = J + jz (within eps_deg),
///   C = K/eta             for eta > J + jz;
/// outside that parameter region it falls back to the numeric T = 0 Gibbs
/// state.
double zero_t_concurrence(const ChainParams& p);

/// Full pipeline: Hamiltonian -> Gibbs state -> reduction to `pair` ->
/// Wootters concurrence. Works for any chain size and qubit pair.
ConcurrenceValue pairwise_concurrence(const ChainParams& p, double t,
                                      std::pair<int, int> pair);

}  // namespace xyzchain
