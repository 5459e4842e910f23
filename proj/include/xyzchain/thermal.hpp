#pragma once

#include "xyzchain/matrix.hpp"
#include "xyzchain/model.hpp"

namespace xyzchain {

/// Equilibrium state rho = exp(-H/T)/Z at temperature T (k_B = 1).
struct ThermalState {
  CMatrix rho;
  double temperature = 0.0;
  /// ln Z. For the ground-space path (T = 0, or T < 1e-8 where exp(-E/T)
  /// overflows) the stored value at T > 0 is still the true ln Z; at T = 0
  /// exactly it is the regularized limit of ln Z + E0/T, i.e. ln(degeneracy).
  double log_partition = 0.0;
  /// True when rho was computed as the normalized ground-space projector.
  bool ground_space_limit = false;
};

/// Gibbs state of a Hermitian operator.
///
/// T > 0: rho = V diag(exp(-(e_i - e_min)/T)) V^dag / Z_shifted, with the
/// spectrum shift keeping every exponent <= 0. T = 0 (or T < 1e-8): the
/// equal mixture over the eigenspace within eps_deg of the minimum
/// eigenvalue, eps_deg = 1e-9 * max(1, spectral range). Negative T is
/// rejected.
ThermalState gibbs_state(const CMatrix& h, double temperature);

/// Two-site closed-form partition function
///   Z = 2 ( exp(-jz/(2T)) cosh(beta eta) + exp(beta jz/2) cosh(beta J) ),
/// evaluated directly; requires T > 0.
double two_qubit_partition_function(const ChainParams& p, double temperature);

/// ln Z for the two-site chain via a shifted (overflow-safe) sum over the
/// four closed-form energies. Equal to log(two_qubit_partition_function)
/// wherever the latter does not overflow.
double two_qubit_log_partition(const ChainParams& p, double temperature);

}  // namespace xyzchain
