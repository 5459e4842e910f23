#pragma once

#include <array>

#include "xyzchain/matrix.hpp"

namespace xyzchain {

enum class Boundary { open, periodic };

/// Physical parameters of an anisotropic XYZ chain in a transverse field.
/// Couplings and the field share one energy unit (k_B = 1); temperature is
/// expressed in the same unit. Stored as (jx, jy); the (J, gamma)
/// parameterization with jx = J(1+gamma), jy = J(1-gamma) is derived.
struct ChainParams {
  int n_sites = 2;
  double jx = 0.0;
  double jy = 0.0;
  double jz = 0.0;
  double b_field = 0.0;
  Boundary boundary = Boundary::open;

  static ChainParams from_xy(int n, double jx, double jy, double jz, double b,
                             Boundary bc);
  static ChainParams from_j_gamma(int n, double j, double gamma, double jz,
                                  double b, Boundary bc);

  double j_mean() const { return 0.5 * (jx + jy); }
  /// The product J*gamma = (jx - jy)/2; defined for every parameter set.
  double j_gamma() const { return 0.5 * (jx - jy); }
  bool has_gamma() const { return jx + jy != 0.0; }
  /// In-plane anisotropy (jx - jy)/(jx + jy); throws when jx + jy == 0.
  double gamma() const;

  void validate() const;
};

/// Hamiltonian of the chain in the standard basis.
///
/// Conventions: |0> is the sigma_z = +1 eigenstate and qubit 0 is the most
/// significant bit of a basis label. Every bond carries the prefactor 1/2:
///   H = 1/2 sum_bonds [ jx XX + jy YY + jz ZZ + B (Z_i + Z_j) ].
/// A two-site chain is a single open bond; requesting periodic boundary for
/// n_sites = 2 is rejected because the wrap-around would duplicate it. For
/// n_sites >= 3 the periodic sum closes the ring (each site then feels the
/// full field B). The result is exactly real-symmetric.
CMatrix build_hamiltonian(const ChainParams& p);

/// Cyclic right shift of an n-qubit basis label:
/// |b0 b1 ... b_{N-1}>  ->  |b_{N-1} b0 ... b_{N-2}>.
int cyclic_shift(int state_index, int n_qubits);

/// Closed-form eigensystem of the two-site chain.
///
/// Energies: e_psi_pm = -jz/2 +- J on the singlet/triplet pair
/// |Psi+-> = (|01> +- |10>)/sqrt(2), and e_sigma_pm = jz/2 +- eta with
/// eta = sqrt(B^2 + (J gamma)^2) on the {|00>, |11>} block:
///   |Sigma+-> = [(eta +- B)|00> +- J gamma |11>] / sqrt(2 eta (eta +- B)).
struct TwoQubitSpectrum {
  double e_psi_plus = 0, e_psi_minus = 0;
  double e_sigma_plus = 0, e_sigma_minus = 0;
  double eta = 0;
  /// Columns: |Psi+>, |Psi->, |Sigma+>, |Sigma->.
  CMatrix vectors;
};
TwoQubitSpectrum two_qubit_spectrum(const ChainParams& p);

/// Closed-form eigensystem of the three-site ring.
///
/// With J = j_mean, K = j_gamma and eta_pm = sqrt((jz - J +- 2B)^2 + 3K^2):
///   E1 = E2 = -J - jz/2 + B   on the one-excitation orbit {|001>,|010>,|100>},
///   E3,4 = J + jz/2 - B +- eta_-  mixing |111> with the symmetric orbit sum,
///   E5 = E6 = -J - jz/2 - B   on the two-excitation orbit {|011>,|101>,|110>},
///   E7,8 = J + jz/2 + B +- eta_+  mixing |000> with the symmetric orbit sum.
/// Vectors are normalized; at the isolated singular points of the printed
/// normalization (K = 0) the limiting basis-aligned vectors are returned.
struct ThreeQubitSpectrum {
  std::array<double, 8> energies{};
  double eta_plus = 0, eta_minus = 0;
  /// Columns: |Phi_1> ... |Phi_8> matching `energies`.
  CMatrix vectors;
};
ThreeQubitSpectrum three_qubit_spectrum(const ChainParams& p);

}  // namespace xyzchain
