#include "xyzchain/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace xyzchain {

namespace {

bool finite(double x) { return std::isfinite(x); }

// Stable normalized 2-vector (x0, x1) ~ (delta + eta, kappa) with
// eta = sqrt(delta^2 + kappa^2): the eigenvector of [[delta, kappa],
// [kappa, -delta]] for eigenvalue +eta. Rewritten as (kappa, eta - delta)
// when delta < 0 to dodge the cancellation in delta + eta.
void plus_branch_vector(double delta, double kappa, double& x0, double& x1) {
  const double eta = std::hypot(delta, kappa);
  if (kappa == 0.0) {  // singular normalization: basis-aligned limit
    x0 = delta >= 0.0 ? 1.0 : 0.0;
    x1 = delta >= 0.0 ? 0.0 : 1.0;
    return;
  }
  if (delta >= 0.0) {
    const double norm = std::sqrt(2.0 * eta * (eta + delta));
    x0 = (delta + eta) / norm;
    x1 = kappa / norm;
  } else {
    const double norm = std::sqrt(2.0 * eta * (eta - delta));
    x0 = kappa / norm;
    x1 = (eta - delta) / norm;
  }
}

// Companion eigenvector for eigenvalue -eta, orthogonal to the plus branch.
void minus_branch_vector(double delta, double kappa, double& x0, double& x1) {
  double p0, p1;
  plus_branch_vector(delta, kappa, p0, p1);
  x0 = -p1;
  x1 = p0;
}

}  // namespace

ChainParams ChainParams::from_xy(int n, double jx, double jy, double jz,
                                 double b, Boundary bc) {
  ChainParams p{n, jx, jy, jz, b, bc};
  p.validate();
  return p;
}

ChainParams ChainParams::from_j_gamma(int n, double j, double gamma, double jz,
                                      double b, Boundary bc) {
  ChainParams p{n, j * (1.0 + gamma), j * (1.0 - gamma), jz, b, bc};
  p.validate();
  return p;
}

double ChainParams::gamma() const {
  if (!has_gamma())
    throw std::domain_error("gamma is undefined when jx + jy == 0");
  return (jx - jy) / (jx + jy);
}

void ChainParams::validate() const {
  if (n_sites < 2 || n_sites > 12)
    throw std::invalid_argument("n_sites must be in [2, 12]");
  if (!finite(jx) || !finite(jy) || !finite(jz) || !finite(b_field))
    throw std::invalid_argument("couplings and field must be finite");
}

CMatrix build_hamiltonian(const ChainParams& p) {
  p.validate();
  if (p.n_sites == 2 && p.boundary == Boundary::periodic)
    throw std::invalid_argument(
        "periodic boundary is undefined for n_sites = 2: the two-site chain "
        "is a single bond and the wrap-around would double it");

  const int n = p.n_sites;
  const std::size_t dim = std::size_t{1} << n;
  const int n_bonds = (p.boundary == Boundary::periodic) ? n : n - 1;
  const double hop = p.j_mean();     // (jx + jy)/2, |01> <-> |10>
  const double pair = p.j_gamma();   // (jx - jy)/2, |00> <-> |11>

  CMatrix h(dim, dim);
  for (int bond = 0; bond < n_bonds; ++bond) {
    const int qa = bond;
    const int qb = (bond + 1) % n;
    const std::size_t mask_a = std::size_t{1} << (n - 1 - qa);
    const std::size_t mask_b = std::size_t{1} << (n - 1 - qb);
    for (std::size_t s = 0; s < dim; ++s) {
      const double sa = (s & mask_a) ? -1.0 : 1.0;
      const double sb = (s & mask_b) ? -1.0 : 1.0;
      h(s, s) += 0.5 * (p.jz * sa * sb + p.b_field * (sa + sb));
      const std::size_t flipped = s ^ mask_a ^ mask_b;
      // 1/2 (jx XX + jy YY): hopping when the bond bits differ, pair
      // creation when they agree; both amplitudes are real.
      h(flipped, s) += (sa == sb) ? pair : hop;
    }
  }
  return h;
}

int cyclic_shift(int state_index, int n_qubits) {
  if (n_qubits < 1 || n_qubits > 30)
    throw std::invalid_argument("cyclic_shift: n_qubits out of range");
  const int dim = 1 << n_qubits;
  if (state_index < 0 || state_index >= dim)
    throw std::invalid_argument("cyclic_shift: basis label out of range");
  return (state_index >> 1) | ((state_index & 1) << (n_qubits - 1));
}

TwoQubitSpectrum two_qubit_spectrum(const ChainParams& p) {
  p.validate();
  if (p.n_sites != 2)
    throw std::invalid_argument("two_qubit_spectrum requires n_sites = 2");

  const double j = p.j_mean();
  const double k = p.j_gamma();
  const double b = p.b_field;
  const double eta = std::hypot(b, k);

  TwoQubitSpectrum s;
  s.eta = eta;
  s.e_psi_plus = -0.5 * p.jz + j;
  s.e_psi_minus = -0.5 * p.jz - j;
  s.e_sigma_plus = 0.5 * p.jz + eta;
  s.e_sigma_minus = 0.5 * p.jz - eta;

  s.vectors = CMatrix(4, 4);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  s.vectors(1, 0) = inv_sqrt2;  // |Psi+> = (|01> + |10>)/sqrt(2)
  s.vectors(2, 0) = inv_sqrt2;
  s.vectors(1, 1) = inv_sqrt2;  // |Psi-> = (|01> - |10>)/sqrt(2)
  s.vectors(2, 1) = -inv_sqrt2;

  // {|00>, |11>} block of H is jz/2 + [[b, k], [k, -b]].
  double x0, x1;
  plus_branch_vector(b, k, x0, x1);
  s.vectors(0, 2) = x0;  // |Sigma+>
  s.vectors(3, 2) = x1;
  minus_branch_vector(b, k, x0, x1);
  s.vectors(0, 3) = x0;  // |Sigma->
  s.vectors(3, 3) = x1;
  return s;
}

ThreeQubitSpectrum three_qubit_spectrum(const ChainParams& p) {
  p.validate();
  if (p.n_sites != 3)
    throw std::invalid_argument("three_qubit_spectrum requires n_sites = 3");
  if (p.boundary != Boundary::periodic)
    throw std::invalid_argument("three_qubit_spectrum describes the periodic ring");

  const double j = p.j_mean();
  const double k = p.j_gamma();
  const double jz = p.jz;
  const double b = p.b_field;

  ThreeQubitSpectrum s;
  s.eta_minus = std::hypot(jz - j - 2.0 * b, std::sqrt(3.0) * k);
  s.eta_plus = std::hypot(jz - j + 2.0 * b, std::sqrt(3.0) * k);

  const double e_single = -j - 0.5 * jz + b;   // one-excitation orbit, 2x
  const double e_double = -j - 0.5 * jz - b;   // two-excitation orbit, 2x
  s.energies = {e_single,
                e_single,
                j + 0.5 * jz - b + s.eta_minus,
                j + 0.5 * jz - b - s.eta_minus,
                e_double,
                e_double,
                j + 0.5 * jz + b + s.eta_plus,
                j + 0.5 * jz + b - s.eta_plus};

  s.vectors = CMatrix(8, 8);
  const double r3 = 1.0 / std::sqrt(3.0);
  const double ap = 0.5 * (1.0 - r3);
  const double am = 0.5 * (1.0 + r3);

  // Basis labels (qubit 0 = MSB): |001>=1 |010>=2 |100>=4, |011>=3 |101>=5
  // |110>=6, |000>=0, |111>=7.
  // Columns 0,1: the degenerate pair orthogonal to the symmetric sum on the
  // one-excitation orbit.
  s.vectors(1, 0) = ap;
  s.vectors(2, 0) = r3;
  s.vectors(4, 0) = -am;
  s.vectors(1, 1) = -am;
  s.vectors(2, 1) = r3;
  s.vectors(4, 1) = ap;

  // Columns 2,3: |111> mixed with (|001>+|010>+|100>)/sqrt(3) through the
  // block [[delta, sqrt(3) k], [sqrt(3) k, -delta]] + const, delta = jz-2b-j.
  const double delta_m = jz - 2.0 * b - j;
  const double sk = std::sqrt(3.0) * k;
  double x0, x1;
  plus_branch_vector(delta_m, sk, x0, x1);
  s.vectors(7, 2) = x0;
  for (int idx : {1, 2, 4}) s.vectors(idx, 2) = x1 * r3;
  minus_branch_vector(delta_m, sk, x0, x1);
  s.vectors(7, 3) = x0;
  for (int idx : {1, 2, 4}) s.vectors(idx, 3) = x1 * r3;

  // Columns 4,5: degenerate pair on the two-excitation orbit.
  s.vectors(5, 4) = ap;
  s.vectors(3, 4) = r3;
  s.vectors(6, 4) = -am;
  s.vectors(5, 5) = -am;
  s.vectors(3, 5) = r3;
  s.vectors(6, 5) = ap;

  // Columns 6,7: |000> mixed with (|011>+|101>+|110>)/sqrt(3),
  // delta = jz+2b-j.
  const double delta_p = jz + 2.0 * b - j;
  plus_branch_vector(delta_p, sk, x0, x1);
  s.vectors(0, 6) = x0;
  for (int idx : {3, 5, 6}) s.vectors(idx, 6) = x1 * r3;
  minus_branch_vector(delta_p, sk, x0, x1);
  s.vectors(0, 7) = x0;
  for (int idx : {3, 5, 6}) s.vectors(idx, 7) = x1 * r3;

  return s;
}

}  // namespace xyzchain
