#include "xyzchain/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "xyzchain/linalg.hpp"
#include "xyzchain/thermal.hpp"

namespace xyzchain {

namespace {

constexpr double kClampFloor = -1e-10;  // roundoff negatives below this are bugs

double clamp_nonnegative(double x, const char* what) {
  if (x >= 0.0) return x;
  if (x >= kClampFloor) return 0.0;
  std::ostringstream os;
  os << what << " is negative beyond roundoff: " << x;
  throw std::runtime_error(os.str());
}

void require_density_matrix(const CMatrix& rho, const char* who) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    std::ostringstream os;
    os << who << ": expected a 4x4 density matrix";
    throw std::invalid_argument(os.str());
  }
  require_hermitian(rho);
  const double dev = std::abs(rho.trace() - Complex{1.0, 0.0});
  if (dev > 1e-10) {
    std::ostringstream os;
    os << who << ": trace deviates from 1 by " << dev;
    throw std::invalid_argument(os.str());
  }
}

// S = sigma_y (x) sigma_y; real antidiagonal (-1, 1, 1, -1).
CMatrix spin_flip_matrix() {
  CMatrix s(4, 4);
  s(0, 3) = -1.0;
  s(1, 2) = 1.0;
  s(2, 1) = 1.0;
  s(3, 0) = -1.0;
  return s;
}

}  // namespace

void XStateElements::validate(double tol) const {
  const double trace = u1 + u2 + 2.0 * w;
  if (std::abs(trace - 1.0) > tol) {
    std::ostringstream os;
    os << "X state trace " << trace << " deviates from 1 beyond " << tol;
    throw std::invalid_argument(os.str());
  }
  if (u1 < -tol || u2 < -tol || w < -tol)
    throw std::invalid_argument("X state has a negative population");
  if (std::abs(v) > std::sqrt(std::max(u1, 0.0) * std::max(u2, 0.0)) + tol)
    throw std::invalid_argument("X state violates |v| <= sqrt(u1 u2)");
  if (std::abs(z) > w + tol)
    throw std::invalid_argument("X state violates |z| <= w");
}

ConcurrenceValue concurrence_from_lambdas(std::array<double, 4> lambdas) {
  for (double& l : lambdas) l = clamp_nonnegative(l, "lambda");
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  ConcurrenceValue out;
  out.lambdas = lambdas;
  out.c = std::max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
  return out;
}

XStateElements extract_x_elements(const CMatrix& rho4) {
  require_density_matrix(rho4, "extract_x_elements");

  // off-X pattern: everything outside the diagonal and antidiagonal
  double residual = 0.0;
  std::size_t wi = 0, wj = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j || i + j == 3) continue;
      const double m = std::abs(rho4(i, j));
      if (m > residual) {
        residual = m;
        wi = i;
        wj = j;
      }
    }
  if (residual > 1e-9) {
    std::ostringstream os;
    os << "extract_x_elements: entry (" << wi << "," << wj << ") = " << residual
       << " lies outside the X pattern (pipeline or symmetry bug)";
    throw std::runtime_error(os.str());
  }

  double imag_max = 0.0;
  for (auto [i, j] : {std::pair<int, int>{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 3}, {1, 2}})
    imag_max = std::max(imag_max, std::abs(rho4(i, j).imag()));
  if (imag_max > 1e-12) {
    std::ostringstream os;
    os << "extract_x_elements: imaginary part " << imag_max
       << " on an X position; this model's states are real";
    throw std::runtime_error(os.str());
  }

  const double w1 = rho4(1, 1).real();
  const double w2 = rho4(2, 2).real();
  if (std::abs(w1 - w2) > 1e-9) {
    std::ostringstream os;
    os << "extract_x_elements: central populations differ by " << std::abs(w1 - w2);
    throw std::runtime_error(os.str());
  }

  XStateElements x;
  x.u1 = clamp_nonnegative(rho4(0, 0).real(), "u1");
  x.u2 = clamp_nonnegative(rho4(3, 3).real(), "u2");
  x.w = clamp_nonnegative(0.5 * (w1 + w2), "w");
  x.v = rho4(0, 3).real();
  x.z = rho4(1, 2).real();
  x.off_x_residual = residual;
  x.validate();
  return x;
}

namespace {

// Hermitian square root via the spectral decomposition; eigenvalues below
// the clamp floor signal an invalid state.
CMatrix matrix_sqrt_psd(const CMatrix& a, const char* what) {
  const Spectrum spec = hermitian_eig(a);
  const std::size_t n = a.rows();
  CMatrix root(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double p = clamp_nonnegative(spec.eigenvalues[k], what);
    const double r = std::sqrt(p);
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = spec.eigenvectors(i, k) * r;
      for (std::size_t j = 0; j < n; ++j)
        root(i, j) += vik * std::conj(spec.eigenvectors(j, k));
    }
  }
  return root;
}

}  // namespace

ConcurrenceValue concurrence_wootters(const CMatrix& rho4) {
  require_density_matrix(rho4, "concurrence_wootters");

  // The lambdas are the square roots of the eigenvalues of R = rho S rho* S,
  // equal to the singular values of L = sqrt(S rho* S) sqrt(rho) since
  // L^dag L = sqrt(rho) (S rho* S) sqrt(rho) is similar to R. Reading them
  // off the Hermitian embedding [[0, L^dag], [L, 0]] avoids squaring, so
  // near-zero lambdas keep full absolute precision.
  const CMatrix sqrt_rho = matrix_sqrt_psd(rho4, "density matrix eigenvalue");
  const CMatrix s = spin_flip_matrix();
  const CMatrix rho_tilde = s * rho4.conjugate() * s;
  const CMatrix sqrt_tilde = matrix_sqrt_psd(rho_tilde, "spin-flipped eigenvalue");
  const CMatrix l = sqrt_tilde * sqrt_rho;

  CMatrix embed(8, 8);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      embed(i, 4 + j) = std::conj(l(j, i));  // L^dag block
      embed(4 + i, j) = l(i, j);
    }
  const Spectrum espec = hermitian_eig(embed);  // eigenvalues come in +-sigma pairs

  std::array<double, 4> lambdas{};
  for (std::size_t k = 0; k < 4; ++k)
    lambdas[k] = clamp_nonnegative(espec.eigenvalues[4 + k], "singular value");
  return concurrence_from_lambdas(lambdas);
}

ConcurrenceValue concurrence_x_state(const XStateElements& x) {
  x.validate();
  const double root = std::sqrt(x.u1 * x.u2);
  return concurrence_from_lambdas({std::abs(x.w + x.z), std::abs(x.w - x.z),
                                   std::abs(root + x.v), std::abs(root - x.v)});
}

std::array<double, 4> two_qubit_thermal_lambdas(const ChainParams& p, double t) {
  p.validate();
  if (p.n_sites != 2)
    throw std::invalid_argument("two_qubit_thermal_lambdas requires n_sites = 2");
  if (!(t > 0.0))
    throw std::invalid_argument("two_qubit_thermal_lambdas requires T > 0");

  const double j = p.j_mean();
  const double k = p.j_gamma();
  const double jz = p.jz;
  const double b = p.b_field;
  const double beta = 1.0 / t;
  const double eta = std::hypot(b, k);

  // Boltzmann weights over the four closed-form energies, shifted so every
  // exponent is <= 0; the shift cancels in each lambda.
  const std::array<double, 4> e = {-0.5 * jz - j, -0.5 * jz + j,
                                   0.5 * jz - eta, 0.5 * jz + eta};
  const double e_min = *std::min_element(e.begin(), e.end());
  std::array<double, 4> q{};
  double zs = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    q[i] = std::exp(-beta * (e[i] - e_min));
    zs += q[i];
  }

  const double lam1 = q[0] / zs;  // Z^-1 e^{beta jz/2} e^{+beta J}
  const double lam2 = q[1] / zs;  // Z^-1 e^{beta jz/2} e^{-beta J}

  // Z^-1 e^{-beta jz/2} cosh/sinh(beta eta) through the same shifted weights.
  const double g_minus = q[2] / zs;  // energy jz/2 - eta
  const double g_plus = q[3] / zs;   // energy jz/2 + eta
  const double sinh_w = 0.5 * (g_minus - g_plus);
  double lam3, lam4;
  if (eta == 0.0) {
    // eta -> 0 forces B = K = 0; (K/eta) sinh(beta eta) -> beta K = 0
    lam3 = lam4 = 0.5 * (g_minus + g_plus);
  } else {
    const double rk = k / eta;
    // sqrt(u1 u2) = sqrt(g- g+ + (rk sinh_w)^2): no cancellation
    const double root = std::sqrt(g_minus * g_plus + rk * rk * sinh_w * sinh_w);
    const double vmag = std::abs(rk * sinh_w);
    lam3 = std::abs(root - vmag);
    lam4 = root + vmag;
  }
  return {lam1, lam2, lam3, lam4};
}

double zero_t_concurrence(const ChainParams& p) {
  p.validate();
  if (p.n_sites != 2)
    throw std::invalid_argument("zero_t_concurrence requires n_sites = 2");

  const double j = p.j_mean();
  const double k = p.j_gamma();
  const double jz = p.jz;
  // The piecewise form holds for J > 0, 0 < gamma < 1, jz <= J; elsewhere the
  // numeric ground-space state is authoritative.
  const bool closed_form_region = j > 0.0 && k > 0.0 && k < j && jz <= j;
  if (!closed_form_region) {
    const ThermalState ts = gibbs_state(build_hamiltonian(p), 0.0);
    return concurrence_wootters(ts.rho).c;
  }

  const double eta = std::hypot(p.b_field, k);
  const double crossing = j + jz;
  const double eps_deg = 1e-9 * std::max(1.0, std::abs(eta) + std::abs(crossing));
  if (eta < crossing - eps_deg) return 1.0;
  if (eta > crossing + eps_deg) return k / eta;
  return 0.5 * (1.0 - k / eta);
}

ConcurrenceValue pairwise_concurrence(const ChainParams& p, double t,
                                      std::pair<int, int> pair) {
  p.validate();
  if (pair.first == pair.second || pair.first < 0 || pair.second < 0 ||
      pair.first >= p.n_sites || pair.second >= p.n_sites)
    throw std::invalid_argument("pairwise_concurrence: invalid qubit pair");
  const ThermalState ts = gibbs_state(build_hamiltonian(p), t);
  const CMatrix rho4 = partial_trace_pair(ts.rho, p.n_sites, pair);
  return concurrence_wootters(rho4);
}

}  // namespace xyzchain
