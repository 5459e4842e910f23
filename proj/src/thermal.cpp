#include "xyzchain/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "xyzchain/linalg.hpp"

namespace xyzchain {

namespace {

// Below this temperature exp(-E/T) is evaluated via the ground-space limit.
constexpr double kZeroTemperatureFloor = 1e-8;

std::array<double, 4> two_qubit_energies(const ChainParams& p) {
  const double j = p.j_mean();
  const double eta = std::hypot(p.b_field, p.j_gamma());
  return {-0.5 * p.jz - j, -0.5 * p.jz + j, 0.5 * p.jz - eta, 0.5 * p.jz + eta};
}

}  // namespace

ThermalState gibbs_state(const CMatrix& h, double temperature) {
  if (!(temperature >= 0.0))
    throw std::invalid_argument("gibbs_state: temperature must be >= 0");
  const Spectrum spec = hermitian_eig(h);
  const std::size_t dim = h.rows();
  const double e_min = spec.eigenvalues.front();
  const double e_max = spec.eigenvalues.back();

  ThermalState out;
  out.temperature = temperature;

  std::vector<double> prob(dim);
  if (temperature < kZeroTemperatureFloor) {
    const double eps_deg = 1e-9 * std::max(1.0, e_max - e_min);
    std::size_t degeneracy = 0;
    for (double e : spec.eigenvalues)
      if (e - e_min <= eps_deg) ++degeneracy;
    for (std::size_t k = 0; k < dim; ++k)
      prob[k] = (spec.eigenvalues[k] - e_min <= eps_deg) ? 1.0 / double(degeneracy) : 0.0;
    out.ground_space_limit = true;
    out.log_partition = std::log(double(degeneracy)) +
                        (temperature > 0.0 ? -e_min / temperature : 0.0);
  } else {
    double z_shifted = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
      prob[k] = std::exp(-(spec.eigenvalues[k] - e_min) / temperature);
      z_shifted += prob[k];
    }
    for (double& w : prob) w /= z_shifted;
    out.log_partition = std::log(z_shifted) - e_min / temperature;
  }

  CMatrix rho(dim, dim);
  const CMatrix& v = spec.eigenvectors;
  for (std::size_t k = 0; k < dim; ++k) {
    if (prob[k] == 0.0) continue;
    for (std::size_t i = 0; i < dim; ++i) {
      const Complex vik = v(i, k) * prob[k];
      for (std::size_t jj = 0; jj < dim; ++jj)
        rho(i, jj) += vik * std::conj(v(jj, k));
    }
  }
  out.rho = std::move(rho);
  return out;
}

double two_qubit_partition_function(const ChainParams& p, double temperature) {
  p.validate();
  if (p.n_sites != 2)
    throw std::invalid_argument("two_qubit_partition_function requires n_sites = 2");
  if (!(temperature > 0.0))
    throw std::invalid_argument("two_qubit_partition_function requires T > 0");
  const double beta = 1.0 / temperature;
  const double eta = std::hypot(p.b_field, p.j_gamma());
  return 2.0 * (std::exp(-0.5 * p.jz * beta) * std::cosh(beta * eta) +
                std::exp(0.5 * p.jz * beta) * std::cosh(beta * p.j_mean()));
}

double two_qubit_log_partition(const ChainParams& p, double temperature) {
  p.validate();
  if (p.n_sites != 2)
    throw std::invalid_argument("two_qubit_log_partition requires n_sites = 2");
  if (!(temperature > 0.0))
    throw std::invalid_argument("two_qubit_log_partition requires T > 0");
  const auto e = two_qubit_energies(p);
  const double e_min = *std::min_element(e.begin(), e.end());
  double z_shifted = 0.0;
  for (double ei : e) z_shifted += std::exp(-(ei - e_min) / temperature);
  return std::log(z_shifted) - e_min / temperature;
}

}  // namespace xyzchain
