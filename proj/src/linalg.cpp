#include "xyzchain/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace xyzchain {

namespace {

double off_diagonal_norm(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One unitary rotation zeroing a(p,q). The classical 2x2 symmetric Schur
// split, extended to complex entries by first rotating the phase of a(p,q)
// onto the real axis.
void jacobi_rotate(CMatrix& a, CMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase = apq / r;  // a(p,q) = r * phase

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * r);
  double t;  // tangent of the rotation angle, smaller root for stability
  if (tau >= 0.0)
    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
  else
    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  // G differs from the identity only at (p,p)=c, (p,q)=s,
  // (q,p)=-s*conj(phase), (q,q)=c*conj(phase); update A <- G^dag A G.
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {  // columns: [cp', cq'] = [cp, cq] G
    const Complex aip = a(i, p), aiq = a(i, q);
    a(i, p) = c * aip - s * std::conj(phase) * aiq;
    a(i, q) = s * phase * aip + c * aiq;
  }
  for (std::size_t j = 0; j < n; ++j) {  // rows: G^dag from the left
    const Complex apj = a(p, j), aqj = a(q, j);
    a(p, j) = c * apj - s * phase * aqj;
    a(q, j) = s * std::conj(phase) * apj + c * aqj;
  }
  a(p, q) = 0.0;  // exact by construction
  a(q, p) = 0.0;
  a(p, p) = Complex(a(p, p).real(), 0.0);
  a(q, q) = Complex(a(q, q).real(), 0.0);

  for (std::size_t i = 0; i < n; ++i) {  // accumulate V <- V G
    const Complex vip = v(i, p), viq = v(i, q);
    v(i, p) = c * vip - s * std::conj(phase) * viq;
    v(i, q) = s * phase * vip + c * viq;
  }
}

}  // namespace

Spectrum hermitian_eig(const CMatrix& input) {
  require_hermitian(input);
  const std::size_t n = input.rows();

  CMatrix a = input;
  CMatrix v = CMatrix::identity(n);
  const double norm = input.frobenius_norm();
  const double threshold = 1e-12 * norm;

  constexpr int kMaxSweeps = 100;
  bool converged = norm == 0.0 || n == 1;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
  }
  if (!converged && off_diagonal_norm(a) > threshold) {
    std::ostringstream os;
    os << "hermitian_eig: no convergence after " << kMaxSweeps
       << " sweeps, off-diagonal residual " << off_diagonal_norm(a)
       << " (threshold " << threshold << ")";
    throw std::runtime_error(os.str());
  }
  // one polishing sweep: quadratic convergence takes the residual from the
  // 1e-12 stopping threshold down to machine scale
  if (norm != 0.0 && n > 1)
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  Spectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors = CMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    out.eigenvalues[k] = a(src, src).real();
    // canonical phase: largest-magnitude component real and nonnegative
    std::size_t imax = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double m = std::abs(v(i, src));
      if (m > best) {
        best = m;
        imax = i;
      }
    }
    Complex phase{1.0, 0.0};
    if (best > 0.0) phase = std::abs(v(imax, src)) / v(imax, src);
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, src) * phase;
  }
  return out;
}

CMatrix partial_trace(const CMatrix& rho, int n_qubits, std::span<const int> keep) {
  if (n_qubits < 1 || n_qubits > 12)
    throw std::invalid_argument("partial_trace: n_qubits out of range [1,12]");
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (rho.rows() != dim || rho.cols() != dim)
    throw std::invalid_argument("partial_trace: matrix dimension is not 2^n_qubits");
  if (keep.empty() || keep.size() > static_cast<std::size_t>(n_qubits))
    throw std::invalid_argument("partial_trace: keep list size out of range");
  std::vector<bool> seen(n_qubits, false);
  for (int q : keep) {
    if (q < 0 || q >= n_qubits)
      throw std::invalid_argument("partial_trace: qubit index out of range");
    if (seen[q]) throw std::invalid_argument("partial_trace: duplicate qubit index");
    seen[q] = true;
  }
  const double trace_dev = std::abs(rho.trace() - Complex{1.0, 0.0});
  if (trace_dev > 1e-12) {
    std::ostringstream os;
    os << "partial_trace: trace deviates from 1 by " << trace_dev;
    throw std::invalid_argument(os.str());
  }

  std::vector<int> env;
  for (int q = 0; q < n_qubits; ++q)
    if (!seen[q]) env.push_back(q);

  const auto bit_pos = [n_qubits](int q) { return n_qubits - 1 - q; };
  const std::size_t kept = keep.size();
  const std::size_t out_dim = std::size_t{1} << kept;
  const std::size_t env_dim = std::size_t{1} << env.size();

  CMatrix out(out_dim, out_dim);
  for (std::size_t r = 0; r < out_dim; ++r) {
    for (std::size_t c = 0; c < out_dim; ++c) {
      std::size_t base_r = 0, base_c = 0;
      for (std::size_t k = 0; k < kept; ++k) {
        const std::size_t pos = std::size_t{1} << bit_pos(keep[k]);
        if ((r >> (kept - 1 - k)) & 1u) base_r |= pos;
        if ((c >> (kept - 1 - k)) & 1u) base_c |= pos;
      }
      Complex sum{};
      for (std::size_t e = 0; e < env_dim; ++e) {
        std::size_t mask = 0;
        for (std::size_t k = 0; k < env.size(); ++k)
          if ((e >> (env.size() - 1 - k)) & 1u) mask |= std::size_t{1} << bit_pos(env[k]);
        sum += rho(base_r | mask, base_c | mask);
      }
      out(r, c) = sum;
    }
  }
  return out;
}

CMatrix partial_trace_pair(const CMatrix& rho, int n_qubits, std::pair<int, int> keep) {
  const int pair[2] = {keep.first, keep.second};
  return partial_trace(rho, n_qubits, pair);
}

}  // namespace xyzchain
