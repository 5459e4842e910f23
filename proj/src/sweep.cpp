#include "xyzchain/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>

#include "xyzchain/linalg.hpp"
#include "xyzchain/thermal.hpp"

namespace xyzchain {

namespace {

const char* parameter_name(SweepParameter p) {
  switch (p) {
    case SweepParameter::b_field: return "B";
    case SweepParameter::temperature: return "T";
    case SweepParameter::j_z: return "JZ";
    case SweepParameter::gamma: return "GAMMA";
    case SweepParameter::j_mean: return "J";
  }
  return "?";
}

double axis_value(const SweepAxis& ax, int idx) {
  if (ax.steps == 1) return ax.min;
  return ax.min + (ax.max - ax.min) * (double(idx) / double(ax.steps - 1));
}

void apply_parameter(ChainParams& p, double& t, SweepParameter which, double value) {
  switch (which) {
    case SweepParameter::b_field:
      p.b_field = value;
      return;
    case SweepParameter::temperature:
      t = value;
      return;
    case SweepParameter::j_z:
      p.jz = value;
      return;
    case SweepParameter::gamma: {
      const double j = p.j_mean();
      p.jx = j * (1.0 + value);
      p.jy = j * (1.0 - value);
      return;
    }
    case SweepParameter::j_mean: {
      const double g = p.gamma();  // throws when jx + jy == 0
      p.jx = value * (1.0 + g);
      p.jy = value * (1.0 - g);
      return;
    }
  }
}

void validate_axis(const SweepAxis& ax) {
  if (ax.steps < 1) throw std::invalid_argument("sweep axis needs steps >= 1");
  if (!std::isfinite(ax.min) || !std::isfinite(ax.max))
    throw std::invalid_argument("sweep axis range must be finite");
  if (ax.steps > 1 && !(ax.min < ax.max))
    throw std::invalid_argument("sweep axis needs min < max");
  if (ax.param == SweepParameter::temperature && ax.min < 0.0)
    throw std::invalid_argument("temperature axis cannot go below 0");
}

SweepRecord evaluate_point(ChainParams params, double t, std::pair<int, int> pair,
                           Engine engine) {
  SweepRecord rec;
  rec.params = params;
  rec.temperature = t;
  rec.pair = pair;

  const bool closed = engine == Engine::closed_form ||
                      (engine == Engine::automatic && params.n_sites == 2);
  if (closed && params.n_sites == 2 && t > 0.0) {
    const auto lambdas = two_qubit_thermal_lambdas(params, t);
    const ConcurrenceValue cv = concurrence_from_lambdas(lambdas);
    rec.concurrence = cv.c;
    rec.lambdas = cv.lambdas;
    rec.log_z = two_qubit_log_partition(params, t);
  } else {
    // generic pipeline; T = 0 grid points take the ground-space path
    const ThermalState ts = gibbs_state(build_hamiltonian(params), t);
    const CMatrix rho4 = partial_trace_pair(ts.rho, params.n_sites, pair);
    const ConcurrenceValue cv = concurrence_wootters(rho4);
    rec.concurrence = cv.c;
    rec.lambdas = cv.lambdas;
    rec.log_z = ts.log_partition;
  }
  return rec;
}

double concurrence_at(const ChainParams& p, double t, std::pair<int, int> pair) {
  return evaluate_point(p, t, pair, Engine::automatic).concurrence;
}

}  // namespace

int default_thread_count() {
  if (const char* env = std::getenv("XYZCHAIN_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v <= 256) return int(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : int(hw);
}

SweepResult run_sweep(const SweepSpec& spec) {
  spec.base.validate();
  if (spec.axis1) validate_axis(*spec.axis1);
  if (spec.axis2) {
    if (!spec.axis1)
      throw std::invalid_argument("axis2 given without axis1");
    validate_axis(*spec.axis2);
    if (spec.axis1->param == spec.axis2->param)
      throw std::invalid_argument("sweep axes must name distinct parameters");
  }
  if (spec.engine == Engine::closed_form && spec.base.n_sites != 2)
    throw std::invalid_argument("closed-form engine requires n_sites = 2");
  const bool t_swept =
      (spec.axis1 && spec.axis1->param == SweepParameter::temperature) ||
      (spec.axis2 && spec.axis2->param == SweepParameter::temperature);
  if (!t_swept && !(spec.temperature >= 0.0))
    throw std::invalid_argument("sweep temperature must be >= 0");
  if (spec.pair.first == spec.pair.second || spec.pair.first < 0 ||
      spec.pair.second < 0 || spec.pair.first >= spec.base.n_sites ||
      spec.pair.second >= spec.base.n_sites)
    throw std::invalid_argument("sweep pair indices invalid for this chain");

  const int steps1 = spec.axis1 ? spec.axis1->steps : 1;
  const int steps2 = spec.axis2 ? spec.axis2->steps : 1;
  const std::size_t total = std::size_t(steps1) * std::size_t(steps2);

  SweepResult result;
  result.steps1 = steps1;
  result.steps2 = steps2;
  result.records.resize(total);

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  std::size_t error_index = SIZE_MAX;
  std::string error_what;

  auto worker = [&]() {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= total || failed.load()) return;
      const int i1 = int(idx / std::size_t(steps2));
      const int i2 = int(idx % std::size_t(steps2));
      ChainParams p = spec.base;
      double t = spec.temperature;
      try {
        if (spec.axis1) apply_parameter(p, t, spec.axis1->param, axis_value(*spec.axis1, i1));
        if (spec.axis2) apply_parameter(p, t, spec.axis2->param, axis_value(*spec.axis2, i2));
        result.records[idx] = evaluate_point(p, t, spec.pair, spec.engine);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (idx < error_index) {
          error_index = idx;
          std::ostringstream os;
          os << "sweep point " << idx;
          if (spec.axis1)
            os << " (" << parameter_name(spec.axis1->param) << " = "
               << axis_value(*spec.axis1, i1);
          if (spec.axis2)
            os << ", " << parameter_name(spec.axis2->param) << " = "
               << axis_value(*spec.axis2, i2);
          if (spec.axis1) os << ")";
          os << " failed: " << e.what();
          error_what = os.str();
        }
        failed.store(true);
      }
    }
  };

  int n_threads = spec.thread_hint > 0 ? spec.thread_hint : default_thread_count();
  n_threads = int(std::min<std::size_t>(std::size_t(n_threads), total));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  if (failed.load()) throw sweep_error(error_what, error_index);
  return result;
}

CriticalPoint find_critical_field_zero_t(const ChainParams& p, double b_lo,
                                         double b_hi, double tol) {
  if (!(b_lo < b_hi)) throw std::invalid_argument("critical field: need b_lo < b_hi");
  if (!(tol > 0.0)) throw std::invalid_argument("critical field: tol must be > 0");

  const auto value_at = [&](double b) {
    ChainParams q = p;
    q.b_field = b;
    return zero_t_concurrence(q);
  };

  double lo = b_lo, hi = b_hi;
  const double f_lo = value_at(lo);
  const double f_hi = value_at(hi);
  // the transition shows as a jump, not a sign change: demand a real drop
  if (std::abs(f_lo - f_hi) <= 0.1) {
    std::ostringstream os;
    os << "no ground-state transition in [" << b_lo << ", " << b_hi
       << "]: concurrence moves only " << std::abs(f_lo - f_hi);
    throw no_transition_error(os.str());
  }

  // The left branch is a plateau (maximal concurrence, C = 1 in the
  // closed-form region); classify midpoints by plateau membership. Distance
  // to the endpoint values would misfile points just past the jump, where
  // the falling branch can still be close to the plateau value.
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (std::abs(value_at(mid) - f_lo) <= 1e-6)
      lo = mid;
    else
      hi = mid;
  }

  CriticalPoint cp;
  cp.kind = CriticalKind::field_at_zero_t;
  cp.location = 0.5 * (lo + hi);
  cp.bracket_width = hi - lo;
  cp.detection = Detection::discontinuity;
  return cp;
}

CriticalPoint find_critical_temperature(const ChainParams& p, double t_lo,
                                        double t_hi, double tol,
                                        CrossingSelect which,
                                        std::pair<int, int> pair,
                                        int scan_points, double eps_zero) {
  if (!(t_lo < t_hi) || t_lo < 0.0)
    throw std::invalid_argument("critical temperature: need 0 <= t_lo < t_hi");
  if (!(tol > 0.0)) throw std::invalid_argument("critical temperature: tol must be > 0");
  if (scan_points < 2) throw std::invalid_argument("critical temperature: scan too coarse");

  const auto entangled = [&](double t) {
    return concurrence_at(p, t, pair) > eps_zero;
  };

  std::vector<double> ts(scan_points);
  std::vector<char> on(scan_points);
  for (int i = 0; i < scan_points; ++i) {
    ts[i] = t_lo + (t_hi - t_lo) * (double(i) / double(scan_points - 1));
    on[i] = entangled(ts[i]) ? 1 : 0;
  }

  int bracket = -1;
  for (int i = 0; i + 1 < scan_points; ++i) {
    if (on[i] != on[i + 1]) {
      bracket = i;
      if (which == CrossingSelect::first_above) break;
    }
  }
  if (bracket < 0) {
    std::ostringstream os;
    os << "no entanglement crossing in [" << t_lo << ", " << t_hi << "] at eps_zero "
       << eps_zero;
    throw no_transition_error(os.str());
  }

  double lo = ts[bracket], hi = ts[bracket + 1];
  const bool lo_on = on[bracket] != 0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (entangled(mid) == lo_on)
      lo = mid;
    else
      hi = mid;
  }

  CriticalPoint cp;
  cp.kind = CriticalKind::temperature;
  cp.location = 0.5 * (lo + hi);
  cp.bracket_width = hi - lo;
  cp.detection = Detection::sign_change;
  return cp;
}

std::vector<std::pair<double, double>> detect_revival(const ChainParams& p,
                                                      double t_lo, double t_hi,
                                                      int resolution,
                                                      std::pair<int, int> pair,
                                                      double eps_zero) {
  if (resolution < 100)
    throw std::invalid_argument("detect_revival: resolution must be >= 100");
  if (!(t_lo < t_hi) || t_lo < 0.0)
    throw std::invalid_argument("detect_revival: need 0 <= t_lo < t_hi");

  std::vector<std::pair<double, double>> intervals;
  bool open = false;
  double start = 0.0, last_on = 0.0;
  for (int i = 0; i < resolution; ++i) {
    const double t = t_lo + (t_hi - t_lo) * (double(i) / double(resolution - 1));
    const bool on = concurrence_at(p, t, pair) > eps_zero;
    if (on && !open) {
      open = true;
      start = t;
    }
    if (on) last_on = t;
    if (!on && open) {
      open = false;
      intervals.emplace_back(start, last_on);
    }
  }
  if (open) intervals.emplace_back(start, last_on);
  return intervals;
}

}  // namespace xyzchain
