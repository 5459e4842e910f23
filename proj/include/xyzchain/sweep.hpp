#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "xyzchain/entanglement.hpp"
#include "xyzchain/model.hpp"

namespace xyzchain {

enum class SweepParameter { b_field, temperature, j_z, gamma, j_mean };

struct SweepAxis {
  SweepParameter param = SweepParameter::b_field;
  double min = 0.0;
  double max = 0.0;
  int steps = 0;  // number of grid points, endpoints inclusive
};

enum class Engine {
  automatic,    // closed form for two sites at T > 0, generic otherwise
  closed_form,  // two-site thermal closed form (T = 0 points still use the
                // ground-space path)
  generic       // full diagonalization pipeline
};

struct SweepSpec {
  ChainParams base;
  std::optional<SweepAxis> axis1;
  std::optional<SweepAxis> axis2;
  double temperature = 1.0;  // used when T is not an axis
  std::pair<int, int> pair{0, 1};
  Engine engine = Engine::automatic;
  int thread_hint = 0;  // 0 = XYZCHAIN_THREADS env var or hardware default
};

struct SweepRecord {
  ChainParams params;
  double temperature = 0.0;
  std::pair<int, int> pair{0, 1};
  double concurrence = 0.0;
  std::array<double, 4> lambdas{};  // sorted descending
  double log_z = 0.0;
};

struct SweepResult {
  std::vector<SweepRecord> records;  // row-major in (axis1, axis2)
  int steps1 = 1;
  int steps2 = 1;
};

/// Raised when a grid point fails; carries its coordinates.
class sweep_error : public std::runtime_error {
 public:
  sweep_error(const std::string& what, std::size_t index)
      : std::runtime_error(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Raised by the critical-point finders when the bracket holds no transition.
class no_transition_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Evaluates concurrence (plus lambdas and ln Z) over the grid. Grid points
/// are independent and evaluated on thread_hint threads; records land in
/// row-major order and are bitwise identical for any thread count.
SweepResult run_sweep(const SweepSpec& spec);

enum class CriticalKind { field_at_zero_t, temperature };
enum class Detection { sign_change, discontinuity };

struct CriticalPoint {
  CriticalKind kind = CriticalKind::field_at_zero_t;
  double location = 0.0;
  double bracket_width = 0.0;
  Detection detection = Detection::sign_change;
};

/// Locates the ground-state concurrence discontinuity (value drop > 0.1
/// across the bracket) of the two-site chain by bisection on B. For
/// 0 < jz <= J this lands on sqrt((J + jz)^2 - (J gamma)^2). Throws
/// no_transition_error when the endpoint values differ by <= 0.1.
CriticalPoint find_critical_field_zero_t(const ChainParams& p, double b_lo,
                                         double b_hi, double tol);

enum class CrossingSelect { first_above, last_below };

/// Brackets a crossing of (concurrence > eps_zero) on a uniform scan of
/// [t_lo, t_hi], then bisects it to tol. `which` picks the first or last
/// crossing when a revival curve has several.
CriticalPoint find_critical_temperature(const ChainParams& p, double t_lo,
                                        double t_hi, double tol,
                                        CrossingSelect which,
                                        std::pair<int, int> pair = {0, 1},
                                        int scan_points = 200,
                                        double eps_zero = 1e-6);

/// Maximal temperature intervals with concurrence > eps_zero on a
/// `resolution`-point scan (resolution >= 100). Two or more intervals mean
/// the entanglement revives after vanishing.
std::vector<std::pair<double, double>> detect_revival(
    const ChainParams& p, double t_lo, double t_hi, int resolution,
    std::pair<int, int> pair = {0, 1}, double eps_zero = 1e-6);

/// Default worker count: XYZCHAIN_THREADS if set, else hardware concurrency.
int default_thread_count();

}  // namespace xyzchain
