#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace xyzchain {

struct SuiteResult {
  std::string name;
  bool pass = false;
  double max_dev = 0.0;
  std::vector<std::string> details;
};

struct ValidationOptions {
  std::uint64_t seed = 12345;
  int draws = 1000;
  /// Negative control: flips a sign inside one cross-check route; the
  /// affected suite must then fail.
  bool self_test = false;
};

struct ValidationReport {
  std::vector<SuiteResult> suites;
  bool all_pass() const;
};

/// Runs every cross-check suite at fixed seeds:
///  - oracle-triangle: generic Wootters vs X-state closed form vs thermal
///    closed form, pairwise within 1e-9 on random two-site draws;
///  - zero-t-limit: piecewise ground-state concurrence vs the thermal
///    pipeline at T = 1e-3;
///  - symmetry: invariance under J -> -J, gamma -> -gamma, B -> -B, plus a
///    witnessed jz -> -jz violation;
///  - three-qubit-spectrum: closed-form energies and cluster projectors vs
///    numerical diagonalization, with the basis-convention statement;
///  - three-qubit-x-form, ring-symmetry, partition-function,
///    critical-field-analytic.
ValidationReport run_validation(const ValidationOptions& opts);

/// One line per suite in the "name: PASS (max dev 1.2e-12)" format.
std::string format_report(const ValidationReport& report);

/// JSON rendering of the full report, including per-suite details.
std::string report_to_json(const ValidationReport& report);

}  // namespace xyzchain
