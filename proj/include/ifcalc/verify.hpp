#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace ifcalc::verify {

inline constexpr std::uint64_t kDefaultSeed = 123456789;

/// Knobs for the verification run. Defaults reproduce the reference report.
struct Options {
  std::uint64_t seed = kDefaultSeed;
  int grid_subdivisions = 100;       // per-pair suites: step 0.01 lattice
  int coarse_subdivisions = 20;      // all-pairs suites: step 0.05 lattice
  int monotonicity_samples = 10000;  // accepted hypothesis pairs per suite
  int gradient_points = 1000;        // interior points for derivative checks
  double violation_search_step = 0.25;
  std::map<std::string, double> tolerance_overrides;  // keyed by property name
};

struct PropertyResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string note;
};

struct Report {
  std::uint64_t seed = 0;
  int grid_subdivisions = 0;
  std::vector<PropertyResult> results;

  bool all_passed() const;
};

/// Names accepted in Options::tolerance_overrides, in report order.
const std::vector<std::string>& property_names();

/// Runs every property suite. Deterministic for fixed Options.
/// Throws DomainViolation if an override names an unknown property.
Report run_all(const Options& options = {});

/// One line per property: name, max observed deviation, tolerance, status.
void write_report(const Report& report, std::ostream& out);

}  // namespace ifcalc::verify
