#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ifcalc/verify.hpp"

namespace ifcalc::cli {

/// Per-pair columns the measure and sweep commands can emit.
enum class Measure {
  kCertainty,           // g
  kScore,               // r
  kUncertainty,         // e
  kEntropyNormalized,   // E_SN
  kFuzziness,           // E_A
  kIncompletenessPart,  // E_U
  kAmbiguity,           // alpha
  kIncompleteness,      // pi
};

const std::vector<Measure>& all_measures();
const char* measure_name(Measure m);

/// Parses a comma-separated list of column tokens (g, r, e, E_SN, E_A, E_U,
/// alpha, pi). Throws DomainViolation on an unknown token.
std::vector<Measure> parse_measure_list(const std::string& list);

struct MeasureOptions {
  bool strict = false;          // reject out-of-domain rows instead of clamping
  bool aggregate_mean = false;  // append a labelled arithmetic-mean row
  std::vector<Measure> measures = all_measures();
};

/// Reads rows `id?, mu, nu` and writes one row per input record with the
/// selected measures at 12 significant digits, preserving row order. Unless
/// strict, out-of-domain rows are projected onto the admissible triangle and
/// flagged in a trailing `clamped` column.
void cmd_measure(std::istream& in, std::ostream& out,
                 const MeasureOptions& options);

struct DistanceOptions {
  bool strict = false;
  bool aggregate_mean = false;
};

/// Reads rows `id?, mu1, nu1, mu2, nu2` and emits l1, D, S per row.
void cmd_distance(std::istream& in, std::ostream& out,
                  const DistanceOptions& options);

struct SweepConfig {
  double step = 0.01;  // must divide 1 and lie in (0, 0.5]
  std::vector<Measure> measures = all_measures();
  std::string output_path;  // empty: standard output
};

/// Emits rows (mu, nu, measures...) for every lattice point of the admissible
/// triangle, row-major, suitable for contour plotting.
/// Throws DomainViolation for an invalid config, IoError on unwritable output.
void cmd_sweep(const SweepConfig& config);

/// Runs the full verification report. Returns 0 if every property passed,
/// 1 otherwise.
int cmd_verify(std::ostream& out, const verify::Options& options);

}  // namespace ifcalc::cli
