#include "ifcalc/measures.hpp"

#include <cmath>

namespace ifcalc {

// The shared denominator 2 - mu - nu equals 1 + pi and is always >= 1 for a
// valid pair. Summing mu + nu first keeps g and e bitwise symmetric under
// swapping mu and nu, and makes |score| == certainty exact.

double certainty(const IfsPair& p) noexcept {
  return std::abs(p.mu() - p.nu()) / (2.0 - (p.mu() + p.nu()));
}

double score(const IfsPair& p) noexcept {
  return (p.mu() - p.nu()) / (2.0 - (p.mu() + p.nu()));
}

double uncertainty(const IfsPair& p) noexcept { return 1.0 - certainty(p); }

MeasureReport measure_report(const IfsPair& p) noexcept {
  const double g = certainty(p);
  return MeasureReport{g, score(p), 1.0 - g, ambiguity(p), incompleteness(p)};
}

}  // namespace ifcalc
