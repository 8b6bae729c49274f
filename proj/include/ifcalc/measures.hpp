#pragma once

#include "ifcalc/pair.hpp"

namespace ifcalc {

/// Per-pair record of the point measures (distance inputs excluded).
struct MeasureReport {
  double certainty;       // g, in [0, 1]
  double score;           // r, in [-1, 1]
  double uncertainty;     // e = 1 - g
  double ambiguity;       // alpha
  double incompleteness;  // pi
};

/// g = |mu - nu| / (2 - mu - nu): dissimilarity of a pair from its complement.
double certainty(const IfsPair& p) noexcept;

/// r = (mu - nu) / (2 - mu - nu), equivalently tau / (1 + pi).
double score(const IfsPair& p) noexcept;

/// e = 1 - g.
double uncertainty(const IfsPair& p) noexcept;

MeasureReport measure_report(const IfsPair& p) noexcept;

}  // namespace ifcalc
