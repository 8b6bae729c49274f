#pragma once

#include <optional>

#include "ifcalc/pair.hpp"

namespace ifcalc {

/// Bundle of the three distance figures for a pair of pairs.
struct DistanceResult {
  double l1;          // taxicab distance, in [0, 2]
  double normalized;  // D, in [0, 1]
  double similarity;  // S = 1 - D
};

/// Auxiliary corner point C = (1, 1) used by the triangle construction.
/// It deliberately violates mu + nu <= 1, so it is kept as raw coordinates
/// and never becomes an IfsPair.
inline constexpr double kCornerMu = 1.0;
inline constexpr double kCornerNu = 1.0;

/// L1 distance between raw coordinate pairs (no admissibility requirement).
double l1_raw(double mu_a, double nu_a, double mu_b, double nu_b) noexcept;

/// d(P,Q) = |mu_p - mu_q| + |nu_p - nu_q|, in [0, 2].
double l1_distance(const IfsPair& p, const IfsPair& q) noexcept;

/// Normalized distance D(P,Q) = d(P,Q) / (2 + pi_p + pi_q), in [0, 1].
/// The denominator equals d(P,C) + d(C,Q) for the corner C and is always >= 2.
double distance(const IfsPair& p, const IfsPair& q) noexcept;

/// S(P,Q) = 1 - D(P,Q).
double similarity(const IfsPair& p, const IfsPair& q) noexcept;

DistanceResult distance_result(const IfsPair& p, const IfsPair& q) noexcept;

/// A triple witnessing that D is not a metric: D(p,r) > D(p,q) + D(q,r).
struct TriangleViolation {
  IfsPair p, q, r;
  double direct;    // D(p, r)
  double detour;    // D(p, q) + D(q, r)
};

/// Exhaustively scans the lattice of valid pairs with the given step for a
/// triple violating the triangle inequality of D by more than 1e-12.
/// Scan order is p, then q, then r, each row-major in (mu, nu), and the first
/// hit is returned, so the result is reproducible.
/// Requires 0 < step <= 0.25; throws DomainViolation otherwise.
std::optional<TriangleViolation> find_triangle_violation(double step);

}  // namespace ifcalc
