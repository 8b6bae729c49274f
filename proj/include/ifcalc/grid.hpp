#pragma once

#include <cstddef>

#include "ifcalc/pair.hpp"

namespace ifcalc {

/// Number of lattice points (i/n, j/n) with i + j <= n.
constexpr std::size_t grid_point_count(int subdivisions) noexcept {
  const std::size_t n = static_cast<std::size_t>(subdivisions);
  return (n + 1) * (n + 2) / 2;
}

/// Visits every lattice pair (i/n, j/n) with i + j <= n in row-major (mu, nu)
/// order. The lattice lands exactly on the triangle boundary.
template <typename Fn>
void for_each_grid_pair(int subdivisions, Fn&& fn) {
  const double n = static_cast<double>(subdivisions);
  for (int i = 0; i <= subdivisions; ++i) {
    for (int j = 0; i + j <= subdivisions; ++j) {
      fn(IfsPair::make(i / n, j / n));
    }
  }
}

}  // namespace ifcalc
