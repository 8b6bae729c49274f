#include "ifcalc/distance.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

namespace ifcalc {

double l1_raw(double mu_a, double nu_a, double mu_b, double nu_b) noexcept {
  return std::abs(mu_a - mu_b) + std::abs(nu_a - nu_b);
}

double l1_distance(const IfsPair& p, const IfsPair& q) noexcept {
  return l1_raw(p.mu(), p.nu(), q.mu(), q.nu());
}

double distance(const IfsPair& p, const IfsPair& q) noexcept {
  // pi_p + pi_q is summed before adding 2 so the result is bitwise symmetric
  // in (p, q).
  const double denom = 2.0 + (incompleteness(p) + incompleteness(q));
  return l1_distance(p, q) / denom;
}

double similarity(const IfsPair& p, const IfsPair& q) noexcept {
  return 1.0 - distance(p, q);
}

DistanceResult distance_result(const IfsPair& p, const IfsPair& q) noexcept {
  const double d = distance(p, q);
  return DistanceResult{l1_distance(p, q), d, 1.0 - d};
}

std::optional<TriangleViolation> find_triangle_violation(double step) {
  if (!(step > 0.0) || !(step <= 0.25)) {
    throw DomainViolation("find_triangle_violation: step must be in (0, 0.25]");
  }

  std::vector<IfsPair> points;
  const int count = static_cast<int>(std::floor(1.0 / step + 1e-9));
  for (int i = 0; i <= count; ++i) {
    for (int j = 0; j <= count; ++j) {
      const double mu = i * step;
      const double nu = j * step;
      if (mu + nu <= 1.0 + kValidationSlack) {
        points.push_back(IfsPair::make(mu, nu));
      }
    }
  }

  const std::size_t n = points.size();
  std::vector<double> d(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      d[a * n + b] = distance(points[a], points[b]);
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const double direct = d[a * n + c];
        const double detour = d[a * n + b] + d[b * n + c];
        if (direct > detour + 1e-12) {
          return TriangleViolation{points[a], points[b], points[c], direct,
                                   detour};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace ifcalc
