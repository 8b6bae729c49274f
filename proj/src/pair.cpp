#include "ifcalc/pair.hpp"

#include <cmath>
#include <cstdio>

namespace ifcalc {
namespace {

[[noreturn]] void throw_domain(const char* type, double a, double b,
                               const char* what) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%s(%.17g, %.17g): %s", type, a, b, what);
  throw DomainViolation(buf);
}

double clip01(double x) noexcept { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

}  // namespace

IfsPair IfsPair::clamp(double mu, double nu) {
  if (!std::isfinite(mu) || !std::isfinite(nu)) {
    throw_domain("IfsPair", mu, nu, "coordinates must be finite");
  }
  mu = clip01(mu);
  nu = clip01(nu);
  // Remove any excess of mu + nu over 1 equally from both coordinates; this
  // keeps tau = mu - nu unchanged. A second pass absorbs the at-most-one-ulp
  // residual the first subtraction can leave.
  for (int pass = 0; pass < 2; ++pass) {
    const double excess = (mu + nu) - 1.0;
    if (excess <= 0.0) break;
    mu -= excess / 2.0;
    nu -= excess / 2.0;
  }
  return IfsPair(mu, nu);
}

IfsPair IfsPair::make(double mu, double nu) {
  if (!(mu >= -kValidationSlack) || !(mu <= 1.0 + kValidationSlack)) {
    throw_domain("IfsPair", mu, nu, "mu outside [0, 1]");
  }
  if (!(nu >= -kValidationSlack) || !(nu <= 1.0 + kValidationSlack)) {
    throw_domain("IfsPair", mu, nu, "nu outside [0, 1]");
  }
  if (!(mu + nu <= 1.0 + kValidationSlack)) {
    throw_domain("IfsPair", mu, nu, "mu + nu exceeds 1");
  }
  return clamp(mu, nu);
}

SecondaryPair SecondaryPair::make(double tau, double pi) {
  if (!(tau >= -1.0 - kValidationSlack) || !(tau <= 1.0 + kValidationSlack)) {
    throw_domain("SecondaryPair", tau, pi, "tau outside [-1, 1]");
  }
  if (!(pi >= -kValidationSlack) || !(pi <= 1.0 + kValidationSlack)) {
    throw_domain("SecondaryPair", tau, pi, "pi outside [0, 1]");
  }
  if (!(std::abs(tau) + pi <= 1.0 + kValidationSlack)) {
    throw_domain("SecondaryPair", tau, pi, "|tau| + pi exceeds 1");
  }
  tau = tau < -1.0 ? -1.0 : (tau > 1.0 ? 1.0 : tau);
  pi = pi < 0.0 ? 0.0 : (pi > 1.0 ? 1.0 : pi);
  double excess = (std::abs(tau) + pi) - 1.0;
  if (excess > 0.0) {
    // Shrink pi first, then the magnitude of tau. Reachable only within the
    // validation slack, so the projection choice is numerically immaterial.
    const double from_pi = excess < pi ? excess : pi;
    pi -= from_pi;
    excess -= from_pi;
    if (excess > 0.0) {
      tau = tau >= 0.0 ? tau - excess : tau + excess;
    }
  }
  return SecondaryPair(tau, pi);
}

// mu + nu is evaluated as a single sum so that every derived quantity is
// bitwise invariant under swapping mu and nu.
double incompleteness(const IfsPair& p) noexcept {
  return 1.0 - (p.mu() + p.nu());
}

double net_truth(const IfsPair& p) noexcept { return p.mu() - p.nu(); }

double ambiguity(const IfsPair& p) noexcept {
  return 1.0 - (std::abs(net_truth(p)) + incompleteness(p));
}

SecondaryPair to_secondary(const IfsPair& p) {
  return SecondaryPair::make(net_truth(p), incompleteness(p));
}

IfsPair from_secondary(const SecondaryPair& s) {
  const double mu = (1.0 - s.pi() + s.tau()) / 2.0;
  const double nu = (1.0 - s.pi() - s.tau()) / 2.0;
  return IfsPair::make(mu, nu);
}

IfsPair complement(const IfsPair& p) { return IfsPair::make(p.nu(), p.mu()); }

}  // namespace ifcalc
