#include "ifcalc/entropy.hpp"

#include <cmath>
#include <numbers>

#include "ifcalc/measures.hpp"

namespace ifcalc {
namespace {

// x ln(x) with the 0 ln(0) = 0 convention taken by explicit branch, so no
// NaN can arise from 0 * (-inf).
double xlnx(double x) noexcept { return x == 0.0 ? 0.0 : x * std::log(x); }

// Binary entropy of the distribution {m, 1 - m} written over both masses.
// Subtracting from 0.0 rather than negating keeps the result +0 at the
// degenerate ends.
double binary_entropy(double m_a, double m_b) noexcept {
  return 0.0 - (xlnx(m_a) + xlnx(m_b));
}

}  // namespace

EscortPair escort(const IfsPair& p) noexcept {
  const double pi = incompleteness(p);
  return EscortPair{(p.mu() + pi) / (1.0 + pi), (p.nu() + pi) / (1.0 + pi)};
}

double fuzzy_shannon(double m) {
  if (!(m >= 0.0 && m <= 1.0)) {
    throw DomainViolation("fuzzy_shannon: argument must lie in [0, 1]");
  }
  if (m == 0.0 || m == 1.0) return 0.0;
  return binary_entropy(m, 1.0 - m);
}

double entropy(const IfsPair& p) noexcept {
  const EscortPair hat = escort(p);
  return binary_entropy(hat.mu_hat, hat.nu_hat);
}

double entropy_variant(const IfsPair& p, EntropyForm form) noexcept {
  switch (form) {
    case EntropyForm::kExplicit: {
      const double pi = incompleteness(p);
      return binary_entropy((p.mu() + pi) / (1.0 + pi),
                            (p.nu() + pi) / (1.0 + pi));
    }
    case EntropyForm::kTauPi: {
      const double pi = incompleteness(p);
      const double ratio = net_truth(p) / (1.0 + pi);
      return binary_entropy((1.0 + ratio) / 2.0, (1.0 - ratio) / 2.0);
    }
    case EntropyForm::kScore: {
      const double r = score(p);
      return binary_entropy((1.0 + r) / 2.0, (1.0 - r) / 2.0);
    }
    case EntropyForm::kAbsScore: {
      const double r = std::abs(score(p));
      return binary_entropy((1.0 + r) / 2.0, (1.0 - r) / 2.0);
    }
    case EntropyForm::kCertainty: {
      const double g = certainty(p);
      return binary_entropy((1.0 + g) / 2.0, (1.0 - g) / 2.0);
    }
  }
  return 0.0;  // unreachable
}

double entropy_normalized(const IfsPair& p) noexcept {
  return entropy(p) / std::numbers::ln2;
}

EntropyBreakdown entropy_decomposition(const IfsPair& p) noexcept {
  const double pi = incompleteness(p);
  const double shannon = entropy(p);
  const double fuzziness =
      (0.0 - (xlnx(p.mu() + pi) + xlnx(p.nu() + pi))) /
      ((1.0 + pi) * std::numbers::ln2);
  const double incompleteness_part = std::log1p(pi) / std::numbers::ln2;
  return EntropyBreakdown{shannon, shannon / std::numbers::ln2, fuzziness,
                          incompleteness_part};
}

EntropyPartials entropy_partials(const IfsPair& p) {
  const double abs_tau = std::abs(net_truth(p));
  if (abs_tau == 0.0) {
    throw NonDifferentiable(
        "entropy_partials: |tau| is not differentiable at tau = 0");
  }
  const double g = certainty(p);
  if (g >= 1.0) {
    throw NonDifferentiable(
        "entropy_partials: logarithm singular at g = 1");
  }
  const double pi = incompleteness(p);
  const double log_ratio = std::log((1.0 - g) / (1.0 + g));
  const double d_abs_tau = 0.5 * log_ratio / (1.0 + pi);
  const double d_pi = -0.5 * abs_tau * log_ratio / ((1.0 + pi) * (1.0 + pi));
  return EntropyPartials{d_abs_tau, d_pi};
}

}  // namespace ifcalc
