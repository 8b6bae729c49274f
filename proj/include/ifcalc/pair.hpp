#pragma once

#include "ifcalc/errors.hpp"

namespace ifcalc {

/// Constraint violations up to this slack are repaired onto the boundary;
/// anything larger is a DomainViolation.
inline constexpr double kValidationSlack = 1e-9;

/// An intuitionistic fuzzy pair (mu, nu) in the explicit space:
/// mu is the degree of truth, nu the degree of falsity, mu + nu <= 1.
///
/// Instances are immutable and can only be obtained through the validating
/// factories, so every downstream computation may assume the invariants hold.
class IfsPair {
 public:
  /// Validates (mu, nu). Values inside the admissible triangle pass through
  /// unchanged; values violating a constraint by at most kValidationSlack are
  /// projected onto the boundary. Throws DomainViolation otherwise.
  static IfsPair make(double mu, double nu);

  /// Projects any finite (mu, nu) onto the admissible triangle: each
  /// coordinate is clipped into [0,1], then any excess of mu + nu over 1 is
  /// removed equally from both coordinates (preserving mu - nu).
  /// Throws DomainViolation only for non-finite input.
  static IfsPair clamp(double mu, double nu);

  double mu() const noexcept { return mu_; }
  double nu() const noexcept { return nu_; }

  friend bool operator==(const IfsPair&, const IfsPair&) = default;

 private:
  IfsPair(double mu, double nu) noexcept : mu_(mu), nu_(nu) {}

  double mu_;
  double nu_;
};

/// The same information in the implicit space (tau, pi):
/// tau = mu - nu is the net truth, pi = 1 - mu - nu the degree of
/// incompleteness, with |tau| + pi <= 1.
class SecondaryPair {
 public:
  /// Validates (tau, pi) with the same slack-and-project policy as
  /// IfsPair::make.
  static SecondaryPair make(double tau, double pi);

  double tau() const noexcept { return tau_; }
  double pi() const noexcept { return pi_; }

  friend bool operator==(const SecondaryPair&, const SecondaryPair&) = default;

 private:
  SecondaryPair(double tau, double pi) noexcept : tau_(tau), pi_(pi) {}

  double tau_;
  double pi_;
};

/// pi = 1 - mu - nu, the unassigned mass of the pair.
double incompleteness(const IfsPair& p) noexcept;

/// tau = mu - nu, the signed balance of evidence.
double net_truth(const IfsPair& p) noexcept;

/// alpha = 1 - |tau| - pi, the evidence committed symmetrically to both sides.
double ambiguity(const IfsPair& p) noexcept;

SecondaryPair to_secondary(const IfsPair& p);

/// Inverse transform: mu = (1 - pi + tau) / 2, nu = (1 - pi - tau) / 2.
IfsPair from_secondary(const SecondaryPair& s);

/// The pair with truth and falsity degrees swapped.
IfsPair complement(const IfsPair& p);

}  // namespace ifcalc
