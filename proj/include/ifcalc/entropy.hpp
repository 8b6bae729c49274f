#pragma once

#include "ifcalc/pair.hpp"

namespace ifcalc {

/// The escort fuzzy pair of an intuitionistic pair: the unique fuzzy pair
/// (mu_hat, nu_hat) with mu_hat + nu_hat = 1 whose difference equals the
/// source pair's score.
struct EscortPair {
  double mu_hat;
  double nu_hat;
};

/// The five algebraically equivalent closed forms of the Shannon entropy of
/// an intuitionistic pair. All agree within 1e-12 on every valid pair; the
/// canonical evaluation path is the escort composition (see entropy()), the
/// closed forms exist as independent witnesses.
enum class EntropyForm {
  kExplicit,   // in (mu, nu), via the escort coordinates written out
  kTauPi,      // in (tau, pi)
  kScore,      // in r
  kAbsScore,   // in |r|
  kCertainty,  // in g
};

/// All entropy figures for one pair.
struct EntropyBreakdown {
  double shannon;              // E_S, natural-log units, in [0, ln 2]
  double normalized;           // E_SN = E_S / ln 2, in [0, 1]
  double fuzziness;            // E_A: similarity to (0.5, 0.5)
  double incompleteness_part;  // E_U = ln(1 + pi) / ln 2: similarity to (0, 0)
};

/// Analytic partial derivatives of E_S in the (|tau|, pi) coordinates.
struct EntropyPartials {
  double d_abs_tau;  // <= 0 wherever defined
  double d_pi;       // >= 0 wherever defined
};

/// (mu_hat, nu_hat) = ((mu + pi) / (1 + pi), (nu + pi) / (1 + pi)).
/// Satisfies mu <= mu_hat <= mu + pi and nu <= nu_hat <= nu + pi.
EscortPair escort(const IfsPair& p) noexcept;

/// Binary Shannon entropy -m ln(m) - (1-m) ln(1-m) with 0 ln(0) = 0,
/// in [0, ln 2]. Throws DomainViolation for m outside [0, 1].
double fuzzy_shannon(double m);

/// E_S: binary Shannon entropy of the escort pair, in natural-log units.
/// Evaluated as -(x ln x) summed over both escort coordinates, which makes
/// entropy(mu, nu) == entropy(nu, mu) hold bitwise.
double entropy(const IfsPair& p) noexcept;

/// Evaluates the selected closed form verbatim.
double entropy_variant(const IfsPair& p, EntropyForm form) noexcept;

/// E_SN = E_S / ln 2, in [0, 1]; equals 1 on the whole diagonal mu == nu.
double entropy_normalized(const IfsPair& p) noexcept;

/// Splits E_SN into fuzziness plus incompleteness. The fuzziness term is
/// computed from its own closed form, not as a difference, so the additive
/// identity E_A + E_U = E_SN stays falsifiable.
EntropyBreakdown entropy_decomposition(const IfsPair& p) noexcept;

/// Analytic partials of E_S with respect to |tau| and pi:
///   dE/d|tau| = (1/2) (1/(1+pi)) ln((1-g)/(1+g))
///   dE/dpi    = -(1/2) (|tau|/(1+pi)^2) ln((1-g)/(1+g))
/// Defined only where |tau| > 0 (|tau| is non-smooth at 0) and g < 1
/// (logarithm singular); throws NonDifferentiable elsewhere.
EntropyPartials entropy_partials(const IfsPair& p);

}  // namespace ifcalc
