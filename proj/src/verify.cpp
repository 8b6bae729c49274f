#include "ifcalc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>

#include "ifcalc/csv.hpp"
#include "ifcalc/distance.hpp"
#include "ifcalc/entropy.hpp"
#include "ifcalc/grid.hpp"
#include "ifcalc/measures.hpp"
#include "ifcalc/pair.hpp"

namespace ifcalc::verify {
namespace {

struct PropertySpec {
  const char* name;
  double default_tolerance;
};

// Order here is report order.
constexpr PropertySpec kProperties[] = {
    {"core_roundtrip_explicit", 1e-12},
    {"core_roundtrip_implicit", 1e-12},
    {"core_partition_unity", 1e-12},
    {"core_complement_involution", 0.0},
    {"core_complement_incompleteness", 1e-15},
    {"core_complement_net_truth", 0.0},
    {"distance_symmetry", 0.0},
    {"distance_identity", 0.0},
    {"distance_bounds", 0.0},
    {"distance_ratio_form", 1e-12},
    {"distance_l1_triangle_corner", 0.0},
    {"distance_denominator_floor", 0.0},
    {"distance_nonmetric_witness", 0.0},
    {"measures_certainty_symmetry", 0.0},
    {"measures_score_antisymmetry", 0.0},
    {"measures_uncertainty_symmetry", 0.0},
    {"measures_certainty_monotone", 1e-12},
    {"measures_score_monotone", 1e-12},
    {"measures_uncertainty_antitone", 1e-12},
    {"measures_certainty_range", 0.0},
    {"measures_certainty_distance_coherence", 1e-15},
    {"entropy_escort_sum", 1e-12},
    {"entropy_escort_score", 1e-12},
    {"entropy_escort_sandwich", 1e-12},
    {"entropy_five_form_agreement", 1e-12},
    {"entropy_symmetry", 0.0},
    {"entropy_monotone", 1e-12},
    {"entropy_normalized_monotone", 1e-12},
    {"entropy_gradient_signs", 0.0},
    {"entropy_gradient_fd", 1e-5},
    {"entropy_decomposition_sum", 1e-12},
    {"entropy_jensen_bound", 1e-12},
    {"entropy_boundary_finite", 0.0},
    {"entropy_boundary_continuity", 1e-6},
    {"cli_roundtrip_12sig", 0.0},
};

// Deterministic uniform doubles; the raw engine output is mapped to [0, 1)
// directly so the stream does not depend on library distribution internals.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  IfsPair triangle_pair() {
    while (true) {
      const double mu = uniform();
      const double nu = uniform();
      if (mu + nu <= 1.0) return IfsPair::make(mu, nu);
    }
  }

 private:
  std::mt19937_64 rng_;
};

struct MaxTracker {
  double value = 0.0;
  void see(double dev) { value = std::max(value, dev); }
};

double abs_diff(double a, double b) { return std::abs(a - b); }

std::string format_pair(const IfsPair& p) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "(%g,%g)", p.mu(), p.nu());
  return buf;
}

class Runner {
 public:
  explicit Runner(const Options& options) : options_(options) {
    for (const auto& [name, value] : options.tolerance_overrides) {
      if (std::find(property_names().begin(), property_names().end(), name) ==
          property_names().end()) {
        throw DomainViolation("unknown property in tolerance override: " +
                              name);
      }
      (void)value;
    }
    for_each_grid_pair(options.grid_subdivisions,
                       [&](const IfsPair& p) { grid_.push_back(p); });
    for_each_grid_pair(options.coarse_subdivisions,
                       [&](const IfsPair& p) { coarse_.push_back(p); });
    Sampler sampler(options.seed);
    for (int i = 0; i < 2000; ++i) {
      sampled_.push_back(sampler.triangle_pair());
    }
  }

  Report run() {
    Report report;
    report.seed = options_.seed;
    report.grid_subdivisions = options_.grid_subdivisions;

    core_suites();
    distance_suites();
    measure_suites();
    entropy_suites();
    cli_suites();

    report.results = std::move(results_);
    return report;
  }

 private:
  void add(const std::string& name, double max_deviation,
           std::string note = "") {
    double tolerance = 0.0;
    for (const auto& spec : kProperties) {
      if (name == spec.name) tolerance = spec.default_tolerance;
    }
    const auto it = options_.tolerance_overrides.find(name);
    if (it != options_.tolerance_overrides.end()) tolerance = it->second;
    results_.push_back(PropertyResult{name, max_deviation, tolerance,
                                      max_deviation <= tolerance,
                                      std::move(note)});
  }

  Sampler suite_sampler() { return Sampler(options_.seed + 0x9e3779b9 * ++suite_index_); }

  void core_suites() {
    MaxTracker explicit_rt, partition, involution, comp_pi, comp_tau;
    for (const IfsPair& p : grid_) {
      const IfsPair back = from_secondary(to_secondary(p));
      explicit_rt.see(abs_diff(back.mu(), p.mu()));
      explicit_rt.see(abs_diff(back.nu(), p.nu()));

      const double tau = net_truth(p);
      partition.see(
          std::abs(std::abs(tau) + incompleteness(p) + ambiguity(p) - 1.0));

      const IfsPair twice = complement(complement(p));
      involution.see(abs_diff(twice.mu(), p.mu()));
      involution.see(abs_diff(twice.nu(), p.nu()));

      const IfsPair bar = complement(p);
      comp_pi.see(abs_diff(incompleteness(bar), incompleteness(p)));
      comp_tau.see(std::abs(net_truth(bar) + tau));
    }
    add("core_roundtrip_explicit", explicit_rt.value);

    MaxTracker implicit_rt;
    const int n = options_.grid_subdivisions;
    for (int i = -n; i <= n; ++i) {
      for (int j = 0; std::abs(i) + j <= n; ++j) {
        const SecondaryPair s = SecondaryPair::make(
            static_cast<double>(i) / n, static_cast<double>(j) / n);
        const SecondaryPair back = to_secondary(from_secondary(s));
        implicit_rt.see(abs_diff(back.tau(), s.tau()));
        implicit_rt.see(abs_diff(back.pi(), s.pi()));
      }
    }
    add("core_roundtrip_implicit", implicit_rt.value);
    add("core_partition_unity", partition.value);
    add("core_complement_involution", involution.value);
    add("core_complement_incompleteness", comp_pi.value);
    add("core_complement_net_truth", comp_tau.value);
  }

  // All-pairs over the coarse lattice plus the random sample.
  template <typename Fn>
  void for_pair_combinations(Fn&& fn) const {
    for (const IfsPair& p : coarse_) {
      for (const IfsPair& q : coarse_) {
        fn(p, q);
      }
    }
    for (std::size_t i = 0; i + 1 < sampled_.size(); i += 2) {
      fn(sampled_[i], sampled_[i + 1]);
    }
  }

  void distance_suites() {
    MaxTracker symmetry, bounds, ratio, corner, denominator;
    for_pair_combinations([&](const IfsPair& p, const IfsPair& q) {
      const double d_pq = distance(p, q);
      symmetry.see(abs_diff(d_pq, distance(q, p)));
      bounds.see(std::max(0.0 - d_pq, d_pq - 1.0));

      const double via_corner = l1_raw(p.mu(), p.nu(), kCornerMu, kCornerNu) +
                                l1_raw(kCornerMu, kCornerNu, q.mu(), q.nu());
      ratio.see(abs_diff(d_pq, l1_distance(p, q) / via_corner));
      corner.see(l1_distance(p, q) - via_corner);
      denominator.see(2.0 - (2.0 + (incompleteness(p) + incompleteness(q))));
    });
    add("distance_symmetry", symmetry.value);

    MaxTracker identity;
    for (const IfsPair& p : grid_) identity.see(std::abs(distance(p, p)));
    add("distance_identity", identity.value);
    add("distance_bounds", bounds.value);
    add("distance_ratio_form", ratio.value);
    add("distance_l1_triangle_corner", corner.value);
    add("distance_denominator_floor", denominator.value);

    const auto witness = find_triangle_violation(options_.violation_search_step);
    std::string note;
    if (witness) {
      char buf[160];
      std::snprintf(buf, sizeof(buf), "P=%s Q=%s R=%s D(P,R)=%.9g > %.9g",
                    format_pair(witness->p).c_str(),
                    format_pair(witness->q).c_str(),
                    format_pair(witness->r).c_str(), witness->direct,
                    witness->detour);
      note = buf;
    } else {
      note = "no violating triple found";
    }
    add("distance_nonmetric_witness", witness ? 0.0 : 1.0, note);
  }

  // Draws hypothesis-satisfying ordered pairs until `needed` are accepted and
  // tracks the worst violation of `lhs <= rhs`.
  template <typename Hypothesis, typename Value>
  void monotone_suite(const std::string& name, Hypothesis&& hypothesis,
                      Value&& value) {
    Sampler sampler = suite_sampler();
    MaxTracker worst;
    const int needed = options_.monotonicity_samples;
    int accepted = 0;
    while (accepted < needed) {
      const IfsPair a = sampler.triangle_pair();
      const IfsPair b = sampler.triangle_pair();
      if (!hypothesis(a, b)) continue;
      ++accepted;
      worst.see(value(a) - value(b));
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%d accepted pairs", needed);
    add(name, worst.value, buf);
  }

  void measure_suites() {
    MaxTracker g_sym, r_anti, e_sym, range, coherence;
    const double g_origin = certainty(IfsPair::make(0.0, 0.0));
    const double g_corner = certainty(IfsPair::make(1.0, 0.0));
    for (const IfsPair& p : grid_) {
      const IfsPair bar = complement(p);
      g_sym.see(abs_diff(certainty(p), certainty(bar)));
      r_anti.see(std::abs(score(p) + score(bar)));
      e_sym.see(abs_diff(uncertainty(p), uncertainty(bar)));
      range.see(std::max(g_origin - certainty(p), certainty(p) - g_corner));
      coherence.see(abs_diff(certainty(p), distance(p, bar)));
    }
    add("measures_certainty_symmetry", g_sym.value);
    add("measures_score_antisymmetry", r_anti.value);
    add("measures_uncertainty_symmetry", e_sym.value);

    const auto abs_tau = [](const IfsPair& p) {
      return std::abs(net_truth(p));
    };
    const auto mass = [](const IfsPair& p) { return p.mu() + p.nu(); };
    monotone_suite(
        "measures_certainty_monotone",
        [&](const IfsPair& a, const IfsPair& b) {
          return abs_tau(a) <= abs_tau(b) && mass(a) <= mass(b);
        },
        [](const IfsPair& p) { return certainty(p); });
    monotone_suite(
        "measures_score_monotone",
        [&](const IfsPair& a, const IfsPair& b) {
          return net_truth(a) <= net_truth(b) && mass(a) <= mass(b);
        },
        [](const IfsPair& p) { return score(p); });
    monotone_suite(
        "measures_uncertainty_antitone",
        [&](const IfsPair& a, const IfsPair& b) {
          return abs_tau(a) >= abs_tau(b) && mass(a) >= mass(b);
        },
        [](const IfsPair& p) { return uncertainty(p); });

    add("measures_certainty_range", range.value);
    add("measures_certainty_distance_coherence", coherence.value);
  }

  void entropy_suites() {
    MaxTracker escort_sum, escort_score, sandwich, five_forms, symmetry,
        decomposition, jensen;
    constexpr EntropyForm kForms[] = {
        EntropyForm::kExplicit, EntropyForm::kTauPi, EntropyForm::kScore,
        EntropyForm::kAbsScore, EntropyForm::kCertainty};
    for (const IfsPair& p : grid_) {
      const EscortPair hat = escort(p);
      const double pi = incompleteness(p);
      escort_sum.see(std::abs(hat.mu_hat + hat.nu_hat - 1.0));
      escort_score.see(std::abs((hat.mu_hat - hat.nu_hat) - score(p)));
      sandwich.see(p.mu() - hat.mu_hat);
      sandwich.see(hat.mu_hat - (p.mu() + pi));
      sandwich.see(p.nu() - hat.nu_hat);
      sandwich.see(hat.nu_hat - (p.nu() + pi));

      double values[5];
      for (int f = 0; f < 5; ++f) values[f] = entropy_variant(p, kForms[f]);
      for (int a = 0; a < 5; ++a) {
        for (int b = a + 1; b < 5; ++b) {
          five_forms.see(abs_diff(values[a], values[b]));
        }
      }

      symmetry.see(abs_diff(entropy(p), entropy(complement(p))));

      const EntropyBreakdown parts = entropy_decomposition(p);
      decomposition.see(std::abs(parts.fuzziness + parts.incompleteness_part -
                                 parts.normalized));
      const double jensen_cap =
          -std::log((1.0 + pi) / 2.0) / std::numbers::ln2;
      jensen.see(parts.fuzziness - jensen_cap);
    }
    add("entropy_escort_sum", escort_sum.value);
    add("entropy_escort_score", escort_score.value);
    add("entropy_escort_sandwich", sandwich.value);
    add("entropy_five_form_agreement", five_forms.value);
    add("entropy_symmetry", symmetry.value);

    const auto abs_tau = [](const IfsPair& p) {
      return std::abs(net_truth(p));
    };
    const auto mass = [](const IfsPair& p) { return p.mu() + p.nu(); };
    const auto antitone_hypothesis = [&](const IfsPair& a, const IfsPair& b) {
      return abs_tau(a) >= abs_tau(b) && mass(a) >= mass(b);
    };
    monotone_suite("entropy_monotone", antitone_hypothesis,
                   [](const IfsPair& p) { return entropy(p); });
    monotone_suite("entropy_normalized_monotone", antitone_hypothesis,
                   [](const IfsPair& p) { return entropy_normalized(p); });

    gradient_suites();

    add("entropy_decomposition_sum", decomposition.value);
    add("entropy_jensen_bound", jensen.value);
    boundary_suites();
  }

  void gradient_suites() {
    // E_S as a function of the implicit coordinates, for the difference
    // quotients; rebuilt pairs keep the oracle on the public surface.
    const auto eval = [](double abs_tau, double pi) {
      return entropy_variant(from_secondary(SecondaryPair::make(abs_tau, pi)),
                             EntropyForm::kTauPi);
    };
    constexpr double kStep = 1e-6;
    constexpr double kMargin = 2e-6;  // skip near-boundary points

    Sampler sampler = suite_sampler();
    MaxTracker signs, rel_error;
    int accepted = 0;
    while (accepted < options_.gradient_points) {
      const IfsPair p = sampler.triangle_pair();
      const double t = std::abs(net_truth(p));
      const double pi = incompleteness(p);
      if (t < kMargin || pi < kMargin || 1.0 - (t + pi) < kMargin) continue;
      ++accepted;

      const EntropyPartials analytic = entropy_partials(p);
      signs.see(analytic.d_abs_tau);
      signs.see(-analytic.d_pi);

      const double fd_tau =
          (eval(t + kStep, pi) - eval(t - kStep, pi)) / (2.0 * kStep);
      const double fd_pi =
          (eval(t, pi + kStep) - eval(t, pi - kStep)) / (2.0 * kStep);
      const double num =
          std::hypot(analytic.d_abs_tau - fd_tau, analytic.d_pi - fd_pi);
      const double den = std::hypot(analytic.d_abs_tau, analytic.d_pi) +
                         std::hypot(fd_tau, fd_pi);
      rel_error.see(num / den);
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%d interior points",
                  options_.gradient_points);
    add("entropy_gradient_signs", signs.value, buf);
    add("entropy_gradient_fd", rel_error.value, buf);
  }

  void boundary_suites() {
    const int n = options_.grid_subdivisions;
    MaxTracker finite;
    for_each_grid_pair(n, [&](const IfsPair& p) {
      const bool on_boundary = p.mu() == 0.0 || p.nu() == 0.0 ||
                               p.mu() + p.nu() >= 1.0;
      if (!on_boundary) return;
      const EntropyBreakdown parts = entropy_decomposition(p);
      const bool ok = std::isfinite(parts.shannon) &&
                      std::isfinite(parts.normalized) &&
                      std::isfinite(parts.fuzziness) &&
                      std::isfinite(parts.incompleteness_part);
      finite.see(ok ? 0.0 : 1.0);
    });
    add("entropy_boundary_finite", finite.value);

    // Continuity probe: entropy at a boundary point versus a point nudged
    // 1e-8 toward the centroid. The worst modulus sits at the corners where
    // the slope is ~ln(1/eps).
    constexpr double kEps = 1e-8;
    const IfsPair probes[] = {
        IfsPair::make(1.0, 0.0),  IfsPair::make(0.0, 1.0),
        IfsPair::make(0.0, 0.0),  IfsPair::make(0.5, 0.5),
        IfsPair::make(0.5, 0.0),  IfsPair::make(0.0, 0.5),
    };
    MaxTracker continuity;
    for (const IfsPair& b : probes) {
      const double mu = b.mu() + kEps * (1.0 / 3.0 - b.mu());
      const double nu = b.nu() + kEps * (1.0 / 3.0 - b.nu());
      continuity.see(std::abs(entropy(IfsPair::make(mu, nu)) - entropy(b)));
    }
    add("entropy_boundary_continuity", continuity.value);
  }

  void cli_suites() {
    // Printing at 12 significant digits and re-reading must reproduce the
    // same text; this is the ingestion round-trip contract.
    Sampler sampler = suite_sampler();
    MaxTracker mismatches;
    for (int i = 0; i < 1000; ++i) {
      const IfsPair p = sampler.triangle_pair();
      for (double coord : {p.mu(), p.nu()}) {
        const std::string once = csv::format_sig(coord);
        const double parsed = csv::parse_number(once, 1);
        mismatches.see(once == csv::format_sig(parsed) ? 0.0 : 1.0);
      }
    }
    add("cli_roundtrip_12sig", mismatches.value, "1000 random pairs");
  }

  Options options_;
  std::vector<IfsPair> grid_;
  std::vector<IfsPair> coarse_;
  std::vector<IfsPair> sampled_;
  std::vector<PropertyResult> results_;
  std::uint64_t suite_index_ = 0;
};

}  // namespace

bool Report::all_passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const PropertyResult& r) { return r.passed; });
}

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& spec : kProperties) out.emplace_back(spec.name);
    return out;
  }();
  return names;
}

Report run_all(const Options& options) { return Runner(options).run(); }

void write_report(const Report& report, std::ostream& out) {
  char line[256];
  std::snprintf(line, sizeof(line), "seed: %llu",
                static_cast<unsigned long long>(report.seed));
  out << "ifcalc verification report\n" << line << '\n';
  std::snprintf(line, sizeof(line), "grid: step %g (%zu points)",
                1.0 / report.grid_subdivisions,
                grid_point_count(report.grid_subdivisions));
  out << line << "\n\n";

  int passed = 0;
  for (const PropertyResult& r : report.results) {
    std::snprintf(line, sizeof(line), "%-40s %12.3e  vs %-8g %s", r.name.c_str(),
                  r.max_deviation, r.tolerance, r.passed ? "PASS" : "FAIL");
    out << line;
    if (!r.note.empty()) out << "  # " << r.note;
    out << '\n';
    passed += r.passed ? 1 : 0;
  }
  std::snprintf(line, sizeof(line), "\nresult: %s (%d/%zu properties)",
                report.all_passed() ? "PASS" : "FAIL", passed,
                report.results.size());
  out << line << '\n';
}

}  // namespace ifcalc::verify
