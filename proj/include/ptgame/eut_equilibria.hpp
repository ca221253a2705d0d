#pragma once

#include <cstdint>
#include <vector>

#include "ptgame/game.hpp"
#include "ptgame/scenario.hpp"

namespace ptgame {

/// Description of the stationary set of the expected-utility game at a
/// price vector: when consistent, the set is the hyperplane
/// sum x = target_sum intersected with the feasible box.
struct EutEquilibriumSet {
  bool consistent = false;
  double kappa = 0.0;       // meaningful iff consistent
  double target_sum = 0.0;  // meaningful iff consistent
};

EutEquilibriumSet price_consistency(const Prices& p, const Scenario& s,
                                    double tol = 1e-9);

/// |sum x - target_sum|; +infinity when the price vector is inconsistent.
/// Ignores the bounds box (the analytic manifold, not feasibility).
double eut_residual(const Profile& x, const Prices& p, const Scenario& s);

/// Seeded samples on the stationary hyperplane intersected with the box.
/// Empty when the price is inconsistent or the intersection is missed after
/// 100*count attempts.
std::vector<Profile> sample_equilibria(const Prices& p, const Scenario& s,
                                       int count, std::uint64_t seed);

/// Fairness score of an allocation vector:
///   (1 + (sum d)^2) / (1 + N * sum d^2). Equal entries score 1.
double jain_index(const std::vector<double>& deltas);

/// The fairest stationary profile, x_i = y_i - N (p_i - mean(xi)) / (2 a_i).
/// Throws std::domain_error when the price is inconsistent or the selected
/// point falls outside the bounds box.
Profile fair_selection(const Prices& p, const Scenario& s);

/// Price maximizing the symmetry-plus-revenue objective over the fair
/// selection, projected onto the price interval. Requires homogeneous a
/// and N > 2a.
double eut_optimal_price_revenue(const Scenario& s);

/// Price maximizing total expected player utility over the fair selection,
/// projected onto the price interval. Requires homogeneous a and N > 2.
double eut_optimal_price_welfare(const Scenario& s);

}  // namespace ptgame
