#pragma once

#include <optional>

#include "ptgame/scenario.hpp"

namespace ptgame {

/// Quadratic benefit of the collective strategy tracking the collective
/// target: ((1/N) sum x - (1/N) sum y)^2. Always >= 0.
double usage_benefit(const Profile& x, const Scenario& s);

/// Cost of player i at realization xi: p_i*x_i + (y_i - x_i)*xi.
double individual_cost(int i, double p_i, double x_i, double xi,
                       const Scenario& s);

/// Raw outcome of player i: -a_i*usage_benefit(x) + b_i - individual cost.
/// Independent of xi exactly when x_i == y_i.
double outcome(int i, const Profile& x, const Prices& p, double xi,
               const Scenario& s);

/// Expected outcome of player i under the nominal distribution.
double eut_utility(int i, const Profile& x, const Prices& p,
                   const Scenario& s);

/// Closed-form d(eut_utility)/dx_i:
///   -(2 a_i / N^2) (sum x - sum y) - p_i + mean(xi).
double eut_partial(int i, const Profile& x, const Prices& p,
                   const Scenario& s);

/// Common slope (p_i - mean(xi))/a_i when it agrees across players within
/// `tol`; nullopt otherwise. Prices outside this set admit no stationary
/// profile.
std::optional<double> consistent_kappa(const Prices& p, const Scenario& s,
                                       double tol = 1e-9);

/// Weighted potential of the expected-utility game,
///   -(sum x - sum y)^2 / N^2 - kappa_p * sum x.
/// Throws std::domain_error when the price vector has no consistent kappa.
double potential(const Profile& x, const Prices& p, const Scenario& s);

}  // namespace ptgame
