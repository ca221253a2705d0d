#pragma once

#include <string>
#include <vector>

#include "ptgame/prospect.hpp"
#include "ptgame/scenario.hpp"

namespace ptgame {

enum class Classification { Equilibrium, NotEquilibrium };

std::string to_string(Classification c);

/// One-sided optimality residual: at the upper bound a positive partial
/// contributes nothing (the improving direction is infeasible), mirrored at
/// the lower bound; |partial| in the interior.
double boundary_adjusted_residual(double partial, double x_i, double lo,
                                  double hi);

/// First-order audit of a profile under prospect-theoretic preferences.
///
/// partial_residuals are boundary-adjusted: at an active bound only the
/// feasible descent direction counts. kappa_gap measures agreement of the
/// per-player slopes (p_i - tilted mean_i)/a_i against player 1; sum_gap is
/// the aggregate stationarity mismatch using player 1's slope.
struct EquilibriumReport {
  Profile profile;
  Prices price;
  std::vector<double> partial_residuals;
  double kappa_gap = 0.0;
  double sum_gap = 0.0;
  Classification classification = Classification::NotEquilibrium;
  bool boundary_active = false;
  double tol = 1e-6;

  double max_partial_residual() const;
};

EquilibriumReport pt_report(const Profile& x, const Prices& p,
                            const std::vector<ValueFunction>& vfs,
                            const Scenario& s, double tol = 1e-6);

/// Best-response style map whose fixed points are the stationary profiles:
///   G_i(x) = sum y - sum_{j != i} x_j
///            - (N^2 / (2 a_i)) (p_i - tilted_mean_i(x, p)).
/// With project = true each component is clamped to the player's bounds.
Profile fixed_point_map(const Profile& x, const Prices& p,
                        const std::vector<ValueFunction>& vfs,
                        const Scenario& s, bool project);

/// Mean of the exponentially reweighted outcome distribution,
///   sum_k q_k xi_k exp(lambda delta xi_k) / sum_k q_k exp(lambda delta xi_k),
/// computed with max-exponent shifting. Strictly increasing in delta with
/// range (min xi, max xi).
double exp_tilt_mean(double delta, double lambda, const Scenario& s);

/// Unique stationary profile for symmetric players with a shared exponential
/// value function and a uniform price: solves
///   p - (2a/N) beta = exp_tilt_mean(beta)
/// by bisection (left side strictly decreasing, right side strictly
/// increasing) and returns x = y - beta*1.
struct SymmetricSolveResult {
  double beta = 0.0;
  Profile profile;
  double residual = 0.0;
};

SymmetricSolveResult symmetric_exponential_solve(double p, double lambda,
                                                 const Scenario& s);

/// Players whose outcomes vary with the realization, i.e. {i : x_i != y_i}.
std::vector<int> asymmetry_set(const Profile& x, const Scenario& s);

/// Per-player fate of a stationary expected-utility profile after the
/// prospect transformation. preserved when the transformed first-order
/// condition still holds (|partial| <= tol); otherwise vanished, with the
/// sign of the surviving gradient.
struct VanishingVerdict {
  bool preserved = false;
  int sign = 0;  // sign of the partial when vanished, 0 when preserved
  double partial = 0.0;
};

/// Requires x stationary for the expected-utility game at a consistent p.
std::vector<VanishingVerdict> vanishing_check(
    const Profile& x, const Prices& p, const std::vector<ValueFunction>& vfs,
    const Scenario& s, double tol = 1e-9);

/// Sufficient condition under a shared linear-derivative value function
/// (c < 0, d > 0) for the stationary set at the mean-outcome uniform price
/// to collapse to the single profile y: b_i - mean(xi)*y_i < -d/c for all i.
bool linear_derivative_singleton_check(const Scenario& s, double c, double d);

/// Grid argmax of player i's transformed utility over [lo_i, hi_i] with one
/// refinement pass around the best cell. Validation oracle; deterministic.
double best_response_oracle(int i, const Profile& x, const Prices& p,
                            const ValueFunction& vf, const Scenario& s,
                            int grid_points);

}  // namespace ptgame
