#include "ptgame/pt_equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "ptgame/eut_equilibria.hpp"
#include "ptgame/game.hpp"

namespace ptgame {

double boundary_adjusted_residual(double partial, double x_i, double lo,
                                  double hi) {
  if (x_i >= hi) return std::max(0.0, -partial);
  if (x_i <= lo) return std::max(0.0, partial);
  return std::abs(partial);
}

std::string to_string(Classification c) {
  return c == Classification::Equilibrium ? "equilibrium" : "not-equilibrium";
}

double EquilibriumReport::max_partial_residual() const {
  double m = 0.0;
  for (double r : partial_residuals) m = std::max(m, r);
  return m;
}

EquilibriumReport pt_report(const Profile& x, const Prices& p,
                            const std::vector<ValueFunction>& vfs_in,
                            const Scenario& s, double tol) {
  s.require_profile(x);
  s.require_prices(p);
  const auto vfs = per_player(vfs_in, s.n_players());
  const int n = s.n_players();

  EquilibriumReport rep;
  rep.profile = x;
  rep.price = p;
  rep.tol = tol;
  rep.partial_residuals.resize(n);

  double kappa0 = 0.0;
  double kappa_min = std::numeric_limits<double>::infinity();
  double kappa_max = -kappa_min;
  for (int i = 0; i < n; ++i) {
    const double partial = pt_partial(i, x, p, vfs[i], s);
    rep.partial_residuals[i] =
        boundary_adjusted_residual(partial, x[i], s.lo(i), s.hi(i));
    rep.boundary_active = rep.boundary_active || x[i] <= s.lo(i) || x[i] >= s.hi(i);
    const auto tilt = tilted_distribution(i, x, p, vfs[i], s);
    const double kappa = (p[i] - tilt.mean) / s.coeff_a()[i];
    if (i == 0) kappa0 = kappa;
    kappa_min = std::min(kappa_min, kappa);
    kappa_max = std::max(kappa_max, kappa);
  }
  rep.kappa_gap = std::max(kappa_max - kappa0, kappa0 - kappa_min);

  const double sum_x = std::accumulate(x.begin(), x.end(), 0.0);
  rep.sum_gap =
      std::abs(sum_x - s.sum_y() + 0.5 * double(n) * double(n) * kappa0);

  const bool ok = rep.max_partial_residual() <= tol && rep.kappa_gap <= tol &&
                  rep.sum_gap <= tol;
  rep.classification =
      ok ? Classification::Equilibrium : Classification::NotEquilibrium;
  return rep;
}

Profile fixed_point_map(const Profile& x, const Prices& p,
                        const std::vector<ValueFunction>& vfs_in,
                        const Scenario& s, bool project) {
  s.require_profile(x);
  s.require_prices(p);
  const auto vfs = per_player(vfs_in, s.n_players());
  const int n = s.n_players();
  const double sum_x = std::accumulate(x.begin(), x.end(), 0.0);

  Profile next(n);
  for (int i = 0; i < n; ++i) {
    const auto tilt = tilted_distribution(i, x, p, vfs[i], s);
    double g = s.sum_y() - (sum_x - x[i]) -
               (double(n) * double(n) / (2.0 * s.coeff_a()[i])) *
                   (p[i] - tilt.mean);
    if (project) g = std::clamp(g, s.lo(i), s.hi(i));
    next[i] = g;
  }
  return next;
}

double exp_tilt_mean(double delta, double lambda, const Scenario& s) {
  if (!(lambda > 0.0))
    throw std::invalid_argument("exp_tilt_mean: lambda must be > 0");
  const auto& q = s.outcome_probs();
  const auto& xi = s.outcome_support();
  const int m = s.n_outcomes();

  double max_e = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < m; ++k)
    max_e = std::max(max_e, lambda * delta * xi[k]);

  double num = 0.0;
  double den = 0.0;
  for (int k = 0; k < m; ++k) {
    const double w = q[k] * std::exp(lambda * delta * xi[k] - max_e);
    num += w * xi[k];
    den += w;
  }
  return num / den;
}

SymmetricSolveResult symmetric_exponential_solve(double p, double lambda,
                                                 const Scenario& s) {
  if (!s.homogeneous_a())
    throw std::domain_error(
        "symmetric_exponential_solve: players must share the same a");
  if (!(lambda > 0.0))
    throw std::invalid_argument("symmetric_exponential_solve: lambda > 0");

  const double a = s.coeff_a().front();
  const double n = s.n_players();
  const auto gap = [&](double beta) {
    return p - (2.0 * a / n) * beta - exp_tilt_mean(beta, lambda, s);
  };

  // gap is strictly decreasing: expand a symmetric bracket until it
  // straddles the root.
  double lo = -10.0;
  double hi = 10.0;
  double g_lo = gap(lo);
  double g_hi = gap(hi);
  while (g_lo < 0.0 || g_hi > 0.0) {
    lo *= 2.0;
    hi *= 2.0;
    if (hi > 1e6)
      throw std::domain_error(
          "symmetric_exponential_solve: bracket expansion failed");
    g_lo = gap(lo);
    g_hi = gap(hi);
  }

  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (gap(mid) >= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  double beta = 0.5 * (lo + hi);
  // A couple of extra halvings if the residual is not yet at solver quality.
  const double eps = std::numeric_limits<double>::epsilon();
  while (std::abs(gap(beta)) > 1e-11 && hi - lo > 4 * eps * (1.0 + std::abs(beta))) {
    if (gap(beta) >= 0.0)
      lo = beta;
    else
      hi = beta;
    beta = 0.5 * (lo + hi);
  }

  SymmetricSolveResult result;
  result.beta = beta;
  result.profile.resize(s.n_players());
  for (int i = 0; i < s.n_players(); ++i)
    result.profile[i] = s.target_y()[i] - beta;
  result.residual = std::abs(gap(beta));
  if (!(result.residual < 1e-10))
    throw std::logic_error("symmetric_exponential_solve: residual too large");
  return result;
}

std::vector<int> asymmetry_set(const Profile& x, const Scenario& s) {
  s.require_profile(x);
  std::vector<int> players;
  for (int i = 0; i < s.n_players(); ++i)
    if (x[i] != s.target_y()[i]) players.push_back(i);
  return players;
}

std::vector<VanishingVerdict> vanishing_check(
    const Profile& x, const Prices& p, const std::vector<ValueFunction>& vfs_in,
    const Scenario& s, double tol) {
  const auto vfs = per_player(vfs_in, s.n_players());
  if (!price_consistency(p, s).consistent)
    throw std::domain_error("vanishing_check: inconsistent price vector");
  if (eut_residual(x, p, s) > 1e-9)
    throw std::domain_error(
        "vanishing_check: profile is not a stationary point of the "
        "expected-utility game");

  std::vector<VanishingVerdict> verdicts(s.n_players());
  for (int i = 0; i < s.n_players(); ++i) {
    const double partial = pt_partial(i, x, p, vfs[i], s);
    verdicts[i].partial = partial;
    if (std::abs(partial) <= tol) {
      verdicts[i].preserved = true;
    } else {
      verdicts[i].sign = partial > 0.0 ? 1 : -1;
    }
  }
  return verdicts;
}

bool linear_derivative_singleton_check(const Scenario& s, double c, double d) {
  if (!(c < 0.0) || !(d > 0.0))
    throw std::invalid_argument(
        "linear_derivative_singleton_check: needs c < 0 and d > 0");
  const double threshold = -d / c;
  for (int i = 0; i < s.n_players(); ++i) {
    if (!(s.offset_b()[i] - s.mean_outcome() * s.target_y()[i] < threshold))
      return false;
  }
  return true;
}

double best_response_oracle(int i, const Profile& x, const Prices& p,
                            const ValueFunction& vf, const Scenario& s,
                            int grid_points) {
  s.require_player(i);
  s.require_profile(x);
  if (grid_points < 100)
    throw std::invalid_argument("best_response_oracle: grid_points >= 100");

  Profile probe = x;
  const auto scan = [&](double lo, double hi) {
    double best_x = lo;
    double best_u = -std::numeric_limits<double>::infinity();
    int best_k = 0;
    for (int k = 0; k < grid_points; ++k) {
      const double t =
          lo + (hi - lo) * static_cast<double>(k) / (grid_points - 1);
      probe[i] = t;
      double u;
      try {
        u = pt_utility(i, probe, p, vf, s);
      } catch (const DomainViolation& e) {
        std::ostringstream msg;
        msg << "best_response_oracle: domain violation at x_i = " << t << " ("
            << e.what() << ")";
        throw DomainViolation(msg.str());
      }
      if (u > best_u) {
        best_u = u;
        best_x = t;
        best_k = k;
      }
    }
    return std::tuple<double, int>(best_x, best_k);
  };

  const double lo = s.lo(i);
  const double hi = s.hi(i);
  auto [coarse_x, k] = scan(lo, hi);
  const double cell = (hi - lo) / (grid_points - 1);
  const double r_lo = std::max(lo, coarse_x - cell);
  const double r_hi = std::min(hi, coarse_x + cell);
  auto [fine_x, k2] = scan(r_lo, r_hi);
  (void)k;
  (void)k2;
  return fine_x;
}

}  // namespace ptgame
