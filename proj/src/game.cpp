#include "ptgame/game.hpp"

#include <cmath>
#include <numeric>

namespace ptgame {

double usage_benefit(const Profile& x, const Scenario& s) {
  s.require_profile(x);
  const double n = s.n_players();
  const double sum_x = std::accumulate(x.begin(), x.end(), 0.0);
  const double d = sum_x / n - s.sum_y() / n;
  return d * d;
}

double individual_cost(int i, double p_i, double x_i, double xi,
                       const Scenario& s) {
  s.require_player(i);
  return p_i * x_i + (s.target_y()[i] - x_i) * xi;
}

double outcome(int i, const Profile& x, const Prices& p, double xi,
               const Scenario& s) {
  s.require_player(i);
  s.require_prices(p);
  return -s.coeff_a()[i] * usage_benefit(x, s) + s.offset_b()[i] -
         individual_cost(i, p[i], x[i], xi, s);
}

double eut_utility(int i, const Profile& x, const Prices& p,
                   const Scenario& s) {
  s.require_player(i);
  s.require_profile(x);
  s.require_prices(p);
  double u = 0.0;
  const auto& q = s.outcome_probs();
  const auto& xi = s.outcome_support();
  for (int k = 0; k < s.n_outcomes(); ++k) u += q[k] * outcome(i, x, p, xi[k], s);
  return u;
}

double eut_partial(int i, const Profile& x, const Prices& p,
                   const Scenario& s) {
  s.require_player(i);
  s.require_profile(x);
  s.require_prices(p);
  const double n = s.n_players();
  const double sum_x = std::accumulate(x.begin(), x.end(), 0.0);
  return -(2.0 * s.coeff_a()[i] / (n * n)) * (sum_x - s.sum_y()) - p[i] +
         s.mean_outcome();
}

std::optional<double> consistent_kappa(const Prices& p, const Scenario& s,
                                       double tol) {
  s.require_prices(p);
  const double kappa = (p[0] - s.mean_outcome()) / s.coeff_a()[0];
  for (int i = 1; i < s.n_players(); ++i) {
    const double ki = (p[i] - s.mean_outcome()) / s.coeff_a()[i];
    if (std::abs(ki - kappa) > tol) return std::nullopt;
  }
  return kappa;
}

double potential(const Profile& x, const Prices& p, const Scenario& s) {
  s.require_profile(x);
  const auto kappa = consistent_kappa(p, s);
  if (!kappa)
    throw std::domain_error("potential: price vector admits no common slope");
  const double n = s.n_players();
  const double sum_x = std::accumulate(x.begin(), x.end(), 0.0);
  const double d = sum_x - s.sum_y();
  return -d * d / (n * n) - *kappa * sum_x;
}

}  // namespace ptgame
