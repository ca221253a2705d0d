#include "ptgame/eut_equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace ptgame {

namespace {

// uniform double in [lo, hi) from the raw generator; identical on every
// platform, unlike std::uniform_real_distribution
double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

}  // namespace

EutEquilibriumSet price_consistency(const Prices& p, const Scenario& s,
                                    double tol) {
  EutEquilibriumSet set;
  const auto kappa = consistent_kappa(p, s, tol);
  if (!kappa) return set;
  set.consistent = true;
  set.kappa = *kappa;
  const double n = s.n_players();
  set.target_sum = s.sum_y() - 0.5 * n * n * set.kappa;
  return set;
}

double eut_residual(const Profile& x, const Prices& p, const Scenario& s) {
  s.require_profile(x);
  const auto set = price_consistency(p, s);
  if (!set.consistent) return std::numeric_limits<double>::infinity();
  const double sum_x = std::accumulate(x.begin(), x.end(), 0.0);
  return std::abs(sum_x - set.target_sum);
}

std::vector<Profile> sample_equilibria(const Prices& p, const Scenario& s,
                                       int count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample_equilibria: count >= 1");
  std::vector<Profile> samples;
  const auto set = price_consistency(p, s);
  if (!set.consistent) return samples;

  const int n = s.n_players();
  std::mt19937_64 rng(seed);
  const long max_attempts = 100L * count;
  for (long attempt = 0; attempt < max_attempts &&
                         static_cast<int>(samples.size()) < count;
       ++attempt) {
    Profile x(n);
    double partial_sum = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
      x[i] = uniform(rng, s.lo(i), s.hi(i));
      partial_sum += x[i];
    }
    // The last coordinate is forced onto the hyperplane.
    x[n - 1] = set.target_sum - partial_sum;
    if (x[n - 1] < s.lo(n - 1) || x[n - 1] > s.hi(n - 1)) continue;
    samples.push_back(std::move(x));
  }
  return samples;
}

double jain_index(const std::vector<double>& deltas) {
  if (deltas.empty()) throw std::invalid_argument("jain_index: empty input");
  const double n = static_cast<double>(deltas.size());
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double d : deltas) {
    sum += d;
    sum_sq += d * d;
  }
  return (1.0 + sum * sum) / (1.0 + n * sum_sq);
}

Profile fair_selection(const Prices& p, const Scenario& s) {
  s.require_prices(p);
  const auto set = price_consistency(p, s);
  if (!set.consistent)
    throw std::domain_error("fair_selection: inconsistent price vector");
  const int n = s.n_players();
  Profile x(n);
  for (int i = 0; i < n; ++i) {
    x[i] = s.target_y()[i] -
           n * (p[i] - s.mean_outcome()) / (2.0 * s.coeff_a()[i]);
    if (x[i] < s.lo(i) || x[i] > s.hi(i))
      throw std::domain_error(
          "fair_selection: selected profile falls outside the bounds box");
  }
  return x;
}

namespace {

double project_price(double p, const Scenario& s) {
  return std::clamp(p, s.price_lo(), s.price_hi());
}

void require_homogeneous(const Scenario& s, const char* what) {
  if (!s.homogeneous_a())
    throw std::domain_error(std::string(what) +
                            ": players must share the same a");
}

}  // namespace

double eut_optimal_price_revenue(const Scenario& s) {
  require_homogeneous(s, "eut_optimal_price_revenue");
  const double a = s.coeff_a().front();
  const double n = s.n_players();
  if (!(n > 2.0 * a))
    throw std::domain_error("eut_optimal_price_revenue: requires N > 2a");
  const double raw = s.mean_outcome() / (1.0 - 4.0 * a * a / (n * n));
  return project_price(raw, s);
}

double eut_optimal_price_welfare(const Scenario& s) {
  require_homogeneous(s, "eut_optimal_price_welfare");
  const double a = s.coeff_a().front();
  const double n = s.n_players();
  if (!(n > 2.0))
    throw std::domain_error("eut_optimal_price_welfare: requires N > 2");
  const double raw =
      s.mean_outcome() - a * s.sum_y() / (n * n * (0.5 * n - 1.0));
  return project_price(raw, s);
}

}  // namespace ptgame
