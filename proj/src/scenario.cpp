#include "ptgame/scenario.hpp"

#include <cmath>
#include <numeric>

namespace ptgame {

namespace {

constexpr double kProbSumTol = 1e-12;

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

bool all_finite(const std::vector<double>& v) {
  for (double z : v)
    if (!std::isfinite(z)) return false;
  return true;
}

}  // namespace

Prices uniform_price(int n_players, double p) {
  return Prices(static_cast<std::size_t>(n_players), p);
}

Scenario::Scenario(std::vector<double> coeff_a, std::vector<double> offset_b,
                   std::vector<double> target_y,
                   std::vector<double> outcome_support,
                   std::vector<double> outcome_probs,
                   std::vector<std::array<double, 2>> strategy_bounds,
                   std::array<double, 2> price_bounds)
    : coeff_a_(std::move(coeff_a)),
      offset_b_(std::move(offset_b)),
      target_y_(std::move(target_y)),
      support_(std::move(outcome_support)),
      probs_(std::move(outcome_probs)),
      bounds_(std::move(strategy_bounds)),
      price_bounds_(price_bounds) {
  const std::size_t n = coeff_a_.size();
  require(n >= 2, "scenario: need at least 2 players");
  require(offset_b_.size() == n && target_y_.size() == n &&
              bounds_.size() == n,
          "scenario: per-player arrays must all have length N");
  require(all_finite(coeff_a_) && all_finite(offset_b_) &&
              all_finite(target_y_),
          "scenario: player parameters must be finite");
  for (double a : coeff_a_) require(a > 0.0, "scenario: a_i must be > 0");
  for (double b : offset_b_) require(b >= 0.0, "scenario: b_i must be >= 0");
  for (const auto& bd : bounds_) {
    require(std::isfinite(bd[0]) && std::isfinite(bd[1]) && bd[0] < bd[1],
            "scenario: strategy bounds need lo < hi");
  }

  const std::size_t m = support_.size();
  require(m >= 2, "scenario: outcome support needs at least 2 points");
  require(probs_.size() == m,
          "scenario: outcome probs must match the support length");
  require(all_finite(support_), "scenario: outcome support must be finite");
  double sum_q = 0.0;
  for (double q : probs_) {
    require(std::isfinite(q) && q >= 0.0,
            "scenario: outcome probs must be >= 0");
    sum_q += q;
  }
  require(std::abs(sum_q - 1.0) <= kProbSumTol,
          "scenario: outcome probs must sum to 1");

  mean_outcome_ = 0.0;
  for (std::size_t k = 0; k < m; ++k) mean_outcome_ += probs_[k] * support_[k];
  double var = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double d = support_[k] - mean_outcome_;
    var += probs_[k] * d * d;
  }
  require(var > 0.0, "scenario: outcome distribution needs positive variance");

  require(price_bounds_[0] > 0.0 && price_bounds_[0] <= price_bounds_[1],
          "scenario: price bounds need 0 < min <= max");

  sum_y_ = std::accumulate(target_y_.begin(), target_y_.end(), 0.0);
}

bool Scenario::homogeneous_a() const {
  const double a0 = coeff_a_.front();
  for (double a : coeff_a_) {
    if (std::abs(a - a0) > 1e-12 * std::max(1.0, std::abs(a0))) return false;
  }
  return true;
}

void Scenario::require_player(int i) const {
  if (i < 0 || i >= n_players())
    throw std::invalid_argument("player index out of range");
}

void Scenario::require_profile(const Profile& x) const {
  if (static_cast<int>(x.size()) != n_players())
    throw std::invalid_argument("profile length must equal N");
}

void Scenario::require_prices(const Prices& p) const {
  if (static_cast<int>(p.size()) != n_players())
    throw std::invalid_argument("price vector length must equal N");
}

}  // namespace ptgame
