#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptgame {

/// Joint strategy of the N players (pre-purchased energy per player).
using Profile = std::vector<double>;

/// Per-player prices set by the coordinator.
using Prices = std::vector<double>;

/// Builds the uniform price vector p*1.
Prices uniform_price(int n_players, double p);

/// Static data of one game instance: player parameters, the finite
/// distribution of the variable charge, and the feasible boxes.
///
/// Construction validates everything eagerly; downstream formulas assume
/// the invariants hold.
class Scenario {
public:
  Scenario(std::vector<double> coeff_a, std::vector<double> offset_b,
           std::vector<double> target_y, std::vector<double> outcome_support,
           std::vector<double> outcome_probs,
           std::vector<std::array<double, 2>> strategy_bounds,
           std::array<double, 2> price_bounds);

  int n_players() const { return static_cast<int>(coeff_a_.size()); }
  int n_outcomes() const { return static_cast<int>(support_.size()); }

  const std::vector<double>& coeff_a() const { return coeff_a_; }
  const std::vector<double>& offset_b() const { return offset_b_; }
  const std::vector<double>& target_y() const { return target_y_; }
  const std::vector<double>& outcome_support() const { return support_; }
  const std::vector<double>& outcome_probs() const { return probs_; }
  const std::vector<std::array<double, 2>>& strategy_bounds() const {
    return bounds_;
  }
  const std::array<double, 2>& price_bounds() const { return price_bounds_; }

  double lo(int i) const { return bounds_[i][0]; }
  double hi(int i) const { return bounds_[i][1]; }
  double price_lo() const { return price_bounds_[0]; }
  double price_hi() const { return price_bounds_[1]; }

  /// Mean of the variable charge under the nominal distribution.
  double mean_outcome() const { return mean_outcome_; }
  double sum_y() const { return sum_y_; }

  /// True when a_i is the same for every player (relative tolerance 1e-12).
  bool homogeneous_a() const;

  void require_player(int i) const;
  void require_profile(const Profile& x) const;
  void require_prices(const Prices& p) const;

private:
  std::vector<double> coeff_a_;
  std::vector<double> offset_b_;
  std::vector<double> target_y_;
  std::vector<double> support_;
  std::vector<double> probs_;
  std::vector<std::array<double, 2>> bounds_;
  std::array<double, 2> price_bounds_;
  double mean_outcome_ = 0.0;
  double sum_y_ = 0.0;
};

}  // namespace ptgame
