#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ptgame/scenario.hpp"

namespace ptgame {

/// Raised when a value function is evaluated outside its valid domain.
struct DomainViolation : std::domain_error {
  using std::domain_error::domain_error;
};

/// Outcome-to-value map of a player. Every kind is increasing on its valid
/// domain (derivative > 0 there).
///
///   Identity          v(z) = z
///   LogGain           v(z) = log(1+z) for z >= 0, z for z < 0
///   Exponential       v(z) = 1 - exp(-lambda z), lambda > 0
///   LinearDerivative  v'(z) = c z + d; v(z) = (c/2) z^2 + d z.
///                     Valid where v' > 0: z < -d/c for c < 0 (concave),
///                     z > -d/c for c > 0 (convex).
class ValueFunction {
public:
  enum class Kind { Identity, LogGain, Exponential, LinearDerivative };

  static ValueFunction identity();
  static ValueFunction log_gain();
  static ValueFunction exponential(double lambda);
  static ValueFunction linear_derivative(double c, double d);

  Kind kind() const { return kind_; }
  double lambda() const { return lambda_; }
  double c() const { return c_; }
  double d() const { return d_; }

  bool in_domain(double z) const;
  void require_in_domain(double z) const;

  double value(double z) const;
  double derivative(double z) const;
  /// log(derivative(z)); safe for reweighting when derivative over/underflows.
  double log_derivative(double z) const;

  /// True when the derivative is the same everywhere (Identity).
  bool constant_derivative() const { return kind_ == Kind::Identity; }

  std::string describe() const;

private:
  ValueFunction(Kind k, double lambda, double c, double d)
      : kind_(k), lambda_(lambda), c_(c), d_(d) {}

  Kind kind_;
  double lambda_ = 0.0;
  double c_ = 0.0;
  double d_ = 0.0;
};

/// Cumulative probability distortion applied to ranked prospects.
class WeightingFunction {
public:
  enum class Kind { Identity, TverskyKahneman };

  static WeightingFunction identity();
  /// pi(p) = p^gamma / (p^gamma + (1-p)^gamma)^(1/gamma), gamma in (0.28, 1].
  static WeightingFunction tversky_kahneman(double gamma);

  Kind kind() const { return kind_; }
  double gamma() const { return gamma_; }

  double pi(double p) const;

private:
  WeightingFunction(Kind k, double gamma) : kind_(k), gamma_(gamma) {}

  Kind kind_;
  double gamma_ = 1.0;
};

/// A finite lottery with outcomes listed in non-increasing order of value.
struct Prospect {
  Prospect(std::vector<double> outcomes, std::vector<double> probs);

  std::vector<double> outcomes;
  std::vector<double> probs;
};

/// Rank-dependent weights: w_1 = pi(q_1),
/// w_j = pi(q_1+...+q_j) - pi(q_1+...+q_{j-1}). Telescopes to pi(1) = 1.
/// Ties in the underlying outcomes keep their input order.
std::vector<double> decision_weights(const WeightingFunction& w,
                                     const std::vector<double>& probs);

/// Distorted value of the prospect: sum_j w_j v(Z_j).
double prospect_value(const Prospect& g, const ValueFunction& vf,
                      const WeightingFunction& w);

/// Outcome distribution of player i reweighted by the marginal value of each
/// realization; its mean replaces the nominal mean in stationarity tests.
struct TiltedDistribution {
  std::vector<double> probs;
  double mean = 0.0;
};

TiltedDistribution tilted_distribution(int i, const Profile& x,
                                       const Prices& p,
                                       const ValueFunction& vf,
                                       const Scenario& s);

/// Expected transformed outcome of player i: sum_k q_k v(J_i(x, p, xi_k)).
double pt_utility(int i, const Profile& x, const Prices& p,
                  const ValueFunction& vf, const Scenario& s);

/// d(pt_utility)/dx_i =
///   sum_k q_k v'(J_i(xi_k)) * (-(2 a_i/N^2)(sum x - sum y) - p_i + xi_k).
double pt_partial(int i, const Profile& x, const Prices& p,
                  const ValueFunction& vf, const Scenario& s);

/// Expands a shared value function (length 1) to one per player.
std::vector<ValueFunction> per_player(std::vector<ValueFunction> vfs, int n);

}  // namespace ptgame
