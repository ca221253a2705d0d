#include "ptgame/prospect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "ptgame/game.hpp"

namespace ptgame {

namespace {

constexpr double kProbSumTol = 1e-12;

void check_simplex(const std::vector<double>& q, const char* what) {
  if (q.empty()) throw std::invalid_argument(std::string(what) + ": empty");
  double sum = 0.0;
  for (double v : q) {
    if (!(v >= 0.0))
      throw std::invalid_argument(std::string(what) +
                                  ": probabilities must be >= 0");
    sum += v;
  }
  if (std::abs(sum - 1.0) > kProbSumTol)
    throw std::invalid_argument(std::string(what) +
                                ": probabilities must sum to 1");
}

}  // namespace

ValueFunction ValueFunction::identity() {
  return ValueFunction(Kind::Identity, 0.0, 0.0, 0.0);
}

ValueFunction ValueFunction::log_gain() {
  return ValueFunction(Kind::LogGain, 0.0, 0.0, 0.0);
}

ValueFunction ValueFunction::exponential(double lambda) {
  if (!(lambda > 0.0))
    throw std::invalid_argument("exponential value function needs lambda > 0");
  return ValueFunction(Kind::Exponential, lambda, 0.0, 0.0);
}

ValueFunction ValueFunction::linear_derivative(double c, double d) {
  if (!(d > 0.0) || c == 0.0 || !std::isfinite(c) || !std::isfinite(d))
    throw std::invalid_argument(
        "linear-derivative value function needs d > 0 and c != 0");
  return ValueFunction(Kind::LinearDerivative, 0.0, c, d);
}

bool ValueFunction::in_domain(double z) const {
  if (!std::isfinite(z)) return false;
  if (kind_ != Kind::LinearDerivative) return true;
  // v' > 0 on one side of the root of c z + d.
  return c_ < 0.0 ? z < -d_ / c_ : z > -d_ / c_;
}

void ValueFunction::require_in_domain(double z) const {
  if (!in_domain(z)) {
    std::ostringstream msg;
    msg << describe() << ": outcome " << z << " outside the valid domain";
    throw DomainViolation(msg.str());
  }
}

double ValueFunction::value(double z) const {
  require_in_domain(z);
  switch (kind_) {
    case Kind::Identity:
      return z;
    case Kind::LogGain:
      return z >= 0.0 ? std::log1p(z) : z;
    case Kind::Exponential:
      return 1.0 - std::exp(-lambda_ * z);
    case Kind::LinearDerivative:
      return 0.5 * c_ * z * z + d_ * z;
  }
  return 0.0;
}

double ValueFunction::derivative(double z) const {
  require_in_domain(z);
  switch (kind_) {
    case Kind::Identity:
      return 1.0;
    case Kind::LogGain:
      return z > 0.0 ? 1.0 / (1.0 + z) : 1.0;  // both branches give 1 at 0
    case Kind::Exponential:
      return lambda_ * std::exp(-lambda_ * z);
    case Kind::LinearDerivative:
      return c_ * z + d_;
  }
  return 0.0;
}

double ValueFunction::log_derivative(double z) const {
  require_in_domain(z);
  switch (kind_) {
    case Kind::Identity:
      return 0.0;
    case Kind::LogGain:
      return z > 0.0 ? -std::log1p(z) : 0.0;
    case Kind::Exponential:
      return std::log(lambda_) - lambda_ * z;
    case Kind::LinearDerivative:
      return std::log(c_ * z + d_);
  }
  return 0.0;
}

std::string ValueFunction::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::Identity:
      out << "identity";
      break;
    case Kind::LogGain:
      out << "log_gain";
      break;
    case Kind::Exponential:
      out << "exponential(lambda=" << lambda_ << ")";
      break;
    case Kind::LinearDerivative:
      out << "linear_derivative(c=" << c_ << ", d=" << d_ << ")";
      break;
  }
  return out.str();
}

WeightingFunction WeightingFunction::identity() {
  return WeightingFunction(Kind::Identity, 1.0);
}

WeightingFunction WeightingFunction::tversky_kahneman(double gamma) {
  if (!(gamma > 0.28 && gamma <= 1.0))
    throw std::invalid_argument("tk weighting needs gamma in (0.28, 1]");
  return WeightingFunction(Kind::TverskyKahneman, gamma);
}

double WeightingFunction::pi(double p) const {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("weighting function argument outside [0, 1]");
  if (kind_ == Kind::Identity) return p;
  if (p == 0.0 || p == 1.0) return p;
  const double a = std::pow(p, gamma_);
  const double b = std::pow(1.0 - p, gamma_);
  return a / std::pow(a + b, 1.0 / gamma_);
}

Prospect::Prospect(std::vector<double> outcomes_in, std::vector<double> probs_in)
    : outcomes(std::move(outcomes_in)), probs(std::move(probs_in)) {
  check_simplex(probs, "prospect");
  if (outcomes.size() != probs.size())
    throw std::invalid_argument("prospect: outcomes and probs length mismatch");
  if (!std::is_sorted(outcomes.rbegin(), outcomes.rend()))
    throw std::invalid_argument("prospect: outcomes must be non-increasing");
}

std::vector<double> decision_weights(const WeightingFunction& w,
                                     const std::vector<double>& probs) {
  check_simplex(probs, "decision_weights");
  const std::size_t m = probs.size();
  std::vector<double> weights(m);
  double cum = 0.0;
  double prev_pi = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    cum += probs[j];
    // The running sum ends at 1 up to rounding; pin it so the weights
    // telescope to pi(1) exactly.
    if (j + 1 == m) cum = 1.0;
    cum = std::min(cum, 1.0);
    const double cur_pi = w.pi(cum);
    weights[j] = cur_pi - prev_pi;
    prev_pi = cur_pi;
  }
  return weights;
}

double prospect_value(const Prospect& g, const ValueFunction& vf,
                      const WeightingFunction& w) {
  const auto weights = decision_weights(w, g.probs);
  double total = 0.0;
  for (std::size_t j = 0; j < g.outcomes.size(); ++j)
    total += weights[j] * vf.value(g.outcomes[j]);
  return total;
}

TiltedDistribution tilted_distribution(int i, const Profile& x,
                                       const Prices& p,
                                       const ValueFunction& vf,
                                       const Scenario& s) {
  s.require_player(i);
  s.require_profile(x);
  s.require_prices(p);
  const int m = s.n_outcomes();
  const auto& q = s.outcome_probs();
  const auto& xi = s.outcome_support();

  // Reweight in log space so extreme marginal values cannot overflow.
  std::vector<double> log_w(m);
  double max_log = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < m; ++k) {
    log_w[k] = vf.log_derivative(outcome(i, x, p, xi[k], s));
    max_log = std::max(max_log, log_w[k]);
  }

  TiltedDistribution tilt;
  tilt.probs.resize(m);
  double norm = 0.0;
  bool all_unit = true;
  for (int k = 0; k < m; ++k) {
    const double r = std::exp(log_w[k] - max_log);
    all_unit = all_unit && r == 1.0;
    tilt.probs[k] = q[k] * r;
    norm += tilt.probs[k];
  }
  if (!(norm > 0.0))
    throw std::logic_error("tilted_distribution: zero normalizer");
  if (all_unit) {
    // Constant marginal value: the tilt is the nominal distribution.
    tilt.probs = q;
    tilt.mean = s.mean_outcome();
    return tilt;
  }
  tilt.mean = 0.0;
  for (int k = 0; k < m; ++k) {
    tilt.probs[k] /= norm;
    tilt.mean += tilt.probs[k] * xi[k];
  }
  return tilt;
}

double pt_utility(int i, const Profile& x, const Prices& p,
                  const ValueFunction& vf, const Scenario& s) {
  s.require_player(i);
  s.require_profile(x);
  s.require_prices(p);
  double u = 0.0;
  const auto& q = s.outcome_probs();
  const auto& xi = s.outcome_support();
  for (int k = 0; k < s.n_outcomes(); ++k)
    u += q[k] * vf.value(outcome(i, x, p, xi[k], s));
  return u;
}

double pt_partial(int i, const Profile& x, const Prices& p,
                  const ValueFunction& vf, const Scenario& s) {
  s.require_player(i);
  s.require_profile(x);
  s.require_prices(p);
  const double n = s.n_players();
  const double sum_x = std::accumulate(x.begin(), x.end(), 0.0);
  const double base =
      -(2.0 * s.coeff_a()[i] / (n * n)) * (sum_x - s.sum_y()) - p[i];
  double g = 0.0;
  const auto& q = s.outcome_probs();
  const auto& xi = s.outcome_support();
  for (int k = 0; k < s.n_outcomes(); ++k) {
    g += q[k] * vf.derivative(outcome(i, x, p, xi[k], s)) * (base + xi[k]);
  }
  return g;
}

std::vector<ValueFunction> per_player(std::vector<ValueFunction> vfs, int n) {
  if (static_cast<int>(vfs.size()) == n) return vfs;
  if (vfs.size() == 1) return std::vector<ValueFunction>(n, vfs.front());
  throw std::invalid_argument(
      "value functions: provide one shared entry or one per player");
}

}  // namespace ptgame
