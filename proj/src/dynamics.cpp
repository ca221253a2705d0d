#include "ptgame/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "ptgame/game.hpp"

namespace ptgame {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 step; decorrelates adjacent run indices
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

double player_partial(int i, const Profile& x, const Prices& p,
                      const Mode& mode, const std::vector<ValueFunction>& vfs,
                      const Scenario& s) {
  return mode.is_pt() ? pt_partial(i, x, p, vfs[i], s)
                      : eut_partial(i, x, p, s);
}

double max_residual(const Profile& x, const Prices& p, const Mode& mode,
                    const std::vector<ValueFunction>& vfs, const Scenario& s) {
  double worst = 0.0;
  for (int i = 0; i < s.n_players(); ++i) {
    const double partial = player_partial(i, x, p, mode, vfs, s);
    worst = std::max(
        worst, boundary_adjusted_residual(partial, x[i], s.lo(i), s.hi(i)));
  }
  return worst;
}

std::vector<ValueFunction> mode_vfs(const Mode& mode, const Scenario& s) {
  if (!mode.is_pt()) return {};
  return per_player(mode.vfs, s.n_players());
}

std::vector<ValueFunction> report_vfs(const Mode& mode, const Scenario& s) {
  if (mode.is_pt()) return per_player(mode.vfs, s.n_players());
  return {ValueFunction::identity()};
}

bool lex_less(const Profile& a, const Profile& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

double linf(const Profile& a, const Profile& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

StepSchedule StepSchedule::constant(double eps) {
  if (!(eps > 0.0))
    throw std::invalid_argument("step schedule: epsilon must be > 0");
  StepSchedule sch;
  sch.kind = Kind::Constant;
  sch.epsilon0 = eps;
  return sch;
}

StepSchedule StepSchedule::diminishing(double eps0, double exponent) {
  if (!(eps0 > 0.0) || !(exponent > 0.5 && exponent <= 1.0))
    throw std::invalid_argument(
        "step schedule: need eps0 > 0 and exponent in (0.5, 1]");
  StepSchedule sch;
  sch.kind = Kind::Diminishing;
  sch.epsilon0 = eps0;
  sch.exponent = exponent;
  return sch;
}

double StepSchedule::at(std::int64_t n) const {
  if (kind == Kind::Constant) return epsilon0;
  return epsilon0 / std::pow(static_cast<double>(n), exponent);
}

RunTrace gradient_play(const GradientPlayConfig& cfg, const Prices& p,
                       const Mode& mode, const Scenario& s) {
  s.require_profile(cfg.init);
  s.require_prices(p);
  const int n = s.n_players();
  if (cfg.max_iterations < n)
    throw std::invalid_argument("gradient_play: max_iterations >= N");
  if (cfg.project_to_box) {
    for (int i = 0; i < n; ++i)
      if (cfg.init[i] < s.lo(i) || cfg.init[i] > s.hi(i))
        throw std::invalid_argument(
            "gradient_play: init must lie inside the box when projecting");
  }
  const auto vfs = mode_vfs(mode, s);

  RunTrace trace;
  Profile x = cfg.init;
  std::int64_t n_iter = 0;
  for (std::int64_t it = 1; it <= cfg.max_iterations; ++it) {
    const int i = static_cast<int>((it - 1) % n);
    double delta;
    try {
      delta = player_partial(i, x, p, mode, vfs, s);
    } catch (const DomainViolation& e) {
      std::ostringstream msg;
      msg << e.what() << " (gradient_play iteration " << it << ")";
      throw DomainViolation(msg.str());
    }
    x[i] += cfg.step.at(it) * delta;
    if (cfg.project_to_box) x[i] = std::clamp(x[i], s.lo(i), s.hi(i));
    n_iter = it;

    if (!std::isfinite(x[i])) {
      trace.abort_reason = "non-finite iterate";
      break;
    }
    const bool sweep_end = it % n == 0;
    if (cfg.log_every > 0 && it % cfg.log_every == 0) {
      trace.iterates.push_back({it, x, max_residual(x, p, mode, vfs, s)});
    }
    if (sweep_end && max_residual(x, p, mode, vfs, s) <= cfg.convergence_tol) {
      trace.converged = true;
      break;
    }
  }

  trace.final_values = x;
  trace.final_residual = trace.abort_reason.empty()
                             ? max_residual(x, p, mode, vfs, s)
                             : std::numeric_limits<double>::infinity();
  trace.converged = trace.converged || (trace.abort_reason.empty() &&
                                        trace.final_residual <= cfg.convergence_tol);
  trace.iterations = n_iter;
  return trace;
}

MultiStartResult multi_start(const Prices& p, const Mode& mode,
                             const Scenario& s, int n_starts,
                             const GradientPlayConfig& tmpl,
                             std::uint64_t seed, double dedup_tol,
                             double report_tol) {
  if (n_starts < 1) throw std::invalid_argument("multi_start: n_starts >= 1");
  const int n = s.n_players();
  const auto rvfs = report_vfs(mode, s);

  std::vector<EquilibriumReport> converged;
  int dropped = 0;
  for (int run = 0; run < n_starts; ++run) {
    std::mt19937_64 rng(mix_seed(seed, run));
    GradientPlayConfig cfg = tmpl;
    cfg.init.resize(n);
    for (int i = 0; i < n; ++i) cfg.init[i] = uniform(rng, s.lo(i), s.hi(i));

    RunTrace trace;
    try {
      trace = gradient_play(cfg, p, mode, s);
    } catch (const DomainViolation&) {
      ++dropped;
      continue;
    }
    if (!trace.converged) {
      ++dropped;
      continue;
    }
    auto rep = pt_report(trace.final_values, p, rvfs, s, report_tol);
    if (rep.classification != Classification::Equilibrium) {
      ++dropped;
      continue;
    }
    converged.push_back(std::move(rep));
  }

  std::sort(converged.begin(), converged.end(),
            [](const EquilibriumReport& a, const EquilibriumReport& b) {
              return lex_less(a.profile, b.profile);
            });

  MultiStartResult result;
  result.dropped = dropped;
  for (auto& rep : converged) {
    bool duplicate = false;
    for (const auto& kept : result.equilibria) {
      if (linf(rep.profile, kept.profile) < dedup_tol) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) result.equilibria.push_back(std::move(rep));
  }
  return result;
}

double coordinator_utility(Objective objective, const Prices& p,
                           const Profile& x, const Scenario& s) {
  s.require_profile(x);
  s.require_prices(p);
  if (objective == Objective::Revenue) {
    double dist = 0.0;
    for (int i = 0; i < s.n_players(); ++i) {
      const double d = x[i] - s.target_y()[i];
      dist += d * d;
    }
    double price_norm = 0.0;
    for (double pi : p) price_norm += pi * pi;
    return -dist + price_norm;
  }
  double total = 0.0;
  for (int i = 0; i < s.n_players(); ++i) total += eut_utility(i, x, p, s);
  return total;
}

const EquilibriumReport& select_equilibrium(
    const std::vector<EquilibriumReport>& candidates, Selection selection,
    const Prices& p, const Scenario& s) {
  if (candidates.empty())
    throw std::invalid_argument("select_equilibrium: no candidates");

  const auto score = [&](const EquilibriumReport& rep) {
    switch (selection) {
      case Selection::Jain: {
        std::vector<double> deltas(rep.profile.size());
        for (std::size_t i = 0; i < deltas.size(); ++i)
          deltas[i] = rep.profile[i] - s.target_y()[i];
        return jain_index(deltas);
      }
      case Selection::MaxRevenue:
        return coordinator_utility(Objective::Revenue, p, rep.profile, s);
      case Selection::MaxWelfare:
        return coordinator_utility(Objective::Welfare, p, rep.profile, s);
    }
    return 0.0;
  };

  const EquilibriumReport* best = &candidates.front();
  double best_score = score(*best);
  for (const auto& rep : candidates) {
    const double sc = score(rep);
    if (sc > best_score ||
        (sc == best_score && lex_less(rep.profile, best->profile))) {
      best = &rep;
      best_score = sc;
    }
  }
  return *best;
}

RunTrace coordinator_ascent(const CoordinatorConfig& cc, const Mode& mode,
                            const Scenario& s) {
  if (!(cc.price_step > 0.0) || cc.max_rounds < 1 || cc.restarts < 1)
    throw std::invalid_argument("coordinator_ascent: invalid config");

  double price = std::isnan(cc.initial_price)
                     ? 0.5 * (s.price_lo() + s.price_hi())
                     : std::clamp(cc.initial_price, s.price_lo(), s.price_hi());

  RunTrace trace;
  const int n = s.n_players();

  // Returns the coordinator utility at the equilibrium selected at `at`,
  // re-solving the players' game from the round's seeded restarts.
  const auto solve_objective = [&](double at, std::uint64_t round_seed,
                                   Profile* selected) -> std::optional<double> {
    const auto found = multi_start(uniform_price(n, at), mode, s, cc.restarts,
                                   cc.player_run, round_seed);
    if (found.equilibria.empty()) return std::nullopt;
    const auto& pick = select_equilibrium(found.equilibria, cc.selection,
                                          uniform_price(n, at), s);
    if (selected) *selected = pick.profile;
    return coordinator_utility(cc.objective, uniform_price(n, at),
                               pick.profile, s);
  };

  for (int round = 0; round < cc.max_rounds; ++round) {
    const std::uint64_t round_seed = mix_seed(cc.seed, round);
    Profile selected;
    const auto j0 = solve_objective(price, round_seed, &selected);
    if (!j0) {
      trace.abort_reason = "no equilibria found at price " +
                           std::to_string(price);
      break;
    }

    const double h = 1e-3 * std::max(1.0, std::abs(price));
    const auto j_up = solve_objective(price + h, round_seed, nullptr);
    const auto j_dn = solve_objective(price - h, round_seed, nullptr);
    if (!j_up || !j_dn) {
      trace.abort_reason = "no equilibria found near price " +
                           std::to_string(price);
      break;
    }

    const double grad = (*j_up - *j_dn) / (2.0 * h);
    const double next =
        std::clamp(price + cc.price_step * grad, s.price_lo(), s.price_hi());
    const double move = std::abs(next - price);

    TracePoint point;
    point.iteration = round;
    point.values.push_back(price);
    point.values.insert(point.values.end(), selected.begin(), selected.end());
    point.values.push_back(*j0);
    point.residual = move;
    trace.iterates.push_back(std::move(point));

    price = next;
    trace.iterations = round + 1;
    trace.final_residual = move;
    if (move < cc.price_tol) {
      trace.converged = true;
      break;
    }
  }

  trace.final_values = {price};
  return trace;
}

}  // namespace ptgame
