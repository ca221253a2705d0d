#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "ptgame/eut_equilibria.hpp"
#include "ptgame/pt_equilibria.hpp"
#include "ptgame/prospect.hpp"
#include "ptgame/scenario.hpp"

namespace ptgame {

/// Player preference model driving gradients and reports.
struct Mode {
  enum class Kind { Eut, Pt };

  Kind kind = Kind::Eut;
  std::vector<ValueFunction> vfs;  // per player or shared (length 1), Pt only

  static Mode eut() { return Mode{Kind::Eut, {}}; }
  static Mode pt(std::vector<ValueFunction> vfs) {
    return Mode{Kind::Pt, std::move(vfs)};
  }

  bool is_pt() const { return kind == Kind::Pt; }
};

struct StepSchedule {
  enum class Kind { Constant, Diminishing };

  Kind kind = Kind::Constant;
  double epsilon0 = 0.05;
  double exponent = 0.6;  // Diminishing: eps_n = eps0 / n^exponent

  static StepSchedule constant(double eps);
  static StepSchedule diminishing(double eps0, double exponent);

  double at(std::int64_t n) const;
};

struct GradientPlayConfig {
  StepSchedule step = StepSchedule::constant(0.05);
  std::int64_t max_iterations = 100000;
  double convergence_tol = 1e-6;
  Profile init;
  bool project_to_box = true;
  std::int64_t log_every = 0;  // 0: record only the final point
};

struct TracePoint {
  std::int64_t iteration = 0;
  std::vector<double> values;
  double residual = 0.0;
};

struct RunTrace {
  std::vector<TracePoint> iterates;
  std::vector<double> final_values;
  double final_residual = 0.0;
  bool converged = false;
  std::int64_t iterations = 0;
  std::string abort_reason;  // empty unless the run was cut short
};

/// Round-robin single-player gradient steps x_i <- x_i + eps_n * partial_i
/// with i = ((n-1) mod N) + 1, optional per-step projection onto the box.
/// Convergence is checked once per sweep on the max boundary-adjusted
/// partial. Deterministic given the config.
RunTrace gradient_play(const GradientPlayConfig& cfg, const Prices& p,
                       const Mode& mode, const Scenario& s);

struct MultiStartResult {
  std::vector<EquilibriumReport> equilibria;
  int dropped = 0;  // runs that failed to converge or to classify
};

/// Seeded uniform restarts of gradient_play inside the box. Keeps converged
/// finals that classify as equilibria at report_tol, sorts them, and
/// deduplicates by L-infinity distance below dedup_tol.
MultiStartResult multi_start(const Prices& p, const Mode& mode,
                             const Scenario& s, int n_starts,
                             const GradientPlayConfig& tmpl,
                             std::uint64_t seed, double dedup_tol = 1e-3,
                             double report_tol = 1e-5);

enum class Selection { Jain, MaxRevenue, MaxWelfare };
enum class Objective { Revenue, Welfare };

/// Coordinator's scalar objective at a (price, profile) pair:
///   Revenue: -||x - y||^2 + ||p||^2    Welfare: sum_i eut_utility_i.
double coordinator_utility(Objective objective, const Prices& p,
                           const Profile& x, const Scenario& s);

/// Picks one report: Jain maximizes jain_index(x - y); MaxRevenue/MaxWelfare
/// maximize the matching coordinator utility. Ties break to the
/// lexicographically smallest profile.
const EquilibriumReport& select_equilibrium(
    const std::vector<EquilibriumReport>& candidates, Selection selection,
    const Prices& p, const Scenario& s);

struct CoordinatorConfig {
  double price_step = 0.5;
  int restarts = 50;
  Selection selection = Selection::Jain;
  Objective objective = Objective::Revenue;
  int max_rounds = 100;
  double price_tol = 1e-6;
  std::uint64_t seed = 0;
  /// NaN: start from the midpoint of the price interval.
  double initial_price = std::numeric_limits<double>::quiet_NaN();
  /// Template for the inner gradient-play runs (init is ignored).
  GradientPlayConfig player_run;
};

/// Uniform-price ascent: each round solves the players' game by restarts,
/// selects one equilibrium, estimates dJ0/dp by a central difference through
/// the re-solved selection at p +/- h, and projects the updated price onto
/// the price interval. Stops when the projected move drops below price_tol.
RunTrace coordinator_ascent(const CoordinatorConfig& cc, const Mode& mode,
                            const Scenario& s);

}  // namespace ptgame
