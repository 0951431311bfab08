#ifndef ROTBOX_GAMES_HPP
#define ROTBOX_GAMES_HPP

#include <cstdint>
#include <functional>

#include "rotbox/parallel.hpp"
#include "rotbox/qset.hpp"
#include "rotbox/trigpoly.hpp"

namespace rotbox::games {

struct MembershipFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Referee's weight function w(t) = cos(2t) + sin(3t), its normalization
// n = (5/3) sqrt(5 + 2 sqrt 5) and the positive-sign region
//   R+ = (0, 3pi/10) u (7pi/10, 11pi/10) u (19pi/10, 2pi).
// The angle density is mu(t) = |w(t)| / n.
struct GameSpec {
  double normalization;
  TrigPoly weight;
  std::array<std::pair<double, double>, 3> positive_region;

  static GameSpec standard();
  double mu(double theta) const;
  bool in_positive_region(double theta) const;
};

// Success probability 1/2 + (pi/n)(c_2 + s_3) of a spin-3/2 box.
double game_success(const TrigPoly& p);

struct MonteCarloResult {
  double empirical = 0.0;
  double stderr_estimate = 0.0;
  std::int64_t trials = 0;
  double positive_fraction = 0.0;  // fraction of draws landing in R+
};

// Plays the game against a box described by its outcome-plus probability
// curve; theta is sampled from mu by inverse CDF on a 2^16-entry table.
// Shards are fixed (64) and independently seeded, so the result does not
// depend on the thread count.
MonteCarloResult game_monte_carlo(const std::function<double(double)>& p_plus,
                                  std::int64_t trials, std::uint64_t seed,
                                  Exec exec = Exec::Parallel);
MonteCarloResult game_monte_carlo(const qset::QuantumRealization& box,
                                  std::int64_t trials, std::uint64_t seed,
                                  Exec exec = Exec::Parallel);
MonteCarloResult game_monte_carlo(const TrigPoly& box, std::int64_t trials,
                                  std::uint64_t seed,
                                  Exec exec = Exec::Parallel);

// delta = cos(J alpha) for |J alpha| < pi/2, else 0.
double two_setting_delta(int two_j, double alpha);

struct TwoSettingInterval {
  double lo = -1.0;   // smallest feasible E2 given E1
  double hi = 1.0;    // largest feasible E2 given E1
  double delta = 0.0;
};

// The two-setting correlation region
//   (1/2)(sqrt(1+E1) sqrt(1+E2) + sqrt(1-E1) sqrt(1-E2)) >= delta
// sliced at E1; the feasible E2 form an interval around E2 = E1.
TwoSettingInterval two_setting_quantum_boundary(int two_j, double alpha,
                                                double e1);

struct TwoSettingCheck {
  double seesaw_value = 0.0;      // quantum maximum of w1 E1 + w2 E2
  double closed_form_value = 0.0; // support of the closed-form region
};

// Maximizes w1 E1 + w2 E2 over quantum boxes via the see-saw on the induced
// coefficient functional and compares against the closed-form region.
TwoSettingCheck two_setting_seesaw_check(int two_j, double alpha, double w1,
                                         double w2,
                                         const qset::SeesawOptions& opts = {});

struct DistanceCheck {
  double distance = 0.0;  // circular distance between the 0 and the 1
  double bound = 0.0;     // pi / (2J)
  bool pass = false;
};

// For boxes reaching 0 and 1: the two angles are at least pi/(2J) apart.
DistanceCheck min_distinguish_angle(const TrigPoly& p, int two_j);

}  // namespace rotbox::games

#endif
