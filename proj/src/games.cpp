#include "rotbox/games.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace rotbox::games {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0) t += kTwoPi;
  return t;
}

// inverse-CDF sampler for mu on a fixed table
class MuSampler {
 public:
  explicit MuSampler(const GameSpec& spec) : table_(kResolution + 1) {
    // cumulative integral of mu by trapezoid on the table grid
    double acc = 0.0;
    table_[0] = 0.0;
    double prev = spec.mu(0.0);
    for (int i = 1; i <= kResolution; ++i) {
      const double t = kTwoPi * i / kResolution;
      const double cur = spec.mu(t);
      acc += 0.5 * (prev + cur) * (kTwoPi / kResolution);
      table_[static_cast<size_t>(i)] = acc;
      prev = cur;
    }
    for (auto& v : table_) v /= acc;  // exact normalization of the table
  }

  double sample(double u01) const {
    // binary search for the bracketing cell, linear interpolation inside
    const auto it = std::lower_bound(table_.begin(), table_.end(), u01);
    if (it == table_.begin()) return 0.0;
    const size_t hi = static_cast<size_t>(it - table_.begin());
    const double c0 = table_[hi - 1], c1 = table_[hi];
    const double frac = c1 > c0 ? (u01 - c0) / (c1 - c0) : 0.5;
    return kTwoPi * (double(hi - 1) + frac) / kResolution;
  }

 private:
  static constexpr int kResolution = 1 << 16;
  std::vector<double> table_;
};

}  // namespace

GameSpec GameSpec::standard() {
  GameSpec spec;
  spec.normalization = (5.0 / 3.0) * std::sqrt(5.0 + 2.0 * std::sqrt(5.0));
  spec.weight = TrigPoly({0.0, 0.0, 1.0, 0.0}, {0.0, 0.0, 1.0});
  spec.positive_region = {{{0.0, 0.3 * kPi},
                           {0.7 * kPi, 1.1 * kPi},
                           {1.9 * kPi, 2.0 * kPi}}};
  return spec;
}

double GameSpec::mu(double theta) const {
  return std::abs(weight.evaluate(theta)) / normalization;
}

bool GameSpec::in_positive_region(double theta) const {
  const double t = wrap_angle(theta);
  for (const auto& [lo, hi] : positive_region)
    if (t > lo && t < hi) return true;
  return false;
}

double game_success(const TrigPoly& p) {
  if (p.degree() > 3)
    throw MembershipFailure("game_success: box must have spin <= 3/2");
  if (!range_valid(p))
    throw MembershipFailure("game_success: box probabilities leave [0,1]");
  const GameSpec spec = GameSpec::standard();
  return 0.5 + kPi / spec.normalization * (p.c_coeff(2) + p.s_coeff(3));
}

MonteCarloResult game_monte_carlo(const std::function<double(double)>& p_plus,
                                  std::int64_t trials, std::uint64_t seed,
                                  Exec exec) {
  if (trials < 1) throw std::invalid_argument("game_monte_carlo: trials >= 1");
  const GameSpec spec = GameSpec::standard();
  static const MuSampler sampler(GameSpec::standard());

  constexpr int kShards = 64;
  std::array<std::int64_t, kShards> wins{}, positives{}, counts{};
  parallel_for(exec, kShards, [&](std::int64_t shard) {
    std::int64_t n = trials / kShards;
    if (shard == kShards - 1) n += trials % kShards;
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 0x51ULL * static_cast<std::uint64_t>(shard) + 1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::int64_t w = 0, pos = 0;
    for (std::int64_t i = 0; i < n; ++i) {
      const double theta = sampler.sample(u(rng));
      const bool plus_region = spec.in_positive_region(theta);
      pos += plus_region ? 1 : 0;
      const double prob = std::clamp(p_plus(theta), 0.0, 1.0);
      const bool guess_plus = u(rng) < prob;
      w += (guess_plus == plus_region) ? 1 : 0;
    }
    wins[static_cast<size_t>(shard)] = w;
    positives[static_cast<size_t>(shard)] = pos;
    counts[static_cast<size_t>(shard)] = n;
  });

  std::int64_t w = 0, pos = 0, n = 0;
  for (int i = 0; i < kShards; ++i) {
    w += wins[static_cast<size_t>(i)];
    pos += positives[static_cast<size_t>(i)];
    n += counts[static_cast<size_t>(i)];
  }
  MonteCarloResult res;
  res.trials = n;
  res.empirical = double(w) / double(n);
  res.stderr_estimate =
      std::sqrt(std::max(res.empirical * (1.0 - res.empirical), 1e-12) / double(n));
  res.positive_fraction = double(pos) / double(n);
  return res;
}

MonteCarloResult game_monte_carlo(const qset::QuantumRealization& box,
                                  std::int64_t trials, std::uint64_t seed,
                                  Exec exec) {
  qset::validate(box);
  const TrigPoly born = qset::born_polynomial(box, 0);
  return game_monte_carlo([&](double t) { return born.evaluate(t); }, trials,
                          seed, exec);
}

MonteCarloResult game_monte_carlo(const TrigPoly& box, std::int64_t trials,
                                  std::uint64_t seed, Exec exec) {
  return game_monte_carlo([&](double t) { return box.evaluate(t); }, trials,
                          seed, exec);
}

double two_setting_delta(int two_j, double alpha) {
  const double j_alpha = 0.5 * two_j * alpha;
  return std::abs(j_alpha) < kPi / 2.0 ? std::cos(j_alpha) : 0.0;
}

namespace {

double overlap(double e1, double e2) {
  return 0.5 * (std::sqrt(std::max(1.0 + e1, 0.0)) * std::sqrt(std::max(1.0 + e2, 0.0)) +
                std::sqrt(std::max(1.0 - e1, 0.0)) * std::sqrt(std::max(1.0 - e2, 0.0)));
}

}  // namespace

TwoSettingInterval two_setting_quantum_boundary(int two_j, double alpha,
                                                double e1) {
  if (e1 < -1.0 || e1 > 1.0)
    throw std::invalid_argument("two_setting_quantum_boundary: |E1| <= 1");
  TwoSettingInterval iv;
  iv.delta = two_setting_delta(two_j, alpha);
  if (iv.delta <= 0.0) return iv;  // whole square feasible

  // overlap(e1, .) is concave with maximum 1 at e2 = e1; bisect both sides.
  auto bisect = [&](double inside, double outside) {
    if (overlap(e1, outside) >= iv.delta) return outside;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (inside + outside);
      (overlap(e1, mid) >= iv.delta ? inside : outside) = mid;
    }
    return 0.5 * (inside + outside);
  };
  iv.lo = bisect(e1, -1.0);
  iv.hi = bisect(e1, 1.0);
  return iv;
}

TwoSettingCheck two_setting_seesaw_check(int two_j, double alpha, double w1,
                                         double w2,
                                         const qset::SeesawOptions& opts) {
  // w1 E1 + w2 E2 = 2 (w1 P(0) + w2 P(alpha)) - (w1 + w2); the inner maximum
  // is a direction functional on the coefficients.
  rset::Direction dir = rset::Direction::zero(two_j);
  dir.w[0] = 2.0 * (w1 + w2);
  for (int k = 1; k <= two_j; ++k) {
    dir.w[static_cast<size_t>(2 * k - 1)] = 2.0 * (w1 + w2 * std::cos(k * alpha));
    dir.w[static_cast<size_t>(2 * k)] = 2.0 * w2 * std::sin(k * alpha);
  }
  TwoSettingCheck check;
  check.seesaw_value = qset::seesaw(dir, two_j, opts).value - (w1 + w2);

  // support of the closed-form region: scan E1, take the better endpoint,
  // then refine by golden section.
  auto support_at = [&](double e1) {
    const TwoSettingInterval iv = two_setting_quantum_boundary(two_j, alpha, e1);
    return w1 * e1 + std::max(w2 * iv.lo, w2 * iv.hi);
  };
  double best = -std::numeric_limits<double>::infinity(), best_e1 = 0.0;
  const int grid = 4001;
  for (int i = 0; i < grid; ++i) {
    const double e1 = -1.0 + 2.0 * i / (grid - 1);
    const double v = support_at(e1);
    if (v > best) {
      best = v;
      best_e1 = e1;
    }
  }
  double a = std::max(-1.0, best_e1 - 2.0 / (grid - 1));
  double b = std::min(1.0, best_e1 + 2.0 / (grid - 1));
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  for (int it = 0; it < 100; ++it) {
    if (support_at(c) > support_at(d))
      b = d;
    else
      a = c;
    c = b - gr * (b - a);
    d = a + gr * (b - a);
  }
  check.closed_form_value = std::max(best, support_at(0.5 * (a + b)));
  return check;
}

DistanceCheck min_distinguish_angle(const TrigPoly& p, int two_j) {
  if (p.degree() > two_j)
    throw std::invalid_argument("min_distinguish_angle: degree exceeds 2J");
  const Extrema e = extrema(p);
  if (std::abs(e.min_value) > 1e-9 || std::abs(e.max_value - 1.0) > 1e-9)
    throw std::invalid_argument(
        "min_distinguish_angle: box must reach 0 and 1");
  DistanceCheck check;
  check.distance = circular_distance(e.argmin, e.argmax);
  check.bound = kPi / double(two_j);
  check.pass = check.distance >= check.bound - 1e-6;
  return check;
}

}  // namespace rotbox::games
