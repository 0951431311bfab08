#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rotbox/fixtures.hpp"
#include "rotbox/games.hpp"
#include "rotbox/qset.hpp"

using namespace rotbox;
namespace GM = rotbox::games;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
}  // namespace

TEST_CASE("game spec: normalization and positive region") {
  const auto spec = GM::GameSpec::standard();
  // integral of mu over the circle is one (composite Simpson)
  const int n = 1 << 16;
  double integral = spec.mu(0.0) + spec.mu(kTwoPi);
  for (int i = 1; i < n; ++i)
    integral += (i % 2 == 1 ? 4.0 : 2.0) * spec.mu(kTwoPi * i / n);
  integral *= kTwoPi / n / 3.0;
  CHECK(integral == doctest::Approx(1.0).epsilon(1e-8));

  // mu-measure of R+ is 1/2: integrate interval by interval, where |w| is
  // smooth, with composite Simpson
  double positive = 0.0;
  for (const auto& [lo, hi] : spec.positive_region) {
    const int m = 1 << 12;
    double acc = spec.mu(lo) + spec.mu(hi);
    for (int i = 1; i < m; ++i)
      acc += (i % 2 == 1 ? 4.0 : 2.0) * spec.mu(lo + (hi - lo) * i / m);
    positive += acc * (hi - lo) / m / 3.0;
  }
  CHECK(positive == doctest::Approx(0.5).epsilon(1e-8));

  // interior region boundaries are zeros of the weight (0 and 2pi are the
  // wrap-around cut, not zeros)
  for (double t : {0.3 * kPi, 0.7 * kPi, 1.1 * kPi, 1.9 * kPi})
    CHECK(std::abs(spec.weight.evaluate(t)) < 1e-12);
}

TEST_CASE("game_success: fixed values") {
  CHECK(GM::game_success(TrigPoly::constant(0.5)) == doctest::Approx(0.5));

  // quantum witness box reaches about 0.8536
  const auto gap = qset::analytic_gap_bound(3);
  const TrigPoly qbox = qset::born_polynomial(gap.rho, gap.effect);
  CHECK(GM::game_success(qbox) == doctest::Approx(0.85360).epsilon(2e-5));

  // box beyond the quantum bound: P* gives 1/2 + (pi/n) 0.6
  TrigPoly pstar({0.4, 0.0, 0.35, 0.0}, {0.25, 0.0, 0.25});
  const double n = GM::GameSpec::standard().normalization;
  CHECK(GM::game_success(pstar) ==
        doctest::Approx(0.5 + kPi / n * 0.6).epsilon(1e-12));

  CHECK_THROWS_AS((void)GM::game_success(TrigPoly({0.5, 0.6}, {0.0})),
                  GM::MembershipFailure);
}

TEST_CASE("game success is affine in the box") {
  TrigPoly p({0.4, 0.0, 0.35, 0.0}, {0.25, 0.0, 0.25});
  TrigPoly q = TrigPoly::constant(0.5);
  const double lam = 0.3;
  CHECK(GM::game_success(lam * p + (1 - lam) * q) ==
        doctest::Approx(lam * GM::game_success(p) +
                        (1 - lam) * GM::game_success(q))
            .epsilon(1e-12));
}

TEST_CASE("game_monte_carlo: constant box and region sampler") {
  auto res = GM::game_monte_carlo(TrigPoly::constant(0.5), 200000, 7);
  CHECK(std::abs(res.empirical - 0.5) <= 4.0 * res.stderr_estimate);
  CHECK(std::abs(res.positive_fraction - 0.5) <= 0.005);
}

TEST_CASE("game_monte_carlo: quantum witness box matches the analytic value") {
  const auto gap = qset::analytic_gap_bound(3);
  const TrigPoly qbox = qset::born_polynomial(gap.rho, gap.effect);
  const double expect = GM::game_success(qbox);
  auto res = GM::game_monte_carlo(qbox, 400000, 11);
  CHECK(std::abs(res.empirical - expect) <= 4.0 * res.stderr_estimate);
}

TEST_CASE("game_monte_carlo: deterministic across exec policies and seeds") {
  TrigPoly box({0.4, 0.0, 0.35, 0.0}, {0.25, 0.0, 0.25});
  auto a = GM::game_monte_carlo(box, 50000, 42, Exec::Serial);
  auto b = GM::game_monte_carlo(box, 50000, 42, Exec::Parallel);
  CHECK(a.empirical == b.empirical);
  CHECK(a.positive_fraction == b.positive_fraction);
  auto c = GM::game_monte_carlo(box, 50000, 43, Exec::Parallel);
  CHECK(c.empirical != a.empirical);  // seed sensitivity
}

TEST_CASE("two_setting_quantum_boundary: closed-form spot checks") {
  // delta = 0: E2 free in [-1, 1]
  auto free_iv = GM::two_setting_quantum_boundary(1, kPi, 0.3);
  CHECK(free_iv.delta == 0.0);
  CHECK(free_iv.lo == -1.0);
  CHECK(free_iv.hi == 1.0);

  // E1 = 1: lower boundary at 2 delta^2 - 1
  auto iv = GM::two_setting_quantum_boundary(1, kPi / 3, 1.0);
  const double delta = std::cos(kPi / 6);
  CHECK(iv.delta == doctest::Approx(delta).epsilon(1e-15));
  CHECK(iv.lo == doctest::Approx(2 * delta * delta - 1).epsilon(1e-9));
  CHECK(iv.hi == doctest::Approx(1.0).epsilon(1e-12));

  // J = 1/2, alpha = 0: E2 = E1 forced (delta = 1).  The boundary is a
  // tangency here, so floating point resolves it only to ~sqrt(eps).
  auto pin = GM::two_setting_quantum_boundary(1, 0.0, 0.37);
  CHECK(std::abs(pin.lo - 0.37) < 1e-6);
  CHECK(std::abs(pin.hi - 0.37) < 1e-6);

  // bisection agrees with a dense feasibility scan of the constraint
  for (double e1 : {-0.6, 0.0, 0.4, 0.9}) {
    auto b = GM::two_setting_quantum_boundary(1, kPi / 3, e1);
    double lo_scan = 1.0;
    const int m = 200000;
    for (int i = 0; i <= m; ++i) {
      const double e2 = -1.0 + 2.0 * i / m;
      const double ov = 0.5 * (std::sqrt(1 + e1) * std::sqrt(1 + e2) +
                               std::sqrt(1 - e1) * std::sqrt(1 - e2));
      if (ov >= delta) {
        lo_scan = e2;
        break;
      }
    }
    CHECK(std::abs(b.lo - lo_scan) < 1e-4);
  }
}

TEST_CASE("two-setting boundary is symmetric") {
  // swap symmetry: E2 feasible for E1 iff E1 feasible for E2
  auto iv = GM::two_setting_quantum_boundary(1, kPi / 3, 0.25);
  auto back = GM::two_setting_quantum_boundary(1, kPi / 3, iv.lo);
  CHECK(back.hi >= 0.25 - 1e-9);
  // joint sign flip
  auto neg = GM::two_setting_quantum_boundary(1, kPi / 3, -0.25);
  CHECK(neg.hi == doctest::Approx(-iv.lo).epsilon(1e-8));
  CHECK(neg.lo == doctest::Approx(-iv.hi).epsilon(1e-8));
}

TEST_CASE("two_setting_seesaw_check: support values match the region") {
  qset::SeesawOptions opts;
  opts.restarts = 12;
  opts.seed = 5;
  for (double alpha : {kPi / 6, kPi / 3}) {
    for (auto [w1, w2] : std::vector<std::pair<double, double>>{
             {1.0, 1.0}, {1.0, -1.0}, {0.3, -1.0}}) {
      auto check = GM::two_setting_seesaw_check(1, alpha, w1, w2, opts);
      CHECK(std::abs(check.seesaw_value - check.closed_form_value) <= 1e-3);
    }
  }
  // alpha = pi: delta = 0, direction (1,1) reaches 2
  auto both = GM::two_setting_seesaw_check(1, kPi, 1.0, 1.0, opts);
  CHECK(both.closed_form_value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(both.seesaw_value == doctest::Approx(2.0).epsilon(1e-6));
  // direction (1, 0) reaches 1
  auto single = GM::two_setting_seesaw_check(1, kPi / 3, 1.0, 0.0, opts);
  CHECK(single.closed_form_value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(single.seesaw_value == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("min_distinguish_angle: saturation and slack") {
  // sin^2 at J = 1 saturates pi/2
  TrigPoly sin2({0.5, 0.0, -0.5}, {0.0, 0.0});
  auto sat = GM::min_distinguish_angle(sin2, 2);
  CHECK(sat.pass);
  CHECK(sat.distance == doctest::Approx(kPi / 2).epsilon(1e-9));
  CHECK(sat.bound == doctest::Approx(kPi / 2).epsilon(1e-15));

  // sin^4(t/2) at J = 1 has distance pi > pi/2; its minimum is quartic-flat,
  // so the located angle is good to ~1e-4 only
  TrigPoly sin4({3.0 / 8, -0.5, 1.0 / 8}, {0.0, 0.0});
  auto slack = GM::min_distinguish_angle(sin4, 2);
  CHECK(slack.pass);
  CHECK(std::abs(slack.distance - kPi) < 1e-3);

  // all spin-1 extremal gallery members obey the bound
  for (double theta1 = kPi / 2 + 0.05; theta1 < 3 * kPi / 2; theta1 += 0.1) {
    for (const TrigPoly& p : qset::r1_face_extremals(0.0, theta1)) {
      auto chk = GM::min_distinguish_angle(p, 2);
      CHECK(chk.pass);
    }
  }

  CHECK_THROWS((void)GM::min_distinguish_angle(TrigPoly::constant(0.5), 1));
}
