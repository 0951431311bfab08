#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "rotbox/bell.hpp"

using namespace rotbox;
namespace B = rotbox::bell;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

// product of two unbiased degree-1 boxes as a Behavior
B::Behavior product_behavior(double amp_a, double amp_b) {
  B::Behavior p;
  const Eigen::Vector3d pa(0.5, amp_a / 2, 0.0), ma(0.5, -amp_a / 2, 0.0);
  const Eigen::Vector3d pb(0.5, amp_b / 2, 0.0), mb(0.5, -amp_b / 2, 0.0);
  p.coeff[{+1, +1}] = pa * pb.transpose();
  p.coeff[{+1, -1}] = pa * mb.transpose();
  p.coeff[{-1, +1}] = ma * pb.transpose();
  p.coeff[{-1, -1}] = ma * mb.transpose();
  return p;
}

}  // namespace

TEST_CASE("is_unbiased") {
  CHECK(B::is_unbiased(TrigPoly({0.5, 0.5}, {0.0})));
  CHECK(B::is_unbiased(TrigPoly::constant(0.5)));
  // c0 = (1 + cos beta)/4 at beta = pi/3 is biased
  const double c0 = 0.25 * (1.0 + std::cos(kPi / 3));
  CHECK_FALSE(B::is_unbiased(TrigPoly({c0, 0.2}, {0.1})));
  CHECK_THROWS((void)B::is_unbiased(TrigPoly({0.5, 0.1, 0.1}, {0.0, 0.0})));
}

TEST_CASE("product behavior: structure and conditionals") {
  B::Behavior p = product_behavior(0.8, 0.6);
  CHECK(B::normalization_error(p) < 1e-14);
  CHECK(B::positivity_violation(p) < 1e-12);
  CHECK(B::no_signalling_error(p) < 1e-14);

  // conditioning recovers the local factor regardless of the other side
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  for (int trial = 0; trial < 10; ++trial) {
    const double beta = u(rng);
    TrigPoly cond = B::conditional_box(p, 0, +1, beta);
    for (int i = 0; i < 50; ++i) {
      const double alpha = kTwoPi * i / 50.0;
      CHECK(cond.evaluate(alpha) ==
            doctest::Approx(0.5 + 0.4 * std::cos(alpha)).epsilon(1e-12));
    }
  }
}

TEST_CASE("conditional boxes of degree-(1,1) behaviors have degree one") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  // random mixture of product behaviors stays degree-(1,1) and no-signalling
  for (int trial = 0; trial < 10; ++trial) {
    const double lam = u(rng);
    B::Behavior a = product_behavior(0.9 * u(rng), 0.9 * u(rng));
    B::Behavior b = product_behavior(-0.9 * u(rng), 0.9 * u(rng));
    B::Behavior mix;
    for (int x : {+1, -1})
      for (int y : {+1, -1})
        mix.coeff[{x, y}] =
            lam * a.coeff[{x, y}] + (1 - lam) * b.coeff[{x, y}];
    CHECK(B::no_signalling_error(mix) < 1e-13);
    TrigPoly cond = B::conditional_box(mix, 1, -1, u(rng) * kTwoPi);
    CHECK(cond.degree() <= 1);
    Extrema e = extrema(cond);
    CHECK(e.min_value >= -1e-12);
  }
}

TEST_CASE("pr_wiring_behavior: full verification") {
  B::Behavior p = B::pr_wiring_behavior();

  // (i) no-signalling at coefficient level
  CHECK(B::no_signalling_error(p) < 1e-12);
  CHECK(B::normalization_error(p) < 1e-14);
  CHECK(B::positivity_violation(p) < 1e-12);

  // marginals are exactly 1/2
  for (int b : {+1, -1}) {
    TrigPoly mb = p.marginal_b(b);
    CHECK(mb.c_coeff(0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(mb.c_coeff(1)) < 1e-14);
    CHECK(std::abs(mb.s_coeff(1)) < 1e-14);
  }

  // (ii) conditional boxes have degree <= 1 and are nonnegative
  for (int outcome : {+1, -1}) {
    TrigPoly cond = B::conditional_box(p, 0, outcome, 1.1);
    CHECK(cond.degree() <= 1);
    CHECK(extrema(cond).min_value >= -1e-12);
  }

  // (iii) reproduces the PR table at alpha_x, beta_y in {pi, 0}
  const std::array<double, 2> angle_of = {kPi, 0.0};  // x = 0 -> pi, x = 1 -> 0
  for (int a : {+1, -1})
    for (int b : {+1, -1})
      for (int x : {0, 1})
        for (int y : {0, 1})
          CHECK(p.probability(a, b, angle_of[static_cast<size_t>(x)],
                              angle_of[static_cast<size_t>(y)]) ==
                doctest::Approx(B::pr_table(a, b, x, y)).epsilon(1e-13));

  // conditional box P^A_{-1, beta}(+1|.) = (1/2 + cos a / 2)(1/2 + cos b / 2)
  for (double beta : {0.0, kPi / 3, kPi}) {
    TrigPoly cond = B::conditional_box(p, 0, -1, beta);
    // c0(beta) = (1 + cos beta)/4
    CHECK(cond.c_coeff(0) ==
          doctest::Approx(0.25 * (1 + std::cos(beta))).epsilon(1e-12));
  }

  // (iv) fails local unbiasedness at beta = pi/3
  CHECK_FALSE(B::is_unbiased(B::conditional_box(p, 0, -1, kPi / 3)));
  // the conditional at beta = 0 happens to be unbiased; the point is that
  // some conditional is biased
  CHECK(B::is_unbiased(B::conditional_box(p, 0, -1, 0.0)));
}

TEST_CASE("nagata: single party and zero tensor") {
  B::CorrelationTensor one = B::CorrelationTensor::zero(1);
  one.t = {1.0, 0.0, 0.0};  // T = (1, 0, 0)
  auto res = B::nagata_inequality(one);
  CHECK(res.lhs == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(res.t_max == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(res.rhs == doctest::Approx(4.0).epsilon(1e-9));
  CHECK_FALSE(res.violated);

  auto zero = B::nagata_inequality(B::CorrelationTensor::zero(2));
  CHECK(zero.lhs == 0.0);
  CHECK_FALSE(zero.violated);
}

TEST_CASE("nagata: planar singlet-like tensor violates the bound") {
  B::CorrelationTensor t = B::CorrelationTensor::zero(2);
  // T_{ij} = delta_{ij} on the planar indices: E = cos(a1 - a2)
  t.t[0 * 3 + 0] = 1.0;
  t.t[1 * 3 + 1] = 1.0;
  auto res = B::nagata_inequality(t);
  CHECK(res.lhs == doctest::Approx(2.0 * kPi * kPi).epsilon(1e-12));
  CHECK(res.t_max == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(res.rhs == doctest::Approx(16.0).epsilon(1e-6));
  CHECK(res.violated);
}

TEST_CASE("nagata: optimizer dominates a dense validation grid") {
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  B::CorrelationTensor t = B::CorrelationTensor::zero(2);
  for (auto& v : t.t) v = u(rng);
  auto res = B::nagata_inequality(t);
  for (int i = 0; i < 64; ++i)
    for (int j = 0; j < 64; ++j) {
      const double v = B::planar_correlation(
          t, {kTwoPi * i / 64.0, kTwoPi * j / 64.0});
      CHECK(res.t_max >= v - 1e-7);
    }

  // three parties, coarse grid
  B::CorrelationTensor t3 = B::CorrelationTensor::zero(3);
  std::mt19937 rng3(22);
  for (auto& v : t3.t) v = u(rng3);
  auto res3 = B::nagata_inequality(t3);
  for (int i = 0; i < 24; ++i)
    for (int j = 0; j < 24; ++j)
      for (int k = 0; k < 24; ++k) {
        const double v = B::planar_correlation(
            t3,
            {kTwoPi * i / 24.0, kTwoPi * j / 24.0, kTwoPi * k / 24.0});
        CHECK(res3.t_max >= v - 1e-7);
      }
}

TEST_CASE("nagata: parallel equals serial") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  B::CorrelationTensor t = B::CorrelationTensor::zero(4);
  for (auto& v : t.t) v = u(rng);
  auto a = B::nagata_inequality(t, Exec::Serial, 9);
  auto b = B::nagata_inequality(t, Exec::Parallel, 9);
  CHECK(a.t_max == b.t_max);
  CHECK(a.lhs == b.lhs);
}
