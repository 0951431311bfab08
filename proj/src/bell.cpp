#include "rotbox/bell.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace rotbox::bell {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

Eigen::Vector3d ucs(double t) { return {1.0, std::cos(t), std::sin(t)}; }

const std::array<int, 2> kOutcomes = {+1, -1};
}  // namespace

double Behavior::probability(int a, int b, double alpha, double beta) const {
  return ucs(alpha).dot(coeff.at({a, b}) * ucs(beta));
}

TrigPoly Behavior::marginal_a(int a) const {
  // sum over b; beta-dependence must cancel, keep the constant column
  Eigen::Vector3d v = Eigen::Vector3d::Zero();
  for (int b : kOutcomes) v += coeff.at({a, b}).col(0);
  return TrigPoly({v(0), v(1)}, {v(2)});
}

TrigPoly Behavior::marginal_b(int b) const {
  Eigen::Vector3d v = Eigen::Vector3d::Zero();
  for (int a : kOutcomes) v += coeff.at({a, b}).row(0).transpose();
  return TrigPoly({v(0), v(1)}, {v(2)});
}

double normalization_error(const Behavior& p) {
  Eigen::Matrix3d total = Eigen::Matrix3d::Zero();
  for (int a : kOutcomes)
    for (int b : kOutcomes) total += p.coeff.at({a, b});
  total(0, 0) -= 1.0;
  return total.cwiseAbs().maxCoeff();
}

double positivity_violation(const Behavior& p) {
  double worst = 0.0;
  for (int i = 0; i < 64; ++i)
    for (int j = 0; j < 64; ++j) {
      const double alpha = kTwoPi * i / 64.0, beta = kTwoPi * j / 64.0;
      for (int a : kOutcomes)
        for (int b : kOutcomes)
          worst = std::min(worst, p.probability(a, b, alpha, beta));
    }
  return -worst;
}

double no_signalling_error(const Behavior& p) {
  // Alice's marginal must lose all beta-dependence: columns 1, 2 of
  // sum_b B_{ab} vanish; symmetrically for Bob.
  double err = 0.0;
  for (int a : kOutcomes) {
    Eigen::Matrix3d m = p.coeff.at({a, +1}) + p.coeff.at({a, -1});
    err = std::max(err, m.col(1).cwiseAbs().maxCoeff());
    err = std::max(err, m.col(2).cwiseAbs().maxCoeff());
  }
  for (int b : kOutcomes) {
    Eigen::Matrix3d m = p.coeff.at({+1, b}) + p.coeff.at({-1, b});
    err = std::max(err, m.row(1).cwiseAbs().maxCoeff());
    err = std::max(err, m.row(2).cwiseAbs().maxCoeff());
  }
  return err;
}

bool is_unbiased(const TrigPoly& local) {
  if (local.degree() > 1)
    throw std::invalid_argument("is_unbiased: box must have degree <= 1");
  return std::abs(local.c_coeff(0) - 0.5) <= 1e-10;
}

TrigPoly conditional_box(const Behavior& p, int party, int outcome,
                         double angle) {
  // party 0: condition on Bob's outcome at beta = angle; the result is
  // Alice's updated box P(+1, outcome | ., angle) / P^B(outcome | angle).
  Eigen::Vector3d v;
  double marg;
  if (party == 0) {
    v = p.coeff.at({+1, outcome}) * ucs(angle);
    marg = p.marginal_b(outcome).evaluate(angle);
  } else if (party == 1) {
    v = p.coeff.at({outcome, +1}).transpose() * ucs(angle);
    marg = p.marginal_a(outcome).evaluate(angle);
  } else {
    throw std::invalid_argument("conditional_box: party is 0 or 1");
  }
  if (marg <= 1e-9)
    throw ZeroMarginal("conditional_box: conditioning outcome has no weight");
  return TrigPoly({v(0) / marg, v(1) / marg}, {v(2) / marg});
}

double pr_table(int a, int b, int x, int y) {
  const int parity = (1 - a * b) / 2;  // 0 correlated, 1 anticorrelated
  return parity == x * y ? 0.5 : 0.0;
}

Behavior pr_wiring_behavior() {
  // Q(1|t) = 1/2 + cos(t)/2, Q(0|t) = 1/2 - cos(t)/2
  const Eigen::Vector3d q1(0.5, 0.5, 0.0), q0(0.5, -0.5, 0.0);
  const std::array<Eigen::Vector3d, 2> q = {q0, q1};
  Behavior p;
  for (int a : kOutcomes)
    for (int b : kOutcomes) {
      Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          m += pr_table(a, b, c, d) * q[static_cast<size_t>(c)] *
               q[static_cast<size_t>(d)].transpose();
      p.coeff[{a, b}] = m;
    }
  return p;
}

double CorrelationTensor::at(const std::vector<int>& idx) const {
  size_t flat = 0;
  for (int i : idx) flat = flat * 3 + static_cast<size_t>(i);
  return t.at(flat);
}

CorrelationTensor CorrelationTensor::zero(int parties) {
  CorrelationTensor c;
  c.parties = parties;
  c.t.assign(static_cast<size_t>(std::pow(3, parties)), 0.0);
  return c;
}

double planar_correlation(const CorrelationTensor& t,
                          const std::vector<double>& angles) {
  const int n = t.parties;
  double total = 0.0;
  // only indices in {0,1}^N survive planar directions
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> idx(static_cast<size_t>(n));
    double weight = 1.0;
    for (int j = 0; j < n; ++j) {
      const int ij = (mask >> j) & 1;
      idx[static_cast<size_t>(j)] = ij;
      weight *= ij == 0 ? std::cos(angles[static_cast<size_t>(j)])
                        : std::sin(angles[static_cast<size_t>(j)]);
    }
    total += weight * t.at(idx);
  }
  return total;
}

namespace {

// exact maximization over one angle: E = A cos a_j + B sin a_j + const
double coordinate_update(const CorrelationTensor& t, std::vector<double>& angles,
                         int j) {
  std::vector<double> probe = angles;
  probe[static_cast<size_t>(j)] = 0.0;
  const double at0 = planar_correlation(t, probe);
  probe[static_cast<size_t>(j)] = kPi / 2.0;
  const double at90 = planar_correlation(t, probe);
  // E has no constant term in a planar tensor contraction, so A = at0,
  // B = at90 and the maximum sits at atan2(B, A).
  angles[static_cast<size_t>(j)] = std::atan2(at90, at0);
  return std::hypot(at0, at90);
}

double ascend(const CorrelationTensor& t, std::vector<double>& angles) {
  double value = planar_correlation(t, angles);
  for (int sweep = 0; sweep < 200; ++sweep) {
    double next = value;
    for (int j = 0; j < t.parties; ++j) next = coordinate_update(t, angles, j);
    if (next <= value + 1e-7) {
      value = std::max(value, next);
      break;
    }
    value = next;
  }
  return value;
}

}  // namespace

NagataResult nagata_inequality(const CorrelationTensor& t, Exec exec,
                               std::uint64_t seed) {
  if (t.parties < 1 || t.parties > 5)
    throw std::invalid_argument("nagata_inequality: 1 <= N <= 5");
  NagataResult res;
  const int n = t.parties;

  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> idx(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) idx[static_cast<size_t>(j)] = (mask >> j) & 1;
    const double v = t.at(idx);
    res.lhs += v * v;
  }
  res.lhs *= std::pow(kPi, n);

  // multistart coordinate ascent
  std::vector<std::vector<double>> starts;
  if (n <= 3) {
    const int g = 32;
    std::vector<double> angles(static_cast<size_t>(n), 0.0);
    const int total = static_cast<int>(std::pow(g, n));
    for (int s = 0; s < total; ++s) {
      int rem = s;
      for (int j = 0; j < n; ++j) {
        angles[static_cast<size_t>(j)] = kTwoPi * (rem % g) / g;
        rem /= g;
      }
      starts.push_back(angles);
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, kTwoPi);
    for (int s = 0; s < 500; ++s) {
      std::vector<double> angles(static_cast<size_t>(n));
      for (auto& a : angles) a = u(rng);
      starts.push_back(std::move(angles));
    }
  }

  std::vector<double> values(starts.size());
  std::vector<std::vector<double>> argmaxes(starts.size());
  parallel_for(exec, static_cast<std::int64_t>(starts.size()), [&](std::int64_t s) {
    std::vector<double> angles = starts[static_cast<size_t>(s)];
    values[static_cast<size_t>(s)] = ascend(t, angles);
    argmaxes[static_cast<size_t>(s)] = std::move(angles);
  });
  size_t best = 0;
  for (size_t s = 1; s < values.size(); ++s)
    if (values[s] > values[best]) best = s;
  res.t_max = values[best];
  res.argmax = argmaxes[best];
  res.rhs = std::pow(4.0, n) * res.t_max;
  res.violated = res.lhs > res.rhs + 1e-9;
  return res;
}

}  // namespace rotbox::bell
