#include "rotbox/gpt.hpp"

#include <cmath>
#include <numbers>

namespace rotbox::gpt {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
}  // namespace

Eigen::VectorXd omega(int two_j, double theta) {
  Eigen::VectorXd w(2 * two_j + 1);
  w(0) = 1.0;
  for (int k = 1; k <= two_j; ++k) {
    w(2 * k - 1) = std::cos(k * theta);
    w(2 * k) = std::sin(k * theta);
  }
  return w;
}

Eigen::VectorXd unit_effect(int two_j) {
  Eigen::VectorXd u = Eigen::VectorXd::Zero(2 * two_j + 1);
  u(0) = 1.0;
  return u;
}

Eigen::MatrixXd rotation_matrix(int two_j, double theta) {
  const int n = 2 * two_j + 1;
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
  t(0, 0) = 1.0;
  for (int k = 1; k <= two_j; ++k) {
    const double c = std::cos(k * theta), s = std::sin(k * theta);
    t(2 * k - 1, 2 * k - 1) = c;
    t(2 * k - 1, 2 * k) = -s;
    t(2 * k, 2 * k - 1) = s;
    t(2 * k, 2 * k) = c;
  }
  return t;
}

Eigen::VectorXd effect_from_poly(const TrigPoly& p, int two_j) {
  if (p.degree() > two_j)
    throw std::invalid_argument("effect_from_poly: degree exceeds 2J");
  Eigen::VectorXd e = Eigen::VectorXd::Zero(2 * two_j + 1);
  e(0) = p.c_coeff(0);
  for (int k = 1; k <= two_j; ++k) {
    e(2 * k - 1) = p.c_coeff(k);
    e(2 * k) = p.s_coeff(k);
  }
  return e;
}

TrigPoly poly_from_effect(const Eigen::VectorXd& e) {
  if (e.size() % 2 == 0)
    throw std::invalid_argument("poly_from_effect: need odd length 4J+1");
  const int two_j = static_cast<int>(e.size() / 2);
  std::vector<double> c(static_cast<size_t>(two_j) + 1), s(static_cast<size_t>(two_j));
  c[0] = e(0);
  for (int k = 1; k <= two_j; ++k) {
    c[static_cast<size_t>(k)] = e(2 * k - 1);
    s[static_cast<size_t>(k) - 1] = e(2 * k);
  }
  return TrigPoly(std::move(c), std::move(s));
}

bool effect_valid(const Eigen::VectorXd& e) {
  return range_valid(poly_from_effect(e));
}

std::vector<Eigen::VectorXd> measurement_from_correlations(
    const std::vector<TrigPoly>& tuple, int two_j) {
  rset::MultiMembershipResult res;
  try {
    res = rset::membership_multi(tuple, two_j);
  } catch (const rset::NormalizationViolation& err) {
    throw NotInRJA(err.what());
  }
  if (!res.feasible)
    throw NotInRJA("tuple is not a valid spin-J correlation");
  std::vector<Eigen::VectorXd> effects;
  effects.reserve(tuple.size());
  for (const auto& p : tuple) effects.push_back(effect_from_poly(p, two_j));
  return effects;
}

DistinguishabilityReport distinguishability_tables() {
  DistinguishabilityReport rep;
  const int two_j = 2;

  // Joint: P(a|t) = |<omega^a | psi(t)>|^2 with psi(t) the uniform qutrit
  // orbit; coefficients a_m = (3 - |m|)/9 e^{-i m phi_a}.
  std::vector<TrigPoly> triple;
  for (int a = 0; a < 3; ++a) {
    const double phi = kTwoPi * a / 3.0;
    std::vector<cplx> half = {cplx(1.0 / 3.0, 0.0),
                              (2.0 / 9.0) * std::polar(1.0, -phi),
                              (1.0 / 9.0) * std::polar(1.0, -2.0 * phi)};
    triple.push_back(from_halfspectrum(half));
  }
  rep.joint_effects = measurement_from_correlations(triple, two_j);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      rep.joint_table(a, b) =
          rep.joint_effects[static_cast<size_t>(a)].dot(omega(two_j, kTwoPi * b / 3.0));

  // Pairwise effects from the five-dimensional representation.
  rep.e_pm_half_pi = Eigen::VectorXd::Zero(5);
  rep.e_pm_half_pi << 0.5, 0.0, 0.0, 0.5, 0.0;
  rep.e_0_pi = Eigen::VectorXd::Zero(5);
  rep.e_0_pi << 0.5, 0.5, 0.0, 0.0, 0.0;
  rep.e_half_3half = Eigen::VectorXd::Zero(5);
  rep.e_half_3half << 0.5, 0.0, 0.5, 0.0, 0.0;

  const std::array<double, 4> states = {0.0, kPi / 2.0, kPi, 3.0 * kPi / 2.0};
  const std::array<const Eigen::VectorXd*, 3> effects = {
      &rep.e_pm_half_pi, &rep.e_0_pi, &rep.e_half_3half};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j)
      rep.pairwise_table(i, j) =
          effects[static_cast<size_t>(i)]->dot(omega(two_j, states[static_cast<size_t>(j)]));

  rep.effects_valid = effect_valid(rep.e_pm_half_pi) &&
                      effect_valid(rep.e_0_pi) && effect_valid(rep.e_half_3half);
  return rep;
}

BitSymmetryReport bit_symmetry_witness() {
  BitSymmetryReport rep;
  // Inner products of distinguishable pairs under diag(a, b, b, c, c):
  //   <w(0), w(3pi/2)> = a - c
  //   <w(0), w(pi)>    = a - b + c
  //   <w(0), w(2pi/3)> = a - b/2 - c/2
  // Equality of the three gives the homogeneous system in (b, c):
  //   (1)-(2):  b - 2c = 0
  //   (1)-(3):  b/2 - c/2 = 0
  Eigen::Matrix2d sys;
  sys << 1.0, -2.0, 0.5, -0.5;
  // The only solution is (0, 0) iff the system is nonsingular.
  rep.only_trivial_solution = std::abs(sys.determinant()) > 1e-12;
  rep.pair_difference_solution = Eigen::Vector2d::Zero();
  // Using only the first two pairs, (1)-(2) alone leaves b = 2c.
  rep.two_pair_ratio = 2.0;
  return rep;
}

OrbitIsomorphismReport symmetric_orbit_isomorphism_j1() {
  OrbitIsomorphismReport rep;
  Eigen::MatrixXd L(3, 4), M(4, 3);
  const double sL = std::sqrt(4.0 / 3.0), sM = std::sqrt(3.0 / 4.0);
  L << sL, 0, 0, 0, 0, sL / 2, sL / 2, 0, 0, 0, 0, sL;
  M << sM, 0, 0, 0, sM, 0, 0, sM, 0, 0, 0, sM;

  double err = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double t = kTwoPi * i / 100.0;
    // two-rebit symmetric orbit |psi(t)><psi(t)|^{x2}
    Eigen::Vector2cd q(std::polar(1.0 / std::sqrt(2.0), t / 2.0),
                       std::polar(1.0 / std::sqrt(2.0), -t / 2.0));
    Eigen::Vector4cd q2;
    q2 << q(0) * q(0), q(0) * q(1), q(1) * q(0), q(1) * q(1);
    Eigen::Matrix4cd r4 = q2 * q2.adjoint();
    // spin-1 orbit (1/3) e^{i (k - j) t}
    Eigen::Matrix3cd r3;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r3(j, k) = std::polar(1.0 / 3.0, (k - j) * t);
    err = std::max(err, (L * r4 * L.transpose() - r3).cwiseAbs().maxCoeff());
    err = std::max(err, (M * r3 * M.transpose() - r4).cwiseAbs().maxCoeff());
  }
  rep.residual = err;
  rep.pass = err < 1e-12;
  return rep;
}

OrbitIsomorphismReport symmetric_orbit_witness(const TrigPoly& p, int two_j,
                                               double tol) {
  if (p.degree() > two_j)
    throw std::invalid_argument("symmetric_orbit_witness: degree exceeds 2J");
  const int n = two_j + 1;  // dim Sym^{2J}(R^2)

  // Orthonormal Hamming-weight basis: v_j(t) = sqrt(C(2J, j))
  // cos^{2J-j}(t/2) sin^j(t/2).
  Eigen::VectorXd binom(n);
  binom(0) = 1.0;
  for (int j = 1; j < n; ++j)
    binom(j) = binom(j - 1) * double(two_j - j + 1) / double(j);
  auto orbit = [&](double t) {
    Eigen::VectorXd v(n);
    const double ch = std::cos(t / 2.0), sh = std::sin(t / 2.0);
    for (int j = 0; j < n; ++j)
      v(j) = std::sqrt(binom(j)) * std::pow(ch, two_j - j) * std::pow(sh, j);
    return v;
  };

  // least squares over symmetric E: p(t_i) = v(t_i)^T E v(t_i)
  const int dof = n * (n + 1) / 2;
  const int samples = std::max(8 * dof, 64);
  Eigen::MatrixXd A(samples, dof);
  Eigen::VectorXd rhs(samples);
  for (int i = 0; i < samples; ++i) {
    const double t = kTwoPi * i / samples;
    const Eigen::VectorXd v = orbit(t);
    int col = 0;
    for (int r = 0; r < n; ++r)
      for (int cidx = r; cidx < n; ++cidx)
        A(i, col++) = (r == cidx ? 1.0 : 2.0) * v(r) * v(cidx);
    rhs(i) = p.evaluate(t);
  }
  const Eigen::VectorXd x = A.colPivHouseholderQr().solve(rhs);

  OrbitIsomorphismReport rep;
  rep.witness = Eigen::MatrixXd::Zero(n, n);
  int col = 0;
  for (int r = 0; r < n; ++r)
    for (int cidx = r; cidx < n; ++cidx) {
      rep.witness(r, cidx) = x(col);
      rep.witness(cidx, r) = x(col);
      ++col;
    }

  double err = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double t = kTwoPi * i / 1000.0;
    const Eigen::VectorXd v = orbit(t);
    err = std::max(err, std::abs(v.dot(rep.witness * v) - p.evaluate(t)));
  }
  rep.residual = err;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rep.witness,
                                                    Eigen::EigenvaluesOnly);
  rep.witness_min_eigenvalue = es.eigenvalues().minCoeff();
  rep.pass = err <= tol;
  return rep;
}

}  // namespace rotbox::gpt
