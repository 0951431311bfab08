#ifndef ROTBOX_GPT_HPP
#define ROTBOX_GPT_HPP

#include <Eigen/Dense>

#include "rotbox/rset.hpp"
#include "rotbox/trigpoly.hpp"

namespace rotbox::gpt {

struct NotInRJA : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Orbit state omega(theta) = (1, cos t, sin t, ..., cos 2Jt, sin 2Jt).
Eigen::VectorXd omega(int two_j, double theta);

// Unit effect u = (1, 0, ..., 0).
Eigen::VectorXd unit_effect(int two_j);

// Block-diagonal SO(2) representation 1 (+) rot(k theta), k = 1..2J.
Eigen::MatrixXd rotation_matrix(int two_j, double theta);

// Effects are coefficient vectors e = (c_0, c_1, s_1, ..., c_2J, s_2J); the
// pairing e . omega(theta) evaluates the associated polynomial.
Eigen::VectorXd effect_from_poly(const TrigPoly& p, int two_j);
TrigPoly poly_from_effect(const Eigen::VectorXd& e);

// e . omega in [0,1] for all theta, equivalently range_valid of the poly.
bool effect_valid(const Eigen::VectorXd& e);

// Measurement generating a tuple in R_J^A: e_a = coefficient vector of
// P(a|.).  Throws NotInRJA when the tuple fails membership_multi.
std::vector<Eigen::VectorXd> measurement_from_correlations(
    const std::vector<TrigPoly>& tuple, int two_j);

struct DistinguishabilityReport {
  // three-outcome measurement distinguishing omega(0), omega(2pi/3), omega(4pi/3)
  Eigen::Matrix3d joint_table;
  std::vector<Eigen::VectorXd> joint_effects;
  // pairwise effects and their values on omega(0), omega(pi/2), omega(pi),
  // omega(3pi/2)
  Eigen::VectorXd e_pm_half_pi, e_0_pi, e_half_3half;
  Eigen::Matrix<double, 3, 4> pairwise_table;
  bool effects_valid = false;
};

// The J = 1 distinguishability structure: three jointly and four pairwise
// perfectly distinguishable orbit states.
DistinguishabilityReport distinguishability_tables();

struct BitSymmetryReport {
  // inner products under an invariant metric diag(a, b, b, c, c), written as
  // coefficients (const, b-coeff, c-coeff) relative to a
  Eigen::Vector2d pair_difference_solution;  // (b, c) solving the full system
  bool only_trivial_solution = false;        // b = c = 0 forced
  double two_pair_ratio = 0.0;               // b / c when only two pairs used
};

// Invariant-metric witness: equality of the three distinguishable-pair inner
// products forces b = c = 0, so no invariant inner product can make all pairs
// reversibly equivalent.
BitSymmetryReport bit_symmetry_witness();

struct OrbitIsomorphismReport {
  double residual = 0.0;        // map or least-squares residual
  Eigen::MatrixXd witness;      // symmetric operator reproducing p (general J)
  double witness_min_eigenvalue = 0.0;
  bool pass = false;
};

// J = 1: verifies the explicit maps L (3x4) and M (4x3) between the
// symmetric two-rebit orbit and the spin-1 orbit at 100 angles.
OrbitIsomorphismReport symmetric_orbit_isomorphism_j1();

// General J: builds the symmetric-subspace orbit of 2J rebits in the Hamming
// basis and solves least squares for a symmetric witness reproducing p.
OrbitIsomorphismReport symmetric_orbit_witness(const TrigPoly& p, int two_j,
                                               double tol = 1e-8);

}  // namespace rotbox::gpt

#endif
