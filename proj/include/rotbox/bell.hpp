#ifndef ROTBOX_BELL_HPP
#define ROTBOX_BELL_HPP

#include <Eigen/Dense>
#include <array>
#include <map>

#include "rotbox/parallel.hpp"
#include "rotbox/trigpoly.hpp"

namespace rotbox::bell {

struct ZeroMarginal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two-party behavior P(a, b | alpha, beta) with outcomes a, b in {+1, -1},
// stored per outcome pair as a 3x3 coefficient matrix on the local bases
// {1, cos, sin}:  P(a,b|alpha,beta) = u(alpha)^T B_{ab} u(beta).
struct Behavior {
  std::map<std::pair<int, int>, Eigen::Matrix3d> coeff;

  double probability(int a, int b, double alpha, double beta) const;
  // marginal of one party as a degree-1 polynomial in its own angle
  TrigPoly marginal_a(int a) const;
  TrigPoly marginal_b(int b) const;
};

// Structural checks (largest violation found):
double normalization_error(const Behavior& p);     // sum_ab P = 1
double positivity_violation(const Behavior& p);    // P >= 0 on a 64x64 grid
double no_signalling_error(const Behavior& p);     // coefficient-level

// Local bias test for degree-1 boxes: c_0 = 1/2 within 1e-10, equivalently
// P(a|alpha) = P(-a|alpha + pi).
bool is_unbiased(const TrigPoly& local);

// Conditional box of one party given the other's outcome and angle.
// party = 0 conditions on Bob (returns a box in alpha), party = 1 on Alice.
TrigPoly conditional_box(const Behavior& p, int party, int outcome,
                         double angle);

// Wiring of two local degree-1 boxes Q_A(1|a)=1/2+cos(a)/2 (same for B) into
// a PR box P_PR(a,b|x,y) = (1/2) delta_{(1-ab)/2, xy}.
Behavior pr_wiring_behavior();

double pr_table(int a, int b, int x, int y);

struct CorrelationTensor {
  int parties = 0;
  std::vector<double> t;  // 3^N entries, row-major (last index fastest)

  double at(const std::vector<int>& idx) const;
  static CorrelationTensor zero(int parties);
};

struct NagataResult {
  double lhs = 0.0;    // pi^N sum over planar index pairs of T^2
  double rhs = 0.0;    // 4^N T_max
  double t_max = 0.0;  // max of T.(n_1 x ... x n_N) over planar angles
  std::vector<double> argmax;
  bool violated = false;
};

// Planar correlation inequality: pi^N sum_{i in {1,2}^N} T_i^2 <= 4^N T_max.
// T_max is found by multistart coordinate ascent with exact single-harmonic
// coordinate updates (E is degree-1 in each angle).
NagataResult nagata_inequality(const CorrelationTensor& t,
                               Exec exec = Exec::Parallel,
                               std::uint64_t seed = 1);

// E(angles) for planar directions n_j = (cos a_j, sin a_j, 0).
double planar_correlation(const CorrelationTensor& t,
                          const std::vector<double>& angles);

}  // namespace rotbox::bell

#endif
