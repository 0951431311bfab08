#ifndef ROTBOX_RSET_HPP
#define ROTBOX_RSET_HPP

#include <string>
#include <vector>

#include "rotbox/parallel.hpp"
#include "rotbox/sdp.hpp"
#include "rotbox/trigpoly.hpp"

namespace rotbox::rset {

struct NormalizationViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Gram pair witnessing membership in R_J:
//   Q, S >= 0,  a_k = band_k(Q),  a_k = -band_k(S) for k != 0,
//   1 - a_0 = Tr(S),
// with band_k(M) = sum_j M_{j, j+k} and entries labelled 0..2J.
struct Certificate {
  Eigen::MatrixXcd Q;
  Eigen::MatrixXcd S;
};

// Linear functional on the coefficient vector (c_0, c_1, s_1, ..., c_2J, s_2J).
struct Direction {
  std::vector<double> w;  // length 4J+1

  double c_weight(int k) const { return k == 0 ? w.at(0) : w.at(static_cast<size_t>(2 * k - 1)); }
  double s_weight(int k) const { return w.at(static_cast<size_t>(2 * k)); }
  int two_j() const { return static_cast<int>(w.size() - 1) / 2; }

  static Direction zero(int two_j) {
    return Direction{std::vector<double>(static_cast<size_t>(2 * two_j) + 1, 0.0)};
  }
  double apply(const TrigPoly& p) const;
};

// band_k(M) = sum_j M_{j,j+k}
cplx band_sum(const Eigen::MatrixXcd& m, int k);

// Hermitian matrices A with <A, X> = Re band_k(X) resp. Im band_k(X).
Eigen::MatrixXcd band_re_matrix(int dim, int k);
Eigen::MatrixXcd band_im_matrix(int dim, int k);

// The membership feasibility program and direction-optimization program.
sdp::SDPProblem membership_problem(const TrigPoly& p, int two_j);
sdp::SDPProblem direction_problem(const Direction& n, int two_j);

struct MembershipResult {
  bool feasible = false;
  Certificate cert;
  sdp::SolveStatus solver_status = sdp::SolveStatus::MaxIterations;
  double feasibility_slack = 0.0;
  std::vector<double> dual_ray;
  // separating diagnostics on infeasible results
  std::string violated_bound;  // "below_zero" | "above_one" | ""
  double violation_angle = 0.0;
  double violation_value = 0.0;
};

MembershipResult membership(const TrigPoly& p, int two_j, double tol = 1e-9);

struct MultiMembershipResult {
  bool feasible = false;
  std::vector<Eigen::MatrixXcd> Q;  // one Gram block per outcome 1..n-1
  Eigen::MatrixXcd S;
  sdp::SolveStatus solver_status = sdp::SolveStatus::MaxIterations;
};

// Membership of an outcome tuple in R_J^A.  The tuple must satisfy
// sum_a c_0^a = 1 and sum_a c_j^a = sum_a s_j^a = 0 within 1e-9.
MultiMembershipResult membership_multi(const std::vector<TrigPoly>& tuple,
                                       int two_j, double tol = 1e-9);

struct OptimizeResult {
  double value = 0.0;
  double dual_bound = 0.0;
  TrigPoly optimizer;
  Certificate cert;
  sdp::SolveStatus status = sdp::SolveStatus::MaxIterations;
};

// max n . (c, s) over R_J (the support function of R_J).
OptimizeResult optimize_direction(const Direction& n, int two_j,
                                  double tol = 1e-9);

struct SweepRow {
  double phi = 0.0;
  double value = 0.0;
  TrigPoly optimizer;
  bool ok = false;
  sdp::SolveStatus status = sdp::SolveStatus::MaxIterations;
};

// Support values along cos(phi) v1 + sin(phi) v2 for phi on a uniform grid of
// [0, 2pi).  Rows come back ordered by phi; per-angle failures are recorded
// and the sweep continues.
std::vector<SweepRow> boundary_sweep(const Direction& v1, const Direction& v2,
                                     int two_j, int num_angles,
                                     Exec exec = Exec::Parallel,
                                     double tol = 1e-9);

// Membership of (a_1, b_1, ..., a_d, b_d) in the Caratheodory orbitope C_d,
// via positive semidefiniteness of the unit-diagonal Toeplitz matrix with
// x_j = a_j + i b_j.
bool toeplitz_membership(const std::vector<double>& point, double tol = 1e-9);

// Independent certificate check through sdp::verify_blocks.
sdp::VerifyReport verify_certificate(const TrigPoly& p, const Certificate& c,
                                     double tol);

}  // namespace rotbox::rset

#endif
