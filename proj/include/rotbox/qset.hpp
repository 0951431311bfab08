#ifndef ROTBOX_QSET_HPP
#define ROTBOX_QSET_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>

#include "rotbox/parallel.hpp"
#include "rotbox/rset.hpp"
#include "rotbox/trigpoly.hpp"

namespace rotbox::qset {

struct EmptyFace : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotExtremalForm : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidRealization : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Pure state and POVM on C^{2J+1}.  The rotation acts as U_theta = e^{i theta Z}
// in the stored basis, whose generator phases ascend: Z = diag(-J, ..., J).
// (The ascending order makes a_k = band_k(rho^T o E) hold literally.)
struct QuantumRealization {
  Eigen::VectorXcd psi;
  std::vector<Eigen::MatrixXcd> povm;

  int dim() const { return static_cast<int>(psi.size()); }
  int two_j() const { return dim() - 1; }
};

// Throws InvalidRealization unless ||psi|| = 1, 0 <= E_a <= 1 and
// sum_a E_a = 1 within tol.
void validate(const QuantumRealization& r, double tol = 1e-10);

// Probability polynomial P(a|theta) of outcome a: degree <= 2J with
// a_k = sum_j (rho^T o E_a)_{j, j+k}.
TrigPoly born_polynomial(const QuantumRealization& r, size_t outcome);

// Density-matrix variant.
TrigPoly born_polynomial(const Eigen::MatrixXcd& rho,
                         const Eigen::MatrixXcd& effect);

// (rho, E) pair produced by the see-saw; Q = E o rho^T is automatically PSD.
struct SchurPair {
  Eigen::MatrixXcd rho;
  Eigen::MatrixXcd effect;
};

// Hermitian band-weight matrix G of a direction: G_{j,j+k} = w_c(k) + i w_s(k)
// so that  n.(c,s)[born(rho,E)] = Tr((G o E) rho).
Eigen::MatrixXcd direction_band_matrix(const rset::Direction& n, int two_j);

// Objective value of a pair under a direction functional.
double direction_value(const rset::Direction& n, const SchurPair& pair);

struct SeesawOptions {
  int restarts = 20;
  std::uint64_t seed = 1;
  int max_rounds = 500;
  double convergence_gain = 1e-10;
  Exec exec = Exec::Parallel;
};

struct SeesawResult {
  double value = 0.0;  // certified lower bound on the quantum maximum
  SchurPair best;
  int best_restart = 0;
  std::vector<double> restart_values;
  std::vector<std::vector<double>> traces;  // per-restart objective history
};

// Alternating optimization: the E-step maximizes Tr(K E) over 0 <= E <= 1 in
// closed form (spectral clipping, the exact optimizer of that SDP); the
// rho-step takes the top eigenprojector of M[E].  Monotone by construction;
// each iterate is a valid quantum point, so the result is a lower bound.
SeesawResult seesaw(const rset::Direction& n, int two_j,
                    const SeesawOptions& opts = {});

// E-step subproblem, exposed for cross-checking against the interior-point
// solver: maximize Tr(K E) subject to 0 <= E <= 1.
Eigen::MatrixXcd clipped_effect_step(const Eigen::MatrixXcd& K);

struct GapBound {
  double beta = 0.0;  // quantum maximum of c_{2J-1} + s_{2J}
  Eigen::MatrixXcd effect;
  Eigen::MatrixXcd rho;
  double witness_value = 0.0;  // Tr(M[E] rho), equals beta
};

// The quantum bound 1/sqrt(3) on c_{2J-1} + s_{2J} for 2J >= 3, with the
// explicit saturating projector E and pure state rho (embedded into the four
// extreme levels for 2J > 3).
GapBound analytic_gap_bound(int two_j);

struct PolytopeMax {
  double value = 0.0;
  std::array<double, 3> point{};
};

// max of f(x,y,z) = x+y+z + sqrt((x+y+z)^2 - 4xz) over
// {x,y,z >= 0, x+y <= 1/4, y+z <= 1/4}, by exact enumeration of vertices and
// edges (the maximum sits on the edge x+y = y+z = 1/4).
PolytopeMax polytope_max();

// Dense grid oracle for the same maximum (step ~1e-3), for cross-checking.
double polytope_grid_oracle(int steps_per_quarter = 250,
                            Exec exec = Exec::Parallel);

// Extremal points of the face {P in R_1 : P(theta0) = 0, P(theta1) = 1}.
// Throws EmptyFace when |theta1 - theta0| lies outside [pi/2, 3pi/2].
std::vector<TrigPoly> r1_face_extremals(double theta0, double theta1);

// Spin-1 realization of an extremal returned by r1_face_extremals (or a
// rotation of one).  Throws NotExtremalForm otherwise.
QuantumRealization r1_quantum_realize(const TrigPoly& p);

struct ApproxResult {
  QuantumRealization realization;
  double epsilon = 0.0;         // weight of the boxcar outside |j| <= J
  double bound = 0.0;           // sqrt(epsilon) + averaging error
  double averaging_error = 0.0; // sup |window average of f - f|
  double measured_sup_error = 0.0;
  double clip_magnitude = 0.0;  // eigenvalue clipping applied to the effect
};

// Finite-spin approximation of a continuous box 0 <= f <= 1: boxcar state of
// half-width 1/n truncated to |j| <= J, compressed multiplication operator as
// the effect.  The reported bound dominates the measured sup deviation.
ApproxResult approximate_continuous(const std::function<double(double)>& f,
                                    int two_j, int n_width);

// Isometric embedding J -> J + 1/2 leaving every born polynomial unchanged.
QuantumRealization lift_spin(const QuantumRealization& r);

}  // namespace rotbox::qset

#endif
