#ifndef ROTBOX_SDP_HPP
#define ROTBOX_SDP_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace rotbox::sdp {

using Hermitian = Eigen::MatrixXcd;

bool is_hermitian(const Hermitian& m, double tol = 1e-12);

// One coefficient matrix acting on one PSD block.
struct BlockTerm {
  int block = 0;
  Hermitian coeff;
};

// sum_b <terms[b].coeff, X_{terms[b].block}> = rhs, with the Hilbert-Schmidt
// inner product <A, X> = Tr(A X) (real for Hermitian A, X).
struct Constraint {
  std::vector<BlockTerm> terms;
  double rhs = 0.0;
};

enum class Sense { Maximize, Feasibility };

struct SDPProblem {
  std::vector<int> block_dims;
  std::vector<BlockTerm> objective;  // ignored for feasibility problems
  std::vector<Constraint> constraints;
  Sense sense = Sense::Maximize;
};

enum class SolveStatus { Optimal, Infeasible, MaxIterations, IllConditioned };

std::string to_string(SolveStatus s);

struct SDPSolution {
  SolveStatus status = SolveStatus::MaxIterations;
  std::vector<Hermitian> X;
  double objective = 0.0;   // primal objective (maximize sense)
  double dual_bound = 0.0;  // dual objective; >= primal - tol on optimal runs
  std::vector<double> y;    // dual multipliers (improving ray when infeasible)
  double duality_gap = 0.0;
  double feasibility_slack = 0.0;  // optimal t of the phase-1 problem
  int iterations = 0;
};

// Primal-dual path-following interior point (Nesterov-Todd scaling, Mehrotra
// predictor-corrector).  Complex Hermitian blocks are solved through the real
// symmetric embedding [[Re,-Im],[Im,Re]].  Deterministic: identical inputs
// produce identical outputs.
SDPSolution solve(const SDPProblem& problem, double tol = 1e-9);

struct VerifyReport {
  double max_constraint_residual = 0.0;
  double min_block_eigenvalue = 0.0;
  double max_hermiticity_error = 0.0;
  double objective = 0.0;
  double duality_gap = 0.0;
  bool pass = false;
};

// Independent check of a solution (or externally supplied certificate
// blocks); never trusts solver internals.
VerifyReport verify_blocks(const SDPProblem& problem,
                           const std::vector<Hermitian>& X, double tol);
VerifyReport verify_solution(const SDPProblem& problem, const SDPSolution& sol,
                             double tol);

// Real symmetric embedding of a Hermitian matrix; eigenvalues of the result
// are those of the input, each with doubled multiplicity.
Eigen::MatrixXd real_embedding(const Hermitian& h);

}  // namespace rotbox::sdp

#endif
