#include "rotbox/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rotbox::sdp {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// ---------------------------------------------------------------------------
// In-module dense factorizations.  Problem sizes stay below ~50 rows, so
// plain O(n^3) routines with no blocking are entirely adequate.
// ---------------------------------------------------------------------------

// Lower-triangular Cholesky A = L L^T.  Returns false on a non-positive
// pivot.  cond2 receives (max_ii L / min_ii L)^2, a cheap condition estimate.
bool cholesky_lower(const MatrixXd& A, MatrixXd& L, double* cond2 = nullptr) {
  const int n = static_cast<int>(A.rows());
  L = MatrixXd::Zero(n, n);
  double dmax = 0.0, dmin = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j) {
    double diag = A(j, j);
    for (int k = 0; k < j; ++k) diag -= L(j, k) * L(j, k);
    if (!(diag > 0.0)) return false;
    const double ljj = std::sqrt(diag);
    L(j, j) = ljj;
    dmax = std::max(dmax, ljj);
    dmin = std::min(dmin, ljj);
    for (int i = j + 1; i < n; ++i) {
      double v = A(i, j);
      for (int k = 0; k < j; ++k) v -= L(i, k) * L(j, k);
      L(i, j) = v / ljj;
    }
  }
  if (cond2) *cond2 = (dmax / dmin) * (dmax / dmin);
  return true;
}

// Solve L x = b (lower) in place.
void forward_solve(const MatrixXd& L, VectorXd& x) {
  const int n = static_cast<int>(L.rows());
  for (int i = 0; i < n; ++i) {
    double v = x(i);
    for (int k = 0; k < i; ++k) v -= L(i, k) * x(k);
    x(i) = v / L(i, i);
  }
}

// Solve L^T x = b in place.
void backward_solve(const MatrixXd& L, VectorXd& x) {
  const int n = static_cast<int>(L.rows());
  for (int i = n - 1; i >= 0; --i) {
    double v = x(i);
    for (int k = i + 1; k < n; ++k) v -= L(k, i) * x(k);
    x(i) = v / L(i, i);
  }
}

void cholesky_solve(const MatrixXd& L, VectorXd& x) {
  forward_solve(L, x);
  backward_solve(L, x);
}

// B := L^{-1} B for lower-triangular L (column-wise forward substitution).
MatrixXd lower_solve_matrix(const MatrixXd& L, MatrixXd B) {
  const int n = static_cast<int>(L.rows());
  for (int c = 0; c < B.cols(); ++c)
    for (int i = 0; i < n; ++i) {
      double v = B(i, c);
      for (int k = 0; k < i; ++k) v -= L(i, k) * B(k, c);
      B(i, c) = v / L(i, i);
    }
  return B;
}

// Cyclic Jacobi eigendecomposition of a symmetric matrix: A = V diag(w) V^T.
void jacobi_eigensym(MatrixXd A, MatrixXd& V, VectorXd& w) {
  const int n = static_cast<int>(A.rows());
  V = MatrixXd::Identity(n, n);
  if (n == 1) {
    w = VectorXd::Constant(1, A(0, 0));
    return;
  }
  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += A(p, q) * A(p, q);
    if (off < 1e-30 * std::max(1.0, A.diagonal().squaredNorm())) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double app = A(p, p), aqq = A(q, q);
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double cth = 1.0 / std::sqrt(1.0 + t * t);
        const double sth = t * cth;
        for (int k = 0; k < n; ++k) {
          const double akp = A(k, p), akq = A(k, q);
          A(k, p) = cth * akp - sth * akq;
          A(k, q) = sth * akp + cth * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = A(p, k), aqk = A(q, k);
          A(p, k) = cth * apk - sth * aqk;
          A(q, k) = sth * apk + cth * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = V(k, p), vkq = V(k, q);
          V(k, p) = cth * vkp - sth * vkq;
          V(k, q) = sth * vkp + cth * vkq;
        }
      }
    }
  }
  w = A.diagonal();
}

double min_eigenvalue_sym(const MatrixXd& A) {
  MatrixXd V;
  VectorXd w;
  jacobi_eigensym(A, V, w);
  return w.minCoeff();
}

// Symmetric inverse square root via Jacobi.
MatrixXd inv_sqrt_sym(const MatrixXd& A) {
  MatrixXd V;
  VectorXd w;
  jacobi_eigensym(A, V, w);
  VectorXd d(w.size());
  for (int i = 0; i < w.size(); ++i) {
    const double wi = std::max(w(i), 1e-300);
    d(i) = 1.0 / std::sqrt(wi);
  }
  return V * d.asDiagonal() * V.transpose();
}

MatrixXd symmetrize(const MatrixXd& A) { return 0.5 * (A + A.transpose()); }

double inner(const MatrixXd& A, const MatrixXd& B) {
  return (A.array() * B.array()).sum();
}

// ---------------------------------------------------------------------------
// Internal real standard form:  min sum_b <C_b, X_b>  s.t.  A(X) = b, X >= 0.
// ---------------------------------------------------------------------------

struct RealSDP {
  std::vector<int> dims;
  std::vector<MatrixXd> C;                  // per block
  std::vector<std::vector<MatrixXd>> A;     // [constraint][block]
  VectorXd b;
};

struct RealSolution {
  SolveStatus status = SolveStatus::MaxIterations;
  std::vector<MatrixXd> X;
  VectorXd y;
  double primal_obj = 0.0;
  double dual_obj = 0.0;
  double gap = 0.0;
  int iterations = 0;
};

double block_inner(const std::vector<MatrixXd>& A, const std::vector<MatrixXd>& B) {
  double v = 0.0;
  for (size_t i = 0; i < A.size(); ++i) v += inner(A[i], B[i]);
  return v;
}

// Largest step alpha <= 1 keeping S + alpha dS positive definite, with a 0.98
// fraction-to-boundary factor.  Uses lambda_min(L^{-1} dS L^{-T}).
double step_length(const MatrixXd& S, const MatrixXd& dS) {
  MatrixXd L;
  if (!cholesky_lower(S, L)) return 0.0;
  const MatrixXd tmp = lower_solve_matrix(L, dS);
  const MatrixXd W = symmetrize(lower_solve_matrix(L, tmp.transpose()));
  const double lmin = min_eigenvalue_sym(W);
  if (lmin >= 0.0) return 1.0;
  return std::min(1.0, -0.98 / lmin);
}

// Checks whether the affine system A(X) = b is solvable at all (ignoring the
// PSD cone).  Returns false with an improving ray in `ray` when inconsistent.
bool affine_consistent(const RealSDP& p, VectorXd& ray) {
  const int m = static_cast<int>(p.b.size());
  MatrixXd G(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      double v = 0.0;
      for (size_t blk = 0; blk < p.dims.size(); ++blk)
        v += inner(p.A[static_cast<size_t>(i)][blk], p.A[static_cast<size_t>(j)][blk]);
      G(i, j) = G(j, i) = v;
    }
  MatrixXd V;
  VectorXd w;
  jacobi_eigensym(G, V, w);
  const double wmax = std::max(w.maxCoeff(), 1e-300);
  VectorXd res = VectorXd::Zero(m);
  for (int k = 0; k < m; ++k)
    if (w(k) < 1e-12 * wmax) res += (V.col(k).dot(p.b)) * V.col(k);
  if (res.norm() > 1e-8 * (1.0 + p.b.norm())) {
    ray = res / res.norm();
    return false;
  }
  return true;
}

RealSolution solve_real(const RealSDP& p, double tol, int max_iter = 200) {
  const int m = static_cast<int>(p.b.size());
  const size_t nblk = p.dims.size();
  RealSolution sol;

  double n_total = 0.0;
  for (int d : p.dims) n_total += d;

  double normC = 0.0;
  for (const auto& Cb : p.C) normC += Cb.squaredNorm();
  normC = std::sqrt(normC);
  const double normb = p.b.norm();

  // Initialization per fixed schedule: X = (1+||b||) I, Z = (1+||C||) I, y=0.
  std::vector<MatrixXd> X(nblk), Z(nblk);
  for (size_t i = 0; i < nblk; ++i) {
    X[i] = (1.0 + normb) * MatrixXd::Identity(p.dims[i], p.dims[i]);
    Z[i] = (1.0 + normC) * MatrixXd::Identity(p.dims[i], p.dims[i]);
  }
  VectorXd y = VectorXd::Zero(m);

  std::vector<MatrixXd> W(nblk), Rd(nblk), Rc(nblk), dX(nblk), dZ(nblk),
      dXa(nblk), dZa(nblk);
  MatrixXd schur(m, m), schurL;
  std::vector<std::vector<MatrixXd>> WAW(
      static_cast<size_t>(m), std::vector<MatrixXd>(nblk));

  double best_score = std::numeric_limits<double>::infinity();
  int stalled = 0;
  bool hit_bad_conditioning = false;

  for (int iter = 0; iter < max_iter; ++iter) {
    sol.iterations = iter;

    VectorXd rp(m);
    for (int i = 0; i < m; ++i)
      rp(i) = p.b(i) - block_inner(p.A[static_cast<size_t>(i)], X);
    double rd_norm2 = 0.0;
    for (size_t blk = 0; blk < nblk; ++blk) {
      Rd[blk] = p.C[blk] - Z[blk];
      for (int i = 0; i < m; ++i)
        Rd[blk] -= y(i) * p.A[static_cast<size_t>(i)][blk];
      rd_norm2 += Rd[blk].squaredNorm();
    }
    const double gap = block_inner(X, Z);
    const double mu = gap / n_total;
    const double pobj = block_inner(p.C, X);
    const double dobj = p.b.dot(y);

    const double pinf = rp.norm() / (1.0 + normb);
    const double dinf = std::sqrt(rd_norm2) / (1.0 + normC);
    const double relgap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj));

    // Keep the best iterate seen; late iterations can degrade when the
    // complementarity blocks become nearly singular.
    const double score = std::max({pinf, dinf, relgap});
    if (score < best_score) {
      best_score = score;
      stalled = 0;
      sol.X = X;
      sol.y = y;
      sol.primal_obj = pobj;
      sol.dual_obj = dobj;
      sol.gap = gap;
    } else if (++stalled >= 10) {
      sol.status = hit_bad_conditioning ? SolveStatus::IllConditioned
                                        : SolveStatus::MaxIterations;
      return sol;
    }

    if (pinf <= tol && dinf <= tol && relgap <= tol) {
      sol.status = SolveStatus::Optimal;
      return sol;
    }

    // NT scaling W_b = L (L^T Z L)^{-1/2} L^T with L = chol(X_b).
    bool scaling_ok = true;
    for (size_t blk = 0; blk < nblk; ++blk) {
      MatrixXd L;
      if (!cholesky_lower(X[blk], L)) {
        scaling_ok = false;
        break;
      }
      const MatrixXd M = symmetrize(L.transpose() * Z[blk] * L);
      W[blk] = symmetrize(L * inv_sqrt_sym(M) * L.transpose());
    }
    if (!scaling_ok) {
      sol.status = SolveStatus::IllConditioned;
      return sol;
    }

    for (int i = 0; i < m; ++i)
      for (size_t blk = 0; blk < nblk; ++blk)
        WAW[static_cast<size_t>(i)][blk] =
            W[blk] * p.A[static_cast<size_t>(i)][blk] * W[blk];
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        const double v =
            block_inner(p.A[static_cast<size_t>(i)], WAW[static_cast<size_t>(j)]);
        schur(i, j) = v;
        schur(j, i) = v;
      }

    // Diagonal equilibration keeps the factorization meaningful late in the
    // path, when active and inactive constraints live on wildly different
    // scales.
    VectorXd dscale(m);
    for (int i = 0; i < m; ++i)
      dscale(i) = 1.0 / std::sqrt(std::max(schur(i, i), 1e-300));
    MatrixXd scaled(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        scaled(i, j) = schur(i, j) * dscale(i) * dscale(j);

    double cond2 = 0.0;
    bool chol_ok = cholesky_lower(scaled, schurL, &cond2);
    for (double ridge : {1e-14, 1e-12, 1e-10}) {
      if (chol_ok) break;
      MatrixXd ridged = scaled;
      ridged.diagonal().array() += ridge;
      chol_ok = cholesky_lower(ridged, schurL, &cond2);
    }
#ifdef ROTBOX_SDP_DEBUG
    std::fprintf(stderr,
                 "iter=%3d pinf=%9.2e dinf=%9.2e gap=%9.2e mu=%9.2e cond2=%9.2e\n",
                 iter, pinf, dinf, relgap, mu, cond2);
#endif
    if (!chol_ok) {
      sol.status = SolveStatus::IllConditioned;
      return sol;
    }
    // A Newton system past 1e14 is often still usable after equilibration;
    // stop only once it fails to make progress (stall counter above).
    if (cond2 > 1e14) hit_bad_conditioning = true;

    auto solve_direction = [&](const std::vector<MatrixXd>& Rcent,
                               std::vector<MatrixXd>& outdX,
                               std::vector<MatrixXd>& outdZ) {
      VectorXd rhs(m);
      for (int i = 0; i < m; ++i) {
        double v = rp(i) - block_inner(p.A[static_cast<size_t>(i)], Rcent);
        for (size_t blk = 0; blk < nblk; ++blk)
          v += inner(WAW[static_cast<size_t>(i)][blk], Rd[blk]);
        rhs(i) = v;
      }
      VectorXd dy = rhs.cwiseProduct(dscale);
      cholesky_solve(schurL, dy);
      dy = dy.cwiseProduct(dscale);
      for (size_t blk = 0; blk < nblk; ++blk) {
        outdZ[blk] = Rd[blk];
        for (int i = 0; i < m; ++i)
          outdZ[blk] -= dy(i) * p.A[static_cast<size_t>(i)][blk];
        outdX[blk] = symmetrize(Rcent[blk] - W[blk] * outdZ[blk] * W[blk]);
      }
      return dy;
    };

    // Predictor (affine scaling).
    for (size_t blk = 0; blk < nblk; ++blk) Rc[blk] = -X[blk];
    VectorXd dya = solve_direction(Rc, dXa, dZa);
    double ap = 1.0, ad = 1.0;
    for (size_t blk = 0; blk < nblk; ++blk) {
      ap = std::min(ap, step_length(X[blk], dXa[blk]));
      ad = std::min(ad, step_length(Z[blk], dZa[blk]));
    }
    double gap_aff = 0.0;
    for (size_t blk = 0; blk < nblk; ++blk)
      gap_aff += inner(X[blk] + ap * dXa[blk], Z[blk] + ad * dZa[blk]);
    gap_aff = std::max(gap_aff, 0.0);
    double sigma = std::pow(gap_aff / gap, 3.0);
    sigma = std::clamp(sigma, 1e-8, 1.0);

    // Corrector with Mehrotra second-order term.
    for (size_t blk = 0; blk < nblk; ++blk) {
      MatrixXd Zl;
      MatrixXd Vz;
      VectorXd wz;
      jacobi_eigensym(Z[blk], Vz, wz);
      VectorXd wzi(wz.size());
      for (int i = 0; i < wz.size(); ++i) wzi(i) = 1.0 / std::max(wz(i), 1e-300);
      const MatrixXd Zinv = Vz * wzi.asDiagonal() * Vz.transpose();
      const MatrixXd second =
          symmetrize(dXa[blk] * dZa[blk] * Zinv);
      Rc[blk] = sigma * mu * Zinv - X[blk] - second;
    }
    VectorXd dy = solve_direction(Rc, dX, dZ);
    ap = 1.0;
    ad = 1.0;
    for (size_t blk = 0; blk < nblk; ++blk) {
      ap = std::min(ap, step_length(X[blk], dX[blk]));
      ad = std::min(ad, step_length(Z[blk], dZ[blk]));
    }
    // Safeguard: if the corrected direction collapses, take a centering step.
    if (std::min(ap, ad) < 1e-4) {
      for (size_t blk = 0; blk < nblk; ++blk) {
        MatrixXd Vz;
        VectorXd wz;
        jacobi_eigensym(Z[blk], Vz, wz);
        VectorXd wzi(wz.size());
        for (int i = 0; i < wz.size(); ++i)
          wzi(i) = 1.0 / std::max(wz(i), 1e-300);
        const MatrixXd Zinv = Vz * wzi.asDiagonal() * Vz.transpose();
        Rc[blk] = 0.5 * mu * Zinv - X[blk];
      }
      dy = solve_direction(Rc, dX, dZ);
      ap = ad = 1.0;
      for (size_t blk = 0; blk < nblk; ++blk) {
        ap = std::min(ap, step_length(X[blk], dX[blk]));
        ad = std::min(ad, step_length(Z[blk], dZ[blk]));
      }
    }

    for (size_t blk = 0; blk < nblk; ++blk) {
      X[blk] = symmetrize(X[blk] + ap * dX[blk]);
      Z[blk] = symmetrize(Z[blk] + ad * dZ[blk]);
    }
    y += ad * dy;
  }
  sol.status = SolveStatus::MaxIterations;
  return sol;
}

// ---------------------------------------------------------------------------
// Complex layer: real embedding and phase-1 feasibility handling.
// ---------------------------------------------------------------------------

Hermitian de_embed(const MatrixXd& Xr) {
  const int n = static_cast<int>(Xr.rows()) / 2;
  Hermitian H(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const double re = 0.5 * (Xr(j, k) + Xr(n + j, n + k));
      const double im = 0.5 * (Xr(n + j, k) - Xr(j, n + k));
      H(j, k) = std::complex<double>(re, im);
    }
  // enforce exact hermiticity of the returned block
  return Hermitian(0.5 * (H + H.adjoint()));
}

// Builds the embedded real problem.  Inner products double under the
// embedding, so constraint right-hand sides and the reported objective carry
// a factor of two.
RealSDP embed_problem(const SDPProblem& prob, bool negate_objective) {
  RealSDP rp;
  const size_t nblk = prob.block_dims.size();
  rp.dims.resize(nblk);
  for (size_t i = 0; i < nblk; ++i) rp.dims[i] = 2 * prob.block_dims[i];
  rp.C.resize(nblk);
  for (size_t i = 0; i < nblk; ++i)
    rp.C[i] = MatrixXd::Zero(rp.dims[i], rp.dims[i]);
  for (const auto& term : prob.objective) {
    const double sgn = negate_objective ? -1.0 : 1.0;
    rp.C[static_cast<size_t>(term.block)] += sgn * real_embedding(term.coeff);
  }
  const int m = static_cast<int>(prob.constraints.size());
  rp.A.assign(static_cast<size_t>(m), {});
  rp.b.resize(m);
  for (int i = 0; i < m; ++i) {
    auto& row = rp.A[static_cast<size_t>(i)];
    row.resize(nblk);
    for (size_t blk = 0; blk < nblk; ++blk)
      row[blk] = MatrixXd::Zero(rp.dims[blk], rp.dims[blk]);
    for (const auto& term : prob.constraints[static_cast<size_t>(i)].terms)
      row[static_cast<size_t>(term.block)] += real_embedding(term.coeff);
    rp.b(i) = 2.0 * prob.constraints[static_cast<size_t>(i)].rhs;
  }
  return rp;
}

}  // namespace

bool is_hermitian(const Hermitian& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::MaxIterations: return "max_iterations";
    case SolveStatus::IllConditioned: return "ill_conditioned";
  }
  return "unknown";
}

Eigen::MatrixXd real_embedding(const Hermitian& h) {
  const int n = static_cast<int>(h.rows());
  MatrixXd r(2 * n, 2 * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const double re = h(j, k).real(), im = h(j, k).imag();
      r(j, k) = re;
      r(j, n + k) = -im;
      r(n + j, k) = im;
      r(n + j, n + k) = re;
    }
  return symmetrize(r);
}

namespace {

// Phase-1: minimize t such that X + t I >= 0 and A(X) = b.  Implemented with
// split variables t = tp - tm as two extra 1x1 complex blocks, plus a cap
// slack keeping tm bounded.
SDPProblem phase1_problem(const SDPProblem& prob, double* cap_out) {
  SDPProblem p1;
  p1.sense = Sense::Maximize;  // solved directly through the real layer
  p1.block_dims = prob.block_dims;
  const int tp_blk = static_cast<int>(p1.block_dims.size());
  p1.block_dims.push_back(1);  // t+
  const int tm_blk = tp_blk + 1;
  p1.block_dims.push_back(1);  // t-
  const int cap_blk = tm_blk + 1;
  p1.block_dims.push_back(1);  // cap slack

  const Hermitian one = Hermitian::Constant(1, 1, 1.0);

  // minimize (tp - tm): expressed as maximize -(tp - tm)
  p1.objective.push_back({tp_blk, -one});
  p1.objective.push_back({tm_blk, one});

  double normb = 0.0;
  for (const auto& con : prob.constraints)
    normb = std::max(normb, std::abs(con.rhs));
  const double cap = 10.0 * (1.0 + normb);
  if (cap_out) *cap_out = cap;

  for (const auto& con : prob.constraints) {
    Constraint c1;
    c1.rhs = con.rhs;
    c1.terms = con.terms;
    double trace_sum = 0.0;
    for (const auto& term : con.terms) trace_sum += term.coeff.trace().real();
    c1.terms.push_back({tp_blk, -trace_sum * one});
    c1.terms.push_back({tm_blk, trace_sum * one});
    p1.constraints.push_back(std::move(c1));
  }
  Constraint capc;
  capc.rhs = cap;
  capc.terms.push_back({tm_blk, one});
  capc.terms.push_back({cap_blk, one});
  p1.constraints.push_back(std::move(capc));
  return p1;
}

SDPSolution run_maximize(const SDPProblem& prob, double tol) {
  RealSDP rp = embed_problem(prob, /*negate_objective=*/true);
  SDPSolution out;
  VectorXd ray;
  if (!affine_consistent(rp, ray)) {
    out.status = SolveStatus::Infeasible;
    out.y.assign(ray.data(), ray.data() + ray.size());
    return out;
  }
  RealSolution rs = solve_real(rp, tol);
  out.status = rs.status;
  out.iterations = rs.iterations;
  out.X.resize(prob.block_dims.size());
  for (size_t i = 0; i < prob.block_dims.size(); ++i) out.X[i] = de_embed(rs.X[i]);
  out.y.assign(rs.y.data(), rs.y.data() + rs.y.size());
  out.objective = -rs.primal_obj / 2.0;
  out.dual_bound = -rs.dual_obj / 2.0;
  out.duality_gap = rs.gap / 2.0;
  return out;
}

}  // namespace

SDPSolution solve(const SDPProblem& problem, double tol) {
  if (problem.block_dims.empty())
    throw std::invalid_argument("sdp::solve: at least one block required");
  for (const auto& con : problem.constraints)
    for (const auto& term : con.terms)
      if (!is_hermitian(term.coeff, 1e-12))
        throw std::invalid_argument("sdp::solve: non-Hermitian constraint");
  for (const auto& term : problem.objective)
    if (!is_hermitian(term.coeff, 1e-12))
      throw std::invalid_argument("sdp::solve: non-Hermitian objective");
  if (!(tol >= 1e-12 && tol <= 1e-4))
    throw std::invalid_argument("sdp::solve: tol outside [1e-12, 1e-4]");

  if (problem.sense == Sense::Maximize) {
    SDPSolution sol = run_maximize(problem, tol);
    if (sol.status == SolveStatus::MaxIterations) {
      // Distinguish a stalled solve from genuine infeasibility.
      double cap = 0.0;
      SDPProblem p1 = phase1_problem(problem, &cap);
      SDPSolution fs = run_maximize(p1, std::max(tol, 1e-9));
      if (fs.status == SolveStatus::Optimal) {
        const double t = fs.X[problem.block_dims.size()](0, 0).real() -
                         fs.X[problem.block_dims.size() + 1](0, 0).real();
        if (t > 1e-7) {
          sol.status = SolveStatus::Infeasible;
          sol.feasibility_slack = t;
          sol.y = fs.y;
        }
      }
    }
    return sol;
  }

  // Feasibility: always through phase-1.
  double cap = 0.0;
  SDPProblem p1 = phase1_problem(problem, &cap);
  SDPSolution fs = run_maximize(p1, tol);
  SDPSolution out;
  out.iterations = fs.iterations;
  out.y = fs.y;
  if (fs.status != SolveStatus::Optimal) {
    out.status = fs.status;
    return out;
  }
  const size_t nblk = problem.block_dims.size();
  const double t =
      fs.X[nblk](0, 0).real() - fs.X[nblk + 1](0, 0).real();
  out.feasibility_slack = t;
  if (t > 1e-7) {
    out.status = SolveStatus::Infeasible;
    return out;
  }
  out.status = SolveStatus::Optimal;
  out.X.resize(nblk);
  for (size_t i = 0; i < nblk; ++i) {
    const int n = problem.block_dims[i];
    out.X[i] = fs.X[i] - t * Hermitian::Identity(n, n);
  }
  out.objective = 0.0;
  out.dual_bound = 0.0;
  out.duality_gap = fs.duality_gap;
  return out;
}

VerifyReport verify_blocks(const SDPProblem& problem,
                           const std::vector<Hermitian>& X, double tol) {
  VerifyReport rep;
  rep.min_block_eigenvalue = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < X.size(); ++i) {
    rep.max_hermiticity_error =
        std::max(rep.max_hermiticity_error,
                 (X[i] - X[i].adjoint()).cwiseAbs().maxCoeff());
    Eigen::SelfAdjointEigenSolver<Hermitian> es(
        Hermitian(0.5 * (X[i] + X[i].adjoint())), Eigen::EigenvaluesOnly);
    rep.min_block_eigenvalue =
        std::min(rep.min_block_eigenvalue, es.eigenvalues().minCoeff());
  }
  for (const auto& con : problem.constraints) {
    double v = 0.0;
    for (const auto& term : con.terms)
      v += (term.coeff.adjoint() * X[static_cast<size_t>(term.block)])
               .trace()
               .real();
    rep.max_constraint_residual =
        std::max(rep.max_constraint_residual, std::abs(v - con.rhs));
  }
  double obj = 0.0;
  for (const auto& term : problem.objective)
    obj += (term.coeff.adjoint() * X[static_cast<size_t>(term.block)])
               .trace()
               .real();
  rep.objective = obj;
  rep.duality_gap = std::numeric_limits<double>::quiet_NaN();
  rep.pass = rep.max_constraint_residual <= tol &&
             rep.min_block_eigenvalue >= -tol &&
             rep.max_hermiticity_error <= std::max(tol, 1e-12);
  return rep;
}

VerifyReport verify_solution(const SDPProblem& problem, const SDPSolution& sol,
                             double tol) {
  VerifyReport rep = verify_blocks(problem, sol.X, tol);
  rep.duality_gap = sol.dual_bound - rep.objective;
  if (problem.sense == Sense::Maximize)
    rep.pass = rep.pass && rep.duality_gap >= -tol * (1.0 + std::abs(rep.objective));
  return rep;
}

}  // namespace rotbox::sdp
