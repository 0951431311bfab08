#include "rotbox/rset.hpp"

#include <cmath>
#include <numbers>

namespace rotbox::rset {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double Direction::apply(const TrigPoly& p) const {
  const int d = two_j();
  double v = w[0] * p.c_coeff(0);
  for (int k = 1; k <= d; ++k) {
    const double ck = k <= p.degree() ? p.c_coeff(k) : 0.0;
    const double sk = k <= p.degree() ? p.s_coeff(k) : 0.0;
    v += c_weight(k) * ck + s_weight(k) * sk;
  }
  return v;
}

cplx band_sum(const Eigen::MatrixXcd& m, int k) {
  cplx v(0, 0);
  const int n = static_cast<int>(m.rows());
  for (int j = 0; j + k < n; ++j) v += m(j, j + k);
  return v;
}

Eigen::MatrixXcd band_re_matrix(int dim, int k) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
  for (int j = 0; j + k < dim; ++j) {
    a(j, j + k) += 0.5;
    a(j + k, j) += 0.5;
  }
  return a;
}

Eigen::MatrixXcd band_im_matrix(int dim, int k) {
  // <A, X> = Tr(A X) picks up band entries through X_{j+k, j} = conj(band),
  // hence the +i/2 on the upper band to produce +Im band_k(X).
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
  for (int j = 0; j + k < dim; ++j) {
    a(j, j + k) += cplx(0.0, 0.5);
    a(j + k, j) += cplx(0.0, -0.5);
  }
  return a;
}

sdp::SDPProblem membership_problem(const TrigPoly& p, int two_j) {
  if (p.degree() > two_j)
    throw std::invalid_argument("membership: degree exceeds 2J");
  const int n = two_j + 1;
  sdp::SDPProblem prob;
  prob.sense = sdp::Sense::Feasibility;
  prob.block_dims = {n, n};  // Q, S

  auto add = [&](int block, const Eigen::MatrixXcd& A, double rhs) {
    sdp::Constraint c;
    c.terms.push_back({block, A});
    c.rhs = rhs;
    prob.constraints.push_back(std::move(c));
  };

  const TrigPoly q = pad_degree(p, two_j);
  add(0, Eigen::MatrixXcd::Identity(n, n), q.c_coeff(0));       // a_0 = Tr Q
  add(1, Eigen::MatrixXcd::Identity(n, n), 1.0 - q.c_coeff(0)); // Tr S = 1 - a_0
  for (int k = 1; k <= two_j; ++k) {
    const cplx ak = q.a_coeff(k);
    add(0, band_re_matrix(n, k), ak.real());
    add(0, band_im_matrix(n, k), ak.imag());
    add(1, band_re_matrix(n, k), -ak.real());
    add(1, band_im_matrix(n, k), -ak.imag());
  }
  return prob;
}

sdp::SDPProblem direction_problem(const Direction& dir, int two_j) {
  if (dir.two_j() != two_j)
    throw std::invalid_argument("direction length does not match 2J");
  const int n = two_j + 1;
  sdp::SDPProblem prob;
  prob.sense = sdp::Sense::Maximize;
  prob.block_dims = {n, n};

  // objective n.(c,s) written on the Q block via a_k = band_k(Q)
  Eigen::MatrixXcd C = dir.w[0] * Eigen::MatrixXcd::Identity(n, n);
  for (int k = 1; k <= two_j; ++k)
    C += 2.0 * dir.c_weight(k) * band_re_matrix(n, k) -
         2.0 * dir.s_weight(k) * band_im_matrix(n, k);
  prob.objective.push_back({0, C});

  // Tr Q + Tr S = 1
  sdp::Constraint tr;
  tr.terms.push_back({0, Eigen::MatrixXcd::Identity(n, n)});
  tr.terms.push_back({1, Eigen::MatrixXcd::Identity(n, n)});
  tr.rhs = 1.0;
  prob.constraints.push_back(std::move(tr));

  for (int k = 1; k <= two_j; ++k) {
    sdp::Constraint re, im;
    re.terms.push_back({0, band_re_matrix(n, k)});
    re.terms.push_back({1, band_re_matrix(n, k)});
    re.rhs = 0.0;
    im.terms.push_back({0, band_im_matrix(n, k)});
    im.terms.push_back({1, band_im_matrix(n, k)});
    im.rhs = 0.0;
    prob.constraints.push_back(std::move(re));
    prob.constraints.push_back(std::move(im));
  }
  return prob;
}

namespace {

TrigPoly poly_from_gram(const Eigen::MatrixXcd& Q) {
  const int n = static_cast<int>(Q.rows());
  std::vector<cplx> a(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) a[static_cast<size_t>(k)] = band_sum(Q, k);
  a[0] = cplx(a[0].real(), 0.0);
  return from_halfspectrum(a);
}

}  // namespace

MembershipResult membership(const TrigPoly& p, int two_j, double tol) {
  MembershipResult res;
  const sdp::SDPProblem prob = membership_problem(p, two_j);
  const sdp::SDPSolution sol = sdp::solve(prob, tol);
  res.solver_status = sol.status;
  res.feasibility_slack = sol.feasibility_slack;
  if (sol.status == sdp::SolveStatus::Optimal) {
    res.feasible = true;
    res.cert.Q = sol.X[0];
    res.cert.S = sol.X[1];
    return res;
  }
  res.feasible = false;
  res.dual_ray = sol.y;
  const Extrema e = extrema(p);
  if (e.min_value < -1e-10) {
    res.violated_bound = "below_zero";
    res.violation_angle = e.argmin;
    res.violation_value = e.min_value;
  } else if (e.max_value > 1.0 + 1e-10) {
    res.violated_bound = "above_one";
    res.violation_angle = e.argmax;
    res.violation_value = e.max_value;
  }
  return res;
}

MultiMembershipResult membership_multi(const std::vector<TrigPoly>& tuple,
                                       int two_j, double tol) {
  if (tuple.size() < 2)
    throw std::invalid_argument("membership_multi: need at least two outcomes");
  const int n = two_j + 1;
  // normalization: sum_a c_0^a = 1, sum_a c_j^a = sum_a s_j^a = 0
  for (int k = 0; k <= two_j; ++k) {
    double cs = 0.0, ss = 0.0;
    for (const auto& p : tuple) {
      if (p.degree() > two_j)
        throw std::invalid_argument("membership_multi: degree exceeds 2J");
      cs += k <= p.degree() ? p.c_coeff(k) : 0.0;
      ss += k == 0 || k > p.degree() ? 0.0 : p.s_coeff(k);
    }
    const double target = k == 0 ? 1.0 : 0.0;
    if (std::abs(cs - target) > 1e-9 || std::abs(ss) > 1e-9)
      throw NormalizationViolation("membership_multi: tuple does not sum to 1");
  }

  const size_t nout = tuple.size();
  sdp::SDPProblem prob;
  prob.sense = sdp::Sense::Feasibility;
  prob.block_dims.assign(nout, n);  // Q^{b_1}..Q^{b_{n-1}}, S

  auto add = [&](int block, const Eigen::MatrixXcd& A, double rhs) {
    sdp::Constraint c;
    c.terms.push_back({block, A});
    c.rhs = rhs;
    prob.constraints.push_back(std::move(c));
  };

  double tilde_a0 = 0.0;
  for (size_t i = 0; i + 1 < nout; ++i) {
    const TrigPoly q = pad_degree(tuple[i], two_j);
    add(static_cast<int>(i), Eigen::MatrixXcd::Identity(n, n), q.c_coeff(0));
    for (int k = 1; k <= two_j; ++k) {
      const cplx ak = q.a_coeff(k);
      add(static_cast<int>(i), band_re_matrix(n, k), ak.real());
      add(static_cast<int>(i), band_im_matrix(n, k), ak.imag());
    }
    tilde_a0 += q.c_coeff(0);
  }
  const int sblk = static_cast<int>(nout) - 1;
  add(sblk, Eigen::MatrixXcd::Identity(n, n), 1.0 - tilde_a0);
  for (int k = 1; k <= two_j; ++k) {
    cplx tk(0, 0);
    for (size_t i = 0; i + 1 < nout; ++i)
      tk += pad_degree(tuple[i], two_j).a_coeff(k);
    add(sblk, band_re_matrix(n, k), -tk.real());
    add(sblk, band_im_matrix(n, k), -tk.imag());
  }

  MultiMembershipResult res;
  const sdp::SDPSolution sol = sdp::solve(prob, tol);
  res.solver_status = sol.status;
  res.feasible = sol.status == sdp::SolveStatus::Optimal;
  if (res.feasible) {
    for (size_t i = 0; i + 1 < nout; ++i) res.Q.push_back(sol.X[i]);
    res.S = sol.X[nout - 1];
  }
  return res;
}

OptimizeResult optimize_direction(const Direction& n, int two_j, double tol) {
  OptimizeResult res;
  const sdp::SDPProblem prob = direction_problem(n, two_j);
  const sdp::SDPSolution sol = sdp::solve(prob, tol);
  res.status = sol.status;
  if (sol.status != sdp::SolveStatus::Optimal) return res;
  res.value = sol.objective;
  res.dual_bound = sol.dual_bound;
  res.cert.Q = sol.X[0];
  res.cert.S = sol.X[1];
  res.optimizer = poly_from_gram(sol.X[0]);
  return res;
}

std::vector<SweepRow> boundary_sweep(const Direction& v1, const Direction& v2,
                                     int two_j, int num_angles, Exec exec,
                                     double tol) {
  if (num_angles < 3)
    throw std::invalid_argument("boundary_sweep: need at least 3 angles");
  if (v1.w.size() != v2.w.size())
    throw std::invalid_argument("boundary_sweep: direction size mismatch");
  bool independent = false;
  for (size_t i = 0; i < v1.w.size() && !independent; ++i)
    for (size_t j = 0; j < i; ++j)
      if (std::abs(v1.w[i] * v2.w[j] - v1.w[j] * v2.w[i]) > 1e-14) {
        independent = true;
        break;
      }
  if (!independent)
    throw std::invalid_argument("boundary_sweep: directions not independent");

  std::vector<SweepRow> rows(static_cast<size_t>(num_angles));
  parallel_for(exec, num_angles, [&](std::int64_t i) {
    const double phi = kTwoPi * double(i) / double(num_angles);
    Direction dir = Direction::zero(two_j);
    for (size_t k = 0; k < dir.w.size(); ++k)
      dir.w[k] = std::cos(phi) * v1.w[k] + std::sin(phi) * v2.w[k];
    SweepRow row;
    row.phi = phi;
    try {
      OptimizeResult r = optimize_direction(dir, two_j, tol);
      row.status = r.status;
      row.ok = r.status == sdp::SolveStatus::Optimal;
      row.value = r.value;
      row.optimizer = r.optimizer;
    } catch (const std::exception&) {
      row.ok = false;
    }
    rows[static_cast<size_t>(i)] = std::move(row);
  });
  return rows;
}

bool toeplitz_membership(const std::vector<double>& point, double tol) {
  if (point.size() % 2 != 0)
    throw std::invalid_argument("toeplitz_membership: need even length");
  const int d = static_cast<int>(point.size()) / 2;
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Identity(d + 1, d + 1);
  for (int k = 1; k <= d; ++k) {
    const cplx x(point[static_cast<size_t>(2 * k - 2)],
                 point[static_cast<size_t>(2 * k - 1)]);
    for (int j = 0; j + k <= d; ++j) {
      t(j, j + k) = x;
      t(j + k, j) = std::conj(x);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(t, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -std::max(tol, 1e-9);
}

sdp::VerifyReport verify_certificate(const TrigPoly& p, const Certificate& c,
                                     double tol) {
  const int two_j = static_cast<int>(c.Q.rows()) - 1;
  const sdp::SDPProblem prob = membership_problem(pad_degree(p, two_j), two_j);
  return sdp::verify_blocks(prob, {c.Q, c.S}, tol);
}

}  // namespace rotbox::rset
