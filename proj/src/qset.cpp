#include "rotbox/qset.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace rotbox::qset {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0) t += kTwoPi;
  return t;
}

Eigen::MatrixXcd rotation_diag(int dim, double theta) {
  // U_theta = e^{i theta Z}, Z = diag(-J..J), stored ascending.
  const double jtop = 0.5 * (dim - 1);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
  for (int j = 0; j < dim; ++j) u(j, j) = std::polar(1.0, (j - jtop) * theta);
  return u;
}

}  // namespace

void validate(const QuantumRealization& r, double tol) {
  const int n = r.dim();
  if (std::abs(r.psi.norm() - 1.0) > tol)
    throw InvalidRealization("state is not normalized");
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& e : r.povm) {
    if (e.rows() != n || e.cols() != n)
      throw InvalidRealization("POVM element dimension mismatch");
    if ((e - e.adjoint()).cwiseAbs().maxCoeff() > tol)
      throw InvalidRealization("POVM element not Hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(e, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol ||
        es.eigenvalues().maxCoeff() > 1.0 + tol)
      throw InvalidRealization("POVM element outside [0, 1]");
    sum += e;
  }
  if ((sum - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() > tol)
    throw InvalidRealization("POVM does not sum to identity");
}

TrigPoly born_polynomial(const Eigen::MatrixXcd& rho,
                         const Eigen::MatrixXcd& effect) {
  const int n = static_cast<int>(rho.rows());
  std::vector<cplx> a(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    cplx v(0, 0);
    for (int j = 0; j + k < n; ++j) v += std::conj(rho(j, j + k)) * effect(j, j + k);
    a[static_cast<size_t>(k)] = v;
  }
  a[0] = cplx(a[0].real(), 0.0);
  return from_halfspectrum(a);
}

TrigPoly born_polynomial(const QuantumRealization& r, size_t outcome) {
  const Eigen::MatrixXcd rho = r.psi * r.psi.adjoint();
  return born_polynomial(rho, r.povm.at(outcome));
}

Eigen::MatrixXcd direction_band_matrix(const rset::Direction& n, int two_j) {
  if (n.two_j() != two_j)
    throw std::invalid_argument("direction length does not match 2J");
  const int dim = two_j + 1;
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(dim, dim);
  for (int j = 0; j < dim; ++j) g(j, j) = n.w[0];
  for (int k = 1; k <= two_j; ++k) {
    const cplx gk(n.c_weight(k), n.s_weight(k));
    for (int j = 0; j + k < dim; ++j) {
      g(j, j + k) = gk;
      g(j + k, j) = std::conj(gk);
    }
  }
  return g;
}

double direction_value(const rset::Direction& n, const SchurPair& pair) {
  const Eigen::MatrixXcd g = direction_band_matrix(n, static_cast<int>(pair.rho.rows()) - 1);
  return (g.cwiseProduct(pair.effect) * pair.rho).trace().real();
}

Eigen::MatrixXcd clipped_effect_step(const Eigen::MatrixXcd& K) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(K);
  const int n = static_cast<int>(K.rows());
  Eigen::VectorXd d(n);
  for (int i = 0; i < n; ++i) d(i) = es.eigenvalues()(i) > 0.0 ? 1.0 : 0.0;
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

namespace {

Eigen::VectorXcd random_pure_state(std::mt19937_64& rng, int dim) {
  // Box-Muller on top of uniform doubles keeps the stream fully deterministic.
  std::uniform_real_distribution<double> u(1e-12, 1.0);
  auto gauss = [&]() {
    const double r = std::sqrt(-2.0 * std::log(u(rng)));
    const double t = kTwoPi * u(rng);
    return cplx(r * std::cos(t), r * std::sin(t));
  };
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = gauss();
  return v / v.norm();
}

}  // namespace

SeesawResult seesaw(const rset::Direction& n, int two_j,
                    const SeesawOptions& opts) {
  if (opts.restarts < 1)
    throw std::invalid_argument("seesaw: restarts must be >= 1");
  const int dim = two_j + 1;
  const Eigen::MatrixXcd G = direction_band_matrix(n, two_j);
  const Eigen::MatrixXcd Gconj = G.conjugate();

  std::vector<double> values(static_cast<size_t>(opts.restarts));
  std::vector<SchurPair> pairs(static_cast<size_t>(opts.restarts));
  std::vector<std::vector<double>> traces(static_cast<size_t>(opts.restarts));

  parallel_for(opts.exec, opts.restarts, [&](std::int64_t r) {
    std::mt19937_64 rng(opts.seed * 0x9E3779B97F4A7C15ULL + 0x1000003 * static_cast<std::uint64_t>(r));
    Eigen::VectorXcd psi = random_pure_state(rng, dim);
    Eigen::MatrixXcd rho = psi * psi.adjoint();
    Eigen::MatrixXcd E = Eigen::MatrixXcd::Zero(dim, dim);
    double prev = -std::numeric_limits<double>::infinity();
    std::vector<double> trace;
    for (int round = 0; round < opts.max_rounds; ++round) {
      // E-step: maximize Tr(K E) over 0 <= E <= 1, K = conj(G) o rho.
      E = clipped_effect_step(Gconj.cwiseProduct(rho));
      const double v1 = (G.cwiseProduct(E) * rho).trace().real();
      if (v1 < prev - 1e-11 * (1.0 + std::abs(prev)))
        throw std::logic_error("seesaw: E-step decreased the objective");
      // rho-step: top eigenprojector of M[E] = G o E.
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G.cwiseProduct(E));
      const Eigen::VectorXcd top = es.eigenvectors().col(dim - 1);
      rho = top * top.adjoint();
      const double v2 = (G.cwiseProduct(E) * rho).trace().real();
      if (v2 < v1 - 1e-11 * (1.0 + std::abs(v1)))
        throw std::logic_error("seesaw: rho-step decreased the objective");
      trace.push_back(v2);
      if (v2 - prev < opts.convergence_gain && round > 0) {
        prev = v2;
        break;
      }
      prev = v2;
    }
    values[static_cast<size_t>(r)] = prev;
    pairs[static_cast<size_t>(r)] = SchurPair{rho, E};
    traces[static_cast<size_t>(r)] = std::move(trace);
  });

  SeesawResult out;
  out.restart_values = values;
  out.traces = std::move(traces);
  out.best_restart = 0;
  for (int r = 1; r < opts.restarts; ++r)
    if (values[static_cast<size_t>(r)] > values[static_cast<size_t>(out.best_restart)])
      out.best_restart = r;
  out.value = values[static_cast<size_t>(out.best_restart)];
  out.best = pairs[static_cast<size_t>(out.best_restart)];
  return out;
}

GapBound analytic_gap_bound(int two_j) {
  if (two_j < 3)
    throw std::invalid_argument("analytic_gap_bound: requires 2J >= 3");
  const int dim = two_j + 1;
  const double s6 = 1.0 / std::sqrt(6.0);
  const double s3 = 1.0 / (2.0 * std::sqrt(3.0));
  const double r2 = 1.0 / (3.0 * std::sqrt(2.0));
  Eigen::MatrixXcd E4(4, 4), R4(4, 4);
  E4 << 0.5, 0.0, s6, cplx(0, -s3),
        0.0, 0.5, cplx(0, -s3), s6,
        s6, cplx(0, s3), 0.5, 0.0,
        cplx(0, s3), s6, 0.0, 0.5;
  R4 << 1.0 / 3, r2, r2, 1.0 / 3,
        r2, 1.0 / 6, 1.0 / 6, r2,
        r2, 1.0 / 6, 1.0 / 6, r2,
        1.0 / 3, r2, r2, 1.0 / 3;

  GapBound out;
  out.beta = 1.0 / std::sqrt(3.0);
  if (two_j == 3) {
    out.effect = E4;
    out.rho = R4;
  } else {
    // Corner embedding: the functional c_{2J-1} + s_{2J} only reads the four
    // extreme levels {0, 1, 2J-1, 2J}; the middle of E is set to 1/2.
    const std::array<int, 4> idx = {0, 1, two_j - 1, two_j};
    Eigen::MatrixXcd E = 0.5 * Eigen::MatrixXcd::Identity(dim, dim);
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        E(idx[static_cast<size_t>(a)], idx[static_cast<size_t>(b)]) = E4(a, b);
        rho(idx[static_cast<size_t>(a)], idx[static_cast<size_t>(b)]) = R4(a, b);
      }
    out.effect = E;
    out.rho = rho;
  }

  rset::Direction dir = rset::Direction::zero(two_j);
  dir.w[static_cast<size_t>(2 * (two_j - 1) - 1)] = 1.0;  // c_{2J-1}
  dir.w[static_cast<size_t>(2 * two_j)] = 1.0;            // s_{2J}
  out.witness_value = direction_value(dir, SchurPair{out.rho, out.effect});

  // The construction is exact; guard against regressions in the embedding.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ee(out.effect, Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> er(out.rho, Eigen::EigenvaluesOnly);
  if (std::abs(out.witness_value - out.beta) > 1e-12 ||
      ee.eigenvalues().minCoeff() < -1e-12 ||
      ee.eigenvalues().maxCoeff() > 1.0 + 1e-12 ||
      er.eigenvalues().minCoeff() < -1e-12 ||
      std::abs(out.rho.trace().real() - 1.0) > 1e-12)
    throw std::logic_error("analytic_gap_bound: witness verification failed");
  return out;
}

namespace {

double polytope_f(double x, double y, double z) {
  const double s = x + y + z;
  return s + std::sqrt(std::max(s * s - 4.0 * x * z, 0.0));
}

}  // namespace

PolytopeMax polytope_max() {
  using P3 = std::array<double, 3>;
  const double q = 0.25;
  const std::vector<P3> vertices = {
      {0, 0, 0}, {q, 0, 0}, {0, q, 0}, {0, 0, q}, {q, 0, q}};
  // All eight edges of {x,y,z >= 0, x+y <= 1/4, y+z <= 1/4}.  The interior
  // and the two-dimensional faces carry no stationary points of f, so the
  // maximum lives on this skeleton; the only edge with an interior stationary
  // point is {x+y = y+z = 1/4}.
  const std::vector<std::pair<P3, P3>> edges = {
      {{0, 0, 0}, {q, 0, 0}}, {{0, 0, 0}, {0, q, 0}}, {{0, 0, 0}, {0, 0, q}},
      {{q, 0, 0}, {q, 0, q}}, {{0, 0, q}, {q, 0, q}}, {{q, 0, 0}, {0, q, 0}},
      {{0, 0, q}, {0, q, 0}}, {{q, 0, q}, {0, q, 0}}};

  PolytopeMax best;
  best.value = -1.0;
  auto consider = [&](const P3& p) {
    const double f = polytope_f(p[0], p[1], p[2]);
    if (f > best.value) {
      best.value = f;
      best.point = p;
    }
  };
  for (const auto& v : vertices) consider(v);

  // On a segment p(u) = a + u (b-a):  f = s(u) + sqrt(g(u)) with s linear and
  // g quadratic, so f'(u) = 0 reduces to the quadratic g'^2 = 4 s'^2 g, which
  // we solve in closed form.
  for (const auto& [a, b] : edges) {
    const double dx = b[0] - a[0], dy = b[1] - a[1], dz = b[2] - a[2];
    const double s0 = a[0] + a[1] + a[2], s1 = dx + dy + dz;
    // g(u) = (s0 + s1 u)^2 - 4 (a_x + dx u)(a_z + dz u) = A u^2 + B u + C
    const double A = s1 * s1 - 4.0 * dx * dz;
    const double B = 2.0 * s0 * s1 - 4.0 * (a[0] * dz + a[2] * dx);
    const double C = s0 * s0 - 4.0 * a[0] * a[2];
    // (2Au + B)^2 = 4 s1^2 (A u^2 + B u + C)
    const double qa = 4.0 * A * (A - s1 * s1);
    const double qb = 4.0 * B * (A - s1 * s1);
    const double qc = B * B - 4.0 * s1 * s1 * C;
    std::vector<double> roots;
    if (std::abs(qa) > 1e-14) {
      const double disc = qb * qb - 4.0 * qa * qc;
      if (disc >= 0.0) {
        roots.push_back((-qb + std::sqrt(disc)) / (2.0 * qa));
        roots.push_back((-qb - std::sqrt(disc)) / (2.0 * qa));
      }
    } else if (std::abs(qb) > 1e-14) {
      roots.push_back(-qc / qb);
    }
    for (double u : roots)
      if (u > 0.0 && u < 1.0)
        consider({a[0] + u * dx, a[1] + u * dy, a[2] + u * dz});
  }
  return best;
}

double polytope_grid_oracle(int steps_per_quarter, Exec exec) {
  const int n = steps_per_quarter;
  const double h = 0.25 / n;
  std::vector<double> slot(static_cast<size_t>(n) + 1, -1.0);
  parallel_for(exec, n + 1, [&](std::int64_t i) {
    double m = -1.0;
    for (int j = 0; i + j <= n; ++j)
      for (int k = 0; j + k <= n; ++k)
        m = std::max(m, polytope_f(i * h, j * h, k * h));
    slot[static_cast<size_t>(i)] = m;
  });
  double best = -1.0;
  for (double v : slot) best = std::max(best, v);
  return best;
}

std::vector<TrigPoly> r1_face_extremals(double theta0, double theta1) {
  const double delta = wrap_angle(theta1 - theta0);
  const double eps = 1e-9;

  if (delta < kPi / 2 - eps || delta > 3 * kPi / 2 + eps)
    throw EmptyFace("no box in R_1 has a zero and a one closer than pi/2");

  auto shifted = [&](const TrigPoly& base) { return shift(base, -theta0); };

  if (std::abs(delta - kPi / 2) <= eps || std::abs(delta - 3 * kPi / 2) <= eps) {
    // single element sin^2(theta - theta0)
    return {shifted(TrigPoly({0.5, 0.0, -0.5}, {0.0, 0.0}))};
  }
  if (std::abs(delta - kPi) <= eps) {
    // sin^4(t/2) and its partner (1-cos t)(3+cos t)/4
    return {shifted(TrigPoly({3.0 / 8, -0.5, 1.0 / 8}, {0.0, 0.0})),
            shifted(TrigPoly({5.0 / 8, -0.5, -1.0 / 8}, {0.0, 0.0}))};
  }

  // generic pair: c (1-cos t)(1-cos(t - t0')) and 1 - P(theta1 - theta)
  const double t0p =
      delta < kPi ? wrap_angle(2.0 * delta) : wrap_angle(2.0 * (delta - kPi));
  TrigPoly base({1.0 + 0.5 * std::cos(t0p), -(1.0 + std::cos(t0p)),
                 0.5 * std::cos(t0p)},
                {-std::sin(t0p), 0.5 * std::sin(t0p)});
  const double m = extrema(base).max_value;
  TrigPoly p = shifted((1.0 / m) * base);

  // partner: 1 - p(theta0 + theta1 - theta)
  const double A = theta0 + theta1;
  std::vector<cplx> a(3);
  for (int k = 0; k <= 2; ++k)
    a[static_cast<size_t>(k)] =
        std::conj(p.a_coeff(k)) * std::polar(1.0, -k * A);
  const TrigPoly reflected = from_halfspectrum(a);
  return {p, TrigPoly::constant(1.0) - reflected};
}

namespace {

// reverse the basis order; conjugates the generator (Z -> -Z)
Eigen::VectorXcd reverse_vec(const Eigen::VectorXcd& v) {
  return v.reverse().eval();
}

QuantumRealization realization_from(const Eigen::VectorXcd& psi,
                                    const Eigen::VectorXcd& effect_vec,
                                    bool complement) {
  QuantumRealization r;
  r.psi = psi;
  const Eigen::MatrixXcd proj = effect_vec * effect_vec.adjoint();
  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(psi.size(), psi.size());
  if (complement)
    r.povm = {eye - proj, proj};
  else
    r.povm = {proj, eye - proj};
  return r;
}

}  // namespace

QuantumRealization r1_quantum_realize(const TrigPoly& p_in) {
  const TrigPoly p = pad_degree(p_in, 2);
  if (p.degree() != 2) throw NotExtremalForm("degree exceeds two");
  const Extrema e = extrema(p);
  if (std::abs(e.min_value) > 1e-9 || std::abs(e.max_value - 1.0) > 1e-9)
    throw NotExtremalForm("extremal boxes reach exactly 0 and 1");

  const double theta0 = e.argmin, theta1 = e.argmax;
  std::vector<TrigPoly> cands;
  try {
    cands = r1_face_extremals(theta0, theta1);
  } catch (const EmptyFace&) {
    throw NotExtremalForm("extrema closer than pi/2");
  }

  int match = -1;
  for (size_t i = 0; i < cands.size(); ++i) {
    const TrigPoly diff = p - cands[i];
    double err = 0.0;
    for (int k = 0; k <= 2; ++k)
      err = std::max({err, std::abs(diff.c_coeff(k)),
                      k > 0 ? std::abs(diff.s_coeff(k)) : 0.0});
    if (err < 1e-8) {
      match = static_cast<int>(i);
      break;
    }
  }
  if (match < 0) throw NotExtremalForm("no face extremal matches");

  const double delta = wrap_angle(theta1 - theta0);
  Eigen::VectorXcd psi(3), phi(3);
  bool is_pair_case = false;
  if (std::abs(delta - kPi / 2) <= 1e-9 || std::abs(delta - 3 * kPi / 2) <= 1e-9) {
    // sin^2: psi = (|1> - |-1>)/sqrt 2, phi = (|1> + |-1>)/sqrt 2
    psi << -1.0 / std::sqrt(2.0), 0.0, 1.0 / std::sqrt(2.0);
    phi << 1.0 / std::sqrt(2.0), 0.0, 1.0 / std::sqrt(2.0);
  } else if (std::abs(delta - kPi) <= 1e-9) {
    // sin^4(t/2): psi = (|1> + sqrt2 |0> + |-1>)/2, phi with flipped signs
    psi << 0.5, std::sqrt(2.0) / 2.0, 0.5;
    phi << -0.5, std::sqrt(2.0) / 2.0, -0.5;
    is_pair_case = match == 1;
  } else {
    const double alpha = std::sqrt(1.0 - 1.0 / (1.0 - std::cos(delta)));
    const double beta = 1.0 / std::sqrt(2.0 * (1.0 - std::cos(delta)));
    psi << beta, alpha, beta;
    phi = rotation_diag(3, delta) * psi;
    is_pair_case = match == 1;
  }

  QuantumRealization r;
  if (!is_pair_case) {
    // P(theta) = |<phi| U_{theta - theta0} psi>|^2
    r = realization_from(rotation_diag(3, -theta0) * psi, phi, false);
  } else {
    // partner 1 - P(theta0 + theta1 - theta): reverse the basis (Z -> -Z)
    // and take the complementary outcome.
    const Eigen::VectorXcd psi0 = rotation_diag(3, -theta0) * psi;
    const Eigen::VectorXcd phiA =
        rotation_diag(3, theta0 + theta1).adjoint() * phi;
    r = realization_from(reverse_vec(psi0), reverse_vec(phiA), true);
  }

  // grid verification, 1000 points
  const TrigPoly born = born_polynomial(r, 0);
  for (int i = 0; i < 1000; ++i) {
    const double t = kTwoPi * i / 1000.0;
    if (std::abs(born.evaluate(t) - p.evaluate(t)) > 1e-9)
      throw NotExtremalForm("realization does not reproduce the box");
  }
  return r;
}

ApproxResult approximate_continuous(const std::function<double(double)>& f,
                                    int two_j, int n_width) {
  if (two_j < 2 || two_j % 2 != 0)
    throw std::invalid_argument(
        "approximate_continuous: needs integer J >= 1 (even 2J)");
  if (n_width < 1) throw std::invalid_argument("approximate_continuous: n >= 1");
  const int J = two_j / 2;
  const int dim = two_j + 1;
  const double n = static_cast<double>(n_width);

  // Boxcar of half-width 1/n: Fourier weight |c_m|^2 = (n/pi) (sin(m/n)/m)^2.
  auto coeff = [&](int m) {
    if (m == 0) return std::sqrt(1.0 / (kPi * n));
    return std::sqrt(n / kPi) * std::sin(m / n) / m;
  };
  double kept = 0.0;
  Eigen::VectorXcd psi(dim);
  for (int j = 0; j < dim; ++j) {
    const double c = coeff(j - J);
    psi(j) = c;
    kept += c * c;
  }
  const double eps = std::max(0.0, 1.0 - kept);
  psi /= std::sqrt(kept);

  // Compressed multiplication operator: entries a_{k-j}(f).
  const std::vector<cplx> af = fourier_coefficients(f, two_j, 1e-9, 1 << 12);
  Eigen::MatrixXcd effect(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int k = 0; k < dim; ++k)
      effect(j, k) = af[static_cast<size_t>(k - j + two_j)];

  // Compression of 0 <= f <= 1 stays in [0, 1]; clip numerical dust and
  // report how much was removed.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(effect);
  Eigen::VectorXd ev = es.eigenvalues();
  double clip = 0.0;
  for (int i = 0; i < dim; ++i) {
    const double c = std::clamp(ev(i), 0.0, 1.0);
    clip = std::max(clip, std::abs(c - ev(i)));
    ev(i) = c;
  }
  const Eigen::MatrixXcd eclip =
      es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();

  ApproxResult out;
  out.realization.psi = psi;
  out.realization.povm = {eclip,
                          Eigen::MatrixXcd::Identity(dim, dim) - eclip};
  out.epsilon = eps;
  out.clip_magnitude = clip;

  // averaging error sup |(n/2) int_{t-1/n}^{t+1/n} f - f(t)| by composite
  // Simpson on each window
  const int grid = 2048, win = 64;
  double avg_err = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double t = kTwoPi * i / grid;
    const double h = 2.0 / (n * win);
    double integral = f(t - 1.0 / n) + f(t + 1.0 / n);
    for (int k = 1; k < win; ++k)
      integral += (k % 2 == 1 ? 4.0 : 2.0) * f(t - 1.0 / n + k * h);
    integral *= h / 3.0;
    avg_err = std::max(avg_err, std::abs(0.5 * n * integral - f(t)));
  }
  out.averaging_error = avg_err;
  out.bound = std::sqrt(eps) + avg_err;

  const TrigPoly born = born_polynomial(out.realization, 0);
  double sup = 0.0;
  for (int i = 0; i < 4096; ++i) {
    const double t = kTwoPi * i / 4096.0;
    sup = std::max(sup, std::abs(born.evaluate(t) - f(t)));
  }
  out.measured_sup_error = sup;
  return out;
}

QuantumRealization lift_spin(const QuantumRealization& r) {
  validate(r);
  const int n = r.dim();
  QuantumRealization out;
  out.psi = Eigen::VectorXcd::Zero(n + 1);
  out.psi.tail(n) = r.psi;
  const double share = 1.0 / static_cast<double>(r.povm.size());
  for (const auto& e : r.povm) {
    Eigen::MatrixXcd ep = Eigen::MatrixXcd::Zero(n + 1, n + 1);
    ep(0, 0) = share;
    ep.bottomRightCorner(n, n) = e;
    out.povm.push_back(std::move(ep));
  }
  return out;
}

}  // namespace rotbox::qset
