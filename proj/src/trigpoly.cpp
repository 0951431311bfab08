#include "rotbox/trigpoly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace rotbox {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0) t += kTwoPi;
  return t;
}
}  // namespace

TrigPoly::TrigPoly(std::vector<double> cc, std::vector<double> ss)
    : c(std::move(cc)), s(std::move(ss)) {
  if (c.empty()) throw std::invalid_argument("TrigPoly: empty cosine vector");
  if (s.size() + 1 != c.size())
    throw std::invalid_argument("TrigPoly: need |s| = |c| - 1");
}

TrigPoly TrigPoly::zero(int degree) {
  return TrigPoly(std::vector<double>(static_cast<size_t>(degree) + 1, 0.0),
                  std::vector<double>(static_cast<size_t>(degree), 0.0));
}

double TrigPoly::evaluate(double theta) const {
  // Accumulate cos/sin(k theta) by recurrence; cheaper and more uniform than
  // calling std::cos 2d times.
  double acc = c[0];
  const double cs = std::cos(theta), sn = std::sin(theta);
  double ck = 1.0, sk = 0.0;  // cos(k theta), sin(k theta) at k=0
  for (size_t k = 1; k < c.size(); ++k) {
    const double ck1 = ck * cs - sk * sn;
    const double sk1 = sk * cs + ck * sn;
    ck = ck1;
    sk = sk1;
    acc += c[k] * ck + s[k - 1] * sk;
  }
  return acc;
}

cplx TrigPoly::a_coeff(int k) const {
  const int d = degree();
  const int m = std::abs(k);
  if (m > d) return {0.0, 0.0};
  if (m == 0) return {c[0], 0.0};
  cplx a{0.5 * c[static_cast<size_t>(m)], -0.5 * s[static_cast<size_t>(m) - 1]};
  return k > 0 ? a : std::conj(a);
}

std::vector<cplx> to_complex(const TrigPoly& p) {
  const int d = p.degree();
  std::vector<cplx> a(static_cast<size_t>(2 * d) + 1);
  for (int k = -d; k <= d; ++k) a[static_cast<size_t>(k + d)] = p.a_coeff(k);
  return a;
}

TrigPoly from_complex(const std::vector<cplx>& a, double hermitian_tol) {
  if (a.size() % 2 == 0 || a.empty())
    throw std::invalid_argument("from_complex: need odd length 2d+1");
  const int d = static_cast<int>(a.size() / 2);
  for (int k = 0; k <= d; ++k) {
    const cplx diff = a[static_cast<size_t>(d + k)] -
                      std::conj(a[static_cast<size_t>(d - k)]);
    if (std::abs(diff) > hermitian_tol)
      throw HermitianSymmetryViolation("from_complex: a_{-k} != conj(a_k)");
  }
  std::vector<double> c(static_cast<size_t>(d) + 1), s(static_cast<size_t>(d));
  c[0] = a[static_cast<size_t>(d)].real();
  for (int k = 1; k <= d; ++k) {
    c[static_cast<size_t>(k)] = 2.0 * a[static_cast<size_t>(d + k)].real();
    s[static_cast<size_t>(k) - 1] = -2.0 * a[static_cast<size_t>(d + k)].imag();
  }
  return TrigPoly(std::move(c), std::move(s));
}

TrigPoly from_halfspectrum(const std::vector<cplx>& a_nonneg) {
  if (a_nonneg.empty()) throw std::invalid_argument("from_halfspectrum: empty");
  const int d = static_cast<int>(a_nonneg.size()) - 1;
  std::vector<cplx> full(static_cast<size_t>(2 * d) + 1);
  for (int k = 0; k <= d; ++k) {
    full[static_cast<size_t>(d + k)] = a_nonneg[static_cast<size_t>(k)];
    full[static_cast<size_t>(d - k)] = std::conj(a_nonneg[static_cast<size_t>(k)]);
  }
  // a_0 must be real for a real polynomial.
  full[static_cast<size_t>(d)] = cplx(a_nonneg[0].real(), 0.0);
  return from_complex(full, 1e100);
}

TrigPoly operator+(const TrigPoly& p, const TrigPoly& q) {
  const int d = std::max(p.degree(), q.degree());
  TrigPoly r = TrigPoly::zero(d);
  for (int k = 0; k <= d; ++k)
    r.c[static_cast<size_t>(k)] =
        (k <= p.degree() ? p.c[static_cast<size_t>(k)] : 0.0) +
        (k <= q.degree() ? q.c[static_cast<size_t>(k)] : 0.0);
  for (int k = 1; k <= d; ++k)
    r.s[static_cast<size_t>(k) - 1] = p.s_coeff(k) + q.s_coeff(k);
  return r;
}

TrigPoly operator-(const TrigPoly& p, const TrigPoly& q) {
  return p + (-1.0 * q);
}

TrigPoly operator*(double lambda, const TrigPoly& p) {
  TrigPoly r = p;
  for (auto& x : r.c) x *= lambda;
  for (auto& x : r.s) x *= lambda;
  return r;
}

TrigPoly shift(const TrigPoly& p, double phi) {
  // p(theta + phi): a_k -> a_k e^{ik phi}
  const int d = p.degree();
  std::vector<cplx> a(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k)
    a[static_cast<size_t>(k)] =
        p.a_coeff(k) * std::polar(1.0, k * phi);
  return from_halfspectrum(a);
}

TrigPoly pad_degree(const TrigPoly& p, int new_degree) {
  if (new_degree < p.degree())
    throw std::invalid_argument("pad_degree: new degree below current");
  TrigPoly r = p;
  r.c.resize(static_cast<size_t>(new_degree) + 1, 0.0);
  r.s.resize(static_cast<size_t>(new_degree), 0.0);
  return r;
}

TrigPoly trim_degree(const TrigPoly& p, double tol) {
  int d = p.degree();
  while (d > 0 && std::abs(p.c[static_cast<size_t>(d)]) < tol &&
         std::abs(p.s[static_cast<size_t>(d) - 1]) < tol)
    --d;
  TrigPoly r = p;
  r.c.resize(static_cast<size_t>(d) + 1);
  r.s.resize(static_cast<size_t>(d));
  return r;
}

namespace {

// Angles of the unit-circle roots of the derivative p', found as eigenvalues
// of the companion matrix of z^d p'(z).
std::vector<double> derivative_critical_angles(const TrigPoly& p) {
  const int d = p.degree();
  // Laurent coefficients of p': g_k = i k a_k, k = -d..d.
  std::vector<cplx> g(static_cast<size_t>(2 * d) + 1);
  double gmax = 0.0;
  for (int k = -d; k <= d; ++k) {
    g[static_cast<size_t>(k + d)] = cplx(0.0, double(k)) * p.a_coeff(k);
    gmax = std::max(gmax, std::abs(g[static_cast<size_t>(k + d)]));
  }
  std::vector<double> angles;
  if (gmax < 1e-15) return angles;  // constant polynomial

  // Trim zero outer coefficients, keeping the trailing zeros (roots at the
  // origin are off-circle and harmless).
  int hi = 2 * d;
  while (hi > 0 && std::abs(g[static_cast<size_t>(hi)]) < 1e-14 * gmax) --hi;
  int lo = 0;
  while (lo < hi && std::abs(g[static_cast<size_t>(lo)]) < 1e-14 * gmax) ++lo;
  const int n = hi - lo;  // polynomial degree after trimming
  if (n <= 0) return angles;

  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  const cplx lead = g[static_cast<size_t>(hi)];
  for (int i = 0; i < n; ++i) {
    comp(i, n - 1) = -g[static_cast<size_t>(lo + i)] / lead;
    if (i > 0) comp(i, i - 1) = 1.0;
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  for (int i = 0; i < n; ++i) {
    const cplx z = es.eigenvalues()(i);
    // Multiple roots on the circle scatter like eps^{1/multiplicity}, so the
    // band has to be generous; spurious angles only add candidates and are
    // polished away below.
    if (std::abs(std::abs(z) - 1.0) < 1e-3)
      angles.push_back(wrap_angle(std::arg(z)));
  }
  return angles;
}

double eval_derivative(const TrigPoly& p, double t) {
  double acc = 0.0;
  for (int k = 1; k <= p.degree(); ++k)
    acc += k * (-p.c_coeff(k) * std::sin(k * t) + p.s_coeff(k) * std::cos(k * t));
  return acc;
}

double eval_second_derivative(const TrigPoly& p, double t) {
  double acc = 0.0;
  for (int k = 1; k <= p.degree(); ++k)
    acc -= double(k) * k *
           (p.c_coeff(k) * std::cos(k * t) + p.s_coeff(k) * std::sin(k * t));
  return acc;
}

}  // namespace

Extrema extrema(const TrigPoly& p) {
  Extrema ext;
  if (p.degree() == 0) {
    ext.min_value = ext.max_value = p.c[0];
    ext.argmin = ext.argmax = 0.0;
    return ext;
  }
  std::vector<double> angles = derivative_critical_angles(p);
  // Coarse fallback grid guards against critical points lost to eigenvalue
  // scatter at multiple roots.
  const int grid = std::max(32, 8 * p.degree());
  for (int i = 0; i < grid; ++i) angles.push_back(kTwoPi * i / grid);

  ext.min_value = std::numeric_limits<double>::infinity();
  ext.max_value = -std::numeric_limits<double>::infinity();
  for (double t0 : angles) {
    // Newton polish on p'
    double t = t0;
    for (int it = 0; it < 8; ++it) {
      const double d1 = eval_derivative(p, t);
      const double d2 = eval_second_derivative(p, t);
      if (std::abs(d2) < 1e-14) break;
      const double step = d1 / d2;
      if (std::abs(step) > 0.5) break;  // diverging; keep the raw candidate
      t -= step;
      if (std::abs(step) < 1e-15) break;
    }
    for (double cand : {t0, wrap_angle(t)}) {
      const double v = p.evaluate(cand);
      if (v < ext.min_value) {
        ext.min_value = v;
        ext.argmin = cand;
      }
      if (v > ext.max_value) {
        ext.max_value = v;
        ext.argmax = cand;
      }
    }
  }
  return ext;
}

bool range_valid(const TrigPoly& p) {
  const Extrema e = extrema(p);
  return e.min_value >= -1e-10 && e.max_value <= 1.0 + 1e-10;
}

std::vector<cplx> fourier_coefficients(const std::function<double(double)>& f,
                                       int d, double quad_tol, int min_nodes) {
  if (d < 0) throw std::invalid_argument("fourier_coefficients: d < 0");
  const int n0 = std::max({8 * (d + 1), 64, min_nodes});

  auto trapezoid = [&](int n) {
    std::vector<cplx> a(static_cast<size_t>(2 * d) + 1, cplx(0, 0));
    for (int i = 0; i < n; ++i) {
      const double t = kTwoPi * i / n;
      const double v = f(t);
      for (int k = -d; k <= d; ++k)
        a[static_cast<size_t>(k + d)] += v * std::polar(1.0, -k * t);
    }
    for (auto& x : a) x /= double(n);
    return a;
  };

  const std::vector<cplx> coarse = trapezoid(n0);
  const std::vector<cplx> fine = trapezoid(2 * n0);
  double err = 0.0;
  for (size_t i = 0; i < fine.size(); ++i)
    err = std::max(err, std::abs(fine[i] - coarse[i]));
  if (err > quad_tol)
    throw QuadratureError("fourier projection did not converge: err=" +
                          std::to_string(err));
  return fine;
}

TrigPoly fourier_project(const std::function<double(double)>& f, int d,
                         double quad_tol, int min_nodes) {
  const std::vector<cplx> a = fourier_coefficients(f, d, quad_tol, min_nodes);
  std::vector<cplx> half(a.begin() + d, a.end());
  return from_halfspectrum(half);
}

double circular_distance(double t0, double t1) {
  const double diff = wrap_angle(t0 - t1);
  return std::min(diff, kTwoPi - diff);
}

}  // namespace rotbox
