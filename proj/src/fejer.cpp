#include "rotbox/fejer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rotbox::fejer {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<cplx> roots_of(const std::vector<cplx>& coeffs) {
  // coefficients lowest-first, leading coefficient nonzero
  const int n = static_cast<int>(coeffs.size()) - 1;
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    comp(i, n - 1) = -coeffs[static_cast<size_t>(i)] / coeffs[static_cast<size_t>(n)];
    if (i > 0) comp(i, i - 1) = 1.0;
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::vector<cplx> r(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) r[static_cast<size_t>(i)] = es.eigenvalues()(i);
  return r;
}

std::vector<cplx> poly_from_roots(const std::vector<cplx>& roots) {
  std::vector<cplx> c{1.0};
  for (const cplx& r : roots) {
    std::vector<cplx> next(c.size() + 1, cplx(0, 0));
    for (size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;  // lowest-first, monic
}

}  // namespace

TrigPoly reconstruct(const FactorVector& f) {
  const int d = static_cast<int>(f.b.size()) - 1;
  std::vector<cplx> a(static_cast<size_t>(d) + 1, cplx(0, 0));
  for (int k = 0; k <= d; ++k)
    for (int j = 0; j + k <= d; ++j)
      a[static_cast<size_t>(k)] +=
          std::conj(f.b[static_cast<size_t>(j)]) * f.b[static_cast<size_t>(j + k)];
  return from_halfspectrum(a);
}

FactorVector factorize(const TrigPoly& p_in) {
  const Extrema ext = extrema(p_in);
  if (ext.min_value < -1e-9)
    throw NotNonnegative("factorize: min(p) = " + std::to_string(ext.min_value));

  // Degree reduction for vanishing leading coefficients.
  const TrigPoly p = trim_degree(p_in, 2e-12);
  const int d = p.degree();

  if (d == 0) {
    const double c0 = std::max(p.c[0], 0.0);
    return FactorVector{{cplx(std::sqrt(c0), 0.0)}};
  }

  // Roots of z^d p(z), coefficients a_{-d}..a_d lowest-first.
  std::vector<cplx> coeffs(static_cast<size_t>(2 * d) + 1);
  for (int k = -d; k <= d; ++k)
    coeffs[static_cast<size_t>(k + d)] = p.a_coeff(k);
  std::vector<cplx> roots = roots_of(coeffs);

  // Split into inside / outside / unit-circle roots.
  std::vector<cplx> inside, outside, circle;
  for (const cplx& z : roots) {
    const double r = std::abs(z);
    if (std::abs(r - 1.0) < 1e-7)
      circle.push_back(z);
    else if (r < 1.0)
      inside.push_back(z);
    else
      outside.push_back(z);
  }

  // Off-circle roots must pair as (z, 1/conj(z)).
  if (inside.size() != outside.size())
    throw RootPairingFailure("factorize: unbalanced off-circle roots");
  for (const cplx& z : inside) {
    const cplx mirror = 1.0 / std::conj(z);
    double best = std::numeric_limits<double>::infinity();
    for (const cplx& w : outside) best = std::min(best, std::abs(w - mirror));
    if (best > 1e-6 * std::max(1.0, std::abs(mirror)))
      throw RootPairingFailure("factorize: missing mirror root");
  }

  // Unit-circle roots occur with even multiplicity; cluster by circular
  // angular distance (handling the wrap at +-pi) and assign half of each
  // cluster to the factor.
  std::vector<cplx> chosen = inside;
  if (!circle.empty()) {
    std::vector<double> angles;
    angles.reserve(circle.size());
    for (const cplx& z : circle) angles.push_back(std::arg(z));
    std::sort(angles.begin(), angles.end());
    // rotate the list so that it starts after the largest gap, which makes
    // every cluster contiguous
    size_t cut = 0;
    double best_gap = kTwoPi + angles.front() - angles.back();
    for (size_t i = 1; i < angles.size(); ++i) {
      const double gap = angles[i] - angles[i - 1];
      if (gap > best_gap) {
        best_gap = gap;
        cut = i;
      }
    }
    std::rotate(angles.begin(), angles.begin() + static_cast<std::ptrdiff_t>(cut),
                angles.end());
    size_t i = 0;
    while (i < angles.size()) {
      size_t j = i + 1;
      while (j < angles.size() &&
             std::abs(std::remainder(angles[j] - angles[j - 1], kTwoPi)) < 1e-5)
        ++j;
      const size_t mult = j - i;
      if (mult % 2 != 0)
        throw RootPairingFailure("factorize: odd unit-circle multiplicity");
      // circular mean of the cluster, relative to its first member
      double mean = 0.0;
      for (size_t k = i; k < j; ++k)
        mean += std::remainder(angles[k] - angles[i], kTwoPi);
      mean = angles[i] + mean / static_cast<double>(mult);
      for (size_t k = 0; k < mult / 2; ++k)
        chosen.push_back(std::polar(1.0, mean));
      i = j;
    }
  }
  if (chosen.size() != static_cast<size_t>(d))
    throw RootPairingFailure("factorize: root selection count mismatch");

  std::vector<cplx> q = poly_from_roots(chosen);  // monic, length d+1

  // Positive scale K with p(theta) = K |q(e^{i theta})|^2, fixed where |q| is
  // largest to avoid division near roots.
  auto qabs2 = [&](double t) {
    cplx v(0, 0);
    for (int j = 0; j <= d; ++j)
      v += q[static_cast<size_t>(j)] * std::polar(1.0, j * t);
    return std::norm(v);
  };
  double tbest = 0.0, qbest = -1.0;
  for (int i = 0; i < 4096; ++i) {
    const double t = kTwoPi * i / 4096.0;
    const double v = qabs2(t);
    if (v > qbest) {
      qbest = v;
      tbest = t;
    }
  }
  if (qbest <= 0.0) throw RootPairingFailure("factorize: zero factor");
  const double K = std::max(p.evaluate(tbest), 0.0) / qbest;

  FactorVector f;
  f.b.resize(static_cast<size_t>(d) + 1);
  const double sK = std::sqrt(K);
  for (int j = 0; j <= d; ++j) f.b[static_cast<size_t>(j)] = sK * q[static_cast<size_t>(j)];

  // Phase convention: first nonzero entry real and nonnegative.
  double bmax = 0.0;
  for (const cplx& z : f.b) bmax = std::max(bmax, std::abs(z));
  for (const cplx& z : f.b) {
    if (std::abs(z) > 1e-12 * std::max(bmax, 1.0)) {
      const cplx phase = z / std::abs(z);
      for (cplx& w : f.b) w /= phase;
      break;
    }
  }

  // Reconstruction check, per-coefficient.
  const TrigPoly rec = reconstruct(f);
  for (int k = 0; k <= d; ++k) {
    if (std::abs(rec.c_coeff(k) - p.c_coeff(k)) > 1e-8 ||
        std::abs(rec.s_coeff(k) - p.s_coeff(k)) > 1e-8)
      throw RootPairingFailure("factorize: reconstruction off by more than 1e-8");
  }
  return f;
}

Eigen::MatrixXcd gram_certificate(const TrigPoly& p) {
  const FactorVector f = factorize(p);
  const int n = static_cast<int>(f.b.size());
  // Q_{jk} = conj(b_j) b_k, so that band sums reproduce a_k (not conj(a_k)).
  Eigen::VectorXcd bc(n);
  for (int i = 0; i < n; ++i) bc(i) = std::conj(f.b[static_cast<size_t>(i)]);
  return bc * bc.adjoint();
}

RelaxedModel relaxed_quantum_model(const TrigPoly& p) {
  if (!range_valid(p))
    throw NotNonnegative("relaxed_quantum_model: p is not a valid box");
  const int dim = p.degree() + 1;
  FactorVector f = factorize(p);
  f.b.resize(static_cast<size_t>(dim), cplx(0, 0));

  RelaxedModel m;
  m.psi = Eigen::VectorXcd::Constant(dim, cplx(1.0 / std::sqrt(double(dim)), 0.0));
  Eigen::VectorXcd bconj(dim);
  for (int i = 0; i < dim; ++i) bconj(i) = std::conj(f.b[static_cast<size_t>(i)]);
  m.effect = double(dim) * bconj * bconj.adjoint();
  m.max_eigenvalue = double(dim) * bconj.squaredNorm();
  m.povm_valid = m.max_eigenvalue <= 1.0 + 1e-10;
  return m;
}

}  // namespace rotbox::fejer
