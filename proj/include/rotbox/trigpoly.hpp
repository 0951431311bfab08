#ifndef ROTBOX_TRIGPOLY_HPP
#define ROTBOX_TRIGPOLY_HPP

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace rotbox {

using cplx = std::complex<double>;

struct HermitianSymmetryViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Real trigonometric polynomial
//   p(theta) = c[0] + sum_{k=1}^{d} ( c[k] cos(k theta) + s[k-1] sin(k theta) )
// of degree d = c.size()-1.  The complex view a_k (a_{-k} = conj(a_k)) is
// related by a_0 = c_0, c_k = 2 Re(a_k), s_k = -2 Im(a_k).
struct TrigPoly {
  std::vector<double> c;  // size d+1
  std::vector<double> s;  // size d

  TrigPoly() : c{0.0} {}
  TrigPoly(std::vector<double> cc, std::vector<double> ss);

  static TrigPoly constant(double value) { return TrigPoly({value}, {}); }
  static TrigPoly zero(int degree);

  int degree() const { return static_cast<int>(c.size()) - 1; }

  double evaluate(double theta) const;

  // coefficients beyond the stored degree read as zero
  double c_coeff(int k) const {
    return k <= degree() ? c[static_cast<size_t>(k)] : 0.0;
  }
  double s_coeff(int k) const {
    return k == 0 || k > degree() ? 0.0 : s[static_cast<size_t>(k - 1)];
  }

  // Complex coefficient a_k for any k in [-d, d].
  cplx a_coeff(int k) const;
};

// a_{-d}..a_d as a vector of length 2d+1 (index k+d).
std::vector<cplx> to_complex(const TrigPoly& p);

// Inverse of to_complex; requires a_{-k} = conj(a_k) within hermitian_tol.
TrigPoly from_complex(const std::vector<cplx>& a, double hermitian_tol = 1e-12);

// Build a polynomial from the nonnegative-frequency half a_0..a_d.
TrigPoly from_halfspectrum(const std::vector<cplx>& a_nonneg);

TrigPoly operator+(const TrigPoly& p, const TrigPoly& q);
TrigPoly operator-(const TrigPoly& p, const TrigPoly& q);
TrigPoly operator*(double lambda, const TrigPoly& p);

// p(theta + phi) as a polynomial in theta.
TrigPoly shift(const TrigPoly& p, double phi);

// Same values, degree padded to new_degree >= degree(p) with zero coefficients.
TrigPoly pad_degree(const TrigPoly& p, int new_degree);

// Drop trailing coefficient pairs below tol in magnitude.
TrigPoly trim_degree(const TrigPoly& p, double tol = 1e-12);

struct Extrema {
  double min_value = 0.0;
  double argmin = 0.0;
  double max_value = 0.0;
  double argmax = 0.0;
};

// Global extrema over [0, 2pi) via root-finding on the derivative (companion
// matrix of its Laurent polynomial); exact up to ~1e-10 in value.
Extrema extrema(const TrigPoly& p);

// true iff min(p) >= -1e-10 and max(p) <= 1 + 1e-10.
bool range_valid(const TrigPoly& p);

// Fourier projection of a continuous 2pi-periodic function onto degree d:
// a_k = (1/2pi) int f(theta) e^{-ik theta} dtheta, by composite trapezoid
// quadrature with at least max(8(d+1), min_nodes) nodes, checked against a
// doubled grid.
TrigPoly fourier_project(const std::function<double(double)>& f, int d,
                         double quad_tol = 1e-9, int min_nodes = 0);

// Complex Fourier coefficients a_{-d}..a_d of f, same quadrature scheme.
std::vector<cplx> fourier_coefficients(const std::function<double(double)>& f,
                                       int d, double quad_tol = 1e-9,
                                       int min_nodes = 0);

// Circular distance between two angles, in [0, pi].
double circular_distance(double t0, double t1);

}  // namespace rotbox

#endif
