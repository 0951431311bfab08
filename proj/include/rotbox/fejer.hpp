#ifndef ROTBOX_FEJER_HPP
#define ROTBOX_FEJER_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "rotbox/trigpoly.hpp"

namespace rotbox::fejer {

struct NotNonnegative : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RootPairingFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Spectral factor of a nonnegative trigonometric polynomial:
//   p(theta) = |sum_j b[j] e^{ij theta}|^2,
// equivalently a_k = sum_j conj(b_j) b_{j+k}.  Phase convention: the first
// nonzero b_j is real and nonnegative.
struct FactorVector {
  std::vector<cplx> b;  // length d+1
};

FactorVector factorize(const TrigPoly& p);

// Polynomial with coefficients a_k = sum_j conj(b_j) b_{j+k}; inverse of
// factorize up to global phase.
TrigPoly reconstruct(const FactorVector& f);

// Rank-one Gram certificate Q = b b^dagger with band sums a_k.
Eigen::MatrixXcd gram_certificate(const TrigPoly& p);

// Relaxed quantum model of p in R_J: uniform-superposition state psi on
// C^{2J+1} and E = (2J+1)|b><b| reproducing p along the rotation orbit.  E is
// positive semidefinite but its top eigenvalue (2J+1) a_0 may exceed one.
struct RelaxedModel {
  Eigen::VectorXcd psi;
  Eigen::MatrixXcd effect;
  double max_eigenvalue = 0.0;
  bool povm_valid = false;  // true iff max_eigenvalue <= 1 + 1e-10
};

RelaxedModel relaxed_quantum_model(const TrigPoly& p);

}  // namespace rotbox::fejer

#endif
