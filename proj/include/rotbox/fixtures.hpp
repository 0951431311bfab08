#ifndef ROTBOX_FIXTURES_HPP
#define ROTBOX_FIXTURES_HPP

#include <optional>
#include <string>

#include "rotbox/rset.hpp"
#include "rotbox/trigpoly.hpp"

namespace rotbox::fixtures {

struct Check {
  std::string name;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct FixtureReport {
  std::string fixture;
  std::vector<Check> checks;
  bool pass = false;
};

// A bundled reference object: a box, a certified box (with its Gram pair), a
// quantum witness pair, or one polynomial of the spin-1 extremal gallery.
struct Fixture {
  std::string name;
  std::string description;
  int two_j = 0;
  double data_precision = 0.0;  // printing precision of the stored numbers

  std::optional<TrigPoly> box;
  std::optional<rset::Certificate> certificate;
  std::optional<Eigen::MatrixXcd> effect;  // witness pair
  std::optional<Eigen::MatrixXcd> rho;

  FixtureReport verify() const;
};

// Every bundled fixture: the spin-3/2 counterexample box, the four reference
// certificate pairs, the closed-form family for 2J in {7, 8, 9, 10} (raw and
// rescaled-to-validity), the quantum witness pair, and the spin-1 extremal
// gallery.
const std::vector<Fixture>& all();

const Fixture& get(const std::string& name);

// Closed-form family member: a_0 = 1/2, a_{2J} = -i beta/8 and alternating
// (-1/4)^m bands scaled by beta.
TrigPoly closed_form_family(int two_j, double beta = 1.0);

// The scale that provably keeps the family inside [0, 1].
double family_validity_scale(int two_j);

}  // namespace rotbox::fixtures

#endif
