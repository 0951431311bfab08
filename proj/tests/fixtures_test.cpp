#include <doctest.h>

#include <cmath>

#include "rotbox/fixtures.hpp"
#include "rotbox/json_io.hpp"
#include "rotbox/rset.hpp"

using namespace rotbox;
namespace FX = rotbox::fixtures;

TEST_CASE("every bundled fixture self-verifies at its stated precision") {
  for (const auto& f : FX::all()) {
    const auto rep = f.verify();
    INFO(rep.fixture);
    for (const auto& c : rep.checks) {
      INFO(c.name << " measured=" << c.measured << " expected=" << c.expected);
      CHECK(c.pass);
    }
    CHECK(rep.pass);
  }
}

TEST_CASE("q32: exact rational certificate at 1e-12") {
  const auto& f = FX::get("q32");
  auto rep = rset::verify_certificate(*f.box, *f.certificate, 1e-12);
  CHECK(rep.pass);
  // the certified box maxes the spin-3/2 functional at 16/25
  CHECK(f.box->c_coeff(2) + f.box->s_coeff(3) ==
        doctest::Approx(0.64).epsilon(1e-15));
  CHECK(range_valid(*f.box));
}

TEST_CASE("q2: rationalized decimals verify at ~1e-6, not at 1e-12") {
  const auto& f = FX::get("q2");
  CHECK(rset::verify_certificate(*f.box, *f.certificate, 2e-6).pass);
  CHECK_FALSE(rset::verify_certificate(*f.box, *f.certificate, 1e-12).pass);
  CHECK(f.box->c_coeff(3) + f.box->s_coeff(4) ==
        doctest::Approx(0.62).epsilon(1e-15));
}

TEST_CASE("four-decimal certificates verify at 5e-4") {
  for (const char* name : {"q52", "q3"}) {
    const auto& f = FX::get(name);
    auto rep = rset::verify_certificate(*f.box, *f.certificate, 5e-4);
    CHECK(rep.pass);
    const double functional =
        f.box->c_coeff(f.two_j - 1) + f.box->s_coeff(f.two_j);
    CHECK(functional > 1.0 / std::sqrt(3.0));
  }
}

TEST_CASE("closed-form family: 5/8 functional, invalid raw, valid rescaled") {
  for (int two_j : {7, 8, 9, 10}) {
    const TrigPoly raw = FX::closed_form_family(two_j);
    CHECK(raw.c_coeff(two_j - 1) + raw.s_coeff(two_j) ==
          doctest::Approx(0.625).epsilon(1e-15));
    CHECK_FALSE(range_valid(raw));  // overshoots [0,1] slightly at finite J

    const double beta = FX::family_validity_scale(two_j);
    const TrigPoly scaled = FX::closed_form_family(two_j, beta);
    CHECK(range_valid(scaled));
    CHECK(scaled.c_coeff(two_j - 1) + scaled.s_coeff(two_j) >
          1.0 / std::sqrt(3.0));
  }
}

TEST_CASE("corrupted fixture data fails its self-check") {
  FX::Fixture broken = FX::get("q32");
  rset::Certificate cert = *broken.certificate;
  cert.Q(0, 1) = -cert.Q(0, 1);
  cert.Q(1, 0) = -cert.Q(1, 0);
  broken.certificate = cert;
  CHECK_FALSE(broken.verify().pass);
}

TEST_CASE("sdp problems and solutions serialize to json") {
  const auto& f = FX::get("pstar");
  const auto prob = rset::membership_problem(*f.box, 3);
  const auto back = io::problem_from_json(io::problem_to_json(prob));
  REQUIRE(back.constraints.size() == prob.constraints.size());
  const auto sol = sdp::solve(back, 1e-9);
  CHECK(sol.status == sdp::SolveStatus::Optimal);
  const io::json js = io::solution_to_json(sol);
  CHECK(js.at("status") == "optimal");
  CHECK(js.at("X").size() == 2);
}

TEST_CASE("json round trips") {
  const auto& f = FX::get("pstar");
  const io::json j = io::poly_to_json(*f.box);
  const TrigPoly back = io::poly_from_json(j);
  CHECK(back.degree() == f.box->degree());
  for (int k = 0; k <= 3; ++k) {
    CHECK(back.c_coeff(k) == f.box->c_coeff(k));
    CHECK(back.s_coeff(k) == f.box->s_coeff(k));
  }

  const auto& c = FX::get("q32");
  const io::json jc = io::certificate_to_json(*c.certificate);
  const rset::Certificate cc = io::certificate_from_json(jc);
  CHECK((cc.Q - c.certificate->Q).cwiseAbs().maxCoeff() == 0.0);
  CHECK((cc.S - c.certificate->S).cwiseAbs().maxCoeff() == 0.0);
}
