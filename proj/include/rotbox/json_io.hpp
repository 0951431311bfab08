#ifndef ROTBOX_JSON_IO_HPP
#define ROTBOX_JSON_IO_HPP

#include <json.hpp>

#include "rotbox/bell.hpp"
#include "rotbox/qset.hpp"
#include "rotbox/rset.hpp"

namespace rotbox::io {

using json = nlohmann::json;

// {"two_j": int, "c": [...], "s": [...]} with |c| = two_j + 1, |s| = two_j
json poly_to_json(const TrigPoly& p);
TrigPoly poly_from_json(const json& j);

// complex entries as [re, im] pairs, row-major
json matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_json(const json& j);

json vector_to_json(const Eigen::VectorXcd& v);

json certificate_to_json(const rset::Certificate& c);
rset::Certificate certificate_from_json(const json& j);

json problem_to_json(const sdp::SDPProblem& p);
sdp::SDPProblem problem_from_json(const json& j);
json solution_to_json(const sdp::SDPSolution& s);

json realization_to_json(const qset::QuantumRealization& r);

json direction_to_json(const rset::Direction& d);
rset::Direction direction_from_json(const json& j);

bell::CorrelationTensor tensor_from_json(const json& j);

// CSV rows "phi,value,c0,c1,s1,..." with a header line
std::string sweep_to_csv(const std::vector<rset::SweepRow>& rows, int two_j);

}  // namespace rotbox::io

#endif
