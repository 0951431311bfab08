#include "rotbox/json_io.hpp"

#include <sstream>

namespace rotbox::io {

json poly_to_json(const TrigPoly& p) {
  return json{{"two_j", p.degree()}, {"c", p.c}, {"s", p.s}};
}

TrigPoly poly_from_json(const json& j) {
  const int two_j = j.at("two_j").get<int>();
  auto c = j.at("c").get<std::vector<double>>();
  auto s = j.at("s").get<std::vector<double>>();
  if (static_cast<int>(c.size()) != two_j + 1 ||
      static_cast<int>(s.size()) != two_j)
    throw std::invalid_argument("poly_from_json: |c| = two_j+1, |s| = two_j");
  return TrigPoly(std::move(c), std::move(s));
}

json matrix_to_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k)
      row.push_back({m(i, k).real(), m(i, k).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXcd matrix_from_json(const json& j) {
  const auto rows = j.size();
  if (rows == 0) return {};
  const auto cols = j.at(0).size();
  Eigen::MatrixXcd m(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < cols; ++k) {
      const auto& e = j.at(i).at(k);
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          cplx(e.at(0).get<double>(), e.at(1).get<double>());
    }
  return m;
}

json vector_to_json(const Eigen::VectorXcd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out.push_back({v(i).real(), v(i).imag()});
  return out;
}

json certificate_to_json(const rset::Certificate& c) {
  return json{{"Q", matrix_to_json(c.Q)}, {"S", matrix_to_json(c.S)}};
}

rset::Certificate certificate_from_json(const json& j) {
  return {matrix_from_json(j.at("Q")), matrix_from_json(j.at("S"))};
}

namespace {

json terms_to_json(const std::vector<sdp::BlockTerm>& terms) {
  json out = json::array();
  for (const auto& t : terms)
    out.push_back({{"block", t.block}, {"coeff", matrix_to_json(t.coeff)}});
  return out;
}

std::vector<sdp::BlockTerm> terms_from_json(const json& j) {
  std::vector<sdp::BlockTerm> terms;
  for (const auto& t : j)
    terms.push_back({t.at("block").get<int>(), matrix_from_json(t.at("coeff"))});
  return terms;
}

}  // namespace

json problem_to_json(const sdp::SDPProblem& p) {
  json cons = json::array();
  for (const auto& c : p.constraints)
    cons.push_back({{"terms", terms_to_json(c.terms)}, {"rhs", c.rhs}});
  return json{{"block_dims", p.block_dims},
              {"sense", p.sense == sdp::Sense::Maximize ? "maximize" : "feasibility"},
              {"objective", terms_to_json(p.objective)},
              {"constraints", std::move(cons)}};
}

sdp::SDPProblem problem_from_json(const json& j) {
  sdp::SDPProblem p;
  p.block_dims = j.at("block_dims").get<std::vector<int>>();
  p.sense = j.at("sense").get<std::string>() == "maximize"
                ? sdp::Sense::Maximize
                : sdp::Sense::Feasibility;
  p.objective = terms_from_json(j.at("objective"));
  for (const auto& c : j.at("constraints"))
    p.constraints.push_back(
        {terms_from_json(c.at("terms")), c.at("rhs").get<double>()});
  return p;
}

json solution_to_json(const sdp::SDPSolution& s) {
  json blocks = json::array();
  for (const auto& x : s.X) blocks.push_back(matrix_to_json(x));
  return json{{"status", sdp::to_string(s.status)},
              {"objective", s.objective},
              {"dual_bound", s.dual_bound},
              {"duality_gap", s.duality_gap},
              {"y", s.y},
              {"feasibility_slack", s.feasibility_slack},
              {"iterations", s.iterations},
              {"X", std::move(blocks)}};
}

json realization_to_json(const qset::QuantumRealization& r) {
  json povm = json::array();
  for (const auto& e : r.povm) povm.push_back(matrix_to_json(e));
  return json{{"psi", vector_to_json(r.psi)}, {"povm", std::move(povm)}};
}

json direction_to_json(const rset::Direction& d) { return json{{"w", d.w}}; }

rset::Direction direction_from_json(const json& j) {
  rset::Direction d;
  if (j.is_array())
    d.w = j.get<std::vector<double>>();
  else
    d.w = j.at("w").get<std::vector<double>>();
  if (d.w.size() % 2 == 0)
    throw std::invalid_argument("direction needs odd length 4J+1");
  return d;
}

bell::CorrelationTensor tensor_from_json(const json& j) {
  bell::CorrelationTensor t;
  t.parties = j.at("parties").get<int>();
  t.t = j.at("t").get<std::vector<double>>();
  size_t expect = 1;
  for (int i = 0; i < t.parties; ++i) expect *= 3;
  if (t.t.size() != expect)
    throw std::invalid_argument("tensor needs 3^N entries");
  return t;
}

std::string sweep_to_csv(const std::vector<rset::SweepRow>& rows, int two_j) {
  std::ostringstream out;
  out.precision(12);
  out << "phi,value";
  out << ",c0";
  for (int k = 1; k <= two_j; ++k) out << ",c" << k << ",s" << k;
  out << "\n";
  for (const auto& row : rows) {
    out << row.phi << "," << row.value;
    out << "," << row.optimizer.c_coeff(0);
    for (int k = 1; k <= two_j; ++k)
      out << "," << row.optimizer.c_coeff(k) << "," << row.optimizer.s_coeff(k);
    out << "\n";
  }
  return out.str();
}

}  // namespace rotbox::io
