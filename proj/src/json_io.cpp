#include "mclat/json_io.hpp"

#include <stdexcept>

namespace mclat {

using nlohmann::json;

json poly_to_json(const ExactPoly& p) {
  json terms = json::array();
  const auto& m = p.terms();
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    json exps = json::array();
    for (const Int& e : it->first) exps.push_back(e.get_str());
    terms.push_back({{"coeff", it->second.get_str()}, {"exps", exps}});
  }
  return terms;
}

ExactPoly poly_from_json(const json& j, int arity_hint) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON: expected a list");
  if (j.empty()) return ExactPoly::zero(arity_hint);
  int arity = int(j.front().at("exps").size());
  ExactPoly p(arity);
  for (const auto& t : j) {
    Int coeff(t.at("coeff").get<std::string>());
    ExactPoly::Exps exps;
    for (const auto& e : t.at("exps")) exps.emplace_back(e.get<std::string>());
    p.add_term(exps, coeff);
  }
  return p;
}

json qseries_to_json(const QSeries& s) {
  json coeffs = json::object();
  for (const auto& [k, v] : s.coeffs()) coeffs[std::to_string(k)] = v.get_str();
  return {{"precision_quarters", s.precision()}, {"coeffs", coeffs}};
}

QSeries qseries_from_json(const json& j) {
  QSeries s(j.at("precision_quarters").get<long>());
  for (const auto& [k, v] : j.at("coeffs").items())
    s.add_at(std::stol(k), Int(v.get<std::string>()));
  return s;
}

json weight_matrix_to_json(const WeightMatrix& w) {
  json rows = json::array();
  for (int i = 1; i <= w.states(); ++i) {
    json row = json::array();
    for (int jj = 1; jj <= i; ++jj) row.push_back(w.prime(i, jj).get_str());
    rows.push_back(row);
  }
  return {{"n", w.states()}, {"primes", rows}};
}

WeightMatrix weight_matrix_from_json(const json& j) {
  int n = j.at("n").get<int>();
  std::vector<Int> tri;
  for (const auto& row : j.at("primes"))
    for (const auto& p : row) tri.emplace_back(p.get<std::string>());
  return WeightMatrix(n, std::move(tri));
}

namespace {

json opt_bool(const std::optional<bool>& b) {
  if (b) return *b;
  return nullptr;
}

}  // namespace

json report_to_json(const PipelineReport& r) {
  return {{"edge_count", r.edge_count},
          {"tutte_equal", opt_bool(r.tutte_equal)},
          {"graphs_nonisomorphic", opt_bool(r.graphs_nonisomorphic)},
          {"wenum_equal", opt_bool(r.wenum_equal)},
          {"replicated_doubly_even",
           json::array({opt_bool(r.replicated_doubly_even_1), opt_bool(r.replicated_doubly_even_2)})},
          {"theta_equal_to_precision",
           {{"equal", opt_bool(r.theta_equal)}, {"precision_quarters", r.theta_precision_quarters}}},
          {"lattice_rank", r.lattice_rank},
          {"lattice_isomorphism", r.lattice_isomorphism},
          {"skipped", r.skipped}};
}

}  // namespace mclat
