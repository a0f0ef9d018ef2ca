#pragma once

#include <json.hpp>

#include "mclat/pipeline.hpp"
#include "mclat/poly.hpp"
#include "mclat/primes.hpp"

namespace mclat {

// Polynomial <-> JSON list of {"coeff": "...", "exps": ["...", ...]}
// sorted by exponent vector descending; all numbers as decimal strings.
nlohmann::json poly_to_json(const ExactPoly& p);
// arity_hint resolves the arity of an empty list (zero polynomial).
ExactPoly poly_from_json(const nlohmann::json& j, int arity_hint = 1);

// {"precision_quarters": N, "coeffs": {"k": "coeff"}}
nlohmann::json qseries_to_json(const QSeries& s);
QSeries qseries_from_json(const nlohmann::json& j);

// {"n": states, "primes": [["p11"], ["p21","p22"], ...]} (lower triangle)
nlohmann::json weight_matrix_to_json(const WeightMatrix& w);
WeightMatrix weight_matrix_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const PipelineReport& r);

}  // namespace mclat
