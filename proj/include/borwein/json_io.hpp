#pragma once

#include <json.hpp>

#include <vector>

#include "borwein/analysis.hpp"
#include "borwein/laurent_poly.hpp"
#include "borwein/qseries.hpp"
#include "borwein/verify.hpp"

namespace borwein {

using Json = nlohmann::json;

// {"vars": ["p","q"], "terms": [[[e_p, e_q], "coeff"], ...]}, terms in
// descending monomial order, coefficients as decimal strings.
Json to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const Json& j);

// {"provenance": {"family": ..., "params": {...}}, "factors": [[alpha, beta], ...]}
Json to_json(const ProductSpec& spec);
ProductSpec spec_from_json(const Json& j);

// {"kmax": k, "slices": [poly, ...]}
Json to_json(const PGradedSeries& s);
PGradedSeries series_from_json(const Json& j);

// [{"k": .., "M": .., "coeff": "..", "expected": "nonneg|nonpos"}, ...]
Json to_json(const std::vector<Violation>& v);
std::vector<Violation> violations_from_json(const Json& j);

// {"identity", "mode", "params", "status": "pass|fail", "witness"}
Json to_json(const VerificationReport& r);

Json to_json(const CounterexampleReport& r);

}  // namespace borwein
