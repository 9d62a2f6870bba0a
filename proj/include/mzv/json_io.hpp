#pragma once

#include <json.hpp>

#include "mzv/combination.hpp"
#include "mzv/pslq.hpp"
#include "mzv/regularization.hpp"
#include "mzv/smzv.hpp"
#include "mzv/suites.hpp"

namespace mzv {

using Json = nlohmann::ordered_json;

/// {"terms":[{"index":[1,3],"num":"-1","den":"2"}, ...]} in canonical order.
Json to_json(const IndexCombination& x);
IndexCombination combination_from_json(const Json& j);

/// {"T^0": <combination>, "T^1": ...}; the zero polynomial is {}.
Json to_json(const RegPolynomial& p);
RegPolynomial reg_polynomial_from_json(const Json& j);

/// {"order":m,"coeffs":[<combination>, ...]}.
Json to_json(const SymbolicSeries& s);
SymbolicSeries symbolic_series_from_json(const Json& j);

/// {"order":m,"digits":P,"coeffs":["...", ...]} with P significant digits.
Json to_json(const NumericSeries& s, int digits);
/// Parses decimal coefficients at enough precision for their printed digits;
/// the error bound of each is one unit in the last printed place.
NumericSeries numeric_series_from_json(const Json& j);

Json to_json(const PslqResult& r, int digits);

Json to_json(const RelationCertificate& c);
RelationCertificate certificate_from_json(const Json& j);

/// JSON array of {case, status, residual, certificate, detail}.
Json to_json(const SuiteReport& r);
SuiteReport report_from_json(const Json& j, const std::string& suite = "");

}  // namespace mzv
