#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "polyneq/circle.hpp"
#include "polyneq/ensemble.hpp"

namespace polyneq {

using Json = nlohmann::ordered_json;

/// Malformed interchange document.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json to_json(Complex z);
Json to_json(const Polynomial& p);    ///< {"coeffs": [[re, im], ...]}, index 0 = a_0
Json to_json(const RootForm& r);      ///< {"leading": [re, im], "roots": [[re, im], ...]}
Json to_json(const GammaWeights& g);  ///< {"gamma": [...]}
Json to_json(const PolarPoint& a);    ///< {"alpha": [re, im]}
Json to_json(const MaxModEstimate& e);
Json to_json(const Witness& w);
Json to_json(const CheckReport& r);
Json to_json(const EnsembleConfig& c);
Json to_json(const ScanReport& r);

Complex complex_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j);
RootForm root_form_from_json(const Json& j);
GammaWeights gamma_from_json(const Json& j);
PolarPoint polar_point_from_json(const Json& j);

/// Either interchange schema, told apart by its keys.
std::variant<Polynomial, RootForm> polynomial_input_from_json(const Json& j);

/// id, eq_label, k_range, alpha_constraint, formula; one row per id.
std::string catalog_csv();

std::string scan_csv_header();
/// id, n, k, trials, violations, min_slack, min_rel_slack
std::string scan_csv_row(const ScanReport& r);

} // namespace polyneq
