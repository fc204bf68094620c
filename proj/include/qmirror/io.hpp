#pragma once

// Datum files and JSON serialization of series, contributions and reports.

#include <json.hpp>
#include <string>

#include "qmirror/ifunction.hpp"
#include "qmirror/mirror.hpp"
#include "qmirror/toric.hpp"

namespace qmirror {

using Json = nlohmann::ordered_json;

/// Parses {"name"?, "iota": [[...], ...], "beta"?}; errors carry line/column or field path.
ToricDatum parse_datum(const std::string& text, const std::string& source = "<input>");
ToricDatum read_datum_file(const std::string& path);

Json datum_to_json(const ToricDatum& x);
Json integer_to_json(const Integer& v);
Json polynomial_to_json(const QPolynomial& p);
Json monomial_exponents_to_json(const std::vector<int>& e);
/// One record {zExp, aExp, num, den} per term, in monomial order.
Json series_to_json(const TruncatedSeries& s);
Json spec_to_json(const TruncationSpec& spec);
/// Symmetric matrix, row-major rows of rational strings.
Json prefactor_to_json(const LogPrefactor& p);
Json contribution_to_json(const FixedPointContribution& c);
Json report_to_json(const MirrorReport& r);

}  // namespace qmirror
