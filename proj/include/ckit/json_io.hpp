#pragma once

// JSON forms of matrices, coordinates, certificates, relators and quotient reports.
// Integers that can exceed 64 bits are written as decimal strings.

#include <json.hpp>

#include "ckit/congruence.hpp"
#include "ckit/presentation.hpp"
#include "ckit/quotients.hpp"
#include "ckit/wordsolve2.hpp"

namespace ckit {

using json = nlohmann::json;

/// {"n": int, "entries": [[string, ...], ...]}
json matrix_to_json(const BigIntMatrix& a);
/// Accepts decimal strings (sign prefix allowed) or JSON integers. Throws ParseError.
BigIntMatrix matrix_from_json(const json& j);

/// {"n", "d", "offdiag": {"i,j": r}, "diag": {"k": r}}, plus "warning" for n = 2.
json abel_to_json(const AbelCoords& a);

/// {"d", "input", "word", "trace", "factors": [{"label", "power"}]}
json certificate_to_json(int d, const BigIntMatrix& input, const Decomposition& dec);

/// Re-parses the word text and compares its evaluation with "input". When a
/// factor list is present each label must be a solver generator for "d".
bool check_certificate(const json& cert);

/// {"family", "form", "indices", "word"}; "word" is the flattened e/F text.
json relator_to_json(const Relator& r);

json relator_report_to_json(const RelatorReport& rep);

/// Order, generator labels and census; elements listed when dump_cap > 0.
json group_to_json(const GroupTable& t, std::size_t dump_cap = 0);

json quotient_report_to_json(const QuotientReport& rep);

}  // namespace ckit
