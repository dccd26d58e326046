#pragma once

#include "groth/bivar_poly.hpp"
#include "groth/identities.hpp"
#include "groth/partition.hpp"
#include "groth/permutation.hpp"
#include "groth/series.hpp"
#include "groth/symmetric.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace groth {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// "3,2,1", "[3,2,1]", "3 2 1"; "", "[]" and "0" give the empty partition.
Partition parse_partition(const std::string& s);
/// One-line notation "3,1,2" (brackets optional).
Permutation parse_permutation(const std::string& s);
/// "5", "-3/2".
Rational parse_rational(const std::string& s);

/// Expressions over integers, a (alpha), b (beta), s[...], + - * ^ and
/// parentheses. Products of two non-scalar terms use the Littlewood-Richardson
/// rule. A trailing "+ O(D)" marks a truncated series. Accepts every string
/// produced by SchurExpansion::to_string.
SchurExpansion parse_schur(const std::string& s);
/// Same grammar restricted to scalars.
BivarPoly parse_poly(const std::string& s);

// JSON: a polynomial is a list of [i, j, "c"] (coefficient of a^i b^j as a
// decimal string). A Schur expansion is {"coeffs": [{"partition": [...],
// "poly": ...}], "cutoff": D|null, "max_rows": r|null, "max_cols": c|null}.
// A series is {"nvars": n, "cutoff": D, "terms": [{"exponent": [...], "poly": ...}]}.
nlohmann::json to_json(const BivarPoly& p);
nlohmann::json to_json(const SchurExpansion& f);
nlohmann::json to_json(const TruncatedSeries& f);
nlohmann::json to_json(const IdentityReport& r);
BivarPoly poly_from_json(const nlohmann::json& j);
SchurExpansion schur_from_json(const nlohmann::json& j);
TruncatedSeries series_from_json(const nlohmann::json& j);

}  // namespace groth
