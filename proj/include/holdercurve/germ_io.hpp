#pragma once

#include <filesystem>
#include <string_view>

#include <json.hpp>

#include "holdercurve/puiseux.hpp"

namespace holdercurve {

/// Largest cyclotomic field a germ file may request.
inline constexpr int kMaxFieldOrder = 5040;

/// Parses one germ from its JSON text.
///
/// Coefficients are lifted into Q(zeta_N) with N = lcm(declared zeta_order,
/// all branch multiplicities); a missing zeta_order defaults to the lcm of the
/// multiplicities. Throws ParseError on malformed JSON or schema violations
/// and ValidationError on domain violations (zero coefficient, unordered
/// exponents, duplicate branch).
CurveGerm parse_germ(std::string_view text);

/// Reads and parses a germ file. Unreadable files raise ParseError.
CurveGerm load_germ(const std::filesystem::path& path);

/// Serializes a germ in the input schema; parse_germ(germ_to_json(g)) == g.
nlohmann::json germ_to_json(const CurveGerm& germ);
nlohmann::json branch_to_json(const PuiseuxBranch& branch);
nlohmann::json coeff_to_json(const CyclotomicNumber& coeff);

}  // namespace holdercurve
