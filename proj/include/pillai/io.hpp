#pragma once

#include <json.hpp>

#include <string>

#include "pillai/bounds.hpp"
#include "pillai/hunter.hpp"

namespace pillai {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr size_t kOutputDigits = 25;

/// Canonical scientific rendering "d.ddde[+-]k" with no trailing zeros.
/// The mpfr variants round the decimal in the stated direction, so printed
/// lo <= true lo and printed hi >= true hi: serialized intervals remain
/// valid enclosures.
std::string decimal_of(mpfr_srcptr x, size_t digits, mpfr_rnd_t rnd);
std::string decimal_lo(const Interval& iv, size_t digits = kOutputDigits);
std::string decimal_hi(const Interval& iv, size_t digits = kOutputDigits);

/// Exact canonical rendering of a decimal rational (denominator 2^a 5^b).
std::string decimal_of_mpq(const mpq_class& q);

nlohmann::json interval_json(const Interval& iv, size_t digits = kOutputDigits);
nlohmann::json solution_json(const Solution& s);
nlohmann::json finding_json(const Finding& f);
nlohmann::json verified_finding_json(const VerifiedFinding& vf, size_t digits = kOutputDigits);
nlohmann::json theorem_check_json(const TheoremCheck& tc, size_t digits = kOutputDigits);
nlohmann::json bound_report_json(const BoundReport& rep, size_t digits = kOutputDigits);
nlohmann::json carmichael_json(const CarmichaelReport& rep);

}  // namespace pillai
