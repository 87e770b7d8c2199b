#include "pillai/io.hpp"

#include <algorithm>

namespace pillai {

namespace {

// sign + digit string D (no trailing zeros) + sci exponent -> "d.ddde[+-]k"
std::string format_sci(bool negative, std::string digits, long sci_exp) {
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  std::string out;
  if (negative) out.push_back('-');
  out.push_back(digits[0]);
  if (digits.size() > 1) {
    out.push_back('.');
    out.append(digits, 1, std::string::npos);
  }
  out.push_back('e');
  out += std::to_string(sci_exp);
  return out;
}

}  // namespace

std::string decimal_of(mpfr_srcptr x, size_t digits, mpfr_rnd_t rnd) {
  if (mpfr_nan_p(x)) return "nan";
  if (mpfr_inf_p(x)) return mpfr_sgn(x) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(x)) return "0";
  mpfr_exp_t e;
  char* raw = mpfr_get_str(nullptr, &e, 10, digits, x, rnd);
  std::string s(raw);
  mpfr_free_str(raw);
  bool negative = !s.empty() && s[0] == '-';
  if (negative) s.erase(s.begin());
  // value = 0.s * 10^e, so the scientific exponent is e - 1
  return format_sci(negative, std::move(s), static_cast<long>(e) - 1);
}

std::string decimal_lo(const Interval& iv, size_t digits) {
  return decimal_of(iv.lo(), digits, MPFR_RNDD);
}

std::string decimal_hi(const Interval& iv, size_t digits) {
  return decimal_of(iv.hi(), digits, MPFR_RNDU);
}

std::string decimal_of_mpq(const mpq_class& q) {
  if (q == 0) return "0";
  mpz_class num = q.get_num(), den = q.get_den();
  bool negative = num < 0;
  if (negative) num = -num;

  // den must be 2^a 5^b; scale to an integer times 10^-k
  unsigned long a = 0, b = 0;
  mpz_class d = den;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) {
    mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 2);
    ++a;
  }
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
    mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 5);
    ++b;
  }
  if (d != 1) fail(Errc::InvalidInput, "rational is not a finite decimal");
  unsigned long k = std::max(a, b);
  mpz_class ten_k, scaled;
  mpz_ui_pow_ui(ten_k.get_mpz_t(), 10, k);
  scaled = num * ten_k / den;

  std::string digits = scaled.get_str();
  long sci_exp = static_cast<long>(digits.size()) - 1 - static_cast<long>(k);
  return format_sci(negative, std::move(digits), sci_exp);
}

nlohmann::json interval_json(const Interval& iv, size_t digits) {
  return {{"lo", decimal_lo(iv, digits)}, {"hi", decimal_hi(iv, digits)}};
}

nlohmann::json solution_json(const Solution& s) {
  return {{"n", s.n}, {"m", s.m}};
}

nlohmann::json finding_json(const Finding& f) {
  nlohmann::json sols = nlohmann::json::array();
  for (const Solution& s : f.solutions) sols.push_back(solution_json(s));
  return {{"A", f.A},
          {"B", f.B},
          {"c", f.c.get_str()},
          {"solutions", sols},
          {"equal_value_pair", f.equal_value_pair}};
}

nlohmann::json theorem_check_json(const TheoremCheck& tc, size_t digits) {
  nlohmann::json j;
  j["verdict"] = verdict_name(tc.verdict);
  j["failed_hypotheses"] = tc.failed_hypotheses;
  j["via_a_branch"] = tc.via_a_branch;
  j["bound"] = interval_json(tc.bound, digits);
  return j;
}

nlohmann::json bound_report_json(const BoundReport& rep, size_t digits) {
  nlohmann::json cases;
  for (const auto& [name, iv] : rep.case_thresholds) cases[name] = interval_json(iv, digits);
  return {{"K0", interval_json(rep.K0, digits)},
          {"C1", interval_json(rep.C1, digits)},
          {"C2", interval_json(rep.C2, digits)},
          {"C3", interval_json(rep.C3, digits)},
          {"case_thresholds", cases},
          {"verdict", verdict_name(rep.verdict)}};
}

nlohmann::json verified_finding_json(const VerifiedFinding& vf, size_t digits) {
  nlohmann::json j = finding_json(vf.finding);
  if (vf.window) {
    j["window_cert"] = cert_name(*vf.window);
    j["window_hypotheses_met"] = vf.window_hypotheses_met;
  }
  if (vf.theorem1) j["theorem1"] = theorem_check_json(*vf.theorem1, digits);
  if (vf.theorem2) j["theorem2"] = theorem_check_json(*vf.theorem2, digits);
  if (vf.report) j["bound_report"] = bound_report_json(*vf.report, digits);
  return j;
}

nlohmann::json carmichael_json(const CarmichaelReport& rep) {
  nlohmann::json entries = nlohmann::json::array();
  for (const CarmichaelEntry& e : rep.entries) {
    const char* status = e.status == CarmichaelEntry::Status::Yes
                             ? "yes"
                             : (e.status == CarmichaelEntry::Status::No ? "no" : "unknown");
    entries.push_back({{"n", e.n},
                       {"primitive_divisor", status},
                       {"witness", e.witness.get_str()},
                       {"primitive_part", e.primitive_part.get_str()}});
  }
  return {{"entries", entries}, {"exception_hit", rep.exception_hit}};
}

}  // namespace pillai
