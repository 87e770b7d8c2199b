#include "pillai/solver.hpp"

namespace pillai {

void PillaiInstance::check() const {
  if (b < 2) fail(Errc::InvalidInput, "instance needs b >= 2");
  if (n_min > n_max) fail(Errc::InvalidInput, "instance has empty n range");
  if (m_min != 0 && m_min != 1) fail(Errc::InvalidInput, "m_min must be 0 or 1");
}

std::optional<unsigned long> is_power_of(const mpz_class& t, long b) {
  if (b < 2) fail(Errc::InvalidInput, "is_power_of needs b >= 2");
  if (t < 1) fail(Errc::InvalidInput, "is_power_of needs t >= 1");
  unsigned long ub = static_cast<unsigned long>(b);
  mpz_class rest = t;
  unsigned long m = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), ub)) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), ub);
    ++m;
  }
  if (rest == 1) return m;
  return std::nullopt;
}

std::vector<Solution> solve(const PillaiInstance& instance) {
  instance.check();
  std::vector<Solution> out;
  const long A = instance.params.A(), B = instance.params.B();

  mpz_class prev = 2, cur = A;  // V_0, V_1
  auto probe = [&](unsigned long n, const mpz_class& vn) {
    mpz_class t = vn - instance.c;
    if (t < 1) return;  // b^m >= 1
    if (auto m = is_power_of(t, instance.b);
        m && *m >= static_cast<unsigned long>(instance.m_min))
      out.push_back({n, *m});
  };

  if (instance.n_min == 0) probe(0, prev);
  if (instance.n_max >= 1 && instance.n_min <= 1) probe(1, cur);
  for (unsigned long n = 2; n <= instance.n_max; ++n) {
    mpz_class next = A * cur - B * prev;
    prev = std::move(cur);
    cur = std::move(next);
    if (n >= instance.n_min) probe(n, cur);
  }
  return out;
}

std::pair<unsigned long, unsigned long> auto_range(const LucasParams& params,
                                                   const Regime& regime, unsigned long cap) {
  RegimeReport rep = check_regime(params, regime);
  if (!rep.holds())
    fail(Errc::RegimeViolated,
         std::string("auto_range: regime ") + regime.name() + " does not hold");
  return {regime.n0_ceil(), cap};
}

}  // namespace pillai
