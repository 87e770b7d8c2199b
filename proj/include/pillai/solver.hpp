#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pillai/lucas.hpp"

namespace pillai {

/// One equation V_n(A,B) - b^m = c with an enumeration window. m has no cap:
/// for fixed n there is at most one m, recovered by exact division.
struct PillaiInstance {
  LucasParams params;
  long b = 2;
  mpz_class c = 0;
  unsigned long n_min = 1;
  unsigned long n_max = 10000;
  int m_min = 1;  // 0 admits b^0 = 1 (the paper's N includes 0 in places)

  void check() const;
};

struct Solution {
  unsigned long n = 0;
  unsigned long m = 0;
  bool operator==(const Solution&) const = default;
};

/// Exponent m with b^m == t, if any (t >= 1, b >= 2). b^0 = 1 maps t=1 to 0.
std::optional<unsigned long> is_power_of(const mpz_class& t, long b);

/// All solutions with n in [n_min, n_max] and m >= m_min, sorted by n.
/// Complete within the window; every returned pair has exact zero residual.
std::vector<Solution> solve(const PillaiInstance& instance);

/// [ceil(N0), cap] for a regime that holds (RegimeViolated otherwise).
std::pair<unsigned long, unsigned long> auto_range(const LucasParams& params,
                                                   const Regime& regime,
                                                   unsigned long cap = 10000);

}  // namespace pillai
