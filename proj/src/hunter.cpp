#include "pillai/hunter.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <thread>

namespace pillai {

BRule BRule::kappa_a(const mpq_class& k) {
  if (k < 1) fail(Errc::InvalidInput, "B rule needs kappa >= 1");
  BRule r;
  r.kind = Kind::KappaA;
  r.kappa = k;
  return r;
}

BRule BRule::a_pow(const mpq_class& eps) {
  if (eps <= 0 || eps >= 1) fail(Errc::InvalidInput, "B rule needs 0 < eps < 1");
  BRule r;
  r.kind = Kind::APow;
  r.epsilon = eps;
  return r;
}

BRule BRule::range(long lo, long hi) {
  if (lo > hi) fail(Errc::InvalidInput, "B rule has empty range");
  BRule r;
  r.kind = Kind::Range;
  r.lo = lo;
  r.hi = hi;
  return r;
}

std::pair<long, long> BRule::b_span(long A) const {
  switch (kind) {
    case Kind::Range:
      return {lo, hi};
    case Kind::KappaA: {
      // |B| <= floor((sA - 1)/t) for kappa = s/t
      mpz_class top = kappa.get_num() * A - 1;
      mpz_class bmax;
      mpz_fdiv_q(bmax.get_mpz_t(), top.get_mpz_t(), kappa.get_den().get_mpz_t());
      if (bmax < 0) bmax = -1;  // empty
      long m = bmax.get_si();
      return {-m, m};
    }
    case Kind::APow: {
      // |B|^v < A^(2v-u) for eps = u/v
      if (!epsilon.get_num().fits_ulong_p() || !epsilon.get_den().fits_ulong_p())
        fail(Errc::InvalidInput, "B rule epsilon exponent out of range");
      unsigned long u = epsilon.get_num().get_ui();
      unsigned long v = epsilon.get_den().get_ui();
      mpz_class x;
      mpz_pow_ui(x.get_mpz_t(), mpz_class(A).get_mpz_t(), 2 * v - u);
      mpz_class r;
      bool exact = mpz_root(r.get_mpz_t(), x.get_mpz_t(), v) != 0;
      if (exact) r -= 1;
      long m = r.get_si();
      return {-m, m};
    }
  }
  return {0, -1};
}

void SweepConfig::check() const {
  if (b < 2) fail(Errc::InvalidInput, "sweep needs b >= 2");
  if (A_lo > A_hi || A_lo < 1) fail(Errc::InvalidInput, "sweep has bad A range");
  if (n_max < 1) fail(Errc::InvalidInput, "sweep needs n_max >= 1");
  if (min_solutions < 2) fail(Errc::InvalidInput, "sweep needs min_solutions >= 2");
  if (m_min != 0 && m_min != 1) fail(Errc::InvalidInput, "m_min must be 0 or 1");
  if (workers < 1) fail(Errc::InvalidInput, "workers must be >= 1");
}

namespace {

unsigned long effective_m_max(const SweepConfig& cfg, const std::vector<mpz_class>& vs) {
  if (cfg.m_max > 0) return cfg.m_max;
  // smallest m with b^m > max V_n, so buckets cover every reachable power
  const mpz_class& vmax = *std::max_element(vs.begin(), vs.end());
  mpz_class p = 1;
  unsigned long m = 0;
  while (p <= vmax) {
    p *= cfg.b;
    ++m;
  }
  return m;
}

// Findings for one validated (A,B); ordered by c.
void scan_pair(const SweepConfig& cfg, const LucasParams& params, std::vector<Finding>& out,
               unsigned long& cells) {
  std::vector<mpz_class> vs = params.v_prefix(cfg.n_max);
  unsigned long m_hi = effective_m_max(cfg, vs);

  std::vector<mpz_class> powers;
  powers.reserve(m_hi + 1);
  mpz_class p = 1;
  for (unsigned long m = 0; m <= m_hi; ++m) {
    powers.push_back(p);
    p *= cfg.b;
  }

  std::map<mpz_class, std::vector<Solution>> buckets;
  for (unsigned long n = 1; n <= cfg.n_max; ++n)
    for (unsigned long m = static_cast<unsigned long>(cfg.m_min); m <= m_hi; ++m) {
      buckets[vs[n] - powers[m]].push_back({n, m});
      ++cells;
    }

  for (auto& [c, sols] : buckets) {
    if (sols.size() < static_cast<size_t>(cfg.min_solutions)) continue;
    Finding f;
    f.A = params.A();
    f.B = params.B();
    f.c = c;
    f.solutions = sols;
    for (size_t i = 0; i + 1 < sols.size() && !f.equal_value_pair; ++i)
      for (size_t j = i + 1; j < sols.size(); ++j)
        if (vs[sols[i].n] == vs[sols[j].n]) {
          f.equal_value_pair = true;
          break;
        }
    out.push_back(std::move(f));
  }
}

}  // namespace

SweepResult sweep(const SweepConfig& config) {
  config.check();

  std::vector<long> a_values;
  for (long A = config.A_lo; A <= config.A_hi; ++A) a_values.push_back(A);

  // Budget gate, computed before any scanning so a too-large request fails
  // whole, never truncated.
  double est_cells = 0;
  for (long A : a_values) {
    auto [blo, bhi] = config.b_rule.b_span(A);
    if (blo > bhi) continue;
    double pairs = static_cast<double>(bhi - blo) + 1.0;
    double m_est = config.m_max > 0
                       ? static_cast<double>(config.m_max)
                       : config.n_max * std::log2(2.0 * static_cast<double>(A) + 2) /
                                 std::log2(static_cast<double>(config.b)) +
                             2;
    est_cells += pairs * static_cast<double>(config.n_max) * m_est;
  }
  if (est_cells > static_cast<double>(config.work_budget))
    fail(Errc::WorkBudgetExceeded,
         "sweep would scan ~" + std::to_string(static_cast<unsigned long>(est_cells)) +
             " cells, budget is " + std::to_string(config.work_budget));

  struct Slot {
    std::vector<Finding> findings;
    unsigned long pairs = 0;
    unsigned long cells = 0;
  };
  std::vector<Slot> slots(a_values.size());

  auto run_index = [&](size_t idx) {
    long A = a_values[idx];
    Slot& slot = slots[idx];
    auto [blo, bhi] = config.b_rule.b_span(A);
    for (long B = blo; B <= bhi; ++B) {
      try {
        LucasParams params = LucasParams::validate(A, B);
        ++slot.pairs;
        scan_pair(config, params, slot.findings, slot.cells);
      } catch (const Error&) {
        // inadmissible (A,B): not part of the family
      }
    }
  };

  int workers = std::min<int>(config.workers, static_cast<int>(a_values.size()));
  if (workers <= 1) {
    for (size_t i = 0; i < a_values.size(); ++i) run_index(i);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (size_t i = static_cast<size_t>(w); i < a_values.size(); i += workers) run_index(i);
      });
    for (auto& t : pool) t.join();
  }

  SweepResult result;
  for (Slot& s : slots) {
    result.pairs_scanned += s.pairs;
    result.cells_scanned += s.cells;
    for (Finding& f : s.findings) result.findings.push_back(std::move(f));
  }
  return result;
}

CarmichaelReport carmichael_check(const LucasParams& params, unsigned long n_max) {
  if (n_max > 64) fail(Errc::InvalidInput, "carmichael_check caps n_max at 64");
  if (n_max < 2) fail(Errc::InvalidInput, "carmichael_check needs n_max >= 2");
  std::vector<mpz_class> vs = params.v_prefix(n_max);

  CarmichaelReport report;
  for (unsigned long n = 2; n <= n_max; ++n) {
    if (n == 3) continue;  // excluded by the theorem, like n = 1
    CarmichaelEntry entry;
    entry.n = n;

    mpz_class rest = vs[n];
    for (unsigned long m = 0; m < n && rest > 1; ++m) {
      for (;;) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), rest.get_mpz_t(), vs[m].get_mpz_t());
        if (g == 1) break;
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), g.get_mpz_t());
      }
    }
    entry.primitive_part = rest;
    entry.status = rest > 1 ? CarmichaelEntry::Status::Yes : CarmichaelEntry::Status::No;

    if (entry.status == CarmichaelEntry::Status::Yes) {
      // name a witness when a small prime factor exists; any prime factor of
      // the stripped part is primitive
      mpz_class r = rest;
      for (unsigned long d = 2; d <= 1000000UL && mpz_class(d) * d <= r; d = (d == 2 ? 3 : d + 2))
        if (mpz_divisible_ui_p(r.get_mpz_t(), d)) {
          entry.witness = d;
          break;
        }
      if (entry.witness == 0 && mpz_probab_prime_p(r.get_mpz_t(), 32) > 0) entry.witness = r;
    } else {
      bool is_exception = (params.A() == 1 && params.B() == -1 && n == 6);
      if (is_exception)
        report.exception_hit = true;
      else
        fail(Errc::TheoremFalsified,
             "no primitive divisor for V_" + std::to_string(n) + " at (A,B) = (" +
                 std::to_string(params.A()) + "," + std::to_string(params.B()) + ")");
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

C0Report c0_check(const std::vector<long>& b_values, long A_lo, long A_hi,
                  const BRule& b_rule, unsigned long n_max) {
  C0Report report;
  for (long b : b_values) {
    if (b < 2) fail(Errc::InvalidInput, "c0_check needs b >= 2");
    for (long A = std::max<long>(2, A_lo); A <= A_hi; ++A) {
      auto [blo, bhi] = b_rule.b_span(A);
      for (long B = blo; B <= bhi; ++B) {
        try {
          PillaiInstance inst{LucasParams::validate(A, B), b, 0, 1, n_max, 0};
          std::vector<Solution> sols = solve(inst);
          ++report.instances;
          if (!sols.empty()) ++report.with_solution;
          report.max_solutions = std::max<unsigned long>(report.max_solutions, sols.size());
          if (sols.size() >= 2)
            fail(Errc::TheoremFalsified,
                 "c=0 has " + std::to_string(sols.size()) + " solutions for (A,B,b) = (" +
                     std::to_string(A) + "," + std::to_string(B) + "," + std::to_string(b) + ")");
        } catch (const Error& e) {
          if (e.code() == Errc::TheoremFalsified) throw;
          // inadmissible pair: skip
        }
      }
    }
  }
  return report;
}

std::vector<VerifiedFinding> cross_validate(const std::vector<Finding>& findings, long b,
                                            const mpq_class& epsilon, const mpq_class& kappa,
                                            mpfr_prec_t prec) {
  Regime a1 = Regime::a1(epsilon);
  Regime a2 = Regime::a2(kappa);

  std::vector<VerifiedFinding> out;
  out.reserve(findings.size());
  for (const Finding& f : findings) {
    VerifiedFinding vf;
    vf.finding = f;
    LucasParams params = LucasParams::validate(f.A, f.B);
    size_t k = f.solutions.size();

    if (k >= 2) {
      const Solution& s1 = f.solutions[k - 1];
      const Solution& s2 = f.solutions[k - 2];
      vf.window = two_solution_window(params, b, s1.n, s1.m);
      vf.window_hypotheses_met =
          window_hypotheses(params, a1, s2.n) || window_hypotheses(params, a2, s2.n);
      if (vf.window_hypotheses_met && *vf.window == Cert::False)
        fail(Errc::TheoremFalsified,
             "two-solution window fails with hypotheses met at (A,B,c) = (" +
                 std::to_string(f.A) + "," + std::to_string(f.B) + "," + f.c.get_str() + ")");
    }

    if (k >= 3) {
      SolutionTriple triple{params, b, f.c,
                            {f.solutions[k - 1].n, f.solutions[k - 1].m},
                            {f.solutions[k - 2].n, f.solutions[k - 2].m},
                            {f.solutions[k - 3].n, f.solutions[k - 3].m}};
      bool m_ordered = triple.s1.m > triple.s2.m && triple.s2.m > triple.s3.m;
      if (m_ordered) {
        vf.theorem1 = verify_theorem1(triple, epsilon, prec);
        vf.theorem2 = verify_theorem2(triple, kappa, prec);
        for (const auto& check : {vf.theorem1, vf.theorem2})
          if (check->verdict == Verdict::Fails)
            fail(Errc::TheoremFalsified,
                 "theorem verdict 'fails' with hypotheses met at (A,B,c) = (" +
                     std::to_string(f.A) + "," + std::to_string(f.B) + "," + f.c.get_str() + ")");
        Verdict combined = Verdict::HypothesesNotMet;
        if (vf.theorem1->verdict == Verdict::Holds || vf.theorem2->verdict == Verdict::Holds)
          combined = Verdict::Holds;
        vf.report = build_bound_report(b, epsilon, kappa, mpz_class(triple.s1.n), combined, prec);
      } else {
        // m-ordering (the monotonicity corollary) can break below N0; the
        // theorems' triple shape is then not met
        TheoremCheck unmet;
        unmet.verdict = Verdict::HypothesesNotMet;
        unmet.failed_hypotheses.push_back("m1 > m2 > m3");
        vf.theorem1 = unmet;
        vf.theorem2 = unmet;
      }
    }
    out.push_back(std::move(vf));
  }
  return out;
}

}  // namespace pillai
