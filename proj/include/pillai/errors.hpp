#pragma once

#include <stdexcept>
#include <string>

namespace pillai {

/// Error codes shared across the library. Each maps to one rejection or
/// failure mode of a public operation; the CLI turns them into messages
/// and exit codes.
enum class Errc {
  DomainError,            // log/sqrt of a non-positive enclosure, division by an exact zero
  PrecisionExhausted,     // a certification could not be decided at the precision cap
  NonPositiveA,
  NotCoprime,
  NonPositiveDiscriminant,
  ReduciblePolynomial,    // discriminant is a perfect square
  DegenerateBeta,         // beta == 0; unreachable after validation
  PreconditionViolated,
  RegimeViolated,
  InvalidInput,
  InvalidTriple,          // nonzero residual or broken ordering in a solution triple
  WorkBudgetExceeded,
  FactorizationTimeout,
  TheoremFalsified,       // a certified counterexample to a paper statement; aborts loudly
  UsageError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

const char* errc_name(Errc code);

}  // namespace pillai
