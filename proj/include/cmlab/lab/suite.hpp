#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cmlab/groebner.hpp"
#include "cmlab/ideal.hpp"
#include "cmlab/lab/report.hpp"

namespace cmlab::lab {

struct SuiteConfig {
  int max_n = 2;
  int max_m = 2;
  Field field = Field::prime(Field::kDefaultPrime);
  MonomialOrder order = MonomialOrder::grevlex();
  /// Per check, counted from the start of that check.
  double budget_seconds = 60.0;
  std::uint64_t seed = 0;
  int psi_samples = 100;
  /// Swaps in a corrupted map and a broken lift table so some checks fail.
  bool inject_fault = false;
};

/// Throws HypothesisError on max_n or max_m outside 1..9, a nonpositive
/// budget or a negative sample count.
void validate(const SuiteConfig& config);

/// Krull dimension of I against `expected`. The unit ideal never passes.
VerificationReport check_dimension(const IdealPresentation& I, std::size_t expected, const MonomialOrder& order,
                                   const GroebnerOptions& opts = {});

/// Pass iff saturating I by f leaves its reduced basis unchanged.
VerificationReport check_saturation_stable(const IdealPresentation& I, const Polynomial& f,
                                           const GroebnerOptions& opts = {});

/// Every check up to the configured sizes, sorted by check_id. Individual
/// failures and budget overruns are recorded, never thrown.
std::vector<VerificationReport> run_suite(const SuiteConfig& config);

struct SuiteSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t budget_exceeded = 0;
};

SuiteSummary summarize(const std::vector<VerificationReport>& reports);

}  // namespace cmlab::lab
