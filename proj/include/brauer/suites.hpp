#pragma once

#include "brauer/field_mode.hpp"
#include "brauer/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace brauer {

struct SuiteOptions {
  int n = 3;
  FieldMode mode = FieldMode::exact();
  std::uint64_t seed = 0;
  int jobs = 1;
};

/// Suite names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Runs one named suite (or "all"); throws std::invalid_argument on an unknown name.
VerificationReport run_suite(const std::string& name, const SuiteOptions& options);

// Suites that honour options.mode; the rest always work over Q(w).
VerificationReport spectral_suite(const SuiteOptions& options);
VerificationReport fusion_suite(const SuiteOptions& options);
VerificationReport consistency_suite(const SuiteOptions& options);

VerificationReport symmetric_suite(const SuiteOptions& options);
VerificationReport ybe_suite(const SuiteOptions& options);
VerificationReport rowcol_suite(const SuiteOptions& options);
VerificationReport psitilde_suite(const SuiteOptions& options);
VerificationReport factorization_suite(const SuiteOptions& options);
VerificationReport jmidentity_suite(const SuiteOptions& options);

/// Seeded nonzero rationals with numerators in [-30, 30] and denominators in [1, 30].
std::vector<BigRational> seeded_rationals(std::uint64_t seed, std::size_t count);

}  // namespace brauer
